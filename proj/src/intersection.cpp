#include "intersectra/intersection.hpp"

#include <algorithm>
#include <stdexcept>

#include "intersectra/combinatorics.hpp"

namespace intersectra {

IntersectionStructure::IntersectionStructure(int ground_size,
                                             std::map<int, std::vector<VSet>> by_size)
    : n_(ground_size), by_size_(std::move(by_size)) {}

const std::vector<VSet>& IntersectionStructure::of_size(int k) const {
  if (k < 0 || k > n_) throw std::invalid_argument("k out of range");
  static const std::vector<VSet> kEmpty;
  auto it = by_size_.find(k);
  return it == by_size_.end() ? kEmpty : it->second;
}

std::vector<int> IntersectionStructure::sizes_present() const {
  std::vector<int> out;
  for (const auto& [k, v] : by_size_)
    if (!v.empty()) out.push_back(k);
  return out;
}

VSet IntersectionStructure::singleton_support() const {
  VSet s(n_);
  if (n_ >= 1)
    for (const VSet& v : of_size(1)) s = s | v;
  return s;
}

IntersectionStructure intersection_structure(const SetFamily& f) {
  if (f.empty()) throw std::invalid_argument("empty family");
  const auto& m = f.members();
  std::map<int, std::vector<VSet>> buckets;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i; j < m.size(); ++j) {
      VSet inter = m[i] & m[j];
      buckets[inter.size()].push_back(std::move(inter));
    }
  for (auto& [k, v] : buckets) {
    std::sort(v.begin(), v.end(), colex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return IntersectionStructure(f.ground_size(), std::move(buckets));
}

std::vector<VSet> k_intersections(const SetFamily& f, int k) {
  if (k < 0 || k > f.ground_size()) throw std::invalid_argument("k out of range");
  std::vector<VSet> out = intersection_structure(f).of_size(k);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool is_intersecting(const SetFamily& f) {
  if (f.empty()) throw std::invalid_argument("empty family");
  const auto& m = f.members();
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (!m[i].intersects(m[j])) return false;
  return true;
}

namespace {

void require_uniform_over(const SetFamily& f, int n, int r) {
  if (n < 1 || r < 1 || r > n) throw std::invalid_argument("parameter out of range");
  if (f.ground_size() != n) throw std::invalid_argument("ground size mismatch");
  for (const VSet& m : f)
    if (m.size() != r) throw std::invalid_argument("family not uniform of given rank");
}

bool meets_all(const VSet& s, const SetFamily& f) {
  for (const VSet& m : f)
    if (!s.intersects(m)) return false;
  return true;
}

}  // namespace

bool is_maximal(const SetFamily& f, int n, int r) {
  require_uniform_over(f, n, r);
  require_enumerable(n, r);
  if (!is_intersecting(f)) throw std::invalid_argument("family not intersecting");
  bool maximal = true;
  for_each_rset(n, r, [&](const VSet& c) {
    if (!f.contains(c) && meets_all(c, f)) {
      maximal = false;
      return false;
    }
    return true;
  });
  return maximal;
}

SetFamily maximalize(const SetFamily& f, int n, int r) {
  require_uniform_over(f, n, r);
  require_enumerable(n, r);
  if (!f.empty() && !is_intersecting(f))
    throw std::invalid_argument("family not intersecting");
  std::vector<VSet> out(f.begin(), f.end());
  for_each_rset(n, r, [&](const VSet& c) {
    if (f.contains(c)) return true;
    for (const VSet& m : out)
      if (!c.intersects(m)) return true;
    out.push_back(c);
    return true;
  });
  return SetFamily::of(n, std::move(out), r);
}

SetFamily link(const SetFamily& f, const VSet& d) {
  std::vector<VSet> out;
  for (const VSet& a : f)
    if (d.proper_subset_of(a)) out.push_back(a - d);
  std::optional<int> rank;
  if (f.rank() && *f.rank() - d.size() >= 1) rank = *f.rank() - d.size();
  return SetFamily::of(f.ground_size(), std::move(out), out.empty() ? std::nullopt : rank);
}

SetFamily merge_vertices(const SetFamily& f, int a, int b, int v) {
  if (a == b || a < 1 || b < 1 || v < 1) throw std::invalid_argument("parameter out of range");
  for (const VSet& m : f)
    if (m.contains(v)) throw std::invalid_argument("merge target not fresh");
  bool touched = false;
  for (const VSet& m : f) touched = touched || m.contains(a) || m.contains(b);
  if (!touched) return f;

  int new_n = std::max(f.ground_size(), v);
  std::vector<VSet> out;
  out.reserve(f.size());
  for (const VSet& m : f) {
    VSet s = m.with_ground(new_n);
    if (m.contains(a) || m.contains(b)) {
      s.erase(a);
      s.erase(b);
      s.insert(v);
    }
    out.push_back(std::move(s));
  }
  return SetFamily::infer_rank(new_n, std::move(out));
}

SetFamily merge_vertices(const SetFamily& f, int a, int b) {
  return merge_vertices(f, a, b, f.ground_size() + 1);
}

std::vector<std::pair<VSet, VSet>> star_cover_violations(const SetFamily& f) {
  if (!is_intersecting(f)) throw std::invalid_argument("family not intersecting");
  VSet supp = intersection_structure(f).singleton_support();
  std::vector<std::pair<VSet, VSet>> out;
  const auto& m = f.members();
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if ((m[i] & m[j]).disjoint_from(supp)) out.emplace_back(m[i], m[j]);
  return out;
}

}  // namespace intersectra
