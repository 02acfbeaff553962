#include "intersectra/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace intersectra {

IsoInvariant iso_invariant(const SetFamily& f) {
  IsoInvariant inv;
  auto& key = inv.key;
  key.push_back((std::int64_t)f.size());

  std::vector<std::int64_t> sizes;
  for (const VSet& m : f) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  key.insert(key.end(), sizes.begin(), sizes.end());

  // Pairwise intersection-size histogram (distinct pairs).
  int n = f.ground_size();
  std::vector<std::int64_t> hist(n + 1, 0);
  const auto& m = f.members();
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j) ++hist[m[i].intersection_size(m[j])];
  key.insert(key.end(), hist.begin(), hist.end());

  std::vector<std::int64_t> deg(n, 0);
  for (const VSet& s : f)
    for (int e : s.elements()) ++deg[e - 1];
  std::sort(deg.begin(), deg.end());
  key.insert(key.end(), deg.begin(), deg.end());
  return inv;
}

namespace {

struct ScanResult {
  std::vector<std::uint64_t> best;
  std::vector<int> best_perm;  // image[old-1] = new element
};

// Minimize the sorted member-mask sequence over all n! relabelings.
ScanResult scan_all_permutations(const SetFamily& f, int limit) {
  int n = f.ground_size();
  if (n > limit || n > 64) throw std::invalid_argument("canonicalization limit");

  std::vector<std::uint64_t> masks;
  masks.reserve(f.size());
  for (const VSet& m : f) masks.push_back(m.low_word());

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ScanResult r;
  bool found = false;
  std::vector<std::uint64_t> img(masks.size());
  do {
    for (size_t i = 0; i < masks.size(); ++i) {
      std::uint64_t m = masks[i], out = 0;
      while (m) {
        out |= 1ull << perm[std::countr_zero(m)];
        m &= m - 1;
      }
      img[i] = out;
    }
    std::sort(img.begin(), img.end());
    if (!found || img < r.best) {
      r.best = img;
      r.best_perm.assign(perm.begin(), perm.end());
      found = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

}  // namespace

CanonicalForm canonical_form(const SetFamily& f, int limit) {
  ScanResult r = scan_all_permutations(f, limit);
  return CanonicalForm{f.ground_size(), std::move(r.best)};
}

SetFamily canonical_representative(const SetFamily& f, int limit) {
  return canonicalize(f, limit).second;
}

std::pair<CanonicalForm, SetFamily> canonicalize(const SetFamily& f, int limit) {
  ScanResult r = scan_all_permutations(f, limit);
  int n = f.ground_size();
  std::vector<VSet> members;
  members.reserve(r.best.size());
  for (std::uint64_t m : r.best) members.push_back(VSet::from_mask(n, m));
  SetFamily rep = SetFamily::of(n, std::move(members), f.rank());
  return {CanonicalForm{n, std::move(r.best)}, std::move(rep)};
}

bool are_isomorphic(const SetFamily& a, const SetFamily& b, int limit) {
  if (a.ground_size() != b.ground_size() || a.size() != b.size()) return false;
  if (iso_invariant(a) != iso_invariant(b)) return false;
  return canonical_form(a, limit) == canonical_form(b, limit);
}

}  // namespace intersectra
