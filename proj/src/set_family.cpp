#include "intersectra/set_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace intersectra {

SetFamily::SetFamily(int ground_size, std::optional<int> rank)
    : n_(ground_size), rank_(rank) {
  if (ground_size < 0) throw std::invalid_argument("negative ground size");
  if (rank && (*rank < 1 || *rank > ground_size))
    throw std::invalid_argument("rank out of range");
}

SetFamily SetFamily::of(int ground_size, std::vector<VSet> members,
                        std::optional<int> rank) {
  SetFamily f(ground_size, rank);
  for (const VSet& m : members) {
    if (m.ground_size() != ground_size)
      throw std::invalid_argument("member ground size mismatch");
    if (rank && m.size() != *rank) throw std::invalid_argument("rank mismatch");
  }
  std::sort(members.begin(), members.end(), colex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  f.members_ = std::move(members);
  return f;
}

SetFamily SetFamily::infer_rank(int ground_size, std::vector<VSet> members) {
  std::optional<int> rank;
  if (!members.empty()) {
    int r = members.front().size();
    bool uniform = r >= 1;
    for (const VSet& m : members) uniform = uniform && m.size() == r;
    if (uniform) rank = r;
  }
  return of(ground_size, std::move(members), rank);
}

bool SetFamily::contains(const VSet& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s, colex_less);
  return it != members_.end() && *it == s;
}

SetFamily SetFamily::with_member(const VSet& s) const {
  std::vector<VSet> m = members_;
  m.push_back(s);
  return of(n_, std::move(m), rank_ && s.size() == *rank_ ? rank_ : std::nullopt);
}

SetFamily SetFamily::with_ground(int new_n) const {
  std::vector<VSet> m;
  m.reserve(members_.size());
  for (const VSet& s : members_) m.push_back(s.with_ground(new_n));
  return of(new_n, std::move(m), rank_);
}

VSet SetFamily::support() const {
  VSet u(n_);
  for (const VSet& m : members_) u = u | m;
  return u;
}

}  // namespace intersectra
