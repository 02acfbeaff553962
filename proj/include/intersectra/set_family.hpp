#ifndef INTERSECTRA_SET_FAMILY_HPP
#define INTERSECTRA_SET_FAMILY_HPP

#include <optional>
#include <vector>

#include "intersectra/vset.hpp"

namespace intersectra {

// Duplicate-free family of subsets of a common ground set [n], held in colex
// order.  rank, when set, asserts that every member has exactly that many
// elements (uniform family).  Equality is set-semantic: ground size and
// members; rank is derived metadata and does not participate.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(int ground_size, std::optional<int> rank = std::nullopt);

  // Validates common ground size, sorts colex, drops duplicates; if rank is
  // given, every member must have that size.  infer_rank: sets rank when all
  // members share a size.
  static SetFamily of(int ground_size, std::vector<VSet> members,
                      std::optional<int> rank = std::nullopt);
  static SetFamily infer_rank(int ground_size, std::vector<VSet> members);

  int ground_size() const { return n_; }
  std::optional<int> rank() const { return rank_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  const std::vector<VSet>& members() const { return members_; }
  const VSet& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const VSet& s) const;  // binary search over colex order

  SetFamily with_member(const VSet& s) const;
  SetFamily with_ground(int new_n) const;  // re-ground every member

  // Union of all members, as a subset of [n].
  VSet support() const;

  bool operator==(const SetFamily& o) const {
    return n_ == o.n_ && members_ == o.members_;
  }

 private:
  int n_ = 0;
  std::optional<int> rank_;
  std::vector<VSet> members_;
};

}  // namespace intersectra

#endif
