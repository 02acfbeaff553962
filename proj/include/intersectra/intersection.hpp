#ifndef INTERSECTRA_INTERSECTION_HPP
#define INTERSECTRA_INTERSECTION_HPP

#include <map>
#include <utility>
#include <vector>

#include "intersectra/set_family.hpp"

namespace intersectra {

// All pairwise intersections of a family (unordered pairs, A = B included),
// bucketed by cardinality.  Bucket 0 is nonempty exactly when the family
// contains two disjoint members; for an r-uniform family bucket r contains
// the members themselves.
class IntersectionStructure {
 public:
  IntersectionStructure() = default;
  IntersectionStructure(int ground_size, std::map<int, std::vector<VSet>> by_size);

  int ground_size() const { return n_; }

  // Bucket k in colex order, empty if nothing intersects in exactly k points.
  // k outside [0, n] throws std::invalid_argument("k out of range").
  const std::vector<VSet>& of_size(int k) const;
  std::size_t count_of_size(int k) const { return of_size(k).size(); }
  std::vector<int> sizes_present() const;  // ascending, only nonempty buckets

  // Union of the singleton bucket as a point set.
  VSet singleton_support() const;

 private:
  int n_ = 0;
  std::map<int, std::vector<VSet>> by_size_;
};

// Throws std::invalid_argument("empty family") on an empty family.
IntersectionStructure intersection_structure(const SetFamily& f);

// The k-sized pairwise intersections, sorted lexicographically by element
// sequence (note: family members themselves are kept in colex order).
std::vector<VSet> k_intersections(const SetFamily& f, int k);

// True when every two members meet.  Throws on an empty family.
bool is_intersecting(const SetFamily& f);

// F is maximal when no r-set over [n] outside F meets every member.  Requires
// an intersecting r-uniform family over [n]; throws
// std::invalid_argument("family not intersecting") otherwise.
bool is_maximal(const SetFamily& f, int n, int r);

// Extend F to a maximal intersecting family by scanning all r-sets over [n]
// in colex order and adding each set compatible with everything so far.
// Deterministic; a fixed point exactly on maximal families.  An empty input
// is allowed and yields the colex-greedy maximal family.
SetFamily maximalize(const SetFamily& f, int n, int r);

// { A \ D : D properly contained in A, A in F }.
SetFamily link(const SetFamily& f, const VSet& d);

// Replace a and b by v in every member.  v must not occur anywhere in F
// (else std::invalid_argument("merge target not fresh")); the ground set
// extends to max(n, v) when a substitution happens.  Member cardinality drops
// by one where both a and b were present, so the result may lose uniformity.
SetFamily merge_vertices(const SetFamily& f, int a, int b, int v);
SetFamily merge_vertices(const SetFamily& f, int a, int b);  // v = n + 1

// Distinct member pairs (A, B) with A, B and the singleton-intersection
// support pairwise disjoint: A ∩ B ∩ supp F<1> = ∅.  For maximal families
// with n >= 2r this list is empty.  Requires an intersecting family.
std::vector<std::pair<VSet, VSet>> star_cover_violations(const SetFamily& f);

}  // namespace intersectra

#endif
