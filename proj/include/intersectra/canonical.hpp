#ifndef INTERSECTRA_CANONICAL_HPP
#define INTERSECTRA_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "intersectra/set_family.hpp"

namespace intersectra {

inline constexpr int kCanonicalizationLimit = 10;

// Relabeling-invariant fingerprint of a family: member count, sorted member
// sizes, intersection-size profile over all member pairs, sorted point
// degrees.  Equal for isomorphic families; cheap to compute at any n, so it
// serves as a prefilter before full canonicalization.
struct IsoInvariant {
  std::vector<std::int64_t> key;
  auto operator<=>(const IsoInvariant&) const = default;
};

IsoInvariant iso_invariant(const SetFamily& f);

// Minimum over all relabelings of the colex-sorted member-mask sequence.
// Total order on isomorphism classes over a fixed ground size.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> encoding;  // member masks, ascending
  auto operator<=>(const CanonicalForm&) const = default;
};

// Full permutation scan; n above the limit throws
// std::invalid_argument("canonicalization limit").
CanonicalForm canonical_form(const SetFamily& f, int limit = kCanonicalizationLimit);

// The relabeled family realizing canonical_form.
SetFamily canonical_representative(const SetFamily& f, int limit = kCanonicalizationLimit);

// Both of the above from a single permutation scan.
std::pair<CanonicalForm, SetFamily> canonicalize(const SetFamily& f,
                                                 int limit = kCanonicalizationLimit);

bool are_isomorphic(const SetFamily& a, const SetFamily& b,
                    int limit = kCanonicalizationLimit);

}  // namespace intersectra

#endif
