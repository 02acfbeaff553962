#ifndef INTERSECTRA_CONSTRUCTIONS_HPP
#define INTERSECTRA_CONSTRUCTIONS_HPP

#include <optional>
#include <utility>

#include <gmpxx.h>

#include "intersectra/set_family.hpp"

namespace intersectra {

// All r-sets over [n] containing element 1; size C(n-1, r-1).
SetFamily star_family(int n, int r);

// Pair construction attaining the lower bound 2*C(2r-4, r-2) + 2r - 4 for the
// largest singleton-intersection count of an intersecting r-family.  Splits
// [2r-4] into complementary (r-2)-set pairs (A_i, B_i), A_i the colex-smaller
// half, pairs ordered by colex of A_i; each pair gets four fresh points
// a_i < b_i < c_i < d_i and contributes A_i+{a_i,b_i}, A_i+{c_i,d_i},
// B_i+{a_i,c_i}, B_i+{b_i,d_i}.  Ground size 2r-4+4m with m = C(2r-4,r-2)/2;
// every ground point is realized as a singleton intersection.
// Requires 3 <= r <= 10 (the witness itself gets too large beyond that; the
// bound values stay available through alpha_bounds for every r).
SetFamily tuza_family(int r);

// Up-closure of an intersecting (r-k+1)-uniform base to all r-sets over [n]
// that contain a base member.  When the base's singleton-intersection support
// has the largest possible size for its rank, the k-intersections of the
// result are exactly the k-sets meeting that support.  Requires
// n >= |supp base| + 2(k-1) (room for the padding argument behind that
// claim); smaller n throws std::invalid_argument("ground set too small").
SetFamily up_closure_family(int n, int r, int k, const SetFamily& base);

// 4-uniform intersecting family over [n] (n >= 10): the up-closure of the
// six-triple witness of alpha_witness(3) joined with {1,2,5,8} and
// {3,4,7,8}.  Its 2-intersections are exactly the pairs meeting [7], yet
// every maximal extension realizes singleton support [8] — the singleton
// support of a maximal extension can strictly grow.
SetFamily counterexample_family(int n);

// Largest singleton-intersection count over intersecting r-families, best
// known: exact for r <= 4 (1, 3, 7, 16), otherwise the interval
// [2C(2r-4,r-2)+2r-4, C(2r-1,r-1)+C(2r-4,r-1)].
struct AlphaRecord {
  int r = 0;
  bool exact = false;
  mpz_class lower;           // == upper when exact
  mpz_class upper;
  SetFamily witness;         // achieves lower
  int witness_ground = 0;    // ground size the witness lives on
};

// Witness families: r=1 {{1}}, r=2 the triangle, r=3 six triples on 7 points,
// r>=4 tuza_family(r).  Same size cap as tuza_family.
AlphaRecord alpha_witness(int r);

// (lower, upper): exact pair for r <= 3, the pair-construction/shift bounds
// 2C(2r-4,r-2)+2r-4 and C(2r-1,r-1)+C(2r-4,r-1) for r >= 4.
std::pair<mpz_class, mpz_class> alpha_bounds(int r);

// Earlier bounds for the same quantity: C(2r-3,r-1)+2r-2 and
// (2r-1)*C(2r-3,r-1); kept for comparison (r >= 1).
std::pair<mpz_class, mpz_class> lovasz_bounds(int r);

// Ground sizes at which the k-intersection maximum is settled by the
// up-closure argument.
struct ThresholdEstimate {
  mpz_class sufficient_n;       // k * C(2r,r)^2: beyond this the maximum is known
  mpz_class construction_min_n; // least n the witness construction needs
};

ThresholdEstimate threshold_estimate(int r, int k);

}  // namespace intersectra

#endif
