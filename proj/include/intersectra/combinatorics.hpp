#ifndef INTERSECTRA_COMBINATORICS_HPP
#define INTERSECTRA_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "intersectra/vset.hpp"

namespace intersectra {

// C(n, k), exact; 0 whenever k < 0 or k > n.
mpz_class binomial(long n, long k);

// C(n, k) as uint64_t; throws std::overflow_error if it does not fit.
std::uint64_t binomial_u64(int n, int k);

// Number of k-subsets of [n] meeting {1, ..., alpha}: C(n,k) - C(n-alpha,k).
// Exact for all valid inputs; throws std::invalid_argument("parameter out of
// range") unless 0 <= k <= n and 0 <= alpha <= n.
mpz_class hitting_count(long n, long k, long alpha);

// Guard for ops that enumerate all of [n]^(r); throws
// std::invalid_argument("enumeration too large") past the cap.
void require_enumerable(int n, int r, std::uint64_t cap = 5'000'000);

// All r-subsets of [n] in colexicographic order.
std::vector<VSet> all_rsets(int n, int r);

// Visit r-subsets of [n] in colex order without materializing the list;
// stop early if fn returns false.
void for_each_rset(int n, int r, const std::function<bool(const VSet&)>& fn);

}  // namespace intersectra

#endif
