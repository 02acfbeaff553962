#include "intersectra/combinatorics.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace intersectra {

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return r;
}

std::uint64_t binomial_u64(int n, int k) {
  mpz_class b = binomial(n, k);
  if (!b.fits_ulong_p()) throw std::overflow_error("binomial exceeds 64 bits");
  return b.get_ui();
}

mpz_class hitting_count(long n, long k, long alpha) {
  if (n < 0 || k < 0 || k > n || alpha < 0 || alpha > n)
    throw std::invalid_argument("parameter out of range");
  return binomial(n, k) - binomial(n - alpha, k);
}

void require_enumerable(int n, int r, std::uint64_t cap) {
  if (r < 0 || r > n) return;
  if (binomial(n, r) > (long)cap) throw std::invalid_argument("enumeration too large");
}

void for_each_rset(int n, int r, const std::function<bool(const VSet&)>& fn) {
  if (r < 0 || r > n) return;
  if (r == 0) {
    fn(VSet(n));
    return;
  }
  // Colex successor: bump the lowest position that has room before the next
  // one, resetting everything below it to 1..j-1.
  std::vector<int> c(r);
  std::iota(c.begin(), c.end(), 1);
  for (;;) {
    if (!fn(VSet::from_elements(n, c))) return;
    int j = 0;
    while (j < r) {
      int cap = (j + 1 < r) ? c[j + 1] - 1 : n;
      if (c[j] < cap) break;
      ++j;
    }
    if (j == r) return;
    ++c[j];
    std::iota(c.begin(), c.begin() + j, 1);
  }
}

std::vector<VSet> all_rsets(int n, int r) {
  std::vector<VSet> out;
  if (r >= 0 && r <= n) out.reserve((size_t)binomial_u64(n, r));
  for_each_rset(n, r, [&](const VSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace intersectra
