#include "intersectra/constructions.hpp"

#include <stdexcept>

#include "intersectra/combinatorics.hpp"
#include "intersectra/intersection.hpp"

namespace intersectra {

SetFamily star_family(int n, int r) {
  if (r < 1 || r > n) throw std::invalid_argument("parameter out of range");
  require_enumerable(n - 1, r - 1);
  std::vector<VSet> members;
  members.reserve((size_t)binomial_u64(n - 1, r - 1));
  for_each_rset(n - 1, r - 1, [&](const VSet& rest) {
    VSet s(n);
    s.insert(1);
    for (int e : rest.elements()) s.insert(e + 1);
    members.push_back(std::move(s));
    return true;
  });
  return SetFamily::of(n, std::move(members), r);
}

SetFamily tuza_family(int r) {
  if (r < 3) throw std::invalid_argument("parameter out of range");
  if (r > 10) throw std::invalid_argument("tuza family too large");
  int base = 2 * r - 4;
  // Complementary (r-2)-set pairs over [base], keyed by the colex-smaller
  // half; enumeration is already colex-ascending, so keeping the halves that
  // precede their complements yields pairs in the required order.
  std::vector<VSet> halves;
  for_each_rset(base, r - 2, [&](const VSet& s) {
    VSet comp = VSet::full(base) - s;
    if (colex_less(s, comp)) halves.push_back(s);
    return true;
  });
  int m = (int)halves.size();
  int n = base + 4 * m;

  std::vector<VSet> members;
  members.reserve(4 * (size_t)m);
  for (int i = 0; i < m; ++i) {
    VSet a = halves[i].with_ground(n);
    VSet b = (VSet::full(base) - halves[i]).with_ground(n);
    int fa = base + 4 * i + 1, fb = fa + 1, fc = fa + 2, fd = fa + 3;
    VSet s1 = a, s2 = a, s3 = b, s4 = b;
    s1.insert(fa), s1.insert(fb);
    s2.insert(fc), s2.insert(fd);
    s3.insert(fa), s3.insert(fc);
    s4.insert(fb), s4.insert(fd);
    members.push_back(s1), members.push_back(s2);
    members.push_back(s3), members.push_back(s4);
  }
  return SetFamily::of(n, std::move(members), r);
}

SetFamily up_closure_family(int n, int r, int k, const SetFamily& base) {
  if (r < 1 || r > n || k < 1 || k > r) throw std::invalid_argument("parameter out of range");
  if (base.empty() || !base.rank() || *base.rank() != r - k + 1)
    throw std::invalid_argument("base rank mismatch");
  if (base.ground_size() > n) throw std::invalid_argument("base ground size exceeds n");
  require_enumerable(n, r);
  SetFamily b = base.ground_size() == n ? base : base.with_ground(n);
  if (!is_intersecting(b)) throw std::invalid_argument("family not intersecting");
  if (n < b.support().size() + 2 * (k - 1))
    throw std::invalid_argument("ground set too small");

  std::vector<VSet> members;
  for_each_rset(n, r, [&](const VSet& c) {
    for (const VSet& s : b)
      if (s.subset_of(c)) {
        members.push_back(c);
        break;
      }
    return true;
  });
  return SetFamily::of(n, std::move(members), r);
}

namespace {

// Six triples on seven points realizing seven singleton intersections.
SetFamily six_triple_family() {
  std::vector<VSet> d = {VSet(7, {1, 2, 3}), VSet(7, {1, 4, 5}), VSet(7, {2, 4, 6}),
                         VSet(7, {3, 5, 6}), VSet(7, {1, 6, 7}), VSet(7, {2, 5, 7})};
  return SetFamily::of(7, std::move(d), 3);
}

}  // namespace

SetFamily counterexample_family(int n) {
  if (n < 10) throw std::invalid_argument("parameter out of range");
  SetFamily e = up_closure_family(n, 4, 2, six_triple_family());
  std::vector<VSet> members(e.begin(), e.end());
  members.push_back(VSet(n, {1, 2, 5, 8}));
  members.push_back(VSet(n, {3, 4, 7, 8}));
  return SetFamily::of(n, std::move(members), 4);
}

AlphaRecord alpha_witness(int r) {
  if (r < 1) throw std::invalid_argument("parameter out of range");
  AlphaRecord rec;
  rec.r = r;
  if (r == 1) {
    rec.witness = SetFamily::of(1, {VSet(1, {1})}, 1);
  } else if (r == 2) {
    rec.witness = SetFamily::of(3, {VSet(3, {1, 2}), VSet(3, {1, 3}), VSet(3, {2, 3})}, 2);
  } else if (r == 3) {
    rec.witness = six_triple_family();
  } else {
    rec.witness = tuza_family(r);
  }
  auto [lo, hi] = alpha_bounds(r);
  rec.exact = r <= 4;
  rec.lower = lo;
  rec.upper = rec.exact ? lo : hi;
  rec.witness_ground = rec.witness.ground_size();
  return rec;
}

std::pair<mpz_class, mpz_class> alpha_bounds(int r) {
  if (r < 1) throw std::invalid_argument("parameter out of range");
  switch (r) {
    case 1: return {1, 1};
    case 2: return {3, 3};
    case 3: return {7, 7};
    default:
      return {2 * binomial(2 * r - 4, r - 2) + 2 * r - 4,
              binomial(2 * r - 1, r - 1) + binomial(2 * r - 4, r - 1)};
  }
}

std::pair<mpz_class, mpz_class> lovasz_bounds(int r) {
  if (r < 1) throw std::invalid_argument("parameter out of range");
  return {binomial(2 * r - 3, r - 1) + 2 * r - 2,
          (2 * r - 1) * binomial(2 * r - 3, r - 1)};
}

ThresholdEstimate threshold_estimate(int r, int k) {
  if (k < 1 || k > r) throw std::invalid_argument("parameter out of range");
  ThresholdEstimate t;
  mpz_class c = binomial(2 * r, r);
  t.sufficient_n = k * c * c;
  int q = r - k + 1;  // rank of the base the construction wants
  if (q >= 3)
    t.construction_min_n = 2 * binomial(2 * q - 4, q - 2) + 2 * q - 4;
  else
    t.construction_min_n = q == 2 ? 3 : 1;
  return t;
}

}  // namespace intersectra
