#include <stdexcept>

#include "doctest.h"
#include "intersectra/canonical.hpp"

using namespace intersectra;

namespace {

SetFamily fam(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<VSet> m;
  for (auto s : sets) m.push_back(VSet(n, s));
  return SetFamily::infer_rank(n, std::move(m));
}

}  // namespace

TEST_CASE("relabeled triangles are isomorphic") {
  SetFamily a = fam(4, {{1, 2}, {1, 3}, {2, 3}});
  SetFamily b = fam(4, {{2, 4}, {2, 3}, {3, 4}});
  CHECK(are_isomorphic(a, b));
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_representative(a) == canonical_representative(b));
  CHECK(iso_invariant(a) == iso_invariant(b));
}

TEST_CASE("intersection pattern separates families of equal shape") {
  SetFamily a = fam(4, {{1, 2}, {1, 3}});  // share a point
  SetFamily b = fam(4, {{1, 2}, {3, 4}});  // disjoint
  CHECK(!are_isomorphic(a, b));
  CHECK(iso_invariant(a) != iso_invariant(b));
  CHECK(canonical_form(a) != canonical_form(b));
}

TEST_CASE("star and triangle are distinct classes") {
  SetFamily star = fam(4, {{1, 2}, {1, 3}, {1, 4}});
  SetFamily tri = fam(4, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(!are_isomorphic(star, tri));
  // Same member count and sizes; the point degrees tell them apart.
  CHECK(iso_invariant(star) != iso_invariant(tri));
}

TEST_CASE("ground size participates in isomorphism") {
  SetFamily small = fam(3, {{1, 2}, {1, 3}, {2, 3}});
  SetFamily padded = fam(4, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(!are_isomorphic(small, padded));
  CHECK(are_isomorphic(small.with_ground(4), padded));
}

TEST_CASE("canonical representative is a fixed point") {
  SetFamily f = fam(7, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}, {1, 6, 7}, {2, 5, 7}});
  auto [form, rep] = canonicalize(f);
  CHECK(rep.size() == f.size());
  CHECK(rep.rank() == f.rank());
  CHECK(are_isomorphic(rep, f));
  CHECK(canonical_form(rep) == form);
  CHECK(canonical_representative(rep) == rep);

  // The encoding is the member masks of the representative.
  REQUIRE(form.encoding.size() == rep.size());
  for (std::size_t i = 0; i < rep.size(); ++i)
    CHECK(rep[i].low_word() == form.encoding[i]);
}

TEST_CASE("every relabeling lands in the same class") {
  SetFamily f = fam(5, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}});
  CanonicalForm base = canonical_form(f);
  // A couple of hand-rolled relabelings: p(1..5) listed as images.
  int perms[][5] = {{2, 1, 3, 4, 5}, {5, 4, 3, 2, 1}, {3, 1, 2, 5, 4}};
  for (auto& p : perms) {
    std::vector<VSet> m;
    for (const VSet& s : f) {
      VSet t(5);
      for (int e : s.elements()) t.insert(p[e - 1]);
      m.push_back(t);
    }
    SetFamily g = SetFamily::infer_rank(5, std::move(m));
    CHECK(canonical_form(g) == base);
    CHECK(are_isomorphic(f, g));
  }
}

TEST_CASE("canonicalization refuses oversized grounds") {
  SetFamily f = fam(11, {{1, 2}});
  CHECK_THROWS_WITH_AS(canonical_form(f), "canonicalization limit",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(are_isomorphic(f, f), "canonicalization limit",
                       std::invalid_argument);
  CHECK(iso_invariant(f) == iso_invariant(f));  // the invariant has no limit

  // The limit is a per-call knob.
  SetFamily g = fam(8, {{1, 2}});
  CHECK_THROWS_WITH_AS(canonical_form(g, 7), "canonicalization limit",
                       std::invalid_argument);
  CHECK_NOTHROW(canonical_form(g));
}
