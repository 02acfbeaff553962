#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "intersectra/intersection.hpp"

using namespace intersectra;

namespace {

SetFamily triangle(int n = 3) {
  return SetFamily::of(3, {VSet(3, {1, 2}), VSet(3, {1, 3}), VSet(3, {2, 3})}, 2)
      .with_ground(n);
}

// Six triples on [7] whose pairwise intersections are exactly the singletons
// {1},...,{7}.
SetFamily six_triples() {
  return SetFamily::of(7,
                       {VSet(7, {1, 2, 3}), VSet(7, {1, 4, 5}), VSet(7, {2, 4, 6}),
                        VSet(7, {3, 5, 6}), VSet(7, {1, 6, 7}), VSet(7, {2, 5, 7})},
                       3);
}

}  // namespace

TEST_CASE("intersection buckets of the triangle") {
  IntersectionStructure s = intersection_structure(triangle());
  CHECK(s.ground_size() == 3);
  CHECK(s.sizes_present() == std::vector<int>{1, 2});
  CHECK(s.count_of_size(1) == 3);  // the three cross intersections
  CHECK(s.count_of_size(2) == 3);  // the members themselves (self pairs)
  CHECK(s.count_of_size(0) == 0);
  CHECK(s.of_size(3).empty());
  CHECK(s.singleton_support() == VSet(3, {1, 2, 3}));
  CHECK_THROWS_WITH_AS(s.of_size(4), "k out of range", std::invalid_argument);
  CHECK_THROWS_WITH_AS(s.of_size(-1), "k out of range", std::invalid_argument);
}

TEST_CASE("six triples realize all seven singletons") {
  IntersectionStructure s = intersection_structure(six_triples());
  CHECK(s.count_of_size(1) == 7);
  CHECK(s.singleton_support() == VSet::full(7));
  CHECK(s.sizes_present() == std::vector<int>{1, 3});
}

TEST_CASE("disjoint members land in bucket zero") {
  SetFamily f = SetFamily::of(4, {VSet(4, {1, 2}), VSet(4, {3, 4})}, 2);
  IntersectionStructure s = intersection_structure(f);
  CHECK(s.count_of_size(0) == 1);
  CHECK(s.sizes_present() == std::vector<int>{0, 2});
  CHECK(!is_intersecting(f));
  CHECK(s.singleton_support().empty());
}

TEST_CASE("structure rejects the empty family") {
  CHECK_THROWS_WITH_AS(intersection_structure(SetFamily(5)), "empty family",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(is_intersecting(SetFamily(5)), "empty family",
                       std::invalid_argument);
}

TEST_CASE("k-intersections come back lex-sorted") {
  std::vector<VSet> ones = k_intersections(six_triples(), 1);
  CHECK(ones.size() == 7);
  CHECK(std::is_sorted(ones.begin(), ones.end(), lex_less));
  CHECK(ones.front() == VSet(7, {1}));
  CHECK(ones.back() == VSet(7, {7}));

  SetFamily single = SetFamily::of(5, {VSet(5, {1, 2, 3})}, 3);
  CHECK(k_intersections(single, 3) == std::vector<VSet>{VSet(5, {1, 2, 3})});
  CHECK(k_intersections(single, 2).empty());
  CHECK_THROWS_WITH_AS(k_intersections(single, 6), "k out of range",
                       std::invalid_argument);

  // The rank-size bucket of a uniform family is the family itself.
  std::vector<VSet> selfs = k_intersections(six_triples(), 3);
  std::vector<VSet> members = six_triples().members();
  std::sort(members.begin(), members.end(), lex_less);
  CHECK(selfs == members);
}

TEST_CASE("adding a member never shrinks an intersection bucket") {
  SetFamily f = six_triples();
  SetFamily g = f.with_member(VSet(7, {1, 2, 4}));
  IntersectionStructure sf = intersection_structure(f);
  IntersectionStructure sg = intersection_structure(g);
  for (int k = 0; k <= 7; ++k) {
    CHECK(sg.count_of_size(k) >= sf.count_of_size(k));
    const auto& small = sf.of_size(k);
    const auto& big = sg.of_size(k);
    for (const VSet& v : small)
      CHECK(std::find(big.begin(), big.end(), v) != big.end());
  }
}

TEST_CASE("maximality checks") {
  SetFamily star4 = SetFamily::of(4, {VSet(4, {1, 2}), VSet(4, {1, 3}), VSet(4, {1, 4})}, 2);
  CHECK(is_maximal(star4, 4, 2));
  CHECK(is_maximal(triangle(3), 3, 2));
  CHECK(is_maximal(triangle(4), 4, 2));
  SetFamily partial = SetFamily::of(4, {VSet(4, {1, 2}), VSet(4, {1, 3})}, 2);
  CHECK(!is_maximal(partial, 4, 2));

  CHECK_THROWS_WITH_AS(is_maximal(star4, 5, 2), "ground size mismatch",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(is_maximal(star4, 4, 3), "family not uniform of given rank",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(is_maximal(star4, 4, 0), "parameter out of range",
                       std::invalid_argument);
  SetFamily disj = SetFamily::of(4, {VSet(4, {1, 2}), VSet(4, {3, 4})}, 2);
  CHECK_THROWS_WITH_AS(is_maximal(disj, 4, 2), "family not intersecting",
                       std::invalid_argument);
}

TEST_CASE("maximalize extends greedily in colex order") {
  SetFamily partial = SetFamily::of(4, {VSet(4, {1, 2}), VSet(4, {1, 3})}, 2);
  SetFamily m = maximalize(partial, 4, 2);
  CHECK(m == triangle(4));  // {2,3} precedes every {*,4} pair in colex
  CHECK(is_maximal(m, 4, 2));
  CHECK(maximalize(m, 4, 2) == m);  // fixed point on maximal families

  // From nothing the greedy also lands on the triangle.
  CHECK(maximalize(SetFamily(4), 4, 2) == triangle(4));

  SetFamily disj = SetFamily::of(4, {VSet(4, {1, 2}), VSet(4, {3, 4})}, 2);
  CHECK_THROWS_WITH_AS(maximalize(disj, 4, 2), "family not intersecting",
                       std::invalid_argument);
}

TEST_CASE("link drops to the residual family") {
  SetFamily f = SetFamily::of(
      5, {VSet(5, {1, 2, 3}), VSet(5, {1, 2, 4}), VSet(5, {1, 3, 5})}, 3);

  SetFamily l1 = link(f, VSet(5, {1}));
  CHECK(l1 == SetFamily::of(5, {VSet(5, {2, 3}), VSet(5, {2, 4}), VSet(5, {3, 5})}, 2));
  CHECK(l1.rank() == 2);

  SetFamily l4 = link(f, VSet(5, {4}));
  CHECK(l4 == SetFamily::of(5, {VSet(5, {1, 2})}, 2));

  // Nothing properly contains the full member itself.
  SetFamily whole = SetFamily::of(3, {VSet(3, {1, 2, 3})}, 3);
  CHECK(link(whole, VSet(3, {1, 2, 3})).empty());

  SetFamily l12 = link(f, VSet(5, {1, 2}));
  CHECK(l12 == SetFamily::of(5, {VSet(5, {3}), VSet(5, {4})}, 1));
  CHECK(l12.rank() == 1);
}

TEST_CASE("merging vertices") {
  SetFamily t = triangle(3);
  SetFamily m = merge_vertices(t, 2, 3, 4);
  CHECK(m.ground_size() == 4);
  CHECK(m == SetFamily::of(4, {VSet(4, {4}), VSet(4, {1, 4})}));
  CHECK(!m.rank().has_value());  // cardinality collapsed where both were present

  // Default target is n+1.
  CHECK(merge_vertices(t, 2, 3) == m);

  // Untouched points leave the family alone, ground size included.
  SetFamily f = SetFamily::of(3, {VSet(3, {1, 2})}, 2);
  CHECK(merge_vertices(f, 5, 6, 9) == f);

  CHECK_THROWS_WITH_AS(merge_vertices(t, 1, 2, 3), "merge target not fresh",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(merge_vertices(t, 2, 2, 4), "parameter out of range",
                       std::invalid_argument);
}

TEST_CASE("star-cover violations") {
  // No singleton intersections at all: the lone distinct pair violates.
  SetFamily f = SetFamily::of(4, {VSet(4, {1, 2, 3}), VSet(4, {1, 2, 4})}, 3);
  auto v = star_cover_violations(f);
  REQUIRE(v.size() == 1);
  CHECK(v[0].first == VSet(4, {1, 2, 3}));
  CHECK(v[0].second == VSet(4, {1, 2, 4}));

  CHECK(star_cover_violations(triangle(3)).empty());
  CHECK(star_cover_violations(six_triples()).empty());

  SetFamily disj = SetFamily::of(4, {VSet(4, {1, 2}), VSet(4, {3, 4})}, 2);
  CHECK_THROWS_WITH_AS(star_cover_violations(disj), "family not intersecting",
                       std::invalid_argument);
}
