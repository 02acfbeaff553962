#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "intersectra/vset.hpp"

using namespace intersectra;

TEST_CASE("construction and element access") {
  VSet s(7, {1, 4, 5});
  CHECK(s.ground_size() == 7);
  CHECK(s.size() == 3);
  CHECK(!s.empty());
  CHECK(s.contains(1));
  CHECK(s.contains(4));
  CHECK(!s.contains(2));
  CHECK(s.elements() == std::vector<int>{1, 4, 5});
  CHECK(s.min_element() == 1);
  CHECK(s.max_element() == 5);
  CHECK(s.to_string() == "{1 4 5}");

  VSet e(5);
  CHECK(e.empty());
  CHECK(e.size() == 0);
  CHECK(e.min_element() == 0);
  CHECK(e.max_element() == 0);

  CHECK(VSet::full(4) == VSet(4, {1, 2, 3, 4}));
  CHECK(VSet::single(6, 3) == VSet(6, {3}));
  CHECK(VSet::from_elements(6, {2, 5}) == VSet(6, {2, 5}));
}

TEST_CASE("construction rejects out-of-range elements") {
  CHECK_THROWS_WITH_AS(VSet(3, {4}), "element out of range", std::invalid_argument);
  CHECK_THROWS_WITH_AS(VSet(3, {0}), "element out of range", std::invalid_argument);
  CHECK_THROWS_WITH_AS(VSet(-1), "negative ground size", std::invalid_argument);
}

TEST_CASE("insert and erase") {
  VSet s(6);
  s.insert(3);
  s.insert(6);
  CHECK(s.elements() == std::vector<int>{3, 6});
  s.erase(3);
  CHECK(s.elements() == std::vector<int>{6});
  s.erase(6);
  CHECK(s.empty());
  CHECK_THROWS_AS(s.insert(7), std::invalid_argument);
}

TEST_CASE("set algebra") {
  VSet a(6, {1, 2, 3}), b(6, {3, 4, 5}), c(6, {4, 5});
  CHECK(a.intersects(b));
  CHECK(!a.intersects(c));
  CHECK(a.disjoint_from(c));
  CHECK(a.intersection_size(b) == 1);
  CHECK(a.intersection_size(c) == 0);
  CHECK((a & b) == VSet(6, {3}));
  CHECK((a | b) == VSet(6, {1, 2, 3, 4, 5}));
  CHECK((a - b) == VSet(6, {1, 2}));
  CHECK(c.subset_of(b));
  CHECK(c.proper_subset_of(b));
  CHECK(b.subset_of(b));
  CHECK(!b.proper_subset_of(b));
  CHECK(!a.subset_of(b));
}

TEST_CASE("colex order equals numeric mask order") {
  // 3-sets of [5] in colex: 123 124 134 234 125 135 235 145 245 345.
  std::vector<VSet> want = {
      VSet(5, {1, 2, 3}), VSet(5, {1, 2, 4}), VSet(5, {1, 3, 4}), VSet(5, {2, 3, 4}),
      VSet(5, {1, 2, 5}), VSet(5, {1, 3, 5}), VSet(5, {2, 3, 5}), VSet(5, {1, 4, 5}),
      VSet(5, {2, 4, 5}), VSet(5, {3, 4, 5})};
  CHECK(std::is_sorted(want.begin(), want.end(),
                       [](const VSet& x, const VSet& y) { return colex_less(x, y); }));
  for (std::size_t i = 0; i < want.size(); ++i)
    for (std::size_t j = 0; j < want.size(); ++j)
      CHECK(colex_less(want[i], want[j]) == (want[i].low_word() < want[j].low_word()));
}

TEST_CASE("lex and colex disagree where they should") {
  VSet a(4, {1, 4}), b(4, {2, 3});
  CHECK(lex_less(a, b));       // 1 < 2 decides
  CHECK(colex_less(b, a));     // 3 < 4 decides
}

TEST_CASE("multiword sets behave like single-word ones") {
  VSet s(100, {1, 64, 65, 100});
  CHECK(s.size() == 4);
  CHECK(s.contains(64));
  CHECK(s.contains(65));
  CHECK(s.elements() == std::vector<int>{1, 64, 65, 100});
  CHECK(s.max_element() == 100);
  CHECK(s.words().size() == 2);

  VSet t(100, {64, 65});
  CHECK(s.intersects(t));
  CHECK(t.subset_of(s));
  CHECK((s - t) == VSet(100, {1, 100}));
  CHECK(s.intersection_size(t) == 2);

  // Colex across the word boundary: {64} < {65}, {63,64} < {65}.
  CHECK(colex_less(VSet(100, {64}), VSet(100, {65})));
  CHECK(colex_less(VSet(100, {63, 64}), VSet(100, {65})));
  CHECK(lex_less(VSet(100, {63, 64}), VSet(100, {65})));
  CHECK(lex_less(VSet(100, {1, 99}), VSet(100, {2, 3})));
}

TEST_CASE("mask round-trips") {
  VSet s = VSet::from_mask(6, 0b101001);  // bits 0,3,5 -> elements 1,4,6
  CHECK(s == VSet(6, {1, 4, 6}));
  CHECK(s.low_word() == 0b101001u);
  CHECK_THROWS_WITH_AS(VSet::from_mask(65, 1), "mask constructor needs n <= 64",
                       std::invalid_argument);
}

TEST_CASE("reground keeps elements") {
  VSet s(4, {2, 4});
  VSet t = s.with_ground(9);
  CHECK(t.ground_size() == 9);
  CHECK(t.elements() == std::vector<int>{2, 4});
  CHECK(t == VSet(9, {2, 4}));
  CHECK_THROWS_WITH_AS(s.with_ground(3), "ground set too small for elements",
                       std::invalid_argument);
}
