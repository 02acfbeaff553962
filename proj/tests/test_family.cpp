#include <filesystem>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "intersectra/family_io.hpp"
#include "intersectra/set_family.hpp"

using namespace intersectra;

TEST_CASE("family construction sorts colex and drops duplicates") {
  SetFamily f = SetFamily::of(
      5, {VSet(5, {2, 5}), VSet(5, {1, 2}), VSet(5, {2, 5}), VSet(5, {3, 4})}, 2);
  CHECK(f.size() == 3);
  CHECK(f[0] == VSet(5, {1, 2}));
  CHECK(f[1] == VSet(5, {3, 4}));
  CHECK(f[2] == VSet(5, {2, 5}));
  CHECK(f.rank() == 2);
  CHECK(f.ground_size() == 5);
  CHECK(f.contains(VSet(5, {3, 4})));
  CHECK(!f.contains(VSet(5, {1, 3})));
  CHECK(f.support() == VSet(5, {1, 2, 3, 4, 5}));
}

TEST_CASE("family construction validates members") {
  CHECK_THROWS_WITH_AS(SetFamily::of(4, {VSet(5, {1, 2})}),
                       "member ground size mismatch", std::invalid_argument);
  CHECK_THROWS_WITH_AS(SetFamily::of(4, {VSet(4, {1, 2, 3})}, 2), "rank mismatch",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(SetFamily(4, 0), "rank out of range", std::invalid_argument);
  CHECK_THROWS_WITH_AS(SetFamily(3, 4), "rank out of range", std::invalid_argument);
  CHECK_THROWS_WITH_AS(SetFamily(-1), "negative ground size", std::invalid_argument);
}

TEST_CASE("rank inference") {
  CHECK(SetFamily::infer_rank(4, {VSet(4, {1, 2}), VSet(4, {3, 4})}).rank() == 2);
  CHECK(!SetFamily::infer_rank(4, {VSet(4, {1, 2}), VSet(4, {3})}).rank().has_value());
  CHECK(!SetFamily::infer_rank(4, {}).rank().has_value());
  CHECK(!SetFamily::infer_rank(4, {VSet(4)}).rank().has_value());
}

TEST_CASE("adding members and regrounding") {
  SetFamily f = SetFamily::of(4, {VSet(4, {1, 2})}, 2);
  SetFamily g = f.with_member(VSet(4, {1, 3}));
  CHECK(g.size() == 2);
  CHECK(g.rank() == 2);
  CHECK(f.size() == 1);  // original untouched

  SetFamily h = f.with_member(VSet(4, {1, 3, 4}));
  CHECK(!h.rank().has_value());  // uniformity lost

  SetFamily wide = g.with_ground(7);
  CHECK(wide.ground_size() == 7);
  CHECK(wide.rank() == 2);
  CHECK(wide[0] == VSet(7, {1, 2}));
  CHECK(wide == SetFamily::of(7, {VSet(7, {1, 2}), VSet(7, {1, 3})}, 2));
  CHECK(!(wide == g));  // equality includes the ground size
}

TEST_CASE("parsing with header") {
  SetFamily f = parse_family("# witness\nn=7 r=3\n1 2 3\n1 4 5\n");
  CHECK(f.ground_size() == 7);
  CHECK(f.rank() == 3);
  CHECK(f.size() == 2);
  CHECK(f.contains(VSet(7, {1, 4, 5})));
}

TEST_CASE("parsing without header infers ground size and rank") {
  SetFamily f = parse_family("1 2\n3 4\n\n# done\n");
  CHECK(f.ground_size() == 4);
  CHECK(f.rank() == 2);

  SetFamily g = parse_family("n=9\n1 2\n3 4 5\n");
  CHECK(g.ground_size() == 9);
  CHECK(!g.rank().has_value());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_family("n=x\n"), "line 1: bad ground size in header",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_family("n=-2\n"), "line 1: bad ground size in header",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_family("n=5 r=0\n"), "line 1: bad rank in header",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_family("n=5 q=3\n"), "line 1: bad header field: q=3",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_family("n=5 r=3 z\n"), "line 1: trailing header field: z",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_family("n=5\n1 2 x\n"), "line 2: bad token: x", ParseError);
  CHECK_THROWS_WITH_AS(parse_family("n=5\n0 1\n"), "line 2: elements must be positive",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_family("n=5\n1 1 2\n"),
                       "line 2: elements must be strictly increasing", ParseError);
  CHECK_THROWS_WITH_AS(parse_family("n=5\n2 1\n"),
                       "line 2: elements must be strictly increasing", ParseError);
  CHECK_THROWS_WITH_AS(parse_family("n=3\n1 2 4\n"),
                       "line 2: element exceeds declared ground size", ParseError);
  CHECK_THROWS_WITH_AS(parse_family("# nothing\n"),
                       "line 1: no header and no sets: ground size unknown", ParseError);

  try {
    parse_family("n=5\n1 2\nbogus\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("header rank is enforced against the rows") {
  CHECK_THROWS_WITH_AS(parse_family("n=4 r=2\n1 2 3\n"), "rank mismatch",
                       std::invalid_argument);
}

TEST_CASE("serialize then parse is the identity") {
  SetFamily f = SetFamily::of(
      7, {VSet(7, {1, 2, 3}), VSet(7, {1, 4, 5}), VSet(7, {2, 4, 6})}, 3);
  CHECK(parse_family(serialize_family(f)) == f);

  SetFamily mixed = SetFamily::of(6, {VSet(6, {1}), VSet(6, {2, 3, 4})});
  CHECK(parse_family(serialize_family(mixed)) == mixed);
  CHECK(serialize_family(mixed) == "n=6\n1\n2 3 4\n");

  // Serialization is canonical: reparsing scrambled text reproduces it.
  std::string canon = serialize_family(f);
  CHECK(serialize_family(parse_family("# c\n n=7 r=3 \n1 4 5\n2 4 6\n1 2 3\n")) == canon);
}

TEST_CASE("empty members have no text form") {
  SetFamily f = SetFamily::of(3, {VSet(3)});
  CHECK_THROWS_WITH_AS(serialize_family(f), "text format cannot express an empty member",
                       std::invalid_argument);
}

TEST_CASE("file round trip") {
  namespace fs = std::filesystem;
  fs::path p = fs::temp_directory_path() / "intersectra_io_test.fam";
  SetFamily f = SetFamily::of(5, {VSet(5, {1, 2}), VSet(5, {1, 5})}, 2);
  save_family(f, p.string());
  CHECK(load_family(p.string()) == f);
  fs::remove(p);

  CHECK_THROWS_WITH_AS(load_family("/nonexistent/path.fam"),
                       "cannot open /nonexistent/path.fam", std::runtime_error);
}
