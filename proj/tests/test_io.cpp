#include "doctest.h"
#include "qvar/errors.hpp"
#include "qvar/examples.hpp"
#include "qvar/hecke.hpp"
#include "qvar/io.hpp"

using namespace qvar;

TEST_CASE("rationals and matrices") {
  CHECK(rational_to_json(Rational(3)) == json(3));
  CHECK(rational_to_json(parse_rational("-2/6")) == json("-1/3"));
  CHECK(rational_from_json(json("4/6")) == Rational(2, 3));
  CHECK_THROWS_AS(rational_from_json(json(0.5)), InputError);
  CHECK_THROWS_AS(rational_from_json(json("1/0")), InputError);
  RatMatrix m{{1, Rational(1, 2)}, {0, -3}};
  CHECK(matrix_from_json(matrix_to_json(m), 2, 2, "m") == m);
  CHECK(matrix_from_json(json::array(), 0, 4, "m") == RatMatrix(0, 4));
  CHECK_THROWS_AS(matrix_from_json(matrix_to_json(m), 2, 3, "m"), InputError);
}

TEST_CASE("representations round trip") {
  auto q = make_quiver_ptr(d_quiver(4));
  for (std::uint64_t s = 0; s < 10; ++s) {
    FramedRep x = sample_flat(q, DimVector{1, 0, 1, 0}, DimVector{0, 1, 1, 0}, s, {3});
    json j = rep_to_json(x);
    CHECK(rep_from_json(j, ".") == x);
    CHECK(rep_from_json(json::parse(j.dump()), ".") == x);
  }
  auto b = example_a2crystal();
  json bj = bundle_to_json(b);
  CHECK(resolve_rep(bj, ".") == b.points[0].rep);
  CHECK(resolve_rep(bj, ".", std::string("B12-zero")) == b.points[1].rep);
  CHECK(resolve_rep(bj, ".", std::string("1")) == b.points[1].rep);
  CHECK_THROWS_AS(resolve_rep(bj, ".", std::string("nope")), InputError);
  json report = make_report("example", {}, json{{"bundle", bj}});
  CHECK(resolve_rep(report, ".") == b.points[0].rep);
  CHECK(report.at("version") == kVersion);
}

TEST_CASE("malformed representations") {
  auto q = make_quiver_ptr(a_quiver(2));
  json j = rep_to_json(simple_rep(q, 0));
  j["dimV"]["9"] = 1;
  CHECK_THROWS_AS(rep_from_json(j, "."), InputError);
  json k = rep_to_json(simple_rep(q, 0));
  k["B"]["a1*"] = json::array({json::array({1, 2})});
  CHECK_THROWS_AS(rep_from_json(k, "."), InputError);
  CHECK_THROWS_AS(parse_json("{", "x"), InputError);
}

TEST_CASE("cocycle files are tied to their layout") {
  auto b = example_a2crystal();
  const FramedRep& x = b.points[0].rep;
  auto cls = ext_space_i(x, 0);
  json j = classes_to_json(x, 0, cls);
  CHECK(classes_from_json(j, x, 0) == cls);
  CHECK_THROWS_AS(classes_from_json(j, x, 1), InputError);
  CHECK(layout_hash(x, 0) != layout_hash(x, 1));
  CHECK(layout_hash(x, 0).rfind("fnv1a64:", 0) == 0);
  CHECK(fnv1a64("") == "fnv1a64:cbf29ce484222325");
}
