#include <doctest.h>

#include "fintop/order.hpp"
#include "fixtures.hpp"

using namespace fintop;
using namespace fixtures;

namespace {

PointIndex at(const FinSpace& s, const std::string& l) { return *s.index_of(l); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::SchemaError;
}

}  // namespace

TEST_CASE("specialization preorder") {
  const FinSpace s = e2();
  const Preorder p = specialization_preorder(s);
  CHECK(p.leq(at(s, "a"), at(s, "b")));
  CHECK(p.leq(at(s, "b"), at(s, "c")));
  CHECK(p.leq(at(s, "a"), at(s, "c")));
  CHECK(p.leq(at(s, "d"), at(s, "c")));
  CHECK_FALSE(p.leq(at(s, "b"), at(s, "a")));
  CHECK_FALSE(p.leq(at(s, "a"), at(s, "d")));
  CHECK(p.covers() == std::vector<std::pair<PointIndex, PointIndex>>{{0, 1}, {1, 2}, {3, 2}});
  CHECK(p.is_reflexive());
  CHECK(p.is_transitive());
  CHECK(p.is_antisymmetric());
  CHECK(p.down_set(at(s, "c")) == s.full());

  const Preorder total = specialization_preorder(indiscrete(3));
  for (PointIndex x = 0; x < 3; ++x)
    for (PointIndex y = 0; y < 3; ++y) CHECK(total.leq(x, y));
  CHECK_FALSE(total.is_antisymmetric());
  const Preorder eq = specialization_preorder(discrete(3));
  for (PointIndex x = 0; x < 3; ++x)
    for (PointIndex y = 0; y < 3; ++y) CHECK(eq.leq(x, y) == (x == y));
}

TEST_CASE("Kolmogorov quotient") {
  const QuotientResult q = kolmogorov_quotient(e1());
  REQUIRE(q.classes.size() == 2);
  CHECK(q.classes[0] == PointSet::of({0, 1}));
  CHECK(q.classes[1] == PointSet::of({2}));
  CHECK(q.class_of == std::vector<PointIndex>{0, 0, 1});
  CHECK(q.space.labels() == std::vector<std::string>{"[1,2]", "3"});
  CHECK(q.space.basis() == sierpinski().basis());

  CHECK(kolmogorov_quotient(e2()).space == e2());
  CHECK(kolmogorov_quotient(indiscrete(4)).space.size() == 1);
}

TEST_CASE("continuity and furtherness preservation") {
  const FinSpace s = e2();
  const FinSpace c = point("c");
  CHECK(is_continuous(SpaceMap{s, s, {0, 1, 2, 3}}));
  CHECK(is_continuous(SpaceMap{s, c, {0, 0, 0, 0}}));
  CHECK_FALSE(is_continuous(SpaceMap{s, s, {1, 0, 2, 3}}));
  CHECK(is_furtherness_preserving(SpaceMap{s, s, {0, 1, 2, 3}}));
  CHECK_FALSE(is_furtherness_preserving(SpaceMap{s, c, {0, 0, 0, 0}}));

  const FinSpace copy = FinSpace::from_minimal_basis({"p", "q", "r", "t"}, s.basis());
  CHECK(is_furtherness_preserving(SpaceMap{s, copy, {0, 1, 2, 3}}));
  const FinSpace d2 = discrete(2);
  const FinSpace d3 = discrete(3);
  CHECK(is_furtherness_preserving(SpaceMap{d2, d3, {2, 0}}));

  CHECK(kind_of([&] { (void)is_continuous(SpaceMap{s, s, {0, 1}}); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { (void)is_continuous(SpaceMap{s, c, {0, 0, 0, 5}}); }) == ErrorKind::OutOfRange);
}

TEST_CASE("beat points") {
  const FinSpace s = e2();
  const BeatPoints b = beat_points(s);
  CHECK(b.down == set(s, {"b"}));
  CHECK(b.up == set(s, {"a", "b", "d"}));
  const BeatPoints none = beat_points(discrete(3));
  CHECK(none.down.empty());
  CHECK(none.up.empty());
  const FinSpace ch = chain3();
  CHECK(beat_points(ch).down == set(ch, {"y", "z"}));
  CHECK(beat_points(ch).up == set(ch, {"x", "y"}));
}

TEST_CASE("core") {
  CHECK(core(e2()).size() == 1);
  CHECK(core(e1()).size() == 1);
  // The four-point circle has no beat points.
  const FinSpace circle = parse_space(
      R"({"points":["a","b","c","d"],"min_basis":{"a":["a"],"b":["b"],"c":["a","b","c"],"d":["a","b","d"]}})");
  CHECK(core(circle) == circle);
  CHECK(core(discrete(3)) == discrete(3));
}

TEST_CASE("products") {
  const FinSpace p = product({sierpinski(), sierpinski_xy()});
  REQUIRE(p.size() == 4);
  CHECK(p.labels() == std::vector<std::string>{"a,x", "a,y", "b,x", "b,y"});
  CHECK(p.minimal(0) == PointSet::singleton(0));
  CHECK(p.minimal(3) == p.full());
  CHECK(product({e2()}) == e2());
  CHECK(product({point("x"), point("y")}).size() == 1);
  CHECK(kind_of([] { (void)product({}); }) == ErrorKind::EmptyInput);
  CHECK(kind_of([] { (void)product({discrete(8), discrete(9)}); }) == ErrorKind::SizeTooLarge);
  CHECK(product_index({sierpinski(), sierpinski_xy()}, {1, 0}) == 2);
}

TEST_CASE("product furtherness") {
  CHECK(product_furtherness(sierpinski(), sierpinski_xy(), {0, 0}, {1, 1}) == 3);
  CHECK(product_furtherness(e2(), e1(), {1, 2}, {1, 2}) == 0);

  const FinSpace s = e2();
  const unsigned formula = product_furtherness(s, s, {0, 0}, {2, 2});
  CHECK(formula == 15);
  const std::vector<FinSpace> factors{s, s};
  const auto direct = furtherness(product(factors), product_index(factors, {0, 0}), product_index(factors, {2, 2}));
  CHECK(direct == 15);

  const std::vector<FinSpace> three{sierpinski(), sierpinski_xy(), indiscrete(2)};
  const FinSpace p3 = product(three);
  CHECK(product_furtherness(three, {0, 0, 0}, {1, 1, 1}) ==
        furtherness(p3, product_index(three, {0, 0, 0}), product_index(three, {1, 1, 1})));
}
