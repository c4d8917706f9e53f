#include <doctest.h>

#include "fintop/space.hpp"
#include "fixtures.hpp"

using namespace fintop;
using namespace fixtures;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::SchemaError;
}

std::vector<std::vector<std::string>> opens_by_label(const FinSpace& s) {
  std::vector<std::vector<std::string>> out;
  for (auto u : open_family(s).opens) out.push_back(labels_of(s, u));
  return out;
}

}  // namespace

TEST_CASE("point sets order canonically") {
  CHECK(canonical_less(PointSet::of({3}), PointSet::of({0, 1})));
  CHECK(canonical_less(PointSet::of({0, 3}), PointSet::of({1, 2})));
  CHECK(canonical_less(PointSet::of({0, 1}), PointSet::of({0, 2})));
  CHECK_FALSE(canonical_less(PointSet::of({0, 1}), PointSet::of({0, 1})));
  CHECK(PointSet::full(3).complement(3).empty());
  CHECK(PointSet::full(64).size() == 64);
}

TEST_CASE("from_open_sets builds the minimal basis") {
  const FinSpace s = e2();
  CHECK(s.minimal(0) == set(s, {"a"}));
  CHECK(s.minimal(1) == set(s, {"a", "b"}));
  CHECK(s.minimal(2) == s.full());
  CHECK(s.minimal(3) == set(s, {"d"}));
  const FinSpace one = from_opens({"x"}, {{}, {"x"}});
  CHECK(one.size() == 1);
  CHECK(one.minimal(0) == PointSet::singleton(0));
}

TEST_CASE("from_open_sets rejects non-topologies") {
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  // {a} and {c} are listed, {a,c} is not.
  const std::vector<PointSet> family{PointSet{},          PointSet::full(4),       PointSet::of({0}),
                                     PointSet::of({2}),   PointSet::of({0, 1}),    PointSet::of({2, 3}),
                                     PointSet::of({0, 1, 2}), PointSet::of({0, 2, 3})};
  try {
    (void)FinSpace::from_open_sets(labels, family);
    FAIL("expected NotClosedUnderUnion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClosedUnderUnion);
    REQUIRE(e.witness().size() == 2);
    CHECK(e.witness()[0] == PointSet::of({0}));
    CHECK(e.witness()[1] == PointSet::of({2}));
  }

  const std::vector<PointSet> no_empty{PointSet::full(2), PointSet::of({0})};
  CHECK(kind_of([&] { (void)FinSpace::from_open_sets({"a", "b"}, no_empty); }) == ErrorKind::MissingEmptyOrFull);
  const std::vector<PointSet> not_meet{PointSet{}, PointSet::full(3), PointSet::of({0, 1}), PointSet::of({1, 2})};
  CHECK(kind_of([&] { (void)FinSpace::from_open_sets({"a", "b", "c"}, not_meet); }) ==
        ErrorKind::NotClosedUnderIntersection);
  const std::vector<PointSet> trivial{PointSet{}, PointSet::full(1)};
  CHECK(kind_of([&] { (void)FinSpace::from_open_sets({}, trivial); }) == ErrorKind::EmptyLabels);
  CHECK(kind_of([&] { (void)FinSpace::from_open_sets({"a", "a"}, trivial); }) == ErrorKind::DuplicateLabel);
  const std::vector<PointSet> out_of_range{PointSet{}, PointSet::full(1), PointSet::of({3})};
  CHECK(kind_of([&] { (void)FinSpace::from_open_sets({"a"}, out_of_range); }) == ErrorKind::OutOfRange);
}

TEST_CASE("from_minimal_basis") {
  const FinSpace s = FinSpace::from_minimal_basis(
      {"a", "b", "c", "d"}, {PointSet::of({0}), PointSet::of({0, 1}), PointSet::full(4), PointSet::of({3})});
  CHECK(s == e2());
  const FinSpace ind = FinSpace::from_minimal_basis({"x", "y"}, {PointSet::full(2), PointSet::full(2)});
  CHECK(opens_by_label(ind) == std::vector<std::vector<std::string>>{{}, {"x", "y"}});
  CHECK(kind_of([] {
          (void)FinSpace::from_minimal_basis({"x", "y"}, {PointSet::of({0}), PointSet::of({0})});
        }) == ErrorKind::PointNotInOwnBasis);
  CHECK(kind_of([] {
          (void)FinSpace::from_minimal_basis({"x", "y", "z"},
                                             {PointSet::of({0, 1}), PointSet::of({1, 2}), PointSet::of({2})});
        }) == ErrorKind::BasisNotNested);
  CHECK(kind_of([] { (void)FinSpace::from_minimal_basis({"x"}, {}); }) == ErrorKind::SchemaError);
}

TEST_CASE("open_family") {
  CHECK(opens_by_label(e2()) == std::vector<std::vector<std::string>>{
                                    {}, {"a"}, {"d"}, {"a", "b"}, {"a", "d"}, {"a", "b", "d"}, {"a", "b", "c", "d"}});
  CHECK(open_family(indiscrete(2)).opens.size() == 2);
  CHECK(opens_by_label(q1()) == std::vector<std::vector<std::string>>{{},
                                                                      {"a"},
                                                                      {"c"},
                                                                      {"a", "b"},
                                                                      {"a", "c"},
                                                                      {"c", "d"},
                                                                      {"a", "b", "c"},
                                                                      {"a", "c", "d"},
                                                                      {"a", "b", "c", "d"}});
}

TEST_CASE("open and closed tests") {
  const FinSpace s = e2();
  CHECK(is_open(s, set(s, {"a", "d"})));
  CHECK_FALSE(is_open(s, set(s, {"b"})));
  CHECK(is_open(s, PointSet{}));
  CHECK(is_closed(s, set(s, {"b", "c"})));
  CHECK_FALSE(is_closed(s, set(s, {"a"})));
}

TEST_CASE("minimal_open, closure, interior, boundary") {
  const FinSpace s = e2();
  CHECK(minimal_open(s, set(s, {"b", "d"})) == set(s, {"a", "b", "d"}));
  CHECK(minimal_open(s, set(s, {"a"})) == set(s, {"a"}));
  CHECK(minimal_open(s, s.full()) == s.full());
  CHECK(kind_of([&] { (void)minimal_open(s, PointSet{}); }) == ErrorKind::EmptyInput);

  CHECK(closure(s, set(s, {"a"})) == set(s, {"a", "b", "c"}));
  CHECK(closure(s, set(s, {"a", "c"})) == set(s, {"a", "b", "c"}));
  CHECK(closure(s, s.full()) == s.full());

  CHECK(interior(s, set(s, {"a", "c"})) == set(s, {"a"}));
  const FinSpace x1 = e1();
  CHECK(interior(x1, set(x1, {"2", "3"})).empty());
  CHECK(interior(s, set(s, {"a", "b", "d"})) == set(s, {"a", "b", "d"}));

  CHECK(boundary(x1, set(x1, {"2", "3"})) == x1.full());
  CHECK(boundary(s, set(s, {"a", "c"})) == set(s, {"b", "c"}));
  const FinSpace q = q1();
  CHECK(boundary(q, set(q, {"a", "b"})).empty());
}

TEST_CASE("opposite") {
  const FinSpace op = opposite(e2());
  CHECK(opens_by_label(op) == std::vector<std::vector<std::string>>{
                                  {}, {"c"}, {"b", "c"}, {"c", "d"}, {"a", "b", "c"}, {"b", "c", "d"}, {"a", "b", "c", "d"}});
  CHECK(opposite(discrete(3)) == discrete(3));
  CHECK(opens_by_label(opposite(e1())) == std::vector<std::vector<std::string>>{{}, {"3"}, {"1", "2", "3"}});
  CHECK(opposite(opposite(e2())) == e2());
}

TEST_CASE("subspace") {
  const FinSpace s = e2();
  const FinSpace ac = subspace(s, set(s, {"a", "c"}));
  CHECK(opens_by_label(ac) == std::vector<std::vector<std::string>>{{}, {"a"}, {"a", "c"}});
  CHECK(subspace(s, s.full()) == s);
  const FinSpace bd = subspace(s, set(s, {"b", "d"}));
  CHECK(bd.labels() == std::vector<std::string>{"b", "d"});
  CHECK(bd.minimal(0) == PointSet::of({0}));
  CHECK(bd.minimal(1) == PointSet::of({1}));
  CHECK(kind_of([&] { (void)subspace(s, PointSet{}); }) == ErrorKind::EmptyInput);
}

TEST_CASE("is_t0") {
  CHECK(is_t0(e2()));
  CHECK_FALSE(is_t0(e1()));
  CHECK(is_t0(point()));
}

TEST_CASE("labels") {
  CHECK(default_labels(3) == std::vector<std::string>{"a", "b", "c"});
  CHECK(default_labels(27)[26] == "p26");
  const FinSpace s = e2();
  CHECK(format_set(s, set(s, {"d", "a"})) == "{a,d}");
  CHECK(format_set(s, PointSet{}) == "{}");
  CHECK(s.index_of("c") == 2);
  CHECK_FALSE(s.index_of("z").has_value());
  const std::vector<std::string> unknown{"z"};
  CHECK(kind_of([&] { (void)subset_of_labels(s, unknown); }) == ErrorKind::UnknownLabel);
}
