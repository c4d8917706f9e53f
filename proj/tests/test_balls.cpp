#include <doctest.h>

#include "fintop/balls.hpp"
#include "fintop/furtherness.hpp"
#include "fixtures.hpp"

using namespace fintop;
using namespace fixtures;

TEST_CASE("balls") {
  const FinSpace s = e2();
  CHECK(ball(s, {0, 1, BallDirection::Forward}) == set(s, {"a"}));
  CHECK(ball(s, {0, 1, BallDirection::Backward}) == set(s, {"a", "b", "c"}));
  CHECK(ball(s, {0, 4, BallDirection::Forward}) == s.full());
  CHECK(ball(s, {3, 2, BallDirection::Forward}) == set(s, {"a", "d"}));
  try {
    (void)ball(s, {0, 0, BallDirection::Forward});
    FAIL("expected ZeroRadius");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroRadius);
  }
  try {
    (void)ball(s, {9, 1, BallDirection::Forward});
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
}

TEST_CASE("ball topologies") {
  const FinSpace s = e2();
  CHECK(ball_topology(s, BallDirection::Forward) == open_family(s));
  CHECK(ball_topology(s, BallDirection::Backward) == open_family(opposite(s)));
  CHECK(ball_topology(discrete(3), BallDirection::Forward).opens.size() == 8);
  CHECK(ball_topology(discrete(3), BallDirection::Backward).opens.size() == 8);
}

TEST_CASE("generate_topology closes generators") {
  const auto t = generate_topology(3, {PointSet::of({0, 1}), PointSet::of({1, 2})});
  CHECK(t.opens == std::vector<PointSet>{PointSet{}, PointSet::of({1}), PointSet::of({0, 1}), PointSet::of({1, 2}),
                                         PointSet::full(3)});
}

TEST_CASE("symmetrized furtherness") {
  const FinSpace s = e2();
  CHECK(symmetrized_furtherness(s, 0, 1) == 1);
  CHECK(symmetrized_furtherness(s, 0, 2) == 3);
  for (PointIndex x = 0; x < s.size(); ++x) CHECK(symmetrized_furtherness(s, x, x) == 0);
}

TEST_CASE("symmetrized topology") {
  CHECK(symmetrized_topology(e2()).opens.size() == 16);
  const auto one = symmetrized_topology(point());
  CHECK(one.opens == std::vector<PointSet>{PointSet{}, PointSet::full(1)});
  const FinSpace x1 = e1();
  CHECK(symmetrized_topology(x1).opens ==
        std::vector<PointSet>{PointSet{}, set(x1, {"3"}), set(x1, {"1", "2"}), x1.full()});
  // The indiscrete space stays connected; the disconnectedness claim needs two classes.
  CHECK(symmetrized_topology(indiscrete(2)).opens.size() == 2);
}
