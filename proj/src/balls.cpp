#include "fintop/balls.hpp"

#include <algorithm>
#include <unordered_set>

#include "fintop/furtherness.hpp"

namespace fintop {

PointSet ball(const FinSpace& space, const BallQuery& q) {
  if (q.radius == 0) throw Error(ErrorKind::ZeroRadius, "balls need a radius of at least 1");
  if (q.center >= space.size()) throw Error(ErrorKind::OutOfRange, "ball center out of range");
  const FurtherMatrix m = furtherness_matrix(space);
  PointSet out;
  for (PointIndex y = 0; y < space.size(); ++y) {
    const unsigned d = q.direction == BallDirection::Forward ? m.at(q.center, y) : m.at(y, q.center);
    if (d < q.radius) out.insert(y);
  }
  return out;
}

std::vector<PointSet> all_balls(const FinSpace& space, BallDirection direction) {
  std::vector<PointSet> out;
  for (PointIndex x = 0; x < space.size(); ++x)
    for (unsigned r = 1; r <= space.size(); ++r) out.push_back(ball(space, {x, r, direction}));
  return out;
}

OpenFamily generate_topology(std::size_t n, const std::vector<PointSet>& generators) {
  std::unordered_set<PointSet, PointSetHash> meets(generators.begin(), generators.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<PointSet> snapshot(meets.begin(), meets.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) grew = meets.insert(snapshot[i] & snapshot[j]).second || grew;
  }

  std::unordered_set<PointSet, PointSetHash> opens{PointSet{}, PointSet::full(n)};
  std::vector<PointSet> stack(opens.begin(), opens.end());
  while (!stack.empty()) {
    const PointSet s = stack.back();
    stack.pop_back();
    for (auto g : meets) {
      if (opens.insert(s | g).second) stack.push_back(s | g);
    }
  }
  return make_open_family(n, {opens.begin(), opens.end()});
}

OpenFamily ball_topology(const FinSpace& space, BallDirection direction) {
  return generate_topology(space.size(), all_balls(space, direction));
}

unsigned symmetrized_furtherness(const FinSpace& space, PointIndex x, PointIndex y) {
  return std::max(furtherness(space, x, y), furtherness(space, y, x));
}

std::vector<PointSet> symmetrized_balls(const FinSpace& space) {
  const FurtherMatrix m = furtherness_matrix(space);
  std::vector<PointSet> out;
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (unsigned r = 1; r <= space.size(); ++r) {
      PointSet b;
      for (PointIndex y = 0; y < space.size(); ++y)
        if (std::max(m.at(x, y), m.at(y, x)) < r) b.insert(y);
      out.push_back(b);
    }
  }
  return out;
}

OpenFamily symmetrized_topology(const FinSpace& space) {
  return generate_topology(space.size(), symmetrized_balls(space));
}

}  // namespace fintop
