#pragma once

#include <vector>

#include "fintop/space.hpp"

namespace fintop {

enum class BallDirection { Forward, Backward };

struct BallQuery {
  PointIndex center = 0;
  unsigned radius = 1;
  BallDirection direction = BallDirection::Forward;
};

/// Forward: {y | Psi(x, y) < r}. Backward: {y | Psi(y, x) < r}.
/// Throws ZeroRadius for r = 0.
PointSet ball(const FinSpace& space, const BallQuery& q);

/// Every ball of the given direction with radius 1..n.
std::vector<PointSet> all_balls(const FinSpace& space, BallDirection direction);

/// The topology generated by a family of subsets: closure under pairwise
/// intersection, then under union, plus the empty and full sets.
OpenFamily generate_topology(std::size_t n, const std::vector<PointSet>& generators);

OpenFamily ball_topology(const FinSpace& space, BallDirection direction);

/// max(Psi(x, y), Psi(y, x)).
unsigned symmetrized_furtherness(const FinSpace& space, PointIndex x, PointIndex y);

/// Balls {y | symmetrized(x, y) < r} for every center and radius 1..n.
std::vector<PointSet> symmetrized_balls(const FinSpace& space);
OpenFamily symmetrized_topology(const FinSpace& space);

}  // namespace fintop
