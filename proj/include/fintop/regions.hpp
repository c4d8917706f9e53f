#pragma once

#include <string>
#include <vector>

#include "fintop/furtherness.hpp"
#include "fintop/space.hpp"

namespace fintop {

/// Center and radius of a subset: the points of A furthest from its boundary
/// and that furtherness. Clopen sets (including the empty set) have radius
/// infinity; the empty set has an empty center.
struct RegionReport {
  PointSet subset;
  PointSet boundary;
  PointSet interior;
  PointSet center;
  FurtherValue radius = FurtherValue::infinity();

  friend bool operator==(const RegionReport&, const RegionReport&) = default;
};

/// The points of A furthest from its complement, and that furtherness.
struct QuasiReport {
  PointSet subset;
  PointSet quasi_center;
  FurtherValue quasi_radius = FurtherValue::infinity();
};

enum class UnionCase {
  BoundedStrict,       ///< two sets, unequal radii, surviving center nonempty
  BoundedEqual,        ///< two sets, equal radii, surviving centers nonempty
  StrictDecrease,      ///< two sets, unequal radii, surviving center empty
  StrictDecreaseEqual, ///< two sets, equal radii, surviving centers empty
  General,             ///< any count, surviving centers of maximal-radius sets nonempty
  FallbackDirect,      ///< three or more sets, nothing survives
};

/// Tag used in reports: "2.25-i", "2.25-ii", "2.26-i", "2.26-ii", "3.37",
/// "fallback-direct".
std::string to_string(UnionCase c);

struct UnionAnalysis {
  std::vector<RegionReport> inputs;
  /// Per input: center points strictly closer to another input's boundary
  /// than the input's own radius.
  std::vector<PointSet> tilde_sets;
  /// Indices of maximal-radius inputs whose center survives the tilde cut.
  std::vector<std::size_t> dominant;
  FurtherValue max_input_radius = FurtherValue::infinity();
  PointSet predicted_center;
  FurtherValue predicted_radius = FurtherValue::infinity();
  /// False when the theorems give no closed form and the prediction is the
  /// direct computation.
  bool predicted_by_theorem = false;
  UnionCase union_case = UnionCase::FallbackDirect;
  RegionReport direct;
};

RegionReport region_report(const FinSpace& space, PointSet a);
QuasiReport quasi_report(const FinSpace& space, PointSet a);

/// A and cl(B) are disjoint, and so are cl(A) and B.
bool are_separated(const FinSpace& space, PointSet a, PointSet b);

/// Center/radius of a union of pairwise separated, nonempty, nonclopen sets,
/// predicted from the parts and checked against direct computation by the
/// caller. Throws PreconditionViolated naming the offending input.
UnionAnalysis union_analysis(const FinSpace& space, const std::vector<PointSet>& subsets);

struct ContainedBall {
  PointIndex center = 0;
  unsigned radius = 0;
  PointSet ball;
  /// The ball is strictly inside another returned ball.
  bool contained_in_other = false;
};

/// For each x in A the largest r with B+(x, r) inside A is Psi(x, A^c). The
/// entries returned are those attaining the maximum r. A radius of 0 means
/// no forward ball around x fits (the ball is then empty).
/// Throws EmptyOrFullSubset unless A is nonempty and proper.
std::vector<ContainedBall> largest_forward_balls(const FinSpace& space, PointSet a);

}  // namespace fintop
