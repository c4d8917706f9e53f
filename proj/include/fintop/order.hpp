#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fintop/furtherness.hpp"
#include "fintop/space.hpp"

namespace fintop {

/// Specialization preorder: x <= y iff Psi(y, x) = 0 iff x in U_y.
class Preorder {
 public:
  explicit Preorder(std::vector<PointSet> up_sets) : up_(std::move(up_sets)) {}

  std::size_t size() const { return up_.size(); }
  bool leq(PointIndex x, PointIndex y) const { return up_.at(x).contains(y); }
  /// {y | x <= y}.
  PointSet up_set(PointIndex x) const { return up_.at(x); }
  /// {y | y <= x}.
  PointSet down_set(PointIndex x) const;

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;
  /// Hasse edges (lower, upper): x < y with nothing strictly between.
  /// Meaningful on partial orders.
  std::vector<std::pair<PointIndex, PointIndex>> covers() const;

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  std::vector<PointSet> up_;
};

Preorder specialization_preorder(const FinSpace& space);

struct QuotientResult {
  FinSpace space;
  /// class_of[x] is the quotient point holding x.
  std::vector<PointIndex> class_of;
  /// Lowest-indexed member of each class.
  std::vector<PointIndex> representatives;
  /// Members of each class.
  std::vector<PointSet> classes;
};

/// Identifies points with equal minimal open sets. A class keeps its member's
/// label when it is a singleton and is labelled "[m1,m2,...]" otherwise.
QuotientResult kolmogorov_quotient(const FinSpace& space);

/// A function between two spaces, by image index. Holds references; the
/// spaces must outlive it.
struct SpaceMap {
  std::reference_wrapper<const FinSpace> domain;
  std::reference_wrapper<const FinSpace> codomain;
  std::vector<PointIndex> image;
};

/// Psi_X(x, y) = 0 implies Psi_Y(f x, f y) = 0 for all x, y.
bool is_continuous(const SpaceMap& f);
/// Psi_X(a, b) = Psi_Y(f a, f b) for all a, b.
bool is_furtherness_preserving(const SpaceMap& f);

struct BeatPoints {
  PointSet down;
  PointSet up;
};

/// x is a down beat point when exactly one y != x sits maximally below it:
/// Psi(x, y) = 0 and no z outside {x, y} has Psi(x, z) = Psi(z, y) = 0. Up
/// beat points are the dual. On T0 spaces this says the points strictly
/// below (above) x have a maximum (minimum).
BeatPoints beat_points(const FinSpace& space);

/// Kolmogorov quotient, then removal of beat points (lowest index first)
/// until none remain.
FinSpace core(const FinSpace& space);

/// Product space. Points are tuples in row-major order (the last factor
/// varies fastest), labelled by comma-joining the factor labels; U of a tuple
/// is the product of the factor minimal sets.
FinSpace product(const std::vector<FinSpace>& factors);

/// Row-major index of a tuple of factor indices.
PointIndex product_index(const std::vector<FinSpace>& factors, const std::vector<PointIndex>& tuple);

/// Closed form Psi_X(a,c)|U_[d]| + Psi_Y(b,d)|U_[c]| - Psi_X(a,c)Psi_Y(b,d),
/// with |U_[.]| counted in the Kolmogorov quotient of the respective factor.
unsigned product_furtherness(const FinSpace& x, const FinSpace& y, std::pair<PointIndex, PointIndex> from,
                             std::pair<PointIndex, PointIndex> to);

/// n-fold form: |prod U_[b_i] \ prod U_[a_i]| with every factor counted in
/// its quotient.
unsigned product_furtherness(const std::vector<FinSpace>& factors, const std::vector<PointIndex>& from,
                             const std::vector<PointIndex>& to);

}  // namespace fintop
