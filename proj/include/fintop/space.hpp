#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/error.hpp"
#include "fintop/point_set.hpp"

namespace fintop {

/// A finite topological space, held as its minimal-open-set basis: one set
/// U_x per point, the intersection of all opens containing x.
///
/// Instances are immutable and only built through the validating factories,
/// so every FinSpace satisfies x in U_x and (y in U_x implies U_y subset U_x).
class FinSpace {
 public:
  /// Builds a space from a full open family. The family must contain the
  /// empty set and the full set, and be closed under pairwise union and
  /// intersection; violations are reported with the offending pair.
  static FinSpace from_open_sets(std::vector<std::string> labels, std::span<const PointSet> opens);

  /// Builds a space directly from per-point minimal open sets.
  static FinSpace from_minimal_basis(std::vector<std::string> labels, std::vector<PointSet> basis);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(PointIndex i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<PointIndex> index_of(std::string_view label) const;

  /// U_x.
  PointSet minimal(PointIndex x) const { return basis_.at(x); }
  const std::vector<PointSet>& basis() const { return basis_; }
  PointSet full() const { return PointSet::full(size()); }

  friend bool operator==(const FinSpace&, const FinSpace&) = default;

 private:
  FinSpace(std::vector<std::string> labels, std::vector<PointSet> basis)
      : labels_(std::move(labels)), basis_(std::move(basis)) {}

  std::vector<std::string> labels_;
  std::vector<PointSet> basis_;
};

/// All open sets of a space, deduplicated and canonically sorted.
struct OpenFamily {
  std::size_t n = 0;
  std::vector<PointSet> opens;

  bool contains(PointSet s) const;
  friend bool operator==(const OpenFamily&, const OpenFamily&) = default;
};

/// Sorts canonically and removes duplicates.
OpenFamily make_open_family(std::size_t n, std::vector<PointSet> sets);

OpenFamily open_family(const FinSpace& space);
bool is_open(const FinSpace& space, PointSet s);
bool is_closed(const FinSpace& space, PointSet s);
/// U_A, the union of U_a over a in A. Throws EmptyInput for the empty set.
PointSet minimal_open(const FinSpace& space, PointSet a);
PointSet closure(const FinSpace& space, PointSet a);
PointSet interior(const FinSpace& space, PointSet a);
PointSet boundary(const FinSpace& space, PointSet a);
/// The space whose opens are the closed sets of `space`.
FinSpace opposite(const FinSpace& space);
/// Subspace on `y` with induced basis U_x & Y; points keep their relative order.
FinSpace subspace(const FinSpace& space, PointSet y);
bool is_t0(const FinSpace& space);

/// Labels "a", "b", ... for up to 26 points, "p0", "p1", ... beyond.
std::vector<std::string> default_labels(std::size_t n);

/// Resolves labels to a point set; throws UnknownLabel.
PointSet subset_of_labels(const FinSpace& space, std::span<const std::string> labels);
std::vector<std::string> labels_of(const FinSpace& space, PointSet s);
/// "{a,b}" rendering used in messages and DOT identifiers.
std::string format_set(const FinSpace& space, PointSet s);

}  // namespace fintop
