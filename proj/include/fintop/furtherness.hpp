#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fintop/space.hpp"

namespace fintop {

/// A furtherness value: a whole number or infinity. Infinity only arises for
/// set queries against the empty set; it orders above every finite value and
/// absorbs addition.
class FurtherValue {
 public:
  constexpr FurtherValue(unsigned value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  static constexpr FurtherValue infinity() { return FurtherValue(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  /// The finite value; throws std::bad_optional_access on infinity.
  constexpr unsigned value() const { return value_.value(); }

  friend constexpr bool operator==(FurtherValue, FurtherValue) = default;
  friend constexpr std::strong_ordering operator<=>(FurtherValue a, FurtherValue b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }
  friend constexpr FurtherValue operator+(FurtherValue a, FurtherValue b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return FurtherValue(*a.value_ + *b.value_);
  }

  /// Decimal digits, or "infinity".
  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinity"; }

 private:
  constexpr FurtherValue() = default;
  std::optional<unsigned> value_;
};

/// Psi(x, y) = |U_[y] \ U_[x]| in the Kolmogorov quotient.
unsigned furtherness(const FinSpace& space, PointIndex x, PointIndex y);

/// Points that are the lowest-indexed member of their equal-basis class.
PointSet class_representatives(const FinSpace& space);

/// Psi(a, B) = min over b in B; infinity when B is empty.
FurtherValue furtherness_to_set(const FinSpace& space, PointIndex a, PointSet b);
/// Psi(A, B) = min over a in A of Psi(a, B); infinity when either side is empty.
FurtherValue furtherness_to_set(const FinSpace& space, PointSet a, PointSet b);

/// An open-set chain U_0 = U_x, U_0 < U_1 < ... with every step a cover.
struct ChainWitness {
  std::vector<PointSet> chain;
};

struct OracleResult {
  unsigned value = 0;
  ChainWitness witness;
};

enum class WitnessMode {
  /// First chain found (canonical order among sets at the answering depth).
  FirstFound,
  /// Prefer a chain whose last set is U_x u U_y, when one exists.
  PairClosure,
};

/// True iff `lower` is strictly inside `upper` with no open set between
/// them. Both sets must be open.
bool is_cover(const FinSpace& space, PointSet lower, PointSet upper);

/// The open sets covering `lower`, in canonical order. Candidates are
/// lower u U_a for a outside `lower`, filtered by the cover test.
std::vector<PointSet> covers_of(const FinSpace& space, PointSet lower);

/// Layer j holds every open set that sits at position j of some nested
/// sequence around x. Layer 0 is {U_x}; the last layer is {X}.
std::vector<std::vector<PointSet>> nested_layers(const FinSpace& space, PointIndex x);

/// Furtherness by breadth-first search over the cover graph of the open-set
/// lattice, straight from the nested-sequence definition.
OracleResult furtherness_oracle(const FinSpace& space, PointIndex x, PointIndex y,
                                WitnessMode mode = WitnessMode::FirstFound);

class FurtherMatrix {
 public:
  FurtherMatrix(std::vector<std::string> labels, std::vector<std::uint8_t> entries);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  unsigned at(PointIndex row, PointIndex col) const { return entries_[row * size() + col]; }
  std::vector<unsigned> row(PointIndex r) const;
  std::vector<unsigned> column(PointIndex c) const;

  friend bool operator==(const FurtherMatrix&, const FurtherMatrix&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> entries_;
};

FurtherMatrix furtherness_matrix(const FinSpace& space);

struct PointReport {
  std::size_t row_zero_count = 0;
  std::size_t column_zero_count = 0;
  /// {y | entry(x, y) = 0}, i.e. U_x.
  PointSet row_zeros;
  /// {y | entry(y, x) = 0}, i.e. the closure of {x}.
  PointSet column_zeros;
  bool open_singleton = false;
  bool maximum_point = false;
  bool minimum_point = false;
};

/// Everything read off a furtherness matrix without consulting the space.
/// maximum_point/minimum_point only carry meaning when is_t0 holds.
struct MatrixReport {
  std::vector<PointReport> points;
  bool rows_distinct = false;
  bool columns_distinct = false;
  bool is_t0 = false;
  bool has_zero_row_or_column = false;
  unsigned max_entry = 0;
  std::size_t max_row_zero_count = 0;
};

MatrixReport matrix_report(const FurtherMatrix& matrix);

/// Row x is entrywise <= row y.
bool row_dominates(const FurtherMatrix& matrix, PointIndex x, PointIndex y);

}  // namespace fintop
