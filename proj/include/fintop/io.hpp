#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/balls.hpp"
#include "fintop/furtherness.hpp"
#include "fintop/regions.hpp"
#include "fintop/space.hpp"

namespace fintop {

/// Parses a space document:
///   {"points": [...], "opens": [[...], ...]}            or
///   {"points": [...], "min_basis": {"label": [...], ...}}
/// Exactly one of "opens" / "min_basis" must be present.
FinSpace parse_space(std::string_view text);

/// Canonical min_basis document, labels in point order, compact.
std::string serialize_space(const FinSpace& space);

/// Largest n accepted by the enumerator.
inline constexpr std::size_t max_enumeration_size = 5;

/// Calls `visit` once for every labelled topology on n points (labels from
/// default_labels), in a fixed order: reflexive-transitive relations by
/// increasing bitmask over the off-diagonal pairs. Throws SizeTooLarge for n > 5.
void for_each_topology(std::size_t n, bool t0_only, const std::function<void(const FinSpace&)>& visit);
std::vector<FinSpace> enumerate_topologies(std::size_t n, bool t0_only);

/// Deterministic random space. Draws one 64-bit word per ordered pair (i, j),
/// i != j, in row-major order from std::mt19937_64(seed); the pair is related
/// (i <= j) when the top two bits of the word are zero. The relation is then
/// closed reflexively and transitively and U_x = {y | y <= x}.
FinSpace random_space(std::size_t n, std::uint64_t seed);

enum class DotMode { Hasse, Lattice };

/// Hasse: the specialization order of the Kolmogorov quotient, edges from
/// lower to upper class. Lattice: the cover graph of the open sets.
std::string export_dot(const FinSpace& space, DotMode mode);

/// JSON renderings shared by the CLI and the Python module. Point sets are
/// label lists; infinite values are the string "infinity".
std::string matrix_json(const FurtherMatrix& matrix);
std::string matrix_text(const FurtherMatrix& matrix);
std::string region_json(const FinSpace& space, const RegionReport& report);
std::string quasi_json(const FinSpace& space, const QuasiReport& report);
std::string union_json(const FinSpace& space, const UnionAnalysis& analysis);
std::string ball_json(const FinSpace& space, const BallQuery& query, PointSet ball);

/// Splits a comma-separated label list. Labels that themselves contain commas
/// (product points) are matched greedily against the space's labels.
PointSet parse_label_list(const FinSpace& space, std::string_view text);

}  // namespace fintop
