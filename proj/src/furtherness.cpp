#include "fintop/furtherness.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fintop {

PointSet class_representatives(const FinSpace& space) {
  PointSet reps;
  for (PointIndex x = 0; x < space.size(); ++x) {
    bool first = true;
    for (PointIndex y = 0; y < x && first; ++y) first = space.minimal(y) != space.minimal(x);
    if (first) reps.insert(x);
  }
  return reps;
}

namespace {

unsigned quotient_furtherness(const FinSpace& space, PointSet reps, PointIndex x, PointIndex y) {
  // Minimal sets are unions of classes, so counting representatives in the
  // difference counts quotient points.
  return static_cast<unsigned>(((space.minimal(y) - space.minimal(x)) & reps).size());
}

}  // namespace

unsigned furtherness(const FinSpace& space, PointIndex x, PointIndex y) {
  return quotient_furtherness(space, class_representatives(space), x, y);
}

FurtherValue furtherness_to_set(const FinSpace& space, PointIndex a, PointSet b) {
  return furtherness_to_set(space, PointSet::singleton(a), b);
}

FurtherValue furtherness_to_set(const FinSpace& space, PointSet a, PointSet b) {
  FurtherValue best = FurtherValue::infinity();
  if (a.empty() || b.empty()) return best;
  const PointSet reps = class_representatives(space);
  a.for_each([&](PointIndex x) {
    b.for_each([&](PointIndex y) { best = std::min(best, FurtherValue(quotient_furtherness(space, reps, x, y))); });
  });
  return best;
}

bool is_cover(const FinSpace& space, PointSet lower, PointSet upper) {
  if (!lower.proper_subset_of(upper)) return false;
  // Any open W strictly between would contain some b in upper \ lower, and
  // then lower u U_b would already be a strictly smaller open.
  bool cover = true;
  (upper - lower).for_each([&](PointIndex b) { cover = cover && (lower | space.minimal(b)) == upper; });
  return cover;
}

std::vector<PointSet> covers_of(const FinSpace& space, PointSet lower) {
  std::vector<PointSet> out;
  (space.full() - lower).for_each([&](PointIndex a) {
    const PointSet candidate = lower | space.minimal(a);
    if (is_cover(space, lower, candidate)) out.push_back(candidate);
  });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<PointSet>> nested_layers(const FinSpace& space, PointIndex x) {
  std::vector<std::vector<PointSet>> layers{{space.minimal(x)}};
  while (true) {
    std::set<PointSet, CanonicalLess> next;
    for (auto u : layers.back())
      for (auto v : covers_of(space, u)) next.insert(v);
    if (next.empty()) break;
    layers.emplace_back(next.begin(), next.end());
  }
  return layers;
}

OracleResult furtherness_oracle(const FinSpace& space, PointIndex x, PointIndex y, WitnessMode mode) {
  // Layered search. Each layer keeps a parent link per set so a witness chain
  // can be rebuilt; sets are deduplicated within a layer only.
  struct Node {
    PointSet set;
    std::size_t parent;
  };
  std::vector<std::vector<Node>> layers{{Node{space.minimal(x), 0}}};
  const PointSet pair_closure = space.minimal(x) | space.minimal(y);

  while (true) {
    const auto& current = layers.back();
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (!current[i].set.contains(y)) continue;
      if (!hit) hit = i;
      if (mode == WitnessMode::PairClosure && current[i].set == pair_closure) {
        hit = i;
        break;
      }
    }
    if (hit) {
      OracleResult result;
      result.value = static_cast<unsigned>(layers.size() - 1);
      std::size_t idx = *hit;
      for (std::size_t depth = layers.size(); depth-- > 0;) {
        result.witness.chain.push_back(layers[depth][idx].set);
        idx = layers[depth][idx].parent;
      }
      std::reverse(result.witness.chain.begin(), result.witness.chain.end());
      return result;
    }

    std::map<PointSet, std::size_t, CanonicalLess> next;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (auto v : covers_of(space, current[i].set)) next.emplace(v, i);
    // Every maximal chain ends at X, which contains y, so the search stops
    // before running out of layers.
    std::vector<Node> layer;
    for (auto [set, parent] : next) layer.push_back(Node{set, parent});
    layers.push_back(std::move(layer));
  }
}

FurtherMatrix::FurtherMatrix(std::vector<std::string> labels, std::vector<std::uint8_t> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  if (entries_.size() != labels_.size() * labels_.size())
    throw Error(ErrorKind::SchemaError, "matrix entry count does not match its labels");
}

std::vector<unsigned> FurtherMatrix::row(PointIndex r) const {
  std::vector<unsigned> out;
  for (PointIndex c = 0; c < size(); ++c) out.push_back(at(r, c));
  return out;
}

std::vector<unsigned> FurtherMatrix::column(PointIndex c) const {
  std::vector<unsigned> out;
  for (PointIndex r = 0; r < size(); ++r) out.push_back(at(r, c));
  return out;
}

FurtherMatrix furtherness_matrix(const FinSpace& space) {
  const std::size_t n = space.size();
  const PointSet reps = class_representatives(space);
  std::vector<std::uint8_t> entries(n * n);
  for (PointIndex i = 0; i < n; ++i)
    for (PointIndex j = 0; j < n; ++j)
      entries[i * n + j] = static_cast<std::uint8_t>(quotient_furtherness(space, reps, i, j));
  return FurtherMatrix(space.labels(), std::move(entries));
}

MatrixReport matrix_report(const FurtherMatrix& m) {
  const std::size_t n = m.size();
  MatrixReport report;
  report.points.resize(n);
  for (PointIndex x = 0; x < n; ++x) {
    auto& p = report.points[x];
    for (PointIndex y = 0; y < n; ++y) {
      if (m.at(x, y) == 0) p.row_zeros.insert(y);
      if (m.at(y, x) == 0) p.column_zeros.insert(y);
      report.max_entry = std::max(report.max_entry, m.at(x, y));
    }
    p.row_zero_count = p.row_zeros.size();
    p.column_zero_count = p.column_zeros.size();
    p.open_singleton = p.row_zero_count == 1;
    p.maximum_point = p.row_zero_count == n;
    p.minimum_point = p.column_zero_count == n;
    report.has_zero_row_or_column = report.has_zero_row_or_column || p.maximum_point || p.minimum_point;
    report.max_row_zero_count = std::max(report.max_row_zero_count, p.row_zero_count);
  }
  std::set<std::vector<unsigned>> rows;
  std::set<std::vector<unsigned>> columns;
  for (PointIndex x = 0; x < n; ++x) {
    rows.insert(m.row(x));
    columns.insert(m.column(x));
  }
  report.rows_distinct = rows.size() == n;
  report.columns_distinct = columns.size() == n;
  report.is_t0 = report.rows_distinct;
  return report;
}

bool row_dominates(const FurtherMatrix& m, PointIndex x, PointIndex y) {
  for (PointIndex z = 0; z < m.size(); ++z)
    if (m.at(x, z) > m.at(y, z)) return false;
  return true;
}

}  // namespace fintop
