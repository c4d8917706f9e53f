#include "fintop/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

#include "fintop/balls.hpp"
#include "fintop/furtherness.hpp"
#include "fintop/io.hpp"
#include "fintop/regions.hpp"

namespace fintop::verify {

namespace {

using Failure = std::optional<std::string>;

std::string pt(const FinSpace& s, PointIndex i) { return s.label(i); }
std::string set(const FinSpace& s, PointSet a) { return format_set(s, a); }

// Subsets of the space's points, by mask order.
std::vector<PointSet> all_subsets(const FinSpace& s) {
  std::vector<PointSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m) out.push_back(PointSet::from_bits(m));
  return out;
}

bool is_clopen(const FinSpace& s, PointSet a) { return is_open(s, a) && is_closed(s, a); }

// space_core ----------------------------------------------------------------

Failure basis_invariants(const FinSpace& s) {
  for (PointIndex x = 0; x < s.size(); ++x) {
    if (!s.minimal(x).contains(x)) return pt(s, x) + " not in its minimal set";
    for (PointIndex y = 0; y < s.size(); ++y)
      if (s.minimal(x).contains(y) && !s.minimal(y).subset_of(s.minimal(x)))
        return "U_" + pt(s, y) + " not inside U_" + pt(s, x);
  }
  return std::nullopt;
}

Failure open_family_closed(const FinSpace& s) {
  const OpenFamily f = open_family(s);
  if (!f.contains(PointSet{}) || !f.contains(s.full())) return std::string("missing empty or full set");
  for (auto a : f.opens)
    for (auto b : f.opens) {
      if (!f.contains(a | b)) return "union " + set(s, a) + " " + set(s, b) + " missing";
      if (!f.contains(a & b)) return "intersection " + set(s, a) + " " + set(s, b) + " missing";
    }
  return std::nullopt;
}

Failure is_open_consistent(const FinSpace& s) {
  const OpenFamily f = open_family(s);
  for (auto a : all_subsets(s)) {
    const bool listed = f.contains(a);
    if (is_open(s, a) != listed) return "is_open disagrees with open_family on " + set(s, a);
    if (!a.empty() && (minimal_open(s, a) == a) != listed) return "minimal_open fixpoint disagrees on " + set(s, a);
  }
  return std::nullopt;
}

Failure interior_closure_duality(const FinSpace& s) {
  for (auto a : all_subsets(s)) {
    const PointSet dual = closure(s, a.complement(s.size())).complement(s.size());
    if (interior(s, a) != dual) return "interior/closure duality fails on " + set(s, a);
    if (boundary(s, a) != (closure(s, a) - interior(s, a))) return "boundary mismatch on " + set(s, a);
  }
  return std::nullopt;
}

Failure opposite_involution(const FinSpace& s) {
  const FinSpace op = opposite(s);
  if (opposite(op) != s) return std::string("opposite is not an involution");
  const OpenFamily f = open_family(s);
  std::vector<PointSet> complements;
  for (auto u : f.opens) complements.push_back(u.complement(s.size()));
  if (open_family(op) != make_open_family(s.size(), complements))
    return std::string("opens of the opposite are not the complements");
  for (PointIndex x = 0; x < s.size(); ++x) {
    PointSet zeros;
    for (PointIndex y = 0; y < s.size(); ++y)
      if (furtherness(s, y, x) == 0) zeros.insert(y);
    if (op.minimal(x) != zeros) return "opposite basis at " + pt(s, x) + " is not {y | Psi(y,x)=0}";
  }
  return std::nullopt;
}

Failure open_sets_roundtrip(const FinSpace& s) {
  const OpenFamily f = open_family(s);
  if (FinSpace::from_open_sets(s.labels(), f.opens) != s) return std::string("from_open_sets(open_family) differs");
  return std::nullopt;
}

Failure t0_opposite(const FinSpace& s) {
  if (is_t0(s) != is_t0(opposite(s))) return std::string("T0 not preserved by opposite");
  return std::nullopt;
}

// furtherness -----------------------------------------------------------------

Failure oracle_equivalence(const FinSpace& s) {
  for (PointIndex x = 0; x < s.size(); ++x)
    for (PointIndex y = 0; y < s.size(); ++y) {
      const unsigned fast = furtherness(s, x, y);
      const unsigned slow = furtherness_oracle(s, x, y).value;
      if (fast != slow)
        return "Psi(" + pt(s, x) + "," + pt(s, y) + ") formula " + std::to_string(fast) + " vs oracle " +
               std::to_string(slow);
    }
  return std::nullopt;
}

Failure diagonal_zero(const FinSpace& s) {
  for (PointIndex x = 0; x < s.size(); ++x)
    if (furtherness(s, x, x) != 0 || furtherness_oracle(s, x, x).value != 0) return "Psi(x,x) != 0 at " + pt(s, x);
  return std::nullopt;
}

Failure triangle_inequality(const FinSpace& s) {
  const FurtherMatrix m = furtherness_matrix(s);
  for (PointIndex x = 0; x < s.size(); ++x)
    for (PointIndex y = 0; y < s.size(); ++y)
      for (PointIndex z = 0; z < s.size(); ++z)
        if (m.at(x, y) > m.at(x, z) + m.at(z, y))
          return "triangle fails at (" + pt(s, x) + "," + pt(s, y) + ") via " + pt(s, z);
  return std::nullopt;
}

Failure t0_criterion(const FinSpace& s) {
  const FurtherMatrix m = furtherness_matrix(s);
  bool separates = true;
  for (PointIndex x = 0; x < s.size(); ++x)
    for (PointIndex y = 0; y < s.size(); ++y)
      if (x != y && m.at(x, y) == 0 && m.at(y, x) == 0) separates = false;
  const MatrixReport r = matrix_report(m);
  const bool t0 = is_t0(s);
  if (t0 != separates) return std::string("T0 disagrees with Psi(x,y)=Psi(y,x)=0 => x=y");
  if (t0 != r.rows_distinct) return std::string("T0 disagrees with distinct rows");
  if (t0 != r.columns_distinct) return std::string("T0 disagrees with distinct columns");
  return std::nullopt;
}

Failure range_bound(const FinSpace& s) {
  const FurtherMatrix m = furtherness_matrix(s);
  for (PointIndex x = 0; x < s.size(); ++x)
    for (PointIndex y = 0; y < s.size(); ++y)
      if (m.at(x, y) + 1 > s.size()) return "Psi(" + pt(s, x) + "," + pt(s, y) + ") exceeds n-1";
  return std::nullopt;
}

Failure zero_characterization(const FinSpace& s) {
  for (PointIndex x = 0; x < s.size(); ++x) {
    PointSet zeros;
    for (PointIndex y = 0; y < s.size(); ++y) {
      const bool zero = furtherness(s, x, y) == 0;
      if (zero != s.minimal(x).contains(y)) return "Psi(x,y)=0 <=> y in U_x fails at " + pt(s, x) + "," + pt(s, y);
      if (zero != s.minimal(y).subset_of(s.minimal(x))) return "Psi(x,y)=0 <=> U_y in U_x fails";
      if (zero) zeros.insert(y);
    }
    if (zeros != s.minimal(x)) return "U_x != {y | Psi(x,y)=0} at " + pt(s, x);
  }
  return std::nullopt;
}

Failure valid_chain(const FinSpace& s, PointIndex x, PointIndex y, const OracleResult& r) {
  const auto& c = r.witness.chain;
  if (c.size() != r.value + 1) return std::string("witness length does not match value");
  if (c.front() != s.minimal(x)) return std::string("witness does not start at U_x");
  if (!c.back().contains(y)) return std::string("witness does not reach y");
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!is_open(s, c[i + 1])) return std::string("witness set not open");
    if (!is_cover(s, c[i], c[i + 1])) return "witness step " + set(s, c[i]) + " -> " + set(s, c[i + 1]) + " not a cover";
  }
  return std::nullopt;
}

Failure chain_witness(const FinSpace& s) {
  for (PointIndex x = 0; x < s.size(); ++x)
    for (PointIndex y = 0; y < s.size(); ++y) {
      const auto r = furtherness_oracle(s, x, y, WitnessMode::PairClosure);
      if (auto f = valid_chain(s, x, y, r)) return *f;
      if (r.value != furtherness(s, x, y)) return std::string("witness-mode value differs");
      if (r.witness.chain.back() != (s.minimal(x) | s.minimal(y)))
        return "no witness chain ends at U_{x,y} for " + pt(s, x) + "," + pt(s, y);
      if (auto f = valid_chain(s, x, y, furtherness_oracle(s, x, y))) return *f;
    }
  return std::nullopt;
}

Failure chain_uniqueness(const FinSpace& s) {
  for (PointIndex x = 0; x < s.size(); ++x) {
    const auto layers = nested_layers(s, x);
    for (PointIndex y = 0; y < s.size(); ++y) {
      const unsigned k = furtherness(s, x, y);
      if (k >= layers.size()) return std::string("value beyond the longest nested sequence");
      for (unsigned j = 0; j < k; ++j)
        for (auto v : layers[j])
          if (v.contains(y)) return "y reached before position Psi(x,y) at " + pt(s, x) + "," + pt(s, y);
      for (auto v : layers[k])
        if (v.contains(y) && v != (s.minimal(x) | s.minimal(y)))
          return "position-k set " + set(s, v) + " containing y is not U_{x,y}";
    }
  }
  return std::nullopt;
}

Failure cover_step_t0(const FinSpace& s) {
  if (!is_t0(s)) return std::nullopt;
  for (PointIndex x = 0; x < s.size(); ++x)
    for (const auto& layer : nested_layers(s, x))
      for (auto v : layer)
        for (auto w : covers_of(s, v))
          if ((w - v).size() != 1) return "cover " + set(s, v) + " -> " + set(s, w) + " adds more than one point";
  return std::nullopt;
}

Failure zero_count_bound(const FinSpace& s) {
  const FurtherMatrix m = furtherness_matrix(s);
  const MatrixReport r = matrix_report(m);
  for (PointIndex x = 0; x < s.size(); ++x)
    for (PointIndex y = 0; y < s.size(); ++y)
      if (m.at(y, x) > r.points[x].row_zero_count)
        return "Psi(" + pt(s, y) + "," + pt(s, x) + ") exceeds zero count of row " + pt(s, x);
  if (r.max_entry > r.max_row_zero_count) return std::string("max entry exceeds max row zero count");
  return std::nullopt;
}

// matrix ---------------------------------------------------------------------

Failure row_dominance(const FinSpace& s) {
  const FurtherMatrix m = furtherness_matrix(s);
  for (PointIndex x = 0; x < s.size(); ++x)
    for (PointIndex y = 0; y < s.size(); ++y)
      if (row_dominates(m, x, y) != (m.at(x, y) == 0))
        return "row dominance disagrees with Psi=0 at " + pt(s, x) + "," + pt(s, y);
  return std::nullopt;
}

Failure matrix_rows_as_sets(const FinSpace& s) {
  const MatrixReport r = matrix_report(furtherness_matrix(s));
  for (PointIndex x = 0; x < s.size(); ++x) {
    const auto& p = r.points[x];
    if (p.row_zeros != s.minimal(x)) return "row zeros of " + pt(s, x) + " are not U_x";
    if (p.column_zeros != closure(s, PointSet::singleton(x))) return "column zeros of " + pt(s, x) + " are not cl{x}";
    if (p.open_singleton != is_open(s, PointSet::singleton(x))) return "open singleton flag wrong at " + pt(s, x);
  }
  return std::nullopt;
}

Failure extremal_points(const FinSpace& s) {
  const MatrixReport r = matrix_report(furtherness_matrix(s));
  bool any_extremal = false;
  for (PointIndex x = 0; x < s.size(); ++x) {
    // Maximum: every point lies below x. Minimum: x lies below every point.
    const bool maximum = s.minimal(x) == s.full();
    bool minimum = true;
    for (PointIndex y = 0; y < s.size(); ++y) minimum = minimum && s.minimal(y).contains(x);
    any_extremal = any_extremal || maximum || minimum;
    if (!is_t0(s)) continue;
    if (r.points[x].maximum_point != maximum) return "zero row <=> maximum fails at " + pt(s, x);
    if (r.points[x].minimum_point != minimum) return "zero column <=> minimum fails at " + pt(s, x);
  }
  if (r.has_zero_row_or_column != any_extremal) return std::string("zero row/column flag disagrees");
  return std::nullopt;
}

// order ----------------------------------------------------------------------

Failure preorder_props(const FinSpace& s) {
  const Preorder p = specialization_preorder(s);
  if (!p.is_reflexive()) return std::string("not reflexive");
  if (!p.is_transitive()) return std::string("not transitive");
  if (p.is_antisymmetric() != is_t0(s)) return std::string("antisymmetry disagrees with T0");
  for (PointIndex x = 0; x < s.size(); ++x)
    for (PointIndex y = 0; y < s.size(); ++y)
      if (p.leq(x, y) != s.minimal(y).contains(x)) return "x <= y <=> x in U_y fails at " + pt(s, x) + "," + pt(s, y);
  return std::nullopt;
}

Failure quotient_props(const FinSpace& s) {
  const QuotientResult q = kolmogorov_quotient(s);
  if (!is_t0(q.space)) return std::string("quotient not T0");
  for (PointIndex x = 0; x < s.size(); ++x)
    for (PointIndex y = 0; y < s.size(); ++y) {
      const bool same = q.class_of[x] == q.class_of[y];
      const bool zeros = furtherness(s, x, y) == 0 && furtherness(s, y, x) == 0;
      if (same != zeros) return "class relation disagrees at " + pt(s, x) + "," + pt(s, y);
      // Both sides by the chain-search oracle, so the check does not lean on
      // the quotient formula.
      const unsigned in_quotient = furtherness_oracle(q.space, q.class_of[x], q.class_of[y]).value;
      const unsigned in_space = furtherness_oracle(s, x, y).value;
      if (in_quotient != in_space) return "quotient furtherness differs at " + pt(s, x) + "," + pt(s, y);
    }
  const QuotientResult again = kolmogorov_quotient(q.space);
  if (again.space.basis() != q.space.basis()) return std::string("quotient is not idempotent");
  return std::nullopt;
}

Failure beat_point_props(const FinSpace& s) {
  if (!is_t0(s)) return std::nullopt;
  const BeatPoints b = beat_points(s);
  for (PointIndex x = 0; x < s.size(); ++x) {
    const PointSet below = s.minimal(x) - PointSet::singleton(x);
    bool has_max = false;
    below.for_each([&](PointIndex m) { has_max = has_max || below.subset_of(s.minimal(m)); });
    const PointSet above = closure(s, PointSet::singleton(x)) - PointSet::singleton(x);
    bool has_min = false;
    above.for_each([&](PointIndex m) { has_min = has_min || above.subset_of(closure(s, PointSet::singleton(m))); });
    if (b.down.contains(x) != has_max) return "down beat point disagrees with maximum-below at " + pt(s, x);
    if (b.up.contains(x) != has_min) return "up beat point disagrees with minimum-above at " + pt(s, x);
  }
  return std::nullopt;
}

Failure core_props(const FinSpace& s) {
  const FinSpace c = core(s);
  if (!is_t0(c)) return std::string("core not T0");
  const BeatPoints b = beat_points(c);
  if (c.size() > 1 && !(b.down | b.up).empty()) return std::string("core still has beat points");
  return std::nullopt;
}

const std::vector<FinSpace>& small_spaces() {
  static const std::vector<FinSpace> spaces = [] {
    std::vector<FinSpace> out;
    for (std::size_t n = 1; n <= 3; ++n)
      for_each_topology(n, false, [&](const FinSpace& s) { out.push_back(s); });
    return out;
  }();
  return spaces;
}

// Calls f(image) for every map from a domain of size n into a codomain of size m.
template <class F>
void for_each_map(std::size_t n, std::size_t m, F&& f) {
  std::vector<PointIndex> image(n, 0);
  while (true) {
    f(image);
    std::size_t i = 0;
    while (i < n && ++image[i] == m) image[i++] = 0;
    if (i == n) return;
  }
}

Failure product_formula(const FinSpace& x) {
  for (const auto& y : small_spaces()) {
    const std::vector<FinSpace> factors{x, y};
    const FurtherMatrix direct = furtherness_matrix(product(factors));
    for (PointIndex a = 0; a < x.size(); ++a)
      for (PointIndex b = 0; b < y.size(); ++b)
        for (PointIndex c = 0; c < x.size(); ++c)
          for (PointIndex d = 0; d < y.size(); ++d) {
            const unsigned formula = product_furtherness(x, y, {a, b}, {c, d});
            const unsigned actual = direct.at(product_index(factors, {a, b}), product_index(factors, {c, d}));
            if (formula != actual)
              return "product with " + serialize_space(y) + " at ((" + pt(x, a) + "," + pt(y, b) + "),(" + pt(x, c) +
                     "," + pt(y, d) + ")): formula " + std::to_string(formula) + " vs direct " + std::to_string(actual);
          }
  }
  return std::nullopt;
}

Failure nfold_product(const FinSpace& x) {
  if (x.size() != 2) return std::nullopt;
  const auto twos = enumerate_topologies(2, false);
  for (const auto& y : twos)
    for (const auto& z : twos) {
      const std::vector<FinSpace> factors{x, y, z};
      const FinSpace p = product(factors);
      const FurtherMatrix direct = furtherness_matrix(p);
      for (PointIndex i = 0; i < p.size(); ++i)
        for (PointIndex j = 0; j < p.size(); ++j) {
          const std::vector<PointIndex> from{i / 4, (i / 2) % 2, i % 2};
          const std::vector<PointIndex> to{j / 4, (j / 2) % 2, j % 2};
          if (product_furtherness(factors, from, to) != direct.at(i, j))
            return "triple product disagrees at " + p.label(i) + " -> " + p.label(j);
        }
    }
  return std::nullopt;
}

Failure continuity_preimage(const FinSpace& x) {
  for (const auto& y : small_spaces()) {
    Failure fail;
    for_each_map(x.size(), y.size(), [&](const std::vector<PointIndex>& image) {
      if (fail) return;
      const SpaceMap f{x, y, image};
      const bool cont = is_continuous(f);
      if (cont != is_continuous_by_preimage(f)) fail = "continuity criteria disagree into " + serialize_space(y);
      if (is_furtherness_preserving(f) && !cont) fail = "preserving map not continuous into " + serialize_space(y);
    });
    if (fail) return fail;
  }
  return std::nullopt;
}

Failure minimal_rigidity(const FinSpace& s) {
  const BeatPoints b = beat_points(s);
  if (!is_t0(s) || !(b.down | b.up).empty()) return std::nullopt;
  Failure fail;
  for_each_map(s.size(), s.size(), [&](const std::vector<PointIndex>& image) {
    if (fail) return;
    if (!is_continuous(SpaceMap{s, s, image})) return;
    for (PointIndex x = 0; x < s.size(); ++x)
      if (furtherness(s, image[x], x) != 0) return;
    for (PointIndex x = 0; x < s.size(); ++x)
      if (image[x] != x) fail = "continuous map with Psi(f(x),x)=0 that is not the identity";
  });
  return fail;
}

// balls ----------------------------------------------------------------------

Failure forward_topology(const FinSpace& s) {
  if (ball_topology(s, BallDirection::Forward) != open_family(s)) return std::string("forward balls miss the topology");
  for (PointIndex x = 0; x < s.size(); ++x)
    if (ball(s, {x, 1, BallDirection::Forward}) != s.minimal(x)) return "B+(x,1) != U_x at " + pt(s, x);
  return std::nullopt;
}

Failure backward_topology(const FinSpace& s) {
  if (ball_topology(s, BallDirection::Backward) != open_family(opposite(s)))
    return std::string("backward balls miss the opposite topology");
  for (PointIndex x = 0; x < s.size(); ++x)
    if (ball(s, {x, 1, BallDirection::Backward}) != closure(s, PointSet::singleton(x)))
      return "B-(x,1) != cl{x} at " + pt(s, x);
  return std::nullopt;
}

Failure basis_condition(const std::vector<PointSet>& balls) {
  for (auto b1 : balls)
    for (auto b2 : balls) {
      const PointSet meet = b1 & b2;
      bool ok = true;
      meet.for_each([&](PointIndex x) {
        ok = ok && std::any_of(balls.begin(), balls.end(), [&](PointSet b3) { return b3.contains(x) && b3.subset_of(meet); });
      });
      if (!ok) return std::string("ball family is not a basis");
    }
  return std::nullopt;
}

Failure balls_basis(const FinSpace& s) {
  if (auto f = basis_condition(all_balls(s, BallDirection::Forward))) return "forward: " + *f;
  if (auto f = basis_condition(all_balls(s, BallDirection::Backward))) return "backward: " + *f;
  return std::nullopt;
}

Failure pseudometric(const FinSpace& s) {
  for (PointIndex x = 0; x < s.size(); ++x) {
    if (symmetrized_furtherness(s, x, x) != 0) return std::string("nonzero diagonal");
    for (PointIndex y = 0; y < s.size(); ++y) {
      if (symmetrized_furtherness(s, x, y) != symmetrized_furtherness(s, y, x)) return std::string("not symmetric");
      for (PointIndex z = 0; z < s.size(); ++z)
        if (symmetrized_furtherness(s, x, y) > symmetrized_furtherness(s, x, z) + symmetrized_furtherness(s, z, y))
          return "triangle fails at " + pt(s, x) + "," + pt(s, y) + "," + pt(s, z);
    }
  }
  return std::nullopt;
}

Failure smallest_join(const FinSpace& s) {
  const OpenFamily sym = symmetrized_topology(s);
  const OpenFamily t = open_family(s);
  const OpenFamily top = open_family(opposite(s));
  auto contains_all = [](const OpenFamily& big, const OpenFamily& small) {
    return std::all_of(small.opens.begin(), small.opens.end(), [&](PointSet u) { return big.contains(u); });
  };
  if (!contains_all(sym, t) || !contains_all(sym, top)) return std::string("symmetrized topology misses T or T^op");
  for (const auto& other : enumerate_topologies(s.size(), false)) {
    const OpenFamily f = open_family(other);
    if (contains_all(f, t) && contains_all(f, top) && !contains_all(f, sym))
      return "a smaller topology contains T and T^op: " + serialize_space(other);
  }
  return std::nullopt;
}

Failure t0_discrete(const FinSpace& s) {
  if (is_t0(s) && symmetrized_topology(s).opens.size() != (std::size_t{1} << s.size()))
    return std::string("T0 space whose symmetrized topology is not discrete");
  return std::nullopt;
}

Failure disconnected(const FinSpace& s) {
  if (s.size() < 2) return std::nullopt;
  const OpenFamily f = symmetrized_topology(s);
  for (auto u : f.opens)
    if (!u.empty() && u != s.full() && f.contains(u.complement(s.size()))) return std::nullopt;
  return std::string("symmetrized topology is connected");
}

Failure disconnected_classes(const FinSpace& s) {
  const OpenFamily f = symmetrized_topology(s);
  bool split = false;
  for (auto u : f.opens)
    split = split || (!u.empty() && u != s.full() && f.contains(u.complement(s.size())));
  const bool several_classes = kolmogorov_quotient(s).classes.size() > 1;
  if (split != several_classes) return std::string("disconnected <=> more than one class fails");
  return std::nullopt;
}

// regions --------------------------------------------------------------------

Failure closure_invariance(const FinSpace& s) {
  for (auto a : all_subsets(s))
    for (PointIndex x = 0; x < s.size(); ++x)
      if (furtherness_to_set(s, x, a) != furtherness_to_set(s, x, closure(s, a)))
        return "Psi(a,A) != Psi(a,cl A) for a=" + pt(s, x) + ", A=" + set(s, a);
  return std::nullopt;
}

Failure separation_obstruction(const FinSpace& s) {
  for (auto a : all_subsets(s)) {
    if (a.empty()) continue;
    for (auto b : all_subsets(s)) {
      if (b.empty()) continue;
      if (furtherness_to_set(s, a, b) == FurtherValue(0) && !minimal_open(s, a).intersects(minimal_open(s, b)))
        return "Psi(A,B)=0 but U_A, U_B disjoint for " + set(s, a) + ", " + set(s, b);
    }
  }
  return std::nullopt;
}

Failure center_radius(const FinSpace& s) {
  for (auto a : all_subsets(s)) {
    const RegionReport r = region_report(s, a);
    const std::string name = set(s, a);
    if (!r.center.subset_of(a)) return "center outside subset " + name;
    if (!a.empty() && r.center.empty()) return "empty center for " + name;
    bool consistent = true;
    r.center.for_each([&](PointIndex c) { consistent = consistent && furtherness_to_set(s, c, r.boundary) == r.radius; });
    if (!consistent) return "center points at different furtherness for " + name;
    if (r.radius.is_infinite() != is_clopen(s, a)) return "infinite radius <=> clopen fails for " + name;
    if (a.empty()) continue;
    if ((r.radius == FurtherValue(0)) != r.interior.empty()) return "radius 0 <=> empty interior fails for " + name;
    if (r.interior.empty() && r.center != a) return "empty interior but center != A for " + name;
    if (!r.interior.empty() && (!r.center.subset_of(r.interior) || r.radius == FurtherValue(0)))
      return "nonempty interior but center not inside it or radius 0 for " + name;
    if (is_open(s, a) && r.radius == FurtherValue(0)) return "open set with radius 0: " + name;
  }
  return std::nullopt;
}

Failure radius_monotonicity(const FinSpace& s) {
  for (auto a : all_subsets(s)) {
    const FurtherValue r = region_report(s, a).radius;
    if (r > region_report(s, interior(s, a)).radius) return "rad(A) > rad(interior A) for " + set(s, a);
    if (r > region_report(s, closure(s, a)).radius) return "rad(A) > rad(closure A) for " + set(s, a);
  }
  return std::nullopt;
}

Failure subspace_monotonicity(const FinSpace& s) {
  for (auto y : all_subsets(s)) {
    if (y.empty()) continue;
    const FinSpace sub = subspace(s, y);
    const auto members = y.indices();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << members.size()); ++m) {
      PointSet in_x;
      const PointSet in_y = PointSet::from_bits(m);
      in_y.for_each([&](PointIndex k) { in_x.insert(members[k]); });
      if (region_report(s, in_x).radius > region_report(sub, in_y).radius)
        return "rad_X(A) > rad_Y(A) for A=" + set(s, in_x) + ", Y=" + set(s, y);
    }
  }
  return std::nullopt;
}

// Radius of A inside Y, measured with the furtherness of the ambient space.
FurtherValue restricted_radius(const FinSpace& s, PointSet y, PointSet a) {
  const PointSet cl = closure(s, a) & y;
  PointSet in;
  a.for_each([&](PointIndex x) {
    if ((s.minimal(x) & y).subset_of(a)) in.insert(x);
  });
  const PointSet bd = cl - in;
  FurtherValue best = FurtherValue::infinity();
  bool any = false;
  a.for_each([&](PointIndex x) {
    const FurtherValue d = furtherness_to_set(s, x, bd);
    if (!any || d > best) best = d;
    any = true;
  });
  return best;
}

Failure subspace_monotonicity_restricted(const FinSpace& s) {
  for (auto y : all_subsets(s))
    for (auto a : all_subsets(s))
      if (a.subset_of(y) && region_report(s, a).radius > restricted_radius(s, y, a))
        return "rad_X(A) > restricted rad_Y(A) for A=" + set(s, a) + ", Y=" + set(s, y);
  return std::nullopt;
}

Failure quasi_balls(const FinSpace& s) {
  const FurtherMatrix m = furtherness_matrix(s);
  for (auto a : all_subsets(s)) {
    if (a.empty() || a == s.full()) continue;
    const PointSet comp = a.complement(s.size());
    const QuasiReport q = quasi_report(s, a);
    unsigned best = 0;
    PointSet argmax;
    bool first = true;
    Failure fail;
    a.for_each([&](PointIndex x) {
      // Largest contained radius by scanning balls directly.
      unsigned largest = 0;
      for (unsigned n = 1; n <= s.size() + 1; ++n) {
        PointSet b;
        for (PointIndex y = 0; y < s.size(); ++y)
          if (m.at(x, y) < n) b.insert(y);
        const bool inside = b.subset_of(a);
        if (inside != (FurtherValue(n) <= furtherness_to_set(s, x, comp)))
          fail = "B+(x,n) in A <=> n <= Psi(x,A^c) fails at x=" + pt(s, x) + ", A=" + set(s, a);
        if (inside) largest = n;
      }
      if (first || largest > best) {
        best = largest;
        argmax = PointSet::singleton(x);
        first = false;
      } else if (largest == best) {
        argmax.insert(x);
      }
    });
    if (fail) return fail;
    if (q.quasi_radius != FurtherValue(best) || q.quasi_center != argmax)
      return "quasi center/radius disagree with the largest contained balls for " + set(s, a);
    const auto entries = largest_forward_balls(s, a);
    PointSet centers;
    for (const auto& e : entries) {
      centers.insert(e.center);
      if (e.radius != best) return "largest_forward_balls radius mismatch for " + set(s, a);
    }
    if (centers != argmax) return "largest_forward_balls centers mismatch for " + set(s, a);
  }
  return std::nullopt;
}

std::vector<PointSet> qualifying_subsets(const FinSpace& s) {
  std::vector<PointSet> out;
  for (auto a : all_subsets(s))
    if (!a.empty() && !is_clopen(s, a)) out.push_back(a);
  return out;
}

Failure check_union(const FinSpace& s, const std::vector<PointSet>& parts) {
  const UnionAnalysis u = union_analysis(s, parts);
  std::string name;
  for (auto p : parts) name += set(s, p) + " ";
  if (u.direct.radius > u.max_input_radius) return "union radius exceeds max input radius for " + name;
  if (u.predicted_by_theorem &&
      (u.predicted_center != u.direct.center || u.predicted_radius != u.direct.radius))
    return "case " + to_string(u.union_case) + " prediction (" + set(s, u.predicted_center) + ", " +
           u.predicted_radius.to_string() + ") differs from direct (" + set(s, u.direct.center) + ", " +
           u.direct.radius.to_string() + ") for " + name;
  if ((u.union_case == UnionCase::StrictDecrease || u.union_case == UnionCase::StrictDecreaseEqual) &&
      !(u.direct.radius < u.max_input_radius))
    return "case " + to_string(u.union_case) + " without strict decrease for " + name;
  return std::nullopt;
}

Failure union_pairs(const FinSpace& s) {
  const auto q = qualifying_subsets(s);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (!are_separated(s, q[i], q[j])) continue;
      if (auto f = check_union(s, {q[i], q[j]})) return f;
      if (auto f = check_union(s, {q[j], q[i]})) return f;
    }
  return std::nullopt;
}

Failure union_triples(const FinSpace& s) {
  const auto q = qualifying_subsets(s);
  if (q.size() < 3) return std::nullopt;
  // Sampling is seeded from the space itself so a counterexample replays.
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  for (auto u : s.basis()) seed = (seed ^ u.bits()) * 0x100000001b3ULL;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::size_t i = rng() % q.size(), j = rng() % q.size(), k = rng() % q.size();
    if (i == j || j == k || i == k) continue;
    if (!are_separated(s, q[i], q[j]) || !are_separated(s, q[j], q[k]) || !are_separated(s, q[i], q[k])) continue;
    if (auto f = check_union(s, {q[i], q[j], q[k]})) return f;
  }
  // Also every separated triple among the first few qualifying sets, so small
  // spaces with rare separated triples are still covered.
  const std::size_t limit = std::min<std::size_t>(q.size(), 12);
  for (std::size_t i = 0; i < limit; ++i)
    for (std::size_t j = i + 1; j < limit; ++j) {
      if (!are_separated(s, q[i], q[j])) continue;
      for (std::size_t k = j + 1; k < limit; ++k)
        if (are_separated(s, q[i], q[k]) && are_separated(s, q[j], q[k]))
          if (auto f = check_union(s, {q[i], q[j], q[k]})) return f;
    }
  return std::nullopt;
}

// io -------------------------------------------------------------------------

Failure roundtrip(const FinSpace& s) {
  const std::string doc = serialize_space(s);
  if (parse_space(doc) != s) return std::string("parse(serialize(X)) != X");
  if (serialize_space(parse_space(doc)) != doc) return std::string("serialize is not stable");
  return std::nullopt;
}

Failure dot_stable(const FinSpace& s) {
  for (auto mode : {DotMode::Hasse, DotMode::Lattice})
    if (export_dot(s, mode) != export_dot(s, mode)) return std::string("DOT output differs between runs");
  return std::nullopt;
}

Failure random_valid(const FinSpace& s) {
  try {
    (void)FinSpace::from_minimal_basis(s.labels(), s.basis());
  } catch (const Error& e) {
    return std::string(e.what());
  }
  return basis_invariants(s);
}

std::optional<Counterexample> enumeration_counts(std::size_t max_n) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 4); ++n) {
    std::set<std::vector<std::uint64_t>> by_relation;
    std::size_t t0_count = 0;
    for (bool t0 : {false, true}) {
      std::size_t count = 0;
      for_each_topology(n, t0, [&](const FinSpace& s) {
        ++count;
        if (!t0) {
          std::vector<std::uint64_t> key;
          for (auto u : open_family(s).opens) key.push_back(u.bits());
          by_relation.insert(key);
        }
      });
      if (t0) t0_count = count;
      else if (by_relation.size() != count)
        return Counterexample{"", "duplicate topologies at n=" + std::to_string(n)};
    }
    const auto families = enumerate_open_families(n);
    std::set<std::vector<std::uint64_t>> by_family;
    std::size_t family_t0 = 0;
    for (const auto& f : families) {
      std::vector<std::uint64_t> key;
      for (auto u : f.opens) key.push_back(u.bits());
      by_family.insert(key);
      const FinSpace s = FinSpace::from_open_sets(default_labels(n), f.opens);
      if (is_t0(s)) ++family_t0;
    }
    if (by_family != by_relation)
      return Counterexample{"", "relation and family enumerations differ at n=" + std::to_string(n) + " (" +
                                    std::to_string(by_relation.size()) + " vs " + std::to_string(by_family.size()) + ")"};
    if (family_t0 != t0_count)
      return Counterexample{"", "T0 counts differ at n=" + std::to_string(n) + " (" + std::to_string(t0_count) +
                                    " vs " + std::to_string(family_t0) + ")"};
  }
  return std::nullopt;
}

Property per_space(std::string name, std::string description, SpaceCheck check, Corpus corpus = {}) {
  return Property{std::move(name), std::move(description), std::move(corpus), std::move(check), nullptr};
}

}  // namespace

const std::vector<Property>& properties() {
  static const std::vector<Property> catalogue = [] {
    const Corpus up_to_3{1, 3, false, {}};
    const Corpus with_samples{1, 5, true, {}};
    return std::vector<Property>{
        per_space("space.basis_invariants", "x in U_x and y in U_x implies U_y in U_x", basis_invariants),
        per_space("space.open_family_closed", "open family contains empty/full and is closed", open_family_closed),
        per_space("space.is_open_consistent", "is_open, open_family and minimal_open agree", is_open_consistent),
        per_space("space.interior_closure_duality", "interior(A) = X - cl(X - A)", interior_closure_duality),
        per_space("space.opposite_involution", "opposite is an involution on complements", opposite_involution),
        per_space("space.open_sets_roundtrip", "from_open_sets(open_family(X)) = X", open_sets_roundtrip),
        per_space("space.t0_opposite", "T0 iff opposite is T0", t0_opposite),
        per_space("furtherness.oracle_equivalence", "formula equals chain-search oracle", oracle_equivalence),
        per_space("furtherness.diagonal_zero", "Psi(x,x) = 0", diagonal_zero),
        per_space("furtherness.triangle_inequality", "Psi(x,y) <= Psi(x,z) + Psi(z,y)", triangle_inequality),
        per_space("furtherness.t0_criterion", "T0 iff separating zeros iff distinct rows/columns", t0_criterion),
        per_space("furtherness.range_bound", "Psi(x,y) <= n-1", range_bound),
        per_space("furtherness.zero_characterization", "Psi(x,y)=0 iff y in U_x", zero_characterization),
        per_space("furtherness.chain_witness", "a witness chain ends at U_{x,y}", chain_witness),
        per_space("furtherness.chain_uniqueness", "every position-k set containing y is U_{x,y}", chain_uniqueness),
        per_space("furtherness.cover_step_t0", "cover steps add one point in T0 spaces", cover_step_t0),
        per_space("furtherness.zero_count_bound", "Psi(y,x) <= zeros in row x", zero_count_bound),
        per_space("matrix.row_dominance", "row x <= row y iff Psi(x,y)=0", row_dominance),
        per_space("matrix.rows_as_sets", "row/column zeros are U_x and cl{x}", matrix_rows_as_sets),
        per_space("matrix.extremal_points", "zero row/column iff maximum/minimum point", extremal_points),
        per_space("order.preorder", "specialization preorder laws", preorder_props),
        per_space("order.quotient", "quotient is T0 and preserves furtherness", quotient_props),
        per_space("order.beat_points", "beat points match the order-theoretic definition", beat_point_props),
        per_space("order.core", "core is T0 without beat points", core_props),
        per_space("order.minimal_rigidity", "minimal spaces: Psi(f x, x)=0 forces f = id", minimal_rigidity),
        per_space("order.product_formula", "closed-form product furtherness", product_formula, up_to_3),
        per_space("order.nfold_product", "triple products of two-point spaces", nfold_product, Corpus{2, 2, false, {}}),
        per_space("order.continuity", "continuity criterion vs preimages; preserving implies continuous",
                  continuity_preimage, up_to_3),
        per_space("balls.forward_topology", "forward balls generate the topology", forward_topology),
        per_space("balls.backward_topology", "backward balls generate the opposite", backward_topology),
        per_space("balls.basis", "ball families satisfy the basis condition", balls_basis),
        per_space("balls.pseudometric", "symmetrized furtherness is a pseudometric", pseudometric),
        per_space("balls.smallest_join", "symmetrized topology is the join of T and T^op", smallest_join, up_to_3),
        per_space("balls.t0_discrete", "T0 implies discrete symmetrized topology", t0_discrete),
        per_space("balls.disconnected", "symmetrized topology is disconnected for n > 1", disconnected),
        per_space("balls.disconnected_classes", "symmetrized topology disconnected iff more than one class",
                  disconnected_classes),
        per_space("regions.closure_invariance", "Psi(a,A) = Psi(a,cl A)", closure_invariance),
        per_space("regions.separation_obstruction", "Psi(A,B)=0 implies U_A meets U_B", separation_obstruction),
        per_space("regions.center_radius", "center/radius invariants", center_radius),
        per_space("regions.monotonicity", "rad(A) <= rad(interior), rad(closure)", radius_monotonicity),
        per_space("regions.subspace_monotonicity", "rad_X(A) <= rad_Y(A)", subspace_monotonicity),
        per_space("regions.subspace_monotonicity_restricted", "rad_X(A) <= rad_Y(A) with the ambient furtherness",
                  subspace_monotonicity_restricted),
        per_space("regions.quasi_balls", "largest contained forward balls", quasi_balls),
        per_space("regions.union_pairs", "union theorems on separated pairs", union_pairs, with_samples),
        per_space("regions.union_triples", "union theorem on sampled separated triples", union_triples,
                  Corpus{5, 5, false, {5}}),
        per_space("io.roundtrip", "parse(serialize(X)) = X", roundtrip, up_to_3),
        per_space("io.dot_stable", "DOT output is byte-stable", dot_stable),
        per_space("io.random_valid", "random spaces validate", random_valid, Corpus{1, 0, true, {}}),
        Property{"io.enumeration_counts", "relation and family enumerators agree", {}, nullptr, enumeration_counts},
    };
  }();
  return catalogue;
}

const Property* find_property(const std::string& name) {
  for (const auto& p : properties())
    if (p.name == name) return &p;
  return nullptr;
}

std::optional<std::string> replay(const Property& property, const FinSpace& space) {
  if (!property.check) return std::string("property is not per-space");
  try {
    return property.check(space);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

VerifyReport run_property(const Property& property, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.property = property.name;

  if (property.global) {
    report.spaces_checked = 0;
    report.counterexample = property.global(options.max_n);
    report.passed = !report.counterexample;
  } else {
    std::vector<FinSpace> corpus;
    std::vector<std::size_t> sizes = property.corpus.fixed_sizes;
    if (sizes.empty())
      for (std::size_t n = property.corpus.min_n; n <= std::min(options.max_n, property.corpus.cap_n); ++n)
        sizes.push_back(n);
    for (auto n : sizes) for_each_topology(n, false, [&](const FinSpace& s) { corpus.push_back(s); });
    if (property.corpus.sampled)
      for (std::size_t i = 0; i < options.samples; ++i) corpus.push_back(random_space(options.sample_n, options.seed + i));

    std::vector<Failure> results(corpus.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{corpus.size()};
    auto worker = [&] {
      for (std::size_t i = next++; i < corpus.size(); i = next++) {
        if (i > first_failure.load()) continue;
        results[i] = replay(property, corpus[i]);
        if (results[i]) {
          std::size_t cur = first_failure.load();
          while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    const unsigned hw = options.workers ? options.workers : std::max(1U, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < std::min<unsigned>(hw, static_cast<unsigned>(corpus.size())); ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    report.spaces_checked = corpus.size();
    const std::size_t fail = first_failure.load();
    if (fail < corpus.size()) {
      report.passed = false;
      report.spaces_checked = fail + 1;
      report.counterexample = Counterexample{serialize_space(corpus[fail]), *results[fail]};
    }
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerifyReport> run_all(const VerifyOptions& options) {
  std::vector<VerifyReport> out;
  for (const auto& p : properties()) out.push_back(run_property(p, options));
  return out;
}

std::string to_json_line(const VerifyReport& r) {
  nlohmann::ordered_json doc;
  doc["property"] = r.property;
  doc["spaces_checked"] = r.spaces_checked;
  doc["passed"] = r.passed;
  if (r.counterexample) {
    nlohmann::ordered_json ce;
    ce["space"] = r.counterexample->space_document.empty()
                      ? nlohmann::ordered_json(nullptr)
                      : nlohmann::ordered_json::parse(r.counterexample->space_document);
    ce["witness"] = r.counterexample->witness;
    doc["counterexample"] = std::move(ce);
  } else {
    doc["counterexample"] = nullptr;
  }
  doc["wall_time_ms"] = r.wall_time_ms;
  return doc.dump();
}

std::vector<OpenFamily> enumerate_open_families(std::size_t n) {
  if (n == 0 || n > 4) throw Error(ErrorKind::SizeTooLarge, "family enumeration supports 1 <= n <= 4");
  const PointSet all = PointSet::full(n);
  std::vector<PointSet> middle;
  for (std::uint64_t m = 1; m < all.bits(); ++m) middle.push_back(PointSet::from_bits(m));

  std::vector<OpenFamily> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
    std::unordered_set<PointSet, PointSetHash> fam{PointSet{}, all};
    for (std::size_t k = 0; k < middle.size(); ++k)
      if ((pick >> k) & 1U) fam.insert(middle[k]);
    bool closed = true;
    for (auto a : fam) {
      for (auto b : fam)
        if (!fam.count(a | b) || !fam.count(a & b)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(make_open_family(n, {fam.begin(), fam.end()}));
  }
  return out;
}

bool is_continuous_by_preimage(const SpaceMap& f) {
  const FinSpace& x = f.domain;
  const FinSpace& y = f.codomain;
  const OpenFamily domain_opens = open_family(x);
  for (auto v : open_family(y).opens) {
    PointSet pre;
    for (PointIndex a = 0; a < x.size(); ++a)
      if (v.contains(f.image[a])) pre.insert(a);
    if (!domain_opens.contains(pre)) return false;
  }
  return true;
}

}  // namespace fintop::verify
