#include "fintop/order.hpp"

#include <numeric>

namespace fintop {

PointSet Preorder::down_set(PointIndex x) const {
  PointSet out;
  for (PointIndex y = 0; y < size(); ++y)
    if (leq(y, x)) out.insert(y);
  return out;
}

bool Preorder::is_reflexive() const {
  for (PointIndex x = 0; x < size(); ++x)
    if (!leq(x, x)) return false;
  return true;
}

bool Preorder::is_transitive() const {
  for (PointIndex x = 0; x < size(); ++x) {
    bool ok = true;
    up_[x].for_each([&](PointIndex y) { ok = ok && up_[y].subset_of(up_[x]); });
    if (!ok) return false;
  }
  return true;
}

bool Preorder::is_antisymmetric() const {
  for (PointIndex x = 0; x < size(); ++x)
    for (PointIndex y = x + 1; y < size(); ++y)
      if (leq(x, y) && leq(y, x)) return false;
  return true;
}

std::vector<std::pair<PointIndex, PointIndex>> Preorder::covers() const {
  std::vector<std::pair<PointIndex, PointIndex>> out;
  for (PointIndex x = 0; x < size(); ++x) {
    const PointSet strictly_above = up_[x] - PointSet::singleton(x);
    strictly_above.for_each([&](PointIndex y) {
      bool between = false;
      (strictly_above - PointSet::singleton(y)).for_each([&](PointIndex z) {
        between = between || (leq(z, y) && !leq(y, z));
      });
      if (!between) out.emplace_back(x, y);
    });
  }
  return out;
}

Preorder specialization_preorder(const FinSpace& space) {
  const std::size_t n = space.size();
  std::vector<PointSet> up(n);
  for (PointIndex x = 0; x < n; ++x)
    for (PointIndex y = 0; y < n; ++y)
      if (furtherness(space, y, x) == 0) up[x].insert(y);
  return Preorder(std::move(up));
}

QuotientResult kolmogorov_quotient(const FinSpace& space) {
  const std::size_t n = space.size();
  std::vector<PointIndex> class_of(n);
  std::vector<PointIndex> reps;
  std::vector<PointSet> classes;
  for (PointIndex x = 0; x < n; ++x) {
    PointIndex k = 0;
    while (k < reps.size() && !(furtherness(space, x, reps[k]) == 0 && furtherness(space, reps[k], x) == 0)) ++k;
    if (k == reps.size()) {
      reps.push_back(x);
      classes.emplace_back();
    }
    class_of[x] = k;
    classes[k].insert(x);
  }

  std::vector<std::string> labels;
  std::vector<PointSet> basis;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    if (classes[k].size() == 1) {
      labels.push_back(space.label(reps[k]));
    } else {
      std::string l = "[";
      for (auto m : classes[k].indices()) l += (l.size() > 1 ? "," : "") + space.label(m);
      labels.push_back(l + "]");
    }
    // U_[x] = {[y] | Psi(x, y) = 0}.
    PointSet u;
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (furtherness(space, reps[k], reps[j]) == 0) u.insert(j);
    basis.push_back(u);
  }
  return QuotientResult{FinSpace::from_minimal_basis(std::move(labels), std::move(basis)), std::move(class_of),
                        std::move(reps), std::move(classes)};
}

namespace {

void check_map(const SpaceMap& f) {
  if (f.image.size() != f.domain.get().size())
    throw Error(ErrorKind::PreconditionViolated, "map must assign an image to every domain point");
  for (auto y : f.image)
    if (y >= f.codomain.get().size()) throw Error(ErrorKind::OutOfRange, "map image outside the codomain");
}

}  // namespace

bool is_continuous(const SpaceMap& f) {
  check_map(f);
  const FinSpace& x = f.domain;
  const FinSpace& y = f.codomain;
  for (PointIndex a = 0; a < x.size(); ++a)
    for (PointIndex b = 0; b < x.size(); ++b)
      if (furtherness(x, a, b) == 0 && furtherness(y, f.image[a], f.image[b]) != 0) return false;
  return true;
}

bool is_furtherness_preserving(const SpaceMap& f) {
  check_map(f);
  const FinSpace& x = f.domain;
  const FinSpace& y = f.codomain;
  for (PointIndex a = 0; a < x.size(); ++a)
    for (PointIndex b = 0; b < x.size(); ++b)
      if (furtherness(x, a, b) != furtherness(y, f.image[a], f.image[b])) return false;
  return true;
}

BeatPoints beat_points(const FinSpace& space) {
  const FurtherMatrix m = furtherness_matrix(space);
  const std::size_t n = space.size();
  // `zero(a, b)` reads Psi(a, b) = 0; `flip` swaps the arguments for the
  // up-beat dual.
  auto is_beat = [&](PointIndex x, bool flip) {
    auto zero = [&](PointIndex a, PointIndex b) { return (flip ? m.at(b, a) : m.at(a, b)) == 0; };
    std::size_t count = 0;
    for (PointIndex y = 0; y < n; ++y) {
      if (y == x || !zero(x, y)) continue;
      bool between = false;
      for (PointIndex z = 0; z < n && !between; ++z)
        between = z != x && z != y && zero(x, z) && zero(z, y);
      if (!between) ++count;
    }
    return count == 1;
  };
  BeatPoints out;
  for (PointIndex x = 0; x < n; ++x) {
    if (is_beat(x, false)) out.down.insert(x);
    if (is_beat(x, true)) out.up.insert(x);
  }
  return out;
}

FinSpace core(const FinSpace& space) {
  FinSpace current = kolmogorov_quotient(space).space;
  while (true) {
    const BeatPoints beats = beat_points(current);
    const PointSet all = beats.down | beats.up;
    if (all.empty() || current.size() == 1) return current;
    current = subspace(current, current.full() - PointSet::singleton(all.first()));
  }
}

FinSpace product(const std::vector<FinSpace>& factors) {
  if (factors.empty()) throw Error(ErrorKind::EmptyInput, "product of no factors");
  std::size_t total = 1;
  for (const auto& f : factors) {
    total *= f.size();
    if (total > PointSet::max_points) throw Error(ErrorKind::SizeTooLarge, "product exceeds 64 points");
  }

  std::vector<std::string> labels;
  std::vector<PointSet> basis;
  std::vector<PointIndex> tuple(factors.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::string label;
    for (std::size_t i = 0; i < factors.size(); ++i) label += (i ? "," : "") + factors[i].label(tuple[i]);
    labels.push_back(std::move(label));

    // Expand U_{t_1} x ... x U_{t_k} into row-major indices.
    std::vector<PointIndex> partial{0};
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::vector<PointIndex> next;
      for (auto p : partial)
        factors[i].minimal(tuple[i]).for_each([&](PointIndex c) { next.push_back(p * factors[i].size() + c); });
      partial = std::move(next);
    }
    PointSet u;
    for (auto p : partial) u.insert(p);
    basis.push_back(u);

    for (std::size_t i = factors.size(); i-- > 0;) {
      if (++tuple[i] < factors[i].size()) break;
      tuple[i] = 0;
    }
  }
  return FinSpace::from_minimal_basis(std::move(labels), std::move(basis));
}

PointIndex product_index(const std::vector<FinSpace>& factors, const std::vector<PointIndex>& tuple) {
  if (tuple.size() != factors.size()) throw Error(ErrorKind::PreconditionViolated, "tuple arity mismatch");
  PointIndex idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (tuple[i] >= factors[i].size()) throw Error(ErrorKind::OutOfRange, "tuple component out of range");
    idx = idx * factors[i].size() + tuple[i];
  }
  return idx;
}

namespace {

std::size_t quotient_size(const FinSpace& space, PointSet s) { return (s & class_representatives(space)).size(); }

}  // namespace

unsigned product_furtherness(const FinSpace& x, const FinSpace& y, std::pair<PointIndex, PointIndex> from,
                             std::pair<PointIndex, PointIndex> to) {
  const auto [a, b] = from;
  const auto [c, d] = to;
  const unsigned psi_x = furtherness(x, a, c);
  const unsigned psi_y = furtherness(y, b, d);
  const auto u_d = static_cast<unsigned>(quotient_size(y, y.minimal(d)));
  const auto u_c = static_cast<unsigned>(quotient_size(x, x.minimal(c)));
  return psi_x * u_d + psi_y * u_c - psi_x * psi_y;
}

unsigned product_furtherness(const std::vector<FinSpace>& factors, const std::vector<PointIndex>& from,
                             const std::vector<PointIndex>& to) {
  if (from.size() != factors.size() || to.size() != factors.size())
    throw Error(ErrorKind::PreconditionViolated, "tuple arity mismatch");
  std::size_t target = 1;
  std::size_t shared = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const PointSet ub = factors[i].minimal(to[i]);
    const PointSet ua = factors[i].minimal(from[i]);
    target *= quotient_size(factors[i], ub);
    shared *= quotient_size(factors[i], ub & ua);
  }
  return static_cast<unsigned>(target - shared);
}

}  // namespace fintop
