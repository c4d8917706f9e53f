#include "fintop/space.hpp"

#include <algorithm>
#include <unordered_set>

namespace fintop {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyLabels: return "EmptyLabels";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::MissingEmptyOrFull: return "MissingEmptyOrFull";
    case ErrorKind::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorKind::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorKind::PointNotInOwnBasis: return "PointNotInOwnBasis";
    case ErrorKind::BasisNotNested: return "BasisNotNested";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ZeroRadius: return "ZeroRadius";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::EmptyOrFullSubset: return "EmptyOrFullSubset";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

namespace {

std::string render(const std::vector<std::string>& labels, PointSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](PointIndex i) {
    if (!first) out += ',';
    out += labels[i];
    first = false;
  });
  return out + "}";
}

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error(ErrorKind::EmptyLabels, "a space needs at least one point");
  if (labels.size() > PointSet::max_points)
    throw Error(ErrorKind::SizeTooLarge, "at most 64 points are supported");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' appears twice");
  }
}

}  // namespace

std::optional<PointIndex> FinSpace::index_of(std::string_view label) const {
  for (PointIndex i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

FinSpace FinSpace::from_open_sets(std::vector<std::string> labels, std::span<const PointSet> opens) {
  check_labels(labels);
  const std::size_t n = labels.size();
  const PointSet all = PointSet::full(n);
  for (auto s : opens) {
    if (!s.subset_of(all))
      throw Error(ErrorKind::OutOfRange, "open set refers to a point index >= " + std::to_string(n), {s});
  }

  const OpenFamily family = make_open_family(n, {opens.begin(), opens.end()});
  if (!family.contains(PointSet{}) || !family.contains(all))
    throw Error(ErrorKind::MissingEmptyOrFull, "the empty set and the full set must both be listed");

  const auto& sets = family.opens;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!family.contains(sets[i] | sets[j]))
        throw Error(ErrorKind::NotClosedUnderUnion,
                    render(labels, sets[i]) + " u " + render(labels, sets[j]) + " is not listed",
                    {sets[i], sets[j]});
      if (!family.contains(sets[i] & sets[j]))
        throw Error(ErrorKind::NotClosedUnderIntersection,
                    render(labels, sets[i]) + " n " + render(labels, sets[j]) + " is not listed",
                    {sets[i], sets[j]});
    }
  }

  std::vector<PointSet> basis(n, all);
  for (auto s : sets) s.for_each([&](PointIndex x) { basis[x] &= s; });
  return FinSpace(std::move(labels), std::move(basis));
}

FinSpace FinSpace::from_minimal_basis(std::vector<std::string> labels, std::vector<PointSet> basis) {
  check_labels(labels);
  const std::size_t n = labels.size();
  if (basis.size() != n)
    throw Error(ErrorKind::SchemaError, "expected " + std::to_string(n) + " basis sets, got " +
                                            std::to_string(basis.size()));
  const PointSet all = PointSet::full(n);
  for (PointIndex x = 0; x < n; ++x) {
    if (!basis[x].subset_of(all))
      throw Error(ErrorKind::OutOfRange, "basis set of '" + labels[x] + "' is out of range", {basis[x]});
    if (!basis[x].contains(x))
      throw Error(ErrorKind::PointNotInOwnBasis, "'" + labels[x] + "' is not in its own minimal set",
                  {basis[x]});
  }
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (basis[x].contains(y) && !basis[y].subset_of(basis[x]))
        throw Error(ErrorKind::BasisNotNested,
                    "'" + labels[y] + "' is in U_" + labels[x] + " but U_" + labels[y] + " = " +
                        render(labels, basis[y]) + " is not contained in " + render(labels, basis[x]),
                    {basis[x], basis[y]});
    }
  }
  return FinSpace(std::move(labels), std::move(basis));
}

bool OpenFamily::contains(PointSet s) const {
  return std::binary_search(opens.begin(), opens.end(), s, CanonicalLess{});
}

OpenFamily make_open_family(std::size_t n, std::vector<PointSet> sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return OpenFamily{n, std::move(sets)};
}

OpenFamily open_family(const FinSpace& space) {
  // Opens are exactly the unions of basis sets.
  std::unordered_set<PointSet, PointSetHash> seen{PointSet{}};
  std::vector<PointSet> stack{PointSet{}};
  while (!stack.empty()) {
    const PointSet s = stack.back();
    stack.pop_back();
    for (auto u : space.basis()) {
      const PointSet next = s | u;
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return make_open_family(space.size(), {seen.begin(), seen.end()});
}

bool is_open(const FinSpace& space, PointSet s) {
  bool open = true;
  s.for_each([&](PointIndex x) { open = open && space.minimal(x).subset_of(s); });
  return open;
}

bool is_closed(const FinSpace& space, PointSet s) { return is_open(space, s.complement(space.size())); }

PointSet minimal_open(const FinSpace& space, PointSet a) {
  if (a.empty()) throw Error(ErrorKind::EmptyInput, "minimal open set of the empty set");
  PointSet out;
  a.for_each([&](PointIndex x) { out |= space.minimal(x); });
  return out;
}

PointSet closure(const FinSpace& space, PointSet a) {
  PointSet out;
  for (PointIndex y = 0; y < space.size(); ++y)
    if (space.minimal(y).intersects(a)) out.insert(y);
  return out;
}

PointSet interior(const FinSpace& space, PointSet a) {
  PointSet out;
  a.for_each([&](PointIndex x) {
    if (space.minimal(x).subset_of(a)) out.insert(x);
  });
  return out;
}

PointSet boundary(const FinSpace& space, PointSet a) { return closure(space, a) - interior(space, a); }

FinSpace opposite(const FinSpace& space) {
  std::vector<PointSet> basis;
  basis.reserve(space.size());
  for (PointIndex x = 0; x < space.size(); ++x) basis.push_back(closure(space, PointSet::singleton(x)));
  return FinSpace::from_minimal_basis(space.labels(), std::move(basis));
}

FinSpace subspace(const FinSpace& space, PointSet y) {
  if (y.empty()) throw Error(ErrorKind::EmptyInput, "subspace on the empty set");
  if (!y.subset_of(space.full())) throw Error(ErrorKind::OutOfRange, "subspace set is out of range", {y});
  const auto members = y.indices();
  std::vector<PointIndex> position(space.size(), 0);
  for (std::size_t k = 0; k < members.size(); ++k) position[members[k]] = k;

  std::vector<std::string> labels;
  std::vector<PointSet> basis;
  for (auto x : members) {
    labels.push_back(space.label(x));
    PointSet u;
    (space.minimal(x) & y).for_each([&](PointIndex z) { u.insert(position[z]); });
    basis.push_back(u);
  }
  return FinSpace::from_minimal_basis(std::move(labels), std::move(basis));
}

bool is_t0(const FinSpace& space) {
  std::unordered_set<PointSet, PointSetHash> seen(space.basis().begin(), space.basis().end());
  return seen.size() == space.size();
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
  return out;
}

PointSet subset_of_labels(const FinSpace& space, std::span<const std::string> labels) {
  PointSet out;
  for (const auto& l : labels) {
    auto idx = space.index_of(l);
    if (!idx) throw Error(ErrorKind::UnknownLabel, "no point labelled '" + l + "'");
    out.insert(*idx);
  }
  return out;
}

std::vector<std::string> labels_of(const FinSpace& space, PointSet s) {
  std::vector<std::string> out;
  s.for_each([&](PointIndex i) { out.push_back(space.label(i)); });
  return out;
}

std::string format_set(const FinSpace& space, PointSet s) { return render(space.labels(), s); }

}  // namespace fintop
