#include "fintop/regions.hpp"

#include <algorithm>

namespace fintop {

std::string to_string(UnionCase c) {
  switch (c) {
    case UnionCase::BoundedStrict: return "2.25-i";
    case UnionCase::BoundedEqual: return "2.25-ii";
    case UnionCase::StrictDecrease: return "2.26-i";
    case UnionCase::StrictDecreaseEqual: return "2.26-ii";
    case UnionCase::General: return "3.37";
    case UnionCase::FallbackDirect: return "fallback-direct";
  }
  return "unknown";
}

namespace {

struct ArgMax {
  PointSet points;
  FurtherValue value = FurtherValue::infinity();
};

// All maximizers of Psi(a, target) over a in `candidates`; the empty
// candidate set yields (empty, infinity).
ArgMax furthest_from(const FinSpace& space, PointSet candidates, PointSet target) {
  ArgMax out;
  bool any = false;
  candidates.for_each([&](PointIndex a) {
    const FurtherValue d = furtherness_to_set(space, a, target);
    if (!any || d > out.value) {
      out.points = PointSet::singleton(a);
      out.value = d;
      any = true;
    } else if (d == out.value) {
      out.points.insert(a);
    }
  });
  return out;
}

}  // namespace

RegionReport region_report(const FinSpace& space, PointSet a) {
  if (!a.subset_of(space.full())) throw Error(ErrorKind::OutOfRange, "subset out of range", {a});
  RegionReport r;
  r.subset = a;
  r.boundary = boundary(space, a);
  r.interior = interior(space, a);
  const ArgMax best = furthest_from(space, a, r.boundary);
  r.center = best.points;
  r.radius = best.value;
  return r;
}

QuasiReport quasi_report(const FinSpace& space, PointSet a) {
  if (!a.subset_of(space.full())) throw Error(ErrorKind::OutOfRange, "subset out of range", {a});
  const ArgMax best = furthest_from(space, a, a.complement(space.size()));
  return QuasiReport{a, best.points, best.value};
}

bool are_separated(const FinSpace& space, PointSet a, PointSet b) {
  return !a.intersects(closure(space, b)) && !closure(space, a).intersects(b);
}

UnionAnalysis union_analysis(const FinSpace& space, const std::vector<PointSet>& subsets) {
  if (subsets.empty()) throw Error(ErrorKind::PreconditionViolated, "no subsets given");
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto name = "subset " + std::to_string(i) + " " + format_set(space, subsets[i]);
    if (!subsets[i].subset_of(space.full())) throw Error(ErrorKind::OutOfRange, name + " is out of range");
    if (subsets[i].empty()) throw Error(ErrorKind::PreconditionViolated, name + " is empty", {subsets[i]});
    if (boundary(space, subsets[i]).empty())
      throw Error(ErrorKind::PreconditionViolated, name + " is clopen", {subsets[i]});
  }
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j)
      if (!are_separated(space, subsets[i], subsets[j]))
        throw Error(ErrorKind::PreconditionViolated,
                    "subsets " + std::to_string(i) + " and " + std::to_string(j) + " are not separated",
                    {subsets[i], subsets[j]});

  UnionAnalysis u;
  for (auto s : subsets) u.inputs.push_back(region_report(space, s));
  const std::size_t k = subsets.size();

  for (std::size_t j = 0; j < k; ++j) {
    PointSet tilde;
    u.inputs[j].center.for_each([&](PointIndex a) {
      for (std::size_t i = 0; i < k; ++i)
        if (i != j && furtherness_to_set(space, a, u.inputs[i].boundary) < u.inputs[j].radius) tilde.insert(a);
    });
    u.tilde_sets.push_back(tilde);
  }

  u.max_input_radius = u.inputs[0].radius;
  for (const auto& r : u.inputs) u.max_input_radius = std::max(u.max_input_radius, r.radius);
  for (std::size_t j = 0; j < k; ++j) {
    if (u.inputs[j].radius == u.max_input_radius && !(u.inputs[j].center - u.tilde_sets[j]).empty()) {
      u.dominant.push_back(j);
      u.predicted_center |= u.inputs[j].center - u.tilde_sets[j];
    }
  }

  PointSet all;
  for (auto s : subsets) all |= s;
  u.direct = region_report(space, all);

  const bool survives = !u.predicted_center.empty();
  if (k == 2) {
    const bool equal = u.inputs[0].radius == u.inputs[1].radius;
    if (equal)
      u.union_case = survives ? UnionCase::BoundedEqual : UnionCase::StrictDecreaseEqual;
    else
      u.union_case = survives ? UnionCase::BoundedStrict : UnionCase::StrictDecrease;
  } else {
    u.union_case = survives ? UnionCase::General : UnionCase::FallbackDirect;
  }

  u.predicted_by_theorem = survives;
  if (survives) {
    u.predicted_radius = u.max_input_radius;
  } else {
    u.predicted_center = u.direct.center;
    u.predicted_radius = u.direct.radius;
  }
  return u;
}

std::vector<ContainedBall> largest_forward_balls(const FinSpace& space, PointSet a) {
  if (a.empty() || a == space.full())
    throw Error(ErrorKind::EmptyOrFullSubset, "needs a nonempty proper subset", {a});
  const QuasiReport q = quasi_report(space, a);
  const unsigned radius = q.quasi_radius.value();
  const FurtherMatrix m = furtherness_matrix(space);

  std::vector<ContainedBall> out;
  q.quasi_center.for_each([&](PointIndex x) {
    PointSet b;
    for (PointIndex y = 0; y < space.size(); ++y)
      if (m.at(x, y) < radius) b.insert(y);
    out.push_back(ContainedBall{x, radius, b, false});
  });
  for (auto& e : out)
    e.contained_in_other = std::any_of(out.begin(), out.end(), [&](const ContainedBall& o) {
      return e.ball.proper_subset_of(o.ball);
    });
  return out;
}

}  // namespace fintop
