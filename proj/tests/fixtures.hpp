#pragma once

#include <string>
#include <vector>

#include "fintop/io.hpp"
#include "fintop/space.hpp"

namespace fixtures {

using fintop::FinSpace;
using fintop::PointSet;

inline PointSet set(const FinSpace& s, std::vector<std::string> labels) {
  return fintop::subset_of_labels(s, labels);
}

inline FinSpace from_opens(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& opens) {
  std::vector<PointSet> discrete;
  for (std::size_t i = 0; i < labels.size(); ++i) discrete.push_back(PointSet::singleton(i));
  const FinSpace names = FinSpace::from_minimal_basis(labels, discrete);
  std::vector<PointSet> sets;
  for (const auto& o : opens) sets.push_back(set(names, o));
  return FinSpace::from_open_sets(std::move(labels), sets);
}

inline FinSpace e1() { return from_opens({"1", "2", "3"}, {{}, {"1", "2"}, {"1", "2", "3"}}); }

inline FinSpace e2() {
  return from_opens({"a", "b", "c", "d"},
                    {{}, {"a"}, {"d"}, {"a", "b"}, {"a", "d"}, {"a", "b", "d"}, {"a", "b", "c", "d"}});
}

inline FinSpace sierpinski() { return from_opens({"a", "b"}, {{}, {"a"}, {"a", "b"}}); }
inline FinSpace sierpinski_xy() { return from_opens({"x", "y"}, {{}, {"x"}, {"x", "y"}}); }

inline FinSpace q1() {
  return fintop::parse_space(
      R"({"points":["a","b","c","d"],"min_basis":{"a":["a"],"b":["a","b"],"c":["c"],"d":["c","d"]}})");
}

inline FinSpace discrete(std::size_t n) {
  std::vector<PointSet> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(PointSet::singleton(i));
  return FinSpace::from_minimal_basis(fintop::default_labels(n), basis);
}

inline FinSpace indiscrete(std::size_t n) {
  return FinSpace::from_minimal_basis(fintop::default_labels(n), std::vector<PointSet>(n, PointSet::full(n)));
}

// x < y < z
inline FinSpace chain3() {
  return fintop::parse_space(R"({"points":["x","y","z"],"min_basis":{"x":["x"],"y":["x","y"],"z":["x","y","z"]}})");
}

inline FinSpace point(const std::string& label = "x") {
  return FinSpace::from_minimal_basis({label}, {PointSet::singleton(0)});
}

}  // namespace fixtures
