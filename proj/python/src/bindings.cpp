#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "fintop/balls.hpp"
#include "fintop/furtherness.hpp"
#include "fintop/io.hpp"
#include "fintop/order.hpp"
#include "fintop/regions.hpp"
#include "fintop/verify.hpp"

namespace py = pybind11;
using namespace fintop;

namespace {

PointIndex point(const FinSpace& s, const std::string& label) {
  const auto idx = s.index_of(label);
  if (!idx) throw Error(ErrorKind::UnknownLabel, "unknown label '" + label + "'");
  return *idx;
}

PointSet subset(const FinSpace& s, const std::vector<std::string>& labels) { return subset_of_labels(s, labels); }

py::object as_value(FurtherValue v) {
  if (v.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(v.value());
}

}  // namespace

PYBIND11_MODULE(_fintop, m) {
  m.doc() = "Finite topological spaces and the furtherness quasi-metric";

  py::register_exception<Error>(m, "FintopError", PyExc_ValueError);

  py::class_<FinSpace>(m, "FinSpace")
      .def_static(
          "from_open_sets",
          [](std::vector<std::string> labels, const std::vector<std::vector<std::string>>& opens) {
            // Labels are resolved against a scratch space with the discrete basis.
            std::vector<PointSet> discrete;
            for (std::size_t i = 0; i < labels.size(); ++i) discrete.push_back(PointSet::singleton(i));
            const FinSpace names = FinSpace::from_minimal_basis(labels, discrete);
            std::vector<PointSet> sets;
            for (const auto& o : opens) sets.push_back(subset(names, o));
            return FinSpace::from_open_sets(std::move(labels), sets);
          },
          py::arg("labels"), py::arg("opens"))
      .def_static("from_json", [](const std::string& text) { return parse_space(text); })
      .def("to_json", [](const FinSpace& s) { return serialize_space(s); })
      .def_property_readonly("labels", &FinSpace::labels)
      .def("__len__", &FinSpace::size)
      .def("minimal", [](const FinSpace& s, const std::string& x) { return labels_of(s, s.minimal(point(s, x))); })
      .def("opens",
           [](const FinSpace& s) {
             std::vector<std::vector<std::string>> out;
             for (auto u : open_family(s).opens) out.push_back(labels_of(s, u));
             return out;
           })
      .def("is_t0", [](const FinSpace& s) { return is_t0(s); })
      .def("closure", [](const FinSpace& s, const std::vector<std::string>& a) { return labels_of(s, closure(s, subset(s, a))); })
      .def("interior", [](const FinSpace& s, const std::vector<std::string>& a) { return labels_of(s, interior(s, subset(s, a))); })
      .def("__eq__", [](const FinSpace& a, const FinSpace& b) { return a == b; })
      .def("__repr__", [](const FinSpace& s) { return "FinSpace(" + serialize_space(s) + ")"; });

  m.def("furtherness", [](const FinSpace& s, const std::string& x, const std::string& y) {
    return furtherness(s, point(s, x), point(s, y));
  });
  m.def("furtherness_oracle", [](const FinSpace& s, const std::string& x, const std::string& y) {
    const auto r = furtherness_oracle(s, point(s, x), point(s, y));
    std::vector<std::vector<std::string>> chain;
    for (auto u : r.witness.chain) chain.push_back(labels_of(s, u));
    return py::make_tuple(r.value, chain);
  });
  m.def("furtherness_matrix", [](const FinSpace& s) {
    const auto mat = furtherness_matrix(s);
    std::vector<std::vector<unsigned>> rows;
    for (PointIndex i = 0; i < mat.size(); ++i) rows.push_back(mat.row(i));
    return rows;
  });
  m.def("furtherness_to_set", [](const FinSpace& s, const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return as_value(furtherness_to_set(s, subset(s, a), subset(s, b)));
  });
  m.def("region_report_json", [](const FinSpace& s, const std::vector<std::string>& a) {
    return region_json(s, region_report(s, subset(s, a)));
  });
  m.def("quasi_report_json", [](const FinSpace& s, const std::vector<std::string>& a) {
    return quasi_json(s, quasi_report(s, subset(s, a)));
  });
  m.def("union_analysis_json", [](const FinSpace& s, const std::vector<std::vector<std::string>>& parts) {
    std::vector<PointSet> sets;
    for (const auto& p : parts) sets.push_back(subset(s, p));
    return union_json(s, union_analysis(s, sets));
  });
  m.def(
      "ball",
      [](const FinSpace& s, const std::string& center, unsigned radius, bool backward) {
        return labels_of(s, ball(s, {point(s, center), radius, backward ? BallDirection::Backward : BallDirection::Forward}));
      },
      py::arg("space"), py::arg("center"), py::arg("radius") = 1, py::arg("backward") = false);
  m.def("opposite", [](const FinSpace& s) { return opposite(s); });
  m.def("kolmogorov_quotient", [](const FinSpace& s) { return kolmogorov_quotient(s).space; });
  m.def("core", [](const FinSpace& s) { return core(s); });
  m.def("product", [](const std::vector<FinSpace>& factors) { return product(factors); });
  m.def(
      "export_dot", [](const FinSpace& s, bool lattice) { return export_dot(s, lattice ? DotMode::Lattice : DotMode::Hasse); },
      py::arg("space"), py::arg("lattice") = false);
  m.def("enumerate_topologies", &enumerate_topologies, py::arg("n"), py::arg("t0_only") = false);
  m.def("random_space", &random_space, py::arg("n"), py::arg("seed"));
  m.def(
      "verify",
      [](const std::string& prop, std::size_t max_n) {
        const auto* p = verify::find_property(prop);
        if (!p) throw Error(ErrorKind::SchemaError, "unknown property '" + prop + "'");
        verify::VerifyOptions options;
        options.max_n = max_n;
        return verify::to_json_line(verify::run_property(*p, options));
      },
      py::arg("prop"), py::arg("max_n") = 3);
  m.def("property_names", [] {
    std::vector<std::string> out;
    for (const auto& p : verify::properties()) out.push_back(p.name);
    return out;
  });
}
