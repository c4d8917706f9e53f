#include "fintop/io.hpp"

#include <json.hpp>

#include <iomanip>
#include <random>
#include <sstream>

#include "fintop/order.hpp"

namespace fintop {

using nlohmann::ordered_json;

namespace {

ordered_json set_json(const FinSpace& space, PointSet s) { return labels_of(space, s); }

ordered_json value_json(FurtherValue v) {
  if (v.is_infinite()) return "infinity";
  return v.value();
}

PointSet labels_to_set(const std::vector<std::string>& points, const ordered_json& list, const std::string& where) {
  if (!list.is_array()) throw Error(ErrorKind::SchemaError, where + " must be an array of labels");
  PointSet out;
  for (const auto& item : list) {
    if (!item.is_string()) throw Error(ErrorKind::SchemaError, where + " must contain only strings");
    const auto label = item.get<std::string>();
    auto it = std::find(points.begin(), points.end(), label);
    if (it == points.end()) throw Error(ErrorKind::UnknownLabel, where + ": no point labelled '" + label + "'");
    out.insert(static_cast<PointIndex>(it - points.begin()));
  }
  return out;
}

// Re-throws construction errors with the document field they came from.
template <class F>
FinSpace with_context(const std::string& field, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    const std::string what = e.what();
    const auto colon = what.find(": ");
    const std::string detail = colon == std::string::npos ? what : what.substr(colon + 2);
    throw Error(e.kind(), "in field '" + field + "': " + detail, e.witness());
  }
}

}  // namespace

FinSpace parse_space(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::SchemaError, "document must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "points" && key != "opens" && key != "min_basis")
      throw Error(ErrorKind::SchemaError, "unexpected field '" + key + "'");
  if (!doc.contains("points") || !doc["points"].is_array())
    throw Error(ErrorKind::SchemaError, "'points' must be an array of labels");
  const bool has_opens = doc.contains("opens");
  const bool has_basis = doc.contains("min_basis");
  if (has_opens == has_basis) throw Error(ErrorKind::SchemaError, "give exactly one of 'opens' and 'min_basis'");

  std::vector<std::string> points;
  for (const auto& p : doc["points"]) {
    if (!p.is_string() || p.get<std::string>().empty())
      throw Error(ErrorKind::SchemaError, "'points' must contain non-empty strings");
    points.push_back(p.get<std::string>());
  }

  if (has_opens) {
    const auto& opens = doc["opens"];
    if (!opens.is_array()) throw Error(ErrorKind::SchemaError, "'opens' must be an array");
    std::vector<PointSet> sets;
    for (std::size_t i = 0; i < opens.size(); ++i)
      sets.push_back(labels_to_set(points, opens[i], "opens[" + std::to_string(i) + "]"));
    return with_context("opens", [&] { return FinSpace::from_open_sets(points, sets); });
  }

  const auto& basis_doc = doc["min_basis"];
  if (!basis_doc.is_object()) throw Error(ErrorKind::SchemaError, "'min_basis' must be an object");
  for (const auto& [key, _] : basis_doc.items())
    if (std::find(points.begin(), points.end(), key) == points.end())
      throw Error(ErrorKind::UnknownLabel, "min_basis: no point labelled '" + key + "'");
  std::vector<PointSet> basis;
  for (const auto& p : points) {
    if (!basis_doc.contains(p)) throw Error(ErrorKind::SchemaError, "min_basis has no entry for '" + p + "'");
    basis.push_back(labels_to_set(points, basis_doc[p], "min_basis." + p));
  }
  return with_context("min_basis", [&] { return FinSpace::from_minimal_basis(points, basis); });
}

std::string serialize_space(const FinSpace& space) {
  ordered_json doc;
  doc["points"] = space.labels();
  ordered_json basis = ordered_json::object();
  for (PointIndex x = 0; x < space.size(); ++x) basis[space.label(x)] = set_json(space, space.minimal(x));
  doc["min_basis"] = std::move(basis);
  return doc.dump();
}

void for_each_topology(std::size_t n, bool t0_only, const std::function<void(const FinSpace&)>& visit) {
  if (n == 0 || n > max_enumeration_size)
    throw Error(ErrorKind::SizeTooLarge, "enumeration supports 1 <= n <= 5, got " + std::to_string(n));
  std::vector<std::pair<PointIndex, PointIndex>> pairs;
  for (PointIndex i = 0; i < n; ++i)
    for (PointIndex j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);

  const auto labels = default_labels(n);
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  std::vector<PointSet> up(n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    for (PointIndex i = 0; i < n; ++i) up[i] = PointSet::singleton(i);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) up[pairs[k].first].insert(pairs[k].second);

    bool ok = true;
    for (PointIndex i = 0; i < n && ok; ++i)
      up[i].for_each([&](PointIndex j) { ok = ok && up[j].subset_of(up[i]); });
    for (PointIndex i = 0; i < n && ok && t0_only; ++i)
      (up[i] - PointSet::singleton(i)).for_each([&](PointIndex j) { ok = ok && !up[j].contains(i); });
    if (!ok) continue;

    // U_x = {y | y <= x}.
    std::vector<PointSet> basis(n);
    for (PointIndex i = 0; i < n; ++i) up[i].for_each([&](PointIndex j) { basis[j].insert(i); });
    visit(FinSpace::from_minimal_basis(labels, std::move(basis)));
  }
}

std::vector<FinSpace> enumerate_topologies(std::size_t n, bool t0_only) {
  std::vector<FinSpace> out;
  for_each_topology(n, t0_only, [&](const FinSpace& s) { out.push_back(s); });
  return out;
}

FinSpace random_space(std::size_t n, std::uint64_t seed) {
  if (n == 0 || n > PointSet::max_points)
    throw Error(ErrorKind::SizeTooLarge, "random spaces need 1 <= n <= 64");
  std::mt19937_64 rng(seed);
  std::vector<PointSet> up(n);
  for (PointIndex i = 0; i < n; ++i) {
    up[i].insert(i);
    for (PointIndex j = 0; j < n; ++j)
      if (i != j && (rng() >> 62) == 0) up[i].insert(j);
  }
  // Warshall closure over up-sets.
  for (PointIndex k = 0; k < n; ++k)
    for (PointIndex i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];

  std::vector<PointSet> basis(n);
  for (PointIndex i = 0; i < n; ++i) up[i].for_each([&](PointIndex j) { basis[j].insert(i); });
  return FinSpace::from_minimal_basis(default_labels(n), std::move(basis));
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

}  // namespace

std::string export_dot(const FinSpace& space, DotMode mode) {
  std::ostringstream out;
  if (mode == DotMode::Hasse) {
    const QuotientResult q = kolmogorov_quotient(space);
    const Preorder order = specialization_preorder(q.space);
    out << "digraph hasse {\n  node [shape=ellipse];\n";
    for (const auto& cls : q.classes)
      out << "  " << dot_quote(format_set(space, cls)) << " [label=" << dot_quote(joined(labels_of(space, cls)))
          << "];\n";
    for (auto [lo, hi] : order.covers())
      out << "  " << dot_quote(format_set(space, q.classes[lo])) << " -> "
          << dot_quote(format_set(space, q.classes[hi])) << ";\n";
  } else {
    const OpenFamily family = open_family(space);
    out << "digraph lattice {\n  node [shape=box];\n";
    for (auto s : family.opens) {
      const auto id = format_set(space, s);
      out << "  " << dot_quote(id) << " [label=" << dot_quote(id) << "];\n";
    }
    for (auto lower : family.opens)
      for (auto upper : covers_of(space, lower))
        out << "  " << dot_quote(format_set(space, lower)) << " -> " << dot_quote(format_set(space, upper)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string matrix_json(const FurtherMatrix& m) {
  ordered_json doc;
  doc["labels"] = m.labels();
  ordered_json rows = ordered_json::array();
  for (PointIndex r = 0; r < m.size(); ++r) rows.push_back(m.row(r));
  doc["rows"] = std::move(rows);
  return doc.dump();
}

std::string matrix_text(const FurtherMatrix& m) {
  std::size_t width = 1;
  for (const auto& l : m.labels()) width = std::max(width, l.size());
  std::ostringstream out;
  out << std::setw(static_cast<int>(width)) << "";
  for (const auto& l : m.labels()) out << ' ' << std::setw(static_cast<int>(width)) << l;
  out << '\n';
  for (PointIndex r = 0; r < m.size(); ++r) {
    out << std::setw(static_cast<int>(width)) << m.labels()[r];
    for (PointIndex c = 0; c < m.size(); ++c) out << ' ' << std::setw(static_cast<int>(width)) << m.at(r, c);
    out << '\n';
  }
  return out.str();
}

namespace {

ordered_json region_doc(const FinSpace& space, const RegionReport& r) {
  ordered_json doc;
  doc["subset"] = set_json(space, r.subset);
  doc["boundary"] = set_json(space, r.boundary);
  doc["interior"] = set_json(space, r.interior);
  doc["center"] = set_json(space, r.center);
  doc["radius"] = value_json(r.radius);
  return doc;
}

}  // namespace

std::string region_json(const FinSpace& space, const RegionReport& r) { return region_doc(space, r).dump(); }

std::string quasi_json(const FinSpace& space, const QuasiReport& q) {
  ordered_json doc;
  doc["subset"] = set_json(space, q.subset);
  doc["quasi_center"] = set_json(space, q.quasi_center);
  doc["quasi_radius"] = value_json(q.quasi_radius);
  return doc.dump();
}

std::string union_json(const FinSpace& space, const UnionAnalysis& u) {
  ordered_json doc;
  doc["case"] = to_string(u.union_case);
  ordered_json inputs = ordered_json::array();
  for (const auto& r : u.inputs) inputs.push_back(region_doc(space, r));
  doc["inputs"] = std::move(inputs);
  ordered_json tildes = ordered_json::array();
  for (auto t : u.tilde_sets) tildes.push_back(set_json(space, t));
  doc["tilde_sets"] = std::move(tildes);
  doc["dominant"] = u.dominant;
  doc["max_input_radius"] = value_json(u.max_input_radius);
  doc["predicted_by_theorem"] = u.predicted_by_theorem;
  doc["predicted_center"] = set_json(space, u.predicted_center);
  doc["predicted_radius"] = value_json(u.predicted_radius);
  doc["direct"] = region_doc(space, u.direct);
  return doc.dump();
}

std::string ball_json(const FinSpace& space, const BallQuery& q, PointSet b) {
  ordered_json doc;
  doc["center"] = space.label(q.center);
  doc["radius"] = q.radius;
  doc["direction"] = q.direction == BallDirection::Forward ? "forward" : "backward";
  doc["ball"] = set_json(space, b);
  return doc.dump();
}

PointSet parse_label_list(const FinSpace& space, std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      tokens.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!text.empty()) tokens.push_back(current);

  PointSet out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    // Longest run of tokens that names a point.
    std::size_t matched = 0;
    PointIndex point = 0;
    std::string candidate;
    for (std::size_t j = i; j < tokens.size(); ++j) {
      candidate += (j > i ? "," : "") + tokens[j];
      if (auto idx = space.index_of(candidate)) {
        matched = j - i + 1;
        point = *idx;
      }
    }
    if (matched == 0) throw Error(ErrorKind::UnknownLabel, "no point labelled '" + tokens[i] + "'");
    out.insert(point);
    i += matched;
  }
  return out;
}

}  // namespace fintop
