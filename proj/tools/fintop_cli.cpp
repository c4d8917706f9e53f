#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fintop/balls.hpp"
#include "fintop/furtherness.hpp"
#include "fintop/io.hpp"
#include "fintop/order.hpp"
#include "fintop/regions.hpp"
#include "fintop/verify.hpp"

namespace {

using namespace fintop;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_violation = 2;

FinSpace load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SyntaxError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str());
}

std::vector<PointSet> parse_subsets(const FinSpace& space, const std::string& text) {
  std::vector<PointSet> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, '|')) out.push_back(parse_label_list(space, part));
  return out;
}

PointIndex parse_point(const FinSpace& space, const std::string& label) {
  const auto idx = space.index_of(label);
  if (!idx) throw Error(ErrorKind::UnknownLabel, "unknown label '" + label + "'");
  return *idx;
}

int run_verify(std::size_t max_n, std::size_t samples, std::size_t sample_n, std::uint64_t seed,
               const std::string& prop, const std::string& replay_file) {
  std::vector<const verify::Property*> chosen;
  if (!prop.empty()) {
    const auto* p = verify::find_property(prop);
    if (!p) throw Error(ErrorKind::SchemaError, "unknown property '" + prop + "'");
    chosen.push_back(p);
  } else {
    for (const auto& p : verify::properties()) chosen.push_back(&p);
  }

  bool all_passed = true;
  if (!replay_file.empty()) {
    const FinSpace space = load(replay_file);
    for (const auto* p : chosen) {
      if (!p->check) continue;
      verify::VerifyReport r;
      r.property = p->name;
      r.spaces_checked = 1;
      if (auto fail = verify::replay(*p, space)) {
        r.passed = false;
        r.counterexample = verify::Counterexample{serialize_space(space), *fail};
      }
      all_passed = all_passed && r.passed;
      std::cout << verify::to_json_line(r) << '\n';
    }
    return all_passed ? exit_ok : exit_violation;
  }

  verify::VerifyOptions options;
  options.max_n = max_n;
  options.samples = samples;
  options.sample_n = sample_n;
  options.seed = seed;
  for (const auto* p : chosen) {
    const auto r = verify::run_property(*p, options);
    all_passed = all_passed && r.passed;
    std::cout << verify::to_json_line(r) << std::endl;
  }
  return all_passed ? exit_ok : exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topological spaces and the furtherness quasi-metric"};
  app.require_subcommand(1);

  std::string file, file2, subset, subsets, center, prop, replay_file;
  bool json = false, backward = false, lattice = false, t0 = false, count_only = false;
  unsigned radius = 1;
  std::size_t n = 0, max_n = 4, samples = 0, sample_n = 6;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "check a space file");
  validate->add_option("file", file)->required();

  auto* matrix = app.add_subcommand("matrix", "furtherness matrix");
  matrix->add_option("file", file)->required();
  matrix->add_flag("--json", json);

  auto* region = app.add_subcommand("region", "center and radius of a subset");
  region->add_option("file", file)->required();
  region->add_option("--subset", subset)->required();

  auto* quasi = app.add_subcommand("quasi", "quasi-center and quasi-radius of a subset");
  quasi->add_option("file", file)->required();
  quasi->add_option("--subset", subset)->required();

  auto* uni = app.add_subcommand("union", "center and radius of a union of separated subsets");
  uni->add_option("file", file)->required();
  uni->add_option("--subsets", subsets, "pipe-separated subsets, e.g. \"d|b\"")->required();

  auto* balls = app.add_subcommand("balls", "forward or backward ball");
  balls->add_option("file", file)->required();
  balls->add_option("--center", center)->required();
  balls->add_option("--radius", radius);
  balls->add_flag("--backward", backward);

  auto* quotient = app.add_subcommand("quotient", "Kolmogorov quotient");
  quotient->add_option("file", file)->required();
  auto* opp = app.add_subcommand("opposite", "opposite space");
  opp->add_option("file", file)->required();
  auto* cor = app.add_subcommand("core", "core (minimal finite space)");
  cor->add_option("file", file)->required();
  auto* prod = app.add_subcommand("product", "product of two spaces");
  prod->add_option("file1", file)->required();
  prod->add_option("file2", file2)->required();

  auto* dot = app.add_subcommand("dot", "Graphviz output");
  dot->add_option("file", file)->required();
  dot->add_flag("--lattice", lattice);

  auto* enumerate = app.add_subcommand("enumerate", "all labelled topologies on n points");
  enumerate->add_option("--n", n)->required();
  enumerate->add_flag("--t0", t0);
  enumerate->add_flag("--count-only", count_only);

  auto* ver = app.add_subcommand("verify", "run the property suites");
  ver->add_option("--max-n", max_n);
  ver->add_option("--samples", samples);
  ver->add_option("--sample-n", sample_n);
  ver->add_option("--seed", seed);
  ver->add_option("--prop", prop);
  ver->add_option("--space", replay_file, "replay the properties on one space file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*validate) {
      const FinSpace s = load(file);
      std::cout << "valid: " << s.size() << " points, " << open_family(s).opens.size() << " open sets\n";
    } else if (*matrix) {
      const auto m = furtherness_matrix(load(file));
      std::cout << (json ? matrix_json(m) + "\n" : matrix_text(m));
    } else if (*region) {
      const FinSpace s = load(file);
      std::cout << region_json(s, region_report(s, parse_label_list(s, subset))) << '\n';
    } else if (*quasi) {
      const FinSpace s = load(file);
      std::cout << quasi_json(s, quasi_report(s, parse_label_list(s, subset))) << '\n';
    } else if (*uni) {
      const FinSpace s = load(file);
      std::cout << union_json(s, union_analysis(s, parse_subsets(s, subsets))) << '\n';
    } else if (*balls) {
      const FinSpace s = load(file);
      const BallQuery q{parse_point(s, center), radius, backward ? BallDirection::Backward : BallDirection::Forward};
      std::cout << ball_json(s, q, ball(s, q)) << '\n';
    } else if (*quotient) {
      std::cout << serialize_space(kolmogorov_quotient(load(file)).space) << '\n';
    } else if (*opp) {
      std::cout << serialize_space(opposite(load(file))) << '\n';
    } else if (*cor) {
      std::cout << serialize_space(core(load(file))) << '\n';
    } else if (*prod) {
      std::cout << serialize_space(product({load(file), load(file2)})) << '\n';
    } else if (*dot) {
      std::cout << export_dot(load(file), lattice ? DotMode::Lattice : DotMode::Hasse);
    } else if (*enumerate) {
      std::size_t count = 0;
      for_each_topology(n, t0, [&](const FinSpace& s) {
        ++count;
        if (!count_only) std::cout << serialize_space(s) << '\n';
      });
      if (count_only) std::cout << count << '\n';
    } else if (*ver) {
      return run_verify(max_n, samples, sample_n, seed, prop, replay_file);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_ok;
}
