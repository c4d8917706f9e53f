#include <doctest.h>

#include <set>

#include "fintop/io.hpp"
#include "fintop/verify.hpp"
#include "fixtures.hpp"

using namespace fintop;
using namespace fixtures;

namespace {

constexpr const char* e2_document =
    R"({"points":["a","b","c","d"],"opens":[[],["a"],["d"],["a","b"],["a","d"],["a","b","d"],["a","b","c","d"]]})";

ErrorKind parse_error(const std::string& text) {
  try {
    (void)parse_space(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::EmptyLabels;
}

}  // namespace

TEST_CASE("parse_space") {
  CHECK(parse_space(e2_document) == e2());
  CHECK(parse_space(R"({"points":["x"],"opens":[[],["x"]]})") == point());
  CHECK(parse_error(R"({"points":["a","b","c","d"],"opens":[[],["a"],["c"],["a","b"],["c","d"],["a","b","c"],)"
                    R"(["a","c","d"],["a","b","c","d"]]})") == ErrorKind::NotClosedUnderUnion);
  CHECK(parse_error(R"({"points":["a"],"opens":[[],["a"]])") == ErrorKind::SyntaxError);
  CHECK(parse_error(R"({"points":["a"]})") == ErrorKind::SchemaError);
  CHECK(parse_error(R"({"points":["a"],"opens":[[],["a"]],"min_basis":{"a":["a"]}})") == ErrorKind::SchemaError);
  CHECK(parse_error(R"({"points":["a"],"min_basis":{"a":["b"]}})") == ErrorKind::UnknownLabel);
  CHECK(parse_error(R"({"points":["a","a"],"min_basis":{"a":["a"]}})") == ErrorKind::DuplicateLabel);
  CHECK(parse_error(R"({"points":[],"opens":[[]]})") == ErrorKind::EmptyLabels);
  CHECK(parse_error(R"({"points":[""],"opens":[[],[""]]})") == ErrorKind::SchemaError);
  CHECK(parse_error(R"({"points":["a"],"opens":[[],["a"]],"extra":1})") == ErrorKind::SchemaError);
  CHECK(parse_error(R"([1,2])") == ErrorKind::SchemaError);

  try {
    (void)parse_space(R"({"points":["x","y"],"min_basis":{"x":["x"],"y":["x"]}})");
    FAIL("expected PointNotInOwnBasis");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PointNotInOwnBasis);
    CHECK(std::string(e.what()).find("min_basis") != std::string::npos);
  }
}

TEST_CASE("serialize_space") {
  CHECK(serialize_space(e2()) ==
        R"({"points":["a","b","c","d"],"min_basis":{"a":["a"],"b":["a","b"],"c":["a","b","c","d"],"d":["d"]}})");
  CHECK(serialize_space(point()) == R"({"points":["x"],"min_basis":{"x":["x"]}})");
  for (std::size_t n = 1; n <= 3; ++n)
    for_each_topology(n, false, [](const FinSpace& s) {
      const std::string doc = serialize_space(s);
      CHECK(parse_space(doc) == s);
      CHECK(serialize_space(parse_space(doc)) == doc);
    });
}

TEST_CASE("enumeration counts") {
  const std::size_t all[] = {1, 4, 29, 355};
  const std::size_t t0[] = {1, 3, 19, 219};
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(enumerate_topologies(n, false).size() == all[n - 1]);
    CHECK(enumerate_topologies(n, true).size() == t0[n - 1]);
    CHECK(verify::enumerate_open_families(n).size() == all[n - 1]);
  }
  std::set<std::string> seen;
  for (const auto& s : enumerate_topologies(4, false)) seen.insert(serialize_space(s));
  CHECK(seen.size() == 355);
  CHECK_THROWS_AS(enumerate_topologies(6, false), Error);
  CHECK_THROWS_AS(enumerate_topologies(0, false), Error);
}

TEST_CASE("random spaces are deterministic and valid") {
  CHECK(random_space(6, 42) == random_space(6, 42));
  CHECK(random_space(1, 7).size() == 1);
  bool differ = false;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const FinSpace s = random_space(6, seed);
    CHECK_NOTHROW((void)FinSpace::from_minimal_basis(s.labels(), s.basis()));
    differ = differ || s != random_space(6, 1);
  }
  CHECK(differ);
}

TEST_CASE("dot export") {
  const std::string lattice = export_dot(e2(), DotMode::Lattice);
  CHECK(lattice.rfind("digraph lattice {", 0) == 0);
  CHECK(lattice.find(R"("{a}" -> "{a,b}";)") != std::string::npos);
  CHECK(lattice.find(R"("{a}" -> "{a,d}";)") != std::string::npos);
  CHECK(lattice.find(R"("{a}" -> "{a,b,d}";)") == std::string::npos);
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = lattice.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  CHECK(nodes == 7);
  CHECK(lattice == export_dot(e2(), DotMode::Lattice));

  const std::string one = export_dot(point(), DotMode::Hasse);
  CHECK(one.find("->") == std::string::npos);
  CHECK(one.find("[label=") != std::string::npos);

  const std::string hasse = export_dot(e1(), DotMode::Hasse);
  CHECK(hasse.find(R"("{1,2}" -> "{3}";)") != std::string::npos);
  CHECK(hasse.find(R"(label="1,2")") != std::string::npos);
}

TEST_CASE("label lists") {
  const FinSpace s = e2();
  CHECK(parse_label_list(s, "a,c") == set(s, {"a", "c"}));
  CHECK(parse_label_list(s, "").empty());
  CHECK_THROWS_AS(parse_label_list(s, "a,z"), Error);
  const FinSpace p = product({sierpinski(), sierpinski_xy()});
  CHECK(parse_label_list(p, "a,x,b,y") == PointSet::of({0, 3}));
}

TEST_CASE("json renderings") {
  const FinSpace s = e2();
  CHECK(region_json(s, region_report(s, set(s, {"a", "c"}))) ==
        R"({"subset":["a","c"],"boundary":["b","c"],"interior":["a"],"center":["a"],"radius":1})");
  const FinSpace q = q1();
  CHECK(region_json(q, region_report(q, set(q, {"a", "b"}))).find(R"("radius":"infinity")") != std::string::npos);
  CHECK(quasi_json(q, quasi_report(q, set(q, {"a", "b"}))) ==
        R"({"subset":["a","b"],"quasi_center":["a","b"],"quasi_radius":1})");
  CHECK(union_json(s, union_analysis(s, {set(s, {"d"}), set(s, {"b"})})).find(R"("case":"2.26-i")") !=
        std::string::npos);
  CHECK(matrix_json(furtherness_matrix(e1())) == R"({"labels":["1","2","3"],"rows":[[0,0,1],[0,0,1],[0,0,0]]})");
  CHECK(ball_json(s, {0, 1, BallDirection::Backward}, set(s, {"a", "b", "c"})) ==
        R"({"center":"a","radius":1,"direction":"backward","ball":["a","b","c"]})");
}
