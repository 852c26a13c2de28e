#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "endtd/families.hpp"
#include "endtd/io.hpp"

using namespace endtd;

TEST_CASE("decomposition JSON round trip") {
  auto t = Truncation::expand(half_grid(3), 16);
  auto spec = undominated_gdelta(t.family());
  auto td = contract_to_linked(t, build(t, spec, 3));
  auto j = to_json(t, td);
  CHECK(j["kind"] == "tree_decomposition");
  CHECK(j["schema"] == 1);
  auto back = tree_from_json(t, nlohmann::json::parse(j.dump()));
  REQUIRE(back.nodes.size() == td.nodes.size());
  for (std::size_t i = 0; i < td.nodes.size(); ++i) {
    CHECK(back.nodes[i].bag == td.nodes[i].bag);
    CHECK(back.nodes[i].parent == td.nodes[i].parent);
  }
  CHECK(back.pending.size() == td.pending.size());
  auto rep = verify(t, back, spec);
  auto rj = to_json(t, rep);
  CHECK(rj["kind"] == "verification_report");
  CHECK(rj["pass"] == rep.pass());
  CHECK(to_dot(t, td).find("digraph") != std::string::npos);
  CHECK(gdelta_json(spec)["kind"] == "undominated");
}

TEST_CASE("malformed decomposition JSON") {
  auto t = Truncation::expand(half_grid(3), 8);
  CHECK_THROWS_AS(tree_from_json(t, nlohmann::json{{"schema", 2}}), ConfigError);
  CHECK_THROWS_AS(tree_from_json(t, nlohmann::json::object()), ConfigError);
}

TEST_CASE("finite graph specs") {
  auto s = parse_finite_spec(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]],
                                 "rays": ["c"], "root": "a"})");
  CHECK(s.names.size() == 3);
  CHECK(s.edges.size() == 2);
  CHECK(s.ray_anchors == std::vector<int>{2});
  CHECK_THROWS_AS(parse_finite_spec("{"), ConfigError);
  CHECK_THROWS_AS(parse_finite_spec(R"({"vertices": ["a"], "edges": [["a", "z"]], "root": "a"})"), ConfigError);
  auto path = std::filesystem::temp_directory_path() / "endtd_spec_test.json";
  std::ofstream(path) << R"({"vertices": ["x", "y"], "edges": [["x", "y"]], "root": "x"})";
  auto r = read_finite_spec(path.string());
  CHECK(r.names == std::vector<std::string>{"x", "y"});
  std::filesystem::remove(path);
}

TEST_CASE("family registry") {
  CHECK(list_families().size() >= 7);
  CHECK(make_family("half_grid", {{"k", "3"}})->params.at("k") == "3");
  CHECK_THROWS_AS(make_family("nope", {}), ConfigError);
  CHECK_THROWS_AS(make_family("half_grid", {{"k", "0"}}), ConfigError);
  auto a = to_json(audit_oracle(Truncation::expand(half_grid(4), 12)));
  CHECK(a["pass"] == true);
}
