#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "endtd/ends.hpp"
#include "endtd/graph.hpp"

namespace endtd {

FamilyPtr half_grid(int width);
FamilyPtr full_grid();
/// Binary tree; the oracle lists a sample of four periodic ends.
FamilyPtr binary_tree();
FamilyPtr comb();
/// Comb plus one vertex joined to every spine vertex. Cannot be expanded.
FamilyPtr comb_apex();

enum class GadgetMutation { None, DropX3S1, DropS2H3 };
/// Outer [4]×ℕ grid with the separator gadget glued at every rung.
/// A mutation applies to the gadget at rung `mutated_rung` only.
FamilyPtr appendix_gadget(GadgetMutation m = GadgetMutation::None, int mutated_rung = 2);

namespace gadget {
Vertex outer(int i, int j);
Vertex y1(int j);
Vertex y2(int j);
Vertex s2(int j);
Vertex s1(int j);
Vertex h3(int j, int i, int m);
Vertex h4(int j, int i, int m);
}  // namespace gadget

/// Finite connected graph with a one-way ray hanging off each listed anchor.
struct FiniteSpec {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> ray_anchors;
  int root = 0;
};

FamilyPtr finite_family(const FiniteSpec& spec, const std::string& name = "finite");
/// Reads {"vertices": [...], "edges": [[u, v], ...], "rays": [...], "root": u}.
FiniteSpec read_finite_spec(const std::string& path);
FiniteSpec parse_finite_spec(const std::string& json_text);
/// Random connected core of `core` vertices with `rays` planted rays.
FiniteSpec random_planted(std::uint64_t seed, int core, int rays, double extra_edge_p = 0.3);

struct FamilyInfo {
  std::string name;
  std::string params;
  std::string description;
};
std::vector<FamilyInfo> list_families();

/// Family by CLI name. `input` is the JSON path for "finite".
FamilyPtr make_family(const std::string& name, const std::map<std::string, std::string>& params);

}  // namespace endtd
