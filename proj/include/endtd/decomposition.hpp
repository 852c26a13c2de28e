#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "endtd/ends.hpp"
#include "endtd/envelope.hpp"
#include "endtd/graph.hpp"
#include "endtd/region_algorithm.hpp"

namespace endtd {

struct TreeNode {
  int id = 0;
  int parent = -1;
  int height = 0;
  VertexSet bag;
  VertexSet component;  ///< component the node was created for; empty at the root
  std::vector<int> children;
};

/// Part of the graph not yet covered, hanging below a node whose bag holds
/// its neighbourhood.
struct PendingComponent {
  int leaf = 0;
  VertexSet vertices;
  VertexSet neighborhood;
};

/// Record of one node creation.
struct BuildStep {
  int round = 0;
  int node = 0;
  int parent = 0;
  VertexSet component;
  VertexSet attach;  ///< neighbourhood of the component
  VertexSet interior;
  VertexSet u1, u3;
  std::vector<std::string> u2;
  std::vector<std::size_t> inherited;  ///< indices into the parent edge's region list
  AlgorithmRun run;
  EnvelopeResult envelope;
  std::vector<std::string> concatenation_failures;
};

struct TreeDecomposition {
  std::string family;
  std::map<std::string, std::string> params;
  int horizon = 0;
  int levels = 0;
  std::string psi_kind;
  std::vector<std::string> psi_ids;
  std::vector<TreeNode> nodes;             ///< node id == index, root is 0
  std::vector<std::vector<Region>> regions;  ///< region list of the edge above each node
  std::vector<PendingComponent> pending;
  std::vector<BuildStep> log;
  std::vector<int> merged_into;  ///< original node -> node after contraction
  bool contracted = false;

  VertexSet adhesion(int child) const;
  /// a is b or an ancestor of b.
  bool is_ancestor(int a, int b) const;
  VertexSet covered() const;
  int last_level() const;
};

/// Builds the first `levels` rounds of the decomposition.
TreeDecomposition build(const Truncation& t, const GDeltaSpec& spec, int levels);
TreeDecomposition build(FamilyPtr family, const GDeltaSpec& spec, int horizon, int levels,
                        std::shared_ptr<const Truncation>* keep = nullptr);

/// Vertices of bags strictly above the edge into `child`, pending parts
/// included, minus the adhesion set.
VertexSet upper_part(const TreeDecomposition& td, int child);
std::vector<VertexSet> upper_parts(const TreeDecomposition& td);

/// Edges whose adhesion set is linked to some end living above them. With a
/// sampled oracle, frontier-reaching edges with no listed end above are kept.
std::vector<int> linked_edges(const Truncation& t, const TreeDecomposition& td);

/// Contracts every edge outside linked_edges; merged bags are unions.
TreeDecomposition contract_to_linked(const Truncation& t, const TreeDecomposition& td);

struct EndPlacement {
  std::string id;
  bool in_psi = false;
  std::optional<int> xi_index;
  std::vector<int> path;         ///< nodes from the root
  bool reaches_frontier = false; ///< continues into a pending part below the last node
};

/// Follows each resolved end down the tree by where its frontier slice lies.
std::vector<EndPlacement> end_tree_map(const Truncation& t, const TreeDecomposition& td,
                                       const GDeltaSpec& spec);

}  // namespace endtd
