#pragma once

#include <vector>

#include "endtd/graph.hpp"

namespace endtd {

enum class CutSide { NearSource, NearSink };

/// Vertex-capacitated unit flow between two vertex sets of a host.
/// Vertices flagged in `uncuttable` get unbounded capacity and never appear
/// in a cut.
class VertexFlow {
 public:
  VertexFlow(const Host& h, const VertexSet& sources, const VertexSet& sinks,
             const std::vector<char>* uncuttable = nullptr);

  int value() const { return value_; }
  /// Flow paths trimmed so each meets the sources only at its first vertex
  /// and the sinks only at its last.
  std::vector<std::vector<Idx>> paths() const;
  VertexSet cut(CutSide side) const;

 private:
  struct Arc {
    int to;
    int cap;
    int rev;
  };
  void add_arc(int from, int to, int cap);
  bool augment();
  std::vector<char> residual_reach_from_source() const;
  std::vector<char> residual_reach_to_sink() const;

  const Host* h_;
  VertexSet sources_, sinks_;
  std::vector<Idx> local_to_global_;
  std::vector<int> global_to_local_;
  std::vector<std::vector<Arc>> g_;
  std::vector<std::vector<int>> base_cap_;
  int s_ = 0, t_ = 0;
  int value_ = 0;
};

struct PathFamily {
  VertexSet from, to;
  std::vector<std::vector<Idx>> paths;
};

/// Maximum family of disjoint from-to paths.
PathFamily max_disjoint_paths(const Host& h, const VertexSet& from, const VertexSet& to);

/// Minimum vertex separator between two sets; canonical on the requested side.
/// Separators may contain vertices of either set.
VertexSet min_separator(const Host& h, const VertexSet& from, const VertexSet& to,
                        CutSide side = CutSide::NearSource);

/// True if there are |from| disjoint from-to paths.
bool is_linked_set(const Host& h, const VertexSet& from, const VertexSet& to);

/// Does removing `s` leave no path from `from` to `to`?
bool separates(const Host& h, const VertexSet& s, const VertexSet& from, const VertexSet& to);

/// Every minimum from-to separator, sorted. A minimum separator meets each
/// path of a maximum path family exactly once, so candidates are drawn from
/// the product of those paths. Throws PreconditionError past `limit`
/// candidates.
std::vector<VertexSet> all_min_separators(const Host& h, const VertexSet& from,
                                          const VertexSet& to, std::size_t limit = 5'000'000);

struct Separation {
  VertexSet left, right;
  VertexSet separator() const { return set_intersection(left, right); }
  std::size_t order() const { return separator().size(); }
};

/// left ∪ right covers the host and no edge joins left\right to right\left.
bool is_separation(const Host& h, const Separation& s);
/// Every separator vertex has a neighbour in some component of left\right
/// whose neighbourhood is the whole separator.
bool is_left_tight(const Host& h, const Separation& s);
/// left\right is connected.
bool is_left_componental(const Host& h, const Separation& s);

struct Star {
  std::vector<Separation> separations;
  VertexSet interior;
};

/// Star whose leaves are the given regions. Throws PreconditionError if two
/// regions touch.
Star star_from_regions(const Host& h, const std::vector<Region>& regions);
/// Pairwise star axiom: left_i ⊆ right_j for i ≠ j.
bool is_star(const Star& s);

}  // namespace endtd
