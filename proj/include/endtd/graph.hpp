#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "endtd/errors.hpp"
#include "endtd/vertex.hpp"
#include "endtd/vertex_set.hpp"

namespace endtd {

class EndOracle;

/// Lazily generated, locally finite graph. nullopt from `neighbors` means the
/// vertex has infinitely many neighbours.
struct GraphFamily {
  std::string name;
  std::map<std::string, std::string> params;
  Vertex root;
  std::function<std::optional<std::vector<Vertex>>(const Vertex&)> neighbors;
  std::function<std::string(const Vertex&)> label;
  std::shared_ptr<const EndOracle> oracle;
};

using FamilyPtr = std::shared_ptr<const GraphFamily>;

/// Closed BFS ball of a given radius around the family root.
class Truncation {
 public:
  /// Throws GraphError on an infinite neighbourhood and ConfigError on an
  /// asymmetric generator.
  static Truncation expand(FamilyPtr family, int horizon);

  const GraphFamily& family() const { return *family_; }
  const FamilyPtr& family_ptr() const { return family_; }
  int horizon() const { return horizon_; }
  std::size_t size() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_; }

  const Vertex& vertex(Idx i) const { return verts_[i]; }
  std::optional<Idx> index_of(const Vertex& v) const;
  std::optional<Idx> index_of_label(std::string_view label) const;
  Idx at(const Vertex& v) const;
  Idx at_label(std::string_view label) const;

  std::span<const Idx> neighbors(Idx i) const {
    return {adj_.data() + off_[i], adj_.data() + off_[i + 1]};
  }
  int depth(Idx i) const { return depth_[i]; }
  bool on_frontier(Idx i) const { return depth_[i] == horizon_; }
  std::string label(Idx i) const { return family_->label(verts_[i]); }
  std::vector<std::string> labels(const VertexSet& s) const;
  VertexSet from_labels(const std::vector<std::string>& labels) const;

  VertexSet all() const;
  VertexSet frontier() const;
  VertexSet ball(int radius) const;
  int max_depth(const VertexSet& s) const;

 private:
  FamilyPtr family_;
  int horizon_ = 0;
  std::vector<Vertex> verts_;
  std::vector<int> depth_;
  std::vector<std::size_t> off_;
  std::vector<Idx> adj_;
  std::size_t edges_ = 0;
  std::unordered_map<Vertex, Idx, VertexHash> index_;
  mutable std::unordered_map<std::string, Idx> by_label_;
};

/// Induced subgraph of a truncation. Holds a reference; the truncation must
/// outlive it.
class Host {
 public:
  explicit Host(const Truncation& t);
  Host(const Truncation& t, VertexSet vertices);

  const Truncation& truncation() const { return *t_; }
  const VertexSet& vertices() const { return verts_; }
  bool contains(Idx v) const { return mask_[v] != 0; }
  const std::vector<char>& mask() const { return mask_; }

  template <class F>
  void for_each_neighbor(Idx v, F&& f) const {
    for (Idx u : t_->neighbors(v))
      if (mask_[u]) f(u);
  }

 private:
  const Truncation* t_;
  VertexSet verts_;
  std::vector<char> mask_;
};

/// Connected vertex set together with its neighbourhood in the host.
struct Region {
  VertexSet vertices;
  VertexSet neighborhood;
  bool touches_frontier = false;

  std::size_t order() const { return neighborhood.size(); }
  bool operator==(const Region& o) const { return vertices == o.vertices; }
};

VertexSet neighborhood(const Host& h, const VertexSet& s);
bool is_connected(const Host& h, const VertexSet& s);
Region make_region(const Host& h, VertexSet vertices);

/// Components of host minus `removed`, ordered by smallest vertex.
std::vector<Region> components_minus(const Host& h, const VertexSet& removed);
std::vector<Region> components_of(const Host& h, const VertexSet& inside);

/// Vertices reachable from `from` inside host minus `removed`.
VertexSet reach(const Host& h, const VertexSet& from, const VertexSet& removed);

/// Two regions touch if they share a vertex or an edge joins them.
bool touch(const Truncation& t, const Region& x, const Region& y);
/// Nested: one contains the other, or they do not touch.
bool nested(const Truncation& t, const Region& x, const Region& y);

/// Keeps the regions not strictly contained in another one of the list.
std::vector<Region> maximal_regions(const std::vector<Region>& regions);

}  // namespace endtd
