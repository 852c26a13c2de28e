#include "endtd/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace endtd {

Truncation Truncation::expand(FamilyPtr family, int horizon) {
  if (!family) throw ConfigError("expand: null family");
  if (horizon < 0) throw ConfigError("expand: negative horizon");
  Truncation t;
  t.family_ = family;
  t.horizon_ = horizon;

  std::unordered_map<Vertex, int, VertexHash> depth;
  std::unordered_map<Vertex, std::vector<Vertex>, VertexHash> nbrs;
  std::deque<Vertex> queue{family->root};
  depth[family->root] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    auto list = family->neighbors(v);
    if (!list)
      throw GraphError("family " + family->name + ": vertex " + family->label(v) +
                       " has a non-finite neighbour list");
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
    int d = depth[v];
    for (const Vertex& u : *list) {
      if (u == v) throw ConfigError("family " + family->name + ": loop at " + family->label(v));
      if (!depth.count(u) && d < horizon) {
        depth[u] = d + 1;
        queue.push_back(u);
      }
    }
    nbrs[v] = std::move(*list);
  }

  t.verts_.reserve(depth.size());
  for (auto& [v, d] : depth) t.verts_.push_back(v);
  std::sort(t.verts_.begin(), t.verts_.end());
  for (Idx i = 0; i < static_cast<Idx>(t.verts_.size()); ++i) t.index_[t.verts_[i]] = i;

  t.depth_.resize(t.verts_.size());
  t.off_.assign(t.verts_.size() + 1, 0);
  std::vector<std::vector<Idx>> adj(t.verts_.size());
  for (Idx i = 0; i < static_cast<Idx>(t.verts_.size()); ++i) {
    const Vertex& v = t.verts_[i];
    t.depth_[i] = depth[v];
    for (const Vertex& u : nbrs[v]) {
      auto it = t.index_.find(u);
      if (it == t.index_.end()) continue;
      const auto& back = nbrs[u];
      if (!std::binary_search(back.begin(), back.end(), v))
        throw ConfigError("family " + family->name + ": asymmetric adjacency " +
                          family->label(v) + " -> " + family->label(u));
      adj[i].push_back(it->second);
    }
    std::sort(adj[i].begin(), adj[i].end());
  }
  for (std::size_t i = 0; i < adj.size(); ++i) {
    t.off_[i + 1] = t.off_[i] + adj[i].size();
    t.edges_ += adj[i].size();
  }
  t.edges_ /= 2;
  t.adj_.reserve(t.off_.back());
  for (auto& a : adj) t.adj_.insert(t.adj_.end(), a.begin(), a.end());
  return t;
}

std::optional<Idx> Truncation::index_of(const Vertex& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Idx> Truncation::index_of_label(std::string_view label) const {
  if (by_label_.empty())
    for (Idx i = 0; i < static_cast<Idx>(verts_.size()); ++i) by_label_[this->label(i)] = i;
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

Idx Truncation::at(const Vertex& v) const {
  auto i = index_of(v);
  if (!i) throw PreconditionError("vertex " + family_->label(v) + " is outside the truncation");
  return *i;
}

Idx Truncation::at_label(std::string_view label) const {
  auto i = index_of_label(label);
  if (!i) throw ConfigError("unknown vertex label '" + std::string(label) + "'");
  return *i;
}

std::vector<std::string> Truncation::labels(const VertexSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Idx v : s) out.push_back(label(v));
  return out;
}

VertexSet Truncation::from_labels(const std::vector<std::string>& labels) const {
  std::vector<Idx> out;
  for (const auto& l : labels) out.push_back(at_label(l));
  return VertexSet(std::move(out));
}

VertexSet Truncation::all() const {
  std::vector<Idx> out(verts_.size());
  for (Idx i = 0; i < static_cast<Idx>(out.size()); ++i) out[i] = i;
  return VertexSet(std::move(out));
}

VertexSet Truncation::frontier() const {
  std::vector<Idx> out;
  for (Idx i = 0; i < static_cast<Idx>(verts_.size()); ++i)
    if (depth_[i] == horizon_) out.push_back(i);
  return VertexSet(std::move(out));
}

VertexSet Truncation::ball(int radius) const {
  std::vector<Idx> out;
  for (Idx i = 0; i < static_cast<Idx>(verts_.size()); ++i)
    if (depth_[i] <= radius) out.push_back(i);
  return VertexSet(std::move(out));
}

int Truncation::max_depth(const VertexSet& s) const {
  int d = 0;
  for (Idx v : s) d = std::max(d, depth_[v]);
  return d;
}

Host::Host(const Truncation& t) : t_(&t), verts_(t.all()), mask_(t.size(), 1) {}

Host::Host(const Truncation& t, VertexSet vertices)
    : t_(&t), verts_(std::move(vertices)), mask_(verts_.mask(t.size())) {}

VertexSet neighborhood(const Host& h, const VertexSet& s) {
  std::vector<Idx> out;
  for (Idx v : s)
    h.for_each_neighbor(v, [&](Idx u) {
      if (!s.contains(u)) out.push_back(u);
    });
  return VertexSet(std::move(out));
}

VertexSet reach(const Host& h, const VertexSet& from, const VertexSet& removed) {
  const auto& t = h.truncation();
  std::vector<char> seen(t.size(), 0);
  for (Idx v : removed) seen[v] = 1;
  std::vector<Idx> stack;
  std::vector<Idx> out;
  for (Idx v : from)
    if (h.contains(v) && !seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    Idx v = stack.back();
    stack.pop_back();
    out.push_back(v);
    h.for_each_neighbor(v, [&](Idx u) {
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    });
  }
  return VertexSet(std::move(out));
}

bool is_connected(const Host& h, const VertexSet& s) {
  if (s.empty()) return false;
  Host inside(h.truncation(), set_intersection(s, h.vertices()));
  if (inside.vertices().size() != s.size()) return false;
  return reach(inside, VertexSet{*s.begin()}, {}).size() == s.size();
}

Region make_region(const Host& h, VertexSet vertices) {
  Region r;
  r.neighborhood = neighborhood(h, vertices);
  for (Idx v : vertices)
    if (h.truncation().on_frontier(v)) {
      r.touches_frontier = true;
      break;
    }
  r.vertices = std::move(vertices);
  return r;
}

std::vector<Region> components_of(const Host& h, const VertexSet& inside) {
  const auto& t = h.truncation();
  std::vector<char> seen(t.size(), 1);
  for (Idx v : inside)
    if (h.contains(v)) seen[v] = 0;
  std::vector<Region> out;
  std::vector<Idx> stack;
  for (Idx s : inside) {
    if (seen[s]) continue;
    std::vector<Idx> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Idx v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      h.for_each_neighbor(v, [&](Idx u) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      });
    }
    out.push_back(make_region(h, VertexSet(std::move(comp))));
  }
  return out;
}

std::vector<Region> components_minus(const Host& h, const VertexSet& removed) {
  return components_of(h, set_difference(h.vertices(), removed));
}

bool touch(const Truncation& t, const Region& x, const Region& y) {
  if (intersects(x.vertices, y.vertices)) return true;
  const Region& small = x.vertices.size() <= y.vertices.size() ? x : y;
  const Region& big = &small == &x ? y : x;
  for (Idx v : small.vertices)
    for (Idx u : t.neighbors(v))
      if (big.vertices.contains(u)) return true;
  return false;
}

bool nested(const Truncation& t, const Region& x, const Region& y) {
  if (is_subset(x.vertices, y.vertices) || is_subset(y.vertices, x.vertices)) return true;
  return !touch(t, x, y);
}

std::vector<Region> maximal_regions(const std::vector<Region>& regions) {
  std::vector<Region> out;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    bool inside = false;
    for (std::size_t j = 0; j < regions.size() && !inside; ++j) {
      if (i == j) continue;
      if (is_subset(regions[i].vertices, regions[j].vertices) &&
          (regions[i].vertices != regions[j].vertices || j < i))
        inside = true;
    }
    if (!inside) out.push_back(regions[i]);
  }
  return out;
}

}  // namespace endtd
