#include "endtd/decomposition.hpp"

#include <algorithm>
#include <functional>

#include "endtd/separation.hpp"

namespace endtd {

VertexSet TreeDecomposition::adhesion(int child) const {
  const TreeNode& n = nodes.at(child);
  if (n.parent < 0) return {};
  return set_intersection(n.bag, nodes[n.parent].bag);
}

bool TreeDecomposition::is_ancestor(int a, int b) const {
  for (int v = b; v >= 0; v = nodes[v].parent)
    if (v == a) return true;
  return false;
}

VertexSet TreeDecomposition::covered() const {
  VertexSet out;
  for (const auto& n : nodes) out = set_union(out, n.bag);
  return out;
}

int TreeDecomposition::last_level() const {
  int h = 0;
  for (const auto& n : nodes) h = std::max(h, n.height);
  return h;
}

namespace {

int attach_point(const TreeDecomposition& td, const VertexSet& nbhd, const std::vector<int>& prefer) {
  for (int n : prefer)
    if (is_subset(nbhd, td.nodes[n].bag)) return n;
  for (int n = static_cast<int>(td.nodes.size()) - 1; n >= 0; --n)
    if (is_subset(nbhd, td.nodes[n].bag)) return n;
  return -1;
}

}  // namespace

TreeDecomposition build(const Truncation& t, const GDeltaSpec& spec, int levels) {
  if (levels < 0) throw ConfigError("build: negative level count");
  Host full(t);
  TreeDecomposition td;
  td.family = t.family().name;
  td.params = t.family().params;
  td.horizon = t.horizon();
  td.levels = levels;
  td.psi_kind = spec.kind;
  td.psi_ids = spec.psi_ids;

  Idx root = t.at(t.family().root);
  td.nodes.push_back({0, -1, 0, VertexSet{root}, {}, {}});
  td.regions.emplace_back();
  VertexSet covered{root};
  std::vector<int> newest{0};

  for (int round = 1; round <= levels; ++round) {
    auto comps = components_minus(full, covered);
    if (comps.empty()) break;
    VertexSet ball = t.ball(round);
    std::vector<int> made;
    VertexSet grown = covered;
    for (const Region& c : comps) {
      const VertexSet& nbhd = c.neighborhood;
      int leaf = attach_point(td, nbhd, newest);
      if (leaf < 0) throw std::logic_error("build: component attaches to no bag");
      try {
        require_horizon(t, static_cast<int>(nbhd.size()), t.max_depth(nbhd), "build");
      } catch (const HorizonError& e) {
        throw HorizonError(std::string(e.what()) + " (round " + std::to_string(round) + ")",
                           e.required());
      }
      BuildStep step;
      step.round = round;
      step.parent = leaf;
      step.component = c.vertices;
      step.attach = nbhd;

      std::vector<Region> inherited;
      const auto& above = td.regions[leaf];
      for (std::size_t i = 0; i < above.size(); ++i)
        if (is_subset(above[i].vertices, c.vertices) && above[i].vertices != c.vertices) {
          step.inherited.push_back(i);
          inherited.push_back(above[i]);
        }

      VertexSet host_set = set_union(c.vertices, nbhd);
      Host host(t, host_set);
      try {
        step.run = run_region_algorithm(host, nbhd, maximal_regions(inherited));
      } catch (const HorizonError& e) {
        throw HorizonError(std::string(e.what()) + " (round " + std::to_string(round) + ")",
                           e.required());
      }

      std::vector<Region> all = inherited;
      for (const auto& o : step.run.output) all.push_back(o.region);
      auto tops = maximal_regions(all);
      VertexSet in_regions;
      for (const auto& r : tops) in_regions = set_union(in_regions, r.vertices);
      step.interior = set_difference(host_set, in_regions);

      auto host_ends = ends_in(host);
      step.u1 = set_intersection(ball, step.interior);
      for (const auto& id : boundary_of(host, step.interior, host_ends))
        for (const auto& e : host_ends)
          if (e.id == id && spec.end_in(e, round)) step.u2.push_back(id);
      for (const auto& r : tops) {
        bool hit = intersects(r.vertices, ball);
        for (const auto& e : host_ends)
          if (!hit && spec.end_in(e, round) && lives_in(host, e, r.vertices)) hit = true;
        if (hit) step.u3 = set_union(step.u3, r.neighborhood);
      }

      VertexSet z = set_union(set_union(step.u1, step.u3), nbhd);
      step.envelope = envelope_avoiding(host, z, step.u2, tops);
      auto concat = audit_observation(host, nbhd, {}, all);
      step.concatenation_failures = concat.failures;

      int id = static_cast<int>(td.nodes.size());
      step.node = id;
      td.nodes.push_back({id, leaf, round, step.envelope.envelope, c.vertices, {}});
      td.nodes[leaf].children.push_back(id);
      td.regions.push_back(std::move(all));
      grown = set_union(grown, step.envelope.envelope);
      made.push_back(id);
      td.log.push_back(std::move(step));
    }
    covered = grown;
    newest = made;
  }

  for (const Region& c : components_minus(full, covered)) {
    int leaf = attach_point(td, c.neighborhood, newest);
    if (leaf < 0) throw std::logic_error("build: pending component attaches to no bag");
    td.pending.push_back({leaf, c.vertices, c.neighborhood});
  }
  return td;
}

TreeDecomposition build(FamilyPtr family, const GDeltaSpec& spec, int horizon, int levels,
                        std::shared_ptr<const Truncation>* keep) {
  auto t = std::make_shared<const Truncation>(Truncation::expand(std::move(family), horizon));
  TreeDecomposition td = build(*t, spec, levels);
  if (keep) *keep = t;
  return td;
}

std::vector<VertexSet> upper_parts(const TreeDecomposition& td) {
  std::vector<VertexSet> sub(td.nodes.size());
  for (const auto& p : td.pending) sub[p.leaf] = set_union(sub[p.leaf], p.vertices);
  for (int n = static_cast<int>(td.nodes.size()) - 1; n >= 0; --n) {
    sub[n] = set_union(sub[n], td.nodes[n].bag);
    for (int c : td.nodes[n].children) sub[n] = set_union(sub[n], sub[c]);
  }
  std::vector<VertexSet> up(td.nodes.size());
  for (std::size_t n = 1; n < td.nodes.size(); ++n)
    up[n] = set_difference(sub[n], td.adhesion(static_cast<int>(n)));
  return up;
}

VertexSet upper_part(const TreeDecomposition& td, int child) { return upper_parts(td).at(child); }

std::vector<int> linked_edges(const Truncation& t, const TreeDecomposition& td) {
  Host full(t);
  auto ends = ends_in(full);
  std::vector<VertexSet> slices;
  for (const auto& e : ends) slices.push_back(frontier_slice(full, e));
  auto up = upper_parts(td);
  std::vector<int> out;
  for (std::size_t n = 1; n < td.nodes.size(); ++n) {
    VertexSet adh = td.adhesion(static_cast<int>(n));
    bool reaches = false;
    for (Idx v : up[n])
      if (t.on_frontier(v)) reaches = true;
    bool any_end = false, linked = false;
    for (std::size_t i = 0; i < ends.size() && !linked; ++i) {
      if (!is_subset(slices[i], up[n])) continue;
      any_end = true;
      require_horizon(t, static_cast<int>(adh.size()), t.max_depth(adh),
                      "linkage of edge above node " + std::to_string(n));
      linked = VertexFlow(full, adh, slices[i]).value() == static_cast<int>(adh.size());
    }
    if (reaches && !any_end) {
      // A sampled oracle leaves ends unlisted; such edges cannot be judged
      // and are kept.
      if (oracle_of(t).sampled) {
        out.push_back(static_cast<int>(n));
        continue;
      }
      throw HorizonError("edge above node " + std::to_string(n) +
                             " reaches the frontier but no resolved end lives above it",
                         t.horizon() + oracle_of(t).resolve_margin);
    }
    if (linked) out.push_back(static_cast<int>(n));
  }
  return out;
}

TreeDecomposition contract_to_linked(const Truncation& t, const TreeDecomposition& td) {
  auto keep = linked_edges(t, td);
  std::vector<char> in_l(td.nodes.size(), 0);
  for (int n : keep) in_l[n] = 1;
  const int n = static_cast<int>(td.nodes.size());
  std::vector<int> rep(n);
  for (int v = 0; v < n; ++v) {
    const int p = td.nodes[v].parent;
    rep[v] = (p < 0 || in_l[v]) ? v : rep[p];
  }
  std::vector<int> fresh(n, -1);
  TreeDecomposition out;
  out.family = td.family;
  out.params = td.params;
  out.horizon = td.horizon;
  out.levels = td.levels;
  out.psi_kind = td.psi_kind;
  out.psi_ids = td.psi_ids;
  out.log = td.log;
  out.contracted = true;
  for (int v = 0; v < n; ++v) {
    if (rep[v] != v) continue;
    int id = static_cast<int>(out.nodes.size());
    fresh[v] = id;
    TreeNode node;
    node.id = id;
    node.component = td.nodes[v].component;
    if (td.nodes[v].parent >= 0) {
      node.parent = fresh[rep[td.nodes[v].parent]];
      node.height = out.nodes[node.parent].height + 1;
      out.nodes[node.parent].children.push_back(id);
    }
    out.nodes.push_back(std::move(node));
    out.regions.push_back(td.regions[v]);
  }
  out.merged_into.resize(n);
  for (int v = 0; v < n; ++v) {
    out.merged_into[v] = fresh[rep[v]];
    auto& bag = out.nodes[fresh[rep[v]]].bag;
    bag = set_union(bag, td.nodes[v].bag);
  }
  for (const auto& p : td.pending) out.pending.push_back({out.merged_into[p.leaf], p.vertices, p.neighborhood});
  return out;
}

std::vector<EndPlacement> end_tree_map(const Truncation& t, const TreeDecomposition& td,
                                       const GDeltaSpec& spec) {
  Host full(t);
  auto up = upper_parts(td);
  std::vector<EndPlacement> out;
  for (const auto& e : ends_in(full)) {
    EndPlacement p;
    p.id = e.id;
    p.in_psi = spec.in_psi(e);
    p.xi_index = spec.xi_index(e);
    VertexSet f = frontier_slice(full, e);
    int at = 0;
    p.path.push_back(0);
    for (;;) {
      int next = -1;
      for (int c : td.nodes[at].children) {
        if (is_subset(f, up[c])) {
          if (next >= 0) throw std::logic_error("end_tree_map: sibling upper parts overlap");
          next = c;
        } else if (intersects(f, up[c])) {
          throw HorizonError("frontier slice of " + e.id + " is split between tree edges",
                             t.horizon() + 1);
        }
      }
      if (next < 0) break;
      at = next;
      p.path.push_back(at);
    }
    for (const auto& pc : td.pending)
      if (pc.leaf == at && is_subset(f, pc.vertices)) p.reaches_frontier = true;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace endtd
