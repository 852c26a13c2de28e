#include "endtd/ends.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace endtd {

std::vector<EndHandle> EndOracle::resolved(int horizon) const {
  std::vector<EndHandle> out;
  for (auto& e : enumerate(horizon))
    if (e.anchor_depth + resolve_margin <= horizon) out.push_back(std::move(e));
  return out;
}

const EndOracle& oracle_of(const Truncation& t) {
  if (!t.family().oracle) throw ConfigError("family " + t.family().name + " has no end oracle");
  return *t.family().oracle;
}

void require_horizon(const Truncation& t, int k, int d, const std::string& what) {
  int need = oracle_of(t).stabilization_depth(k, d);
  if (t.horizon() < need)
    throw HorizonError(what + ": horizon " + std::to_string(t.horizon()) +
                           " is below the certified depth " + std::to_string(need),
                       need);
}

VertexSet frontier_slice(const Host& h, const EndHandle& e) {
  const auto& t = h.truncation();
  std::vector<Idx> out;
  for (Idx v : h.vertices())
    if (t.on_frontier(v) && e.in_tail(t.vertex(v))) out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet end_target(const Host& h, const EndHandle& e) {
  VertexSet f = frontier_slice(h, e);
  for (const Vertex& d : e.dominators)
    if (auto i = h.truncation().index_of(d); i && h.contains(*i)) f.insert(*i);
  return f;
}

std::vector<EndHandle> ends_in(const Host& h) {
  const auto& t = h.truncation();
  Host full(t);
  std::vector<EndHandle> out;
  for (auto& e : oracle_of(t).resolved(t.horizon())) {
    VertexSet f = frontier_slice(full, e);
    if (!f.empty() && is_subset(f, h.vertices())) out.push_back(std::move(e));
  }
  return out;
}

bool lives_in(const Host& h, const EndHandle& e, const VertexSet& s) {
  VertexSet f = frontier_slice(h, e);
  if (f.empty()) return false;
  if (is_subset(f, s)) return true;
  if (intersects(f, s))
    throw HorizonError("end " + e.id + " has a frontier slice split by a region",
                       h.truncation().horizon() + 1);
  return false;
}

Region component_of_end(const Host& h, const VertexSet& s, const EndHandle& e) {
  const auto& t = h.truncation();
  require_horizon(t, static_cast<int>(s.size()), t.max_depth(s), "component_of_end");
  VertexSet f = frontier_slice(h, e);
  if (f.empty()) throw PreconditionError("end " + e.id + " does not live in the host");
  if (intersects(f, s))
    throw HorizonError("separator reaches the frontier slice of " + e.id, t.horizon() + 1);
  VertexSet r = reach(h, VertexSet{*f.begin()}, s);
  if (!is_subset(f, r))
    throw HorizonError("frontier slice of " + e.id + " is split by the separator", t.horizon() + 1);
  return make_region(h, std::move(r));
}

EndSeparator min_end_separator(const Host& h, const VertexSet& x, const EndHandle& e, CutSide side) {
  const auto& t = h.truncation();
  require_horizon(t, static_cast<int>(x.size()), t.max_depth(x), "min_end_separator");
  VertexSet target = end_target(h, e);
  if (target.empty()) throw PreconditionError("end " + e.id + " does not live in the host");
  VertexFlow f(h, x, target);
  return {f.cut(side), PathFamily{x, target, f.paths()}};
}

bool is_linked_to_end(const Host& h, const VertexSet& x, const EndHandle& e) {
  const auto& t = h.truncation();
  require_horizon(t, static_cast<int>(x.size()), t.max_depth(x), "is_linked_to_end");
  VertexSet target = end_target(h, e);
  if (target.empty()) throw PreconditionError("end " + e.id + " does not live in the host");
  return VertexFlow(h, x, target).value() ==
         static_cast<int>(set_intersection(x, h.vertices()).size());
}

VertexSet deep_region(const Host& h, const EndHandle& e) {
  const auto& t = h.truncation();
  int lo = t.horizon() - oracle_of(t).band;
  VertexSet f = frontier_slice(h, e);
  if (f.empty()) return {};
  std::vector<Idx> inside;
  for (Idx v : h.vertices())
    if (t.depth(v) >= lo && e.in_tail(t.vertex(v))) inside.push_back(v);
  Host band(t, VertexSet(std::move(inside)));
  return reach(band, f, {});
}

std::vector<std::string> boundary_of(const Host& h, const VertexSet& x,
                                     const std::vector<EndHandle>& ends) {
  std::vector<std::string> out;
  for (const auto& e : ends) {
    VertexSet d = deep_region(h, e);
    if (d.empty()) continue;
    if (intersects(d, x) || intersects(neighborhood(h, d), x)) out.push_back(e.id);
  }
  return out;
}

VertexSet ray_tail(const Host& h, const EndHandle& e) {
  const auto& t = h.truncation();
  std::vector<Idx> out;
  for (int i = t.horizon(); i >= 0; --i) {
    auto v = t.index_of(e.ray(static_cast<std::size_t>(i)));
    if (!v || !h.contains(*v)) break;
    out.push_back(*v);
  }
  return VertexSet(std::move(out));
}

std::optional<int> family_distance(const GraphFamily& f, const Vertex& target, int limit) {
  std::unordered_map<Vertex, int, VertexHash> dist{{f.root, 0}};
  std::deque<Vertex> q{f.root};
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    int d = dist[v];
    if (v == target) return d;
    if (d >= limit) continue;
    auto nb = f.neighbors(v);
    if (!nb) continue;
    for (const Vertex& u : *nb)
      if (!dist.count(u)) {
        dist[u] = d + 1;
        q.push_back(u);
      }
  }
  return std::nullopt;
}

GDeltaSpec undominated_gdelta(const GraphFamily& f) {
  GDeltaSpec s;
  s.kind = "undominated";
  s.in_psi = [](const EndHandle& e) { return e.dominators.empty(); };
  auto fam = std::make_shared<GraphFamily>(f);
  s.xi_index = [fam](const EndHandle& e) -> std::optional<int> {
    if (e.dominators.empty()) return std::nullopt;
    int best = 1 << 20;
    for (const Vertex& d : e.dominators)
      if (auto dd = family_distance(*fam, d, 256)) best = std::min(best, std::max(1, *dd));
    return best;
  };
  return s;
}

GDeltaSpec all_ends_gdelta() {
  GDeltaSpec s;
  s.kind = "all";
  s.in_psi = [](const EndHandle&) { return true; };
  s.xi_index = [](const EndHandle&) -> std::optional<int> { return std::nullopt; };
  return s;
}

GDeltaSpec listed_gdelta(std::vector<std::string> ids) {
  GDeltaSpec s;
  s.kind = "ends";
  std::sort(ids.begin(), ids.end());
  s.psi_ids = ids;
  s.in_psi = [ids](const EndHandle& e) { return std::binary_search(ids.begin(), ids.end(), e.id); };
  s.xi_index = [ids](const EndHandle& e) -> std::optional<int> {
    if (std::binary_search(ids.begin(), ids.end(), e.id)) return std::nullopt;
    return e.rank + 1;
  };
  return s;
}

OracleAudit audit_oracle(const Truncation& t) {
  const EndOracle& o = oracle_of(t);
  OracleAudit a;
  a.family = t.family().name;
  a.horizon = t.horizon();
  a.sampled = o.sampled;
  a.derivation = o.derivation;
  Host full(t);
  for (const auto& e : o.resolved(t.horizon())) {
    EndAudit ea;
    ea.id = e.id;
    ea.declared_degree = e.degree;
    for (const Vertex& d : e.dominators) ea.declared_dominators.push_back(t.family().label(d));
    std::vector<Idx> tail;
    for (Idx v = 0; v < static_cast<Idx>(t.size()); ++v)
      if (e.in_tail(t.vertex(v))) tail.push_back(v);
    VertexSet tail_set(std::move(tail));
    VertexSet slice = frontier_slice(full, e);
    ea.slice_size = slice.size();
    ea.tail_connected = is_connected(full, tail_set);
    int mid = (e.anchor_depth + t.horizon()) / 2;
    std::vector<Idx> mid_slice;
    for (Idx v : tail_set)
      if (t.depth(v) == mid) mid_slice.push_back(v);
    Host tail_host(t, tail_set);
    ea.checked_degree = VertexFlow(tail_host, VertexSet(mid_slice), slice).value();
    bool degree_ok = e.degree ? ea.checked_degree == *e.degree
                              : ea.checked_degree == static_cast<int>(mid_slice.size()) &&
                                    ea.checked_degree > 1;
    if (!e.degree) ea.note = "infinite degree: disjoint paths grow with the horizon";
    // A truncation only exists for locally finite graphs, and there an end
    // cannot be dominated.
    bool dom_ok = e.dominators.empty();
    if (!dom_ok) ea.note = "declared dominators in a locally finite graph";
    ea.pass = degree_ok && dom_ok && ea.tail_connected && !slice.empty();
    a.pass = a.pass && ea.pass;
    a.ends.push_back(std::move(ea));
  }
  return a;
}

}  // namespace endtd
