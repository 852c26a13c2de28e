#include "endtd/separation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace endtd {

namespace {
constexpr int kInf = std::numeric_limits<int>::max() / 4;
}

void VertexFlow::add_arc(int from, int to, int cap) {
  g_[from].push_back({to, cap, static_cast<int>(g_[to].size())});
  g_[to].push_back({from, 0, static_cast<int>(g_[from].size()) - 1});
}

VertexFlow::VertexFlow(const Host& h, const VertexSet& sources, const VertexSet& sinks,
                       const std::vector<char>* uncuttable)
    : h_(&h),
      sources_(set_intersection(sources, h.vertices())),
      sinks_(set_intersection(sinks, h.vertices())) {
  const auto& t = h.truncation();
  global_to_local_.assign(t.size(), -1);
  for (Idx v : h.vertices()) {
    global_to_local_[v] = static_cast<int>(local_to_global_.size());
    local_to_global_.push_back(v);
  }
  const int n = static_cast<int>(local_to_global_.size());
  s_ = 2 * n;
  t_ = 2 * n + 1;
  g_.assign(2 * n + 2, {});
  for (int l = 0; l < n; ++l) {
    Idx v = local_to_global_[l];
    bool inf = uncuttable && (*uncuttable)[v];
    if (inf && sources_.contains(v) && sinks_.contains(v))
      throw PreconditionError("flow: uncuttable vertex is both source and sink");
    add_arc(2 * l, 2 * l + 1, inf ? kInf : 1);
  }
  for (int l = 0; l < n; ++l) {
    Idx v = local_to_global_[l];
    h.for_each_neighbor(v, [&](Idx u) { add_arc(2 * l + 1, 2 * global_to_local_[u], kInf); });
  }
  for (Idx x : sources_) add_arc(s_, 2 * global_to_local_[x], kInf);
  for (Idx y : sinks_) add_arc(2 * global_to_local_[y] + 1, t_, kInf);
  base_cap_.resize(g_.size());
  for (std::size_t i = 0; i < g_.size(); ++i)
    for (auto& a : g_[i]) base_cap_[i].push_back(a.cap);

  const int bound = n + 1;
  while (augment()) {
    if (++value_ > bound) throw std::logic_error("flow: unbounded value, uncuttable path");
  }
}

bool VertexFlow::augment() {
  std::vector<std::pair<int, int>> prev(g_.size(), {-1, -1});
  std::deque<int> q{s_};
  prev[s_] = {s_, -1};
  while (!q.empty() && prev[t_].first < 0) {
    int v = q.front();
    q.pop_front();
    for (int i = 0; i < static_cast<int>(g_[v].size()); ++i) {
      const Arc& a = g_[v][i];
      if (a.cap > 0 && prev[a.to].first < 0) {
        prev[a.to] = {v, i};
        q.push_back(a.to);
      }
    }
  }
  if (prev[t_].first < 0) return false;
  for (int v = t_; v != s_;) {
    auto [p, i] = prev[v];
    Arc& a = g_[p][i];
    a.cap -= 1;
    g_[v][a.rev].cap += 1;
    v = p;
  }
  return true;
}

std::vector<char> VertexFlow::residual_reach_from_source() const {
  std::vector<char> seen(g_.size(), 0);
  std::vector<int> stack{s_};
  seen[s_] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Arc& a : g_[v])
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
  }
  return seen;
}

std::vector<char> VertexFlow::residual_reach_to_sink() const {
  // u reaches t in the residual graph iff some residual arc u->w with w reaching t.
  std::vector<std::vector<int>> radj(g_.size());
  for (int v = 0; v < static_cast<int>(g_.size()); ++v)
    for (const Arc& a : g_[v])
      if (a.cap > 0) radj[a.to].push_back(v);
  std::vector<char> seen(g_.size(), 0);
  std::vector<int> stack{t_};
  seen[t_] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : radj[v])
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  return seen;
}

VertexSet VertexFlow::cut(CutSide side) const {
  std::vector<Idx> out;
  const int n = static_cast<int>(local_to_global_.size());
  if (side == CutSide::NearSource) {
    auto r = residual_reach_from_source();
    for (int l = 0; l < n; ++l)
      if (r[2 * l] && !r[2 * l + 1]) out.push_back(local_to_global_[l]);
  } else {
    auto r = residual_reach_to_sink();
    for (int l = 0; l < n; ++l)
      if (!r[2 * l] && r[2 * l + 1]) out.push_back(local_to_global_[l]);
  }
  return VertexSet(std::move(out));
}

std::vector<std::vector<Idx>> VertexFlow::paths() const {
  std::vector<std::vector<int>> flow(g_.size());
  for (std::size_t v = 0; v < g_.size(); ++v) {
    flow[v].resize(g_[v].size());
    for (std::size_t i = 0; i < g_[v].size(); ++i)
      flow[v][i] = std::max(0, base_cap_[v][i] - g_[v][i].cap);
  }
  std::vector<std::vector<Idx>> out;
  for (int k = 0; k < value_; ++k) {
    std::vector<int> walk{s_};
    std::vector<int> pos(g_.size(), -1);
    pos[s_] = 0;
    while (walk.back() != t_) {
      int v = walk.back();
      int next = -1;
      for (std::size_t i = 0; i < g_[v].size(); ++i)
        if (flow[v][i] > 0) {
          flow[v][i] -= 1;
          next = g_[v][i].to;
          break;
        }
      if (next < 0) throw std::logic_error("flow decomposition stuck");
      if (pos[next] >= 0) {
        for (std::size_t j = pos[next] + 1; j < walk.size(); ++j) pos[walk[j]] = -1;
        walk.resize(pos[next] + 1);
      } else {
        pos[next] = static_cast<int>(walk.size());
        walk.push_back(next);
      }
    }
    std::vector<Idx> verts;
    for (int node : walk)
      if (node < s_ && node % 2 == 0) verts.push_back(local_to_global_[node / 2]);
    std::size_t first = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (sources_.contains(verts[i])) first = i;
    std::size_t last = first;
    while (!sinks_.contains(verts[last])) ++last;
    out.emplace_back(verts.begin() + first, verts.begin() + last + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PathFamily max_disjoint_paths(const Host& h, const VertexSet& from, const VertexSet& to) {
  VertexFlow f(h, from, to);
  PathFamily pf{from, to, f.paths()};
  if (pf.paths.size() != f.cut(CutSide::NearSource).size())
    throw std::logic_error("Menger duality violated");
  return pf;
}

VertexSet min_separator(const Host& h, const VertexSet& from, const VertexSet& to, CutSide side) {
  return VertexFlow(h, from, to).cut(side);
}

bool is_linked_set(const Host& h, const VertexSet& from, const VertexSet& to) {
  return VertexFlow(h, from, to).value() == static_cast<int>(set_intersection(from, h.vertices()).size());
}

bool separates(const Host& h, const VertexSet& s, const VertexSet& from, const VertexSet& to) {
  if (intersects(set_difference(from, s), set_difference(to, s))) return false;
  VertexSet r = reach(h, set_difference(from, s), s);
  return !intersects(r, to);
}

std::vector<VertexSet> all_min_separators(const Host& h, const VertexSet& from, const VertexSet& to,
                                          std::size_t limit) {
  auto pf = max_disjoint_paths(h, from, to);
  std::size_t total = 1;
  for (auto& p : pf.paths) {
    total *= p.size();
    if (total > limit) throw PreconditionError("all_min_separators: candidate space too large");
  }
  std::set<VertexSet> found;
  std::vector<std::size_t> choice(pf.paths.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<Idx> cand;
    for (std::size_t i = 0; i < choice.size(); ++i) cand.push_back(pf.paths[i][choice[i]]);
    VertexSet s(cand);
    if (separates(h, s, from, to)) found.insert(s);
    for (std::size_t i = 0; i < choice.size(); ++i) {
      if (++choice[i] < pf.paths[i].size()) break;
      choice[i] = 0;
    }
  }
  return {found.begin(), found.end()};
}

bool is_separation(const Host& h, const Separation& s) {
  if (set_union(s.left, s.right) != h.vertices()) return false;
  VertexSet sep = s.separator();
  VertexSet l = set_difference(s.left, sep);
  for (Idx v : l) {
    bool bad = false;
    h.for_each_neighbor(v, [&](Idx u) {
      if (!s.left.contains(u)) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

bool is_left_tight(const Host& h, const Separation& s) {
  VertexSet sep = s.separator();
  for (const Region& c : components_of(h, set_difference(s.left, sep)))
    if (c.neighborhood == sep) return true;
  return sep.empty();
}

bool is_left_componental(const Host& h, const Separation& s) {
  return components_of(h, set_difference(s.left, s.separator())).size() == 1;
}

Star star_from_regions(const Host& h, const std::vector<Region>& regions) {
  const auto& t = h.truncation();
  for (std::size_t i = 0; i < regions.size(); ++i)
    for (std::size_t j = i + 1; j < regions.size(); ++j)
      if (touch(t, regions[i], regions[j]))
        throw PreconditionError("star_from_regions: regions " + std::to_string(i) + " and " +
                                std::to_string(j) + " touch");
  Star st;
  st.interior = h.vertices();
  for (const Region& r : regions) {
    Separation s{set_union(r.vertices, r.neighborhood), set_difference(h.vertices(), r.vertices)};
    st.interior = set_difference(st.interior, r.vertices);
    st.separations.push_back(std::move(s));
  }
  return st;
}

bool is_star(const Star& s) {
  for (std::size_t i = 0; i < s.separations.size(); ++i)
    for (std::size_t j = 0; j < s.separations.size(); ++j)
      if (i != j && !is_subset(s.separations[i].left, s.separations[j].right)) return false;
  return true;
}

}  // namespace endtd
