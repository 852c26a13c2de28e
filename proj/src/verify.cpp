#include "endtd/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "endtd/separation.hpp"

namespace endtd {

bool VerificationReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass; });
}

const PropertyResult& VerificationReport::property(const std::string& name) const {
  for (const auto& p : properties)
    if (p.name == name) return p;
  throw std::out_of_range("no property " + name);
}

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + x;
  return "{" + s + "}";
}

PropertyResult check_t1(const Truncation& t, const TreeDecomposition& td, const VertexSet& covered) {
  PropertyResult r{"t1"};
  std::vector<std::vector<int>> where(t.size());
  for (const auto& n : td.nodes)
    for (Idx v : n.bag) where[v].push_back(n.id);
  for (Idx v : covered)
    for (Idx u : t.neighbors(v)) {
      if (u < v || !covered.contains(u)) continue;
      ++r.checked;
      const auto& a = where[v];
      const auto& b = where[u];
      bool shared = std::any_of(a.begin(), a.end(),
                                [&](int n) { return std::find(b.begin(), b.end(), n) != b.end(); });
      if (!shared) {
        r.pass = false;
        r.witnesses.push_back("edge " + t.label(v) + "-" + t.label(u) + " lies in no bag");
      }
    }
  Host full(t);
  VertexSet pend;
  for (const auto& p : td.pending) {
    pend = set_union(pend, p.vertices);
    if (!is_subset(p.neighborhood, td.nodes[p.leaf].bag)) {
      r.pass = false;
      r.witnesses.push_back("pending part at " + t.label(*p.vertices.begin()) +
                            " is not attached to its node's bag");
    }
  }
  if (set_union(pend, covered) != t.all()) {
    r.pass = false;
    r.witnesses.push_back("vertices neither in a bag nor in a pending part");
  }
  for (const auto& c : components_minus(full, covered))
    if (std::none_of(td.pending.begin(), td.pending.end(),
                     [&](const PendingComponent& p) { return p.vertices == c.vertices; })) {
      r.pass = false;
      r.witnesses.push_back("uncovered component at " + t.label(*c.vertices.begin()) + " not recorded");
    }
  return r;
}

PropertyResult check_t2(const Truncation& t, const TreeDecomposition& td, const VertexSet& covered) {
  PropertyResult r{"t2"};
  std::vector<int> tops(t.size(), 0);
  for (const auto& n : td.nodes)
    for (Idx v : n.bag)
      if (n.parent < 0 || !td.nodes[n.parent].bag.contains(v)) ++tops[v];
  for (Idx v : covered) {
    ++r.checked;
    if (tops[v] != 1) {
      r.pass = false;
      r.witnesses.push_back("vertex " + t.label(v) + " spans " + std::to_string(tops[v]) +
                            " disconnected subtrees");
    }
  }
  return r;
}

PropertyResult check_adhesion(const Truncation& t, const TreeDecomposition& td) {
  PropertyResult r{"finite_adhesion"};
  for (std::size_t n = 1; n < td.nodes.size(); ++n) {
    ++r.checked;
    VertexSet a = td.adhesion(static_cast<int>(n));
    auto c = classify_adhesion(t, a);
    if (c == Adhesion::Unresolved) ++r.unresolved;
    if (c == Adhesion::Infinite) {
      r.pass = false;
      r.witnesses.push_back("adhesion above node " + std::to_string(n) + " reaches the frontier band");
    }
  }
  return r;
}

void check_upper(const Truncation& t, const TreeDecomposition& td, const std::vector<VertexSet>& up,
                 PropertyResult& tight, PropertyResult& comp) {
  Host full(t);
  for (std::size_t n = 1; n < td.nodes.size(); ++n) {
    VertexSet a = td.adhesion(static_cast<int>(n));
    auto parts = components_of(full, up[n]);
    ++tight.checked;
    ++comp.checked;
    bool ok = std::any_of(parts.begin(), parts.end(), [&](const Region& c) { return c.neighborhood == a; });
    if (!ok) {
      tight.pass = false;
      std::string w = "edge above node " + std::to_string(n) + ": adhesion " + join(t.labels(a));
      for (const auto& c : parts) w += ", component at " + t.label(*c.vertices.begin()) +
                                       " sees " + join(t.labels(c.neighborhood));
      tight.witnesses.push_back(w);
    }
    if (parts.size() != 1) {
      comp.pass = false;
      std::string w = "edge above node " + std::to_string(n) + ": strict upper part has " +
                      std::to_string(parts.size()) + " components";
      for (const auto& c : parts) w += ", " + join(t.labels(c.vertices));
      comp.witnesses.push_back(w);
    }
  }
}

PropertyResult check_linked(const Truncation& t, const TreeDecomposition& td, const VerifyOptions& opt,
                            std::size_t& total, std::size_t& checked) {
  PropertyResult r{"linked"};
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t b = 1; b < td.nodes.size(); ++b)
    for (int a = td.nodes[b].parent; a > 0; a = td.nodes[a].parent)
      pairs.emplace_back(a, static_cast<int>(b));
  std::sort(pairs.begin(), pairs.end());
  total = pairs.size();
  if (pairs.size() > opt.pair_budget) pairs.resize(opt.pair_budget);
  checked = pairs.size();
  r.checked = checked;

  Host full(t);
  std::vector<VertexSet> adh(td.nodes.size());
  for (std::size_t n = 1; n < td.nodes.size(); ++n) adh[n] = td.adhesion(static_cast<int>(n));
  std::vector<std::string> found(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < pairs.size();) {
      auto [a, b] = pairs[i];
      std::size_t lo = adh[b].size();
      for (int v = b; v != a; v = td.nodes[v].parent) lo = std::min(lo, adh[v].size());
      lo = std::min(lo, adh[a].size());
      VertexFlow f(full, adh[a], adh[b]);
      if (static_cast<std::size_t>(f.value()) < lo)
        found[i] = "edges above nodes " + std::to_string(a) + " and " + std::to_string(b) + ": flow " +
                   std::to_string(f.value()) + " < " + std::to_string(lo) + ", cut " +
                   join(t.labels(f.cut(CutSide::NearSource)));
    }
  };
  unsigned n = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, 8);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& w : found)
    if (!w.empty()) {
      r.pass = false;
      r.witnesses.push_back(w);
    }
  return r;
}

}  // namespace

VerificationReport verify(const Truncation& t, const TreeDecomposition& td, const GDeltaSpec& spec,
                          const VerifyOptions& opt) {
  VerificationReport rep;
  VertexSet covered = td.covered();
  auto up = upper_parts(td);
  rep.properties.push_back(check_t1(t, td, covered));
  rep.properties.push_back(check_t2(t, td, covered));
  rep.properties.push_back(check_adhesion(t, td));
  PropertyResult tight{"tight"}, comp{"componental"};
  check_upper(t, td, up, tight, comp);
  rep.properties.push_back(tight);
  rep.properties.push_back(comp);
  rep.properties.push_back(check_linked(t, td, opt, rep.pairs_total, rep.pairs_checked));

  Host full(t);
  auto ends = ends_in(full);
  auto placements = end_tree_map(t, td, spec);
  PropertyResult disp{"displays_psi"}, doms{"displays_dominators"}, deg{"displays_combined_degrees"},
      shape{"ray_min_separators"};
  int max_adh = 0;
  for (std::size_t n = 1; n < td.nodes.size(); ++n)
    max_adh = std::max<int>(max_adh, static_cast<int>(td.adhesion(static_cast<int>(n)).size()));
  const int last = td.last_level();
  // Ends still sharing a pending part have not branched apart inside the
  // built prefix; their limits cannot be read off yet.
  std::vector<int> part_of(ends.size(), -1);
  std::map<std::pair<int, int>, int> sharing;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (!placements[i].reaches_frontier) continue;
    VertexSet f = frontier_slice(full, ends[i]);
    for (std::size_t k = 0; k < td.pending.size(); ++k)
      if (td.pending[k].leaf == placements[i].path.back() && is_subset(f, td.pending[k].vertices))
        part_of[i] = static_cast<int>(k);
    ++sharing[{placements[i].path.back(), part_of[i]}];
  }

  for (std::size_t i = 0; i < ends.size(); ++i) {
    const EndHandle& e = ends[i];
    const EndPlacement& p = placements[i];
    ++disp.checked;
    if (p.in_psi && !p.reaches_frontier) {
      disp.pass = false;
      disp.witnesses.push_back("end " + e.id + " of the distinguished set stops at node " +
                               std::to_string(p.path.back()));
    }
    if (!p.in_psi && p.xi_index) {
      if (*p.xi_index + max_adh <= last && p.reaches_frontier) {
        disp.pass = false;
        disp.witnesses.push_back("end " + e.id + " outside the distinguished set is not captured by a node");
      } else if (p.reaches_frontier) {
        ++disp.unresolved;
      }
    }

    EndSummary s;
    s.id = e.id;
    s.in_psi = p.in_psi;
    s.path = p.path;
    s.reaches_frontier = p.reaches_frontier;
    s.combined_degree = e.combined_degree();
    for (const Vertex& d : e.dominators) s.dominators.push_back(t.family().label(d));
    for (std::size_t j = 1; j < p.path.size(); ++j) s.adhesion_sizes.push_back(td.adhesion(p.path[j]).size());
    const auto& sz = s.adhesion_sizes;
    if (p.in_psi && p.reaches_frontier && sz.size() >= 2 && sz[sz.size() - 1] == sz[sz.size() - 2]) {
      s.stabilized = true;
      s.stable_size = sz.back();
      s.stable_from = sz.size() - 1;
      while (s.stable_from > 0 && sz[s.stable_from - 1] == s.stable_size) --s.stable_from;
      std::size_t take = (sz.size() + 1) / 2;
      VertexSet lim = td.adhesion(p.path.back());
      for (std::size_t j = p.path.size() - take; j < p.path.size(); ++j)
        lim = set_intersection(lim, td.adhesion(p.path[j]));
      s.limit_set = t.labels(lim);
    }
    const bool shared = p.reaches_frontier && sharing[{p.path.back(), part_of[i]}] > 1;
    if (shared) ++disp.unresolved;
    if (p.in_psi && p.reaches_frontier) {
      ++doms.checked;
      ++deg.checked;
      if (!s.stabilized || shared) {
        ++doms.unresolved;
        ++deg.unresolved;
      } else {
        auto want = s.dominators;
        std::sort(want.begin(), want.end());
        auto got = s.limit_set;
        std::sort(got.begin(), got.end());
        if (got != want) {
          doms.pass = false;
          doms.witnesses.push_back("end " + e.id + ": limit of adhesion sets " + join(got) +
                                   " but dominators " + join(want));
        }
        if (s.combined_degree) {
          if (static_cast<int>(s.stable_size) != *s.combined_degree) {
            deg.pass = false;
            deg.witnesses.push_back("end " + e.id + ": adhesion settles at " + std::to_string(s.stable_size) +
                                    " but combined degree is " + std::to_string(*s.combined_degree));
          }
        } else if (!std::is_sorted(sz.begin(), sz.end())) {
          deg.pass = false;
          deg.witnesses.push_back("end " + e.id + ": infinite degree but adhesion sizes shrink");
        }
      }
    }

    // Each ray edge is eventually followed by a minimum separator to the end.
    // Later adhesion sets all separate, so none may be smaller than the
    // minimum; the pending part's neighbourhood is the next adhesion set.
    if (p.in_psi && p.reaches_frontier) {
      VertexSet f = end_target(full, e);
      std::vector<VertexSet> later;
      for (std::size_t j = 1; j < p.path.size(); ++j) later.push_back(td.adhesion(p.path[j]));
      if (part_of[i] >= 0 && !shared) later.push_back(td.pending[part_of[i]].neighborhood);
      for (std::size_t j = 0; j + 1 < p.path.size(); ++j) {
        const VertexSet& a = later[j];
        int lambda = VertexFlow(full, a, f).value();
        bool found = false;
        for (std::size_t k = j; k < later.size(); ++k) {
          const VertexSet& b = later[k];
          if (static_cast<int>(b.size()) < lambda || !separates(full, b, a, f)) {
            shape.pass = false;
            shape.witnesses.push_back("end " + e.id + ": adhesion " + join(t.labels(b)) +
                                      " does not separate " + join(t.labels(a)) + " from the end");
          }
          if (static_cast<int>(b.size()) == lambda) found = true;
        }
        if (found) ++shape.checked;
        else ++shape.unresolved;
      }
    }
    rep.ends.push_back(std::move(s));
  }

  for (const auto& n : td.nodes) {
    for (const auto& id : boundary_of(full, n.bag, ends)) {
      ++disp.checked;
      for (const auto& e : ends)
        if (e.id == id && spec.in_psi(e)) {
          disp.pass = false;
          disp.witnesses.push_back("bag of node " + std::to_string(n.id) + " has distinguished end " + id +
                                   " in its boundary");
        }
    }
  }
  rep.properties.push_back(disp);
  rep.properties.push_back(doms);
  rep.properties.push_back(deg);
  rep.properties.push_back(shape);
  return rep;
}

CoverageReport check_coverage(const Truncation& t, const TreeDecomposition& td) {
  if (td.contracted) throw PreconditionError("check_coverage needs the uncontracted decomposition");
  CoverageReport rep;
  std::vector<int> entered(t.size(), -1);
  entered[t.at(t.family().root)] = 0;
  for (const auto& s : td.log)
    for (Idx v : td.nodes[s.node].bag)
      if (entered[v] < 0) entered[v] = s.round;
  const int levels = td.last_level();
  for (Idx v = 0; v < static_cast<Idx>(t.size()); ++v) {
    int n = GDeltaSpec::vertex_index(t, v);
    if (n > levels) continue;
    ++rep.checked;
    if (entered[v] >= 0 && entered[v] <= n) continue;
    const BuildStep* step = nullptr;
    for (const auto& s : td.log)
      if (s.round == n && s.component.contains(v)) step = &s;
    if (!step) {
      if (entered[v] < 0 || entered[v] > n) rep.violations.push_back({t.label(v), n, entered[v], 0});
      continue;
    }
    int bound = n + static_cast<int>(step->attach.size()) - 1;
    if (bound > levels && entered[v] < 0) {
      ++rep.beyond_levels;
      continue;
    }
    if (entered[v] < 0 || entered[v] > bound)
      rep.violations.push_back({t.label(v), n, entered[v], step->attach.size()});
  }
  return rep;
}

}  // namespace endtd
