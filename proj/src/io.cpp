#include "endtd/io.hpp"

#include <sstream>

namespace endtd {

using nlohmann::json;

namespace {

json labels(const Truncation& t, const VertexSet& s) { return t.labels(s); }

json region_json(const Truncation& t, const Region& r, bool full) {
  json j{{"order", r.order()}, {"size", r.vertices.size()}, {"neighborhood", labels(t, r.neighborhood)}};
  if (full) j["vertices"] = labels(t, r.vertices);
  return j;
}

json envelope_json(const Truncation& t, const EnvelopeResult& e) {
  return {{"core", labels(t, e.core)},
          {"core_ends", e.core_ends},
          {"target_boundary", e.target},
          {"base", labels(t, e.base)},
          {"envelope", labels(t, e.envelope)},
          {"touched_regions", e.touched},
          {"boundary", e.boundary},
          {"unresolved_components", e.unresolved},
          {"sealing_rounds", e.sealing_rounds}};
}

json run_json(const Truncation& t, const AlgorithmRun& r) {
  json out = json::array();
  for (const auto& c : r.output) {
    json j = region_json(t, c.region, true);
    j["end"] = c.end_id;
    j["uncrossed"] = c.uncrossed;
    out.push_back(std::move(j));
  }
  json in = json::array();
  for (const auto& d : r.input) in.push_back(region_json(t, d, true));
  return {{"x", labels(t, r.x)},
          {"host_size", r.host.size()},
          {"input", in},
          {"output", out},
          {"linked_ends", r.linked_ends},
          {"input_ends", r.input_ends}};
}

}  // namespace

json gdelta_json(const GDeltaSpec& s) {
  json j{{"kind", s.kind}};
  j["ends"] = s.psi_ids;
  return j;
}

json to_json(const Truncation& t, const TreeDecomposition& td, const ExportOptions& opt) {
  json nodes = json::array();
  for (const auto& n : td.nodes)
    nodes.push_back({{"id", n.id},
                     {"parent", n.parent < 0 ? json(nullptr) : json(n.parent)},
                     {"height", n.height},
                     {"bag", labels(t, n.bag)}});
  json edges = json::array();
  for (std::size_t n = 1; n < td.nodes.size(); ++n) {
    json regs = json::array();
    for (const auto& r : td.regions[n]) regs.push_back(region_json(t, r, false));
    edges.push_back({{"child", n},
                     {"parent", td.nodes[n].parent},
                     {"adhesion", labels(t, td.adhesion(static_cast<int>(n)))},
                     {"regions", regs}});
  }
  json pending = json::array();
  for (const auto& p : td.pending)
    pending.push_back({{"leaf", p.leaf},
                       {"size", p.vertices.size()},
                       {"first", t.label(*p.vertices.begin())},
                       {"neighborhood", labels(t, p.neighborhood)}});
  json j{{"schema", 1},
         {"kind", "tree_decomposition"},
         {"family", {{"name", td.family}, {"params", td.params}}},
         {"horizon", td.horizon},
         {"levels", td.levels},
         {"psi", {{"kind", td.psi_kind}, {"ends", td.psi_ids}}},
         {"contracted", td.contracted},
         {"nodes", nodes},
         {"edges", edges},
         {"pending", pending}};
  if (td.contracted) j["merged_into"] = td.merged_into;
  if (opt.log) {
    json log = json::array();
    for (const auto& s : td.log) {
      json chosen = json::array();
      for (const auto& c : s.run.output)
        chosen.push_back({{"end", c.end_id},
                          {"order", c.region.order()},
                          {"neighborhood", labels(t, c.region.neighborhood)},
                          {"uncrossed", c.uncrossed}});
      json e{{"round", s.round},
             {"node", s.node},
             {"parent", s.parent},
             {"component_size", s.component.size()},
             {"attach", labels(t, s.attach)},
             {"inherited", s.inherited},
             {"chosen", chosen},
             {"linked_ends", s.run.linked_ends},
             {"u1", labels(t, s.u1)},
             {"u2", s.u2},
             {"u3", labels(t, s.u3)},
             {"concatenation_failures", s.concatenation_failures}};
      if (opt.envelopes) e["envelope"] = envelope_json(t, s.envelope);
      if (opt.algorithm) e["algorithm"] = run_json(t, s.run);
      log.push_back(std::move(e));
    }
    j["construction_log"] = log;
  }
  return j;
}

json to_json(const Truncation& t, const VerificationReport& r) {
  json props = json::array();
  for (const auto& p : r.properties)
    props.push_back({{"name", p.name},
                     {"pass", p.pass},
                     {"checked", p.checked},
                     {"unresolved", p.unresolved},
                     {"witnesses", p.witnesses}});
  json ends = json::array();
  for (const auto& e : r.ends) {
    json j{{"id", e.id},
           {"in_psi", e.in_psi},
           {"path", e.path},
           {"reaches_frontier", e.reaches_frontier},
           {"adhesion_sizes", e.adhesion_sizes},
           {"stabilized", e.stabilized},
           {"dominators", e.dominators},
           {"combined_degree", e.combined_degree ? json(*e.combined_degree) : json("infinite")}};
    if (e.stabilized) {
      j["liminf_size"] = e.stable_size;
      j["stable_from"] = e.stable_from;
      j["liminf_set"] = {{"vertices", e.limit_set}, {"status", "consistent up to horizon"}};
    }
    ends.push_back(std::move(j));
  }
  (void)t;
  return {{"schema", 1},
          {"kind", "verification_report"},
          {"pass", r.pass()},
          {"properties", props},
          {"pairs", {{"total", r.pairs_total}, {"checked", r.pairs_checked}}},
          {"ends", ends}};
}

json to_json(const OracleAudit& a) {
  json ends = json::array();
  for (const auto& e : a.ends)
    ends.push_back({{"id", e.id},
                    {"declared_degree", e.declared_degree ? json(*e.declared_degree) : json("infinite")},
                    {"checked_degree", e.checked_degree},
                    {"slice_size", e.slice_size},
                    {"declared_dominators", e.declared_dominators},
                    {"tail_connected", e.tail_connected},
                    {"pass", e.pass},
                    {"note", e.note}});
  return {{"schema", 1},
          {"kind", "oracle_audit"},
          {"family", a.family},
          {"horizon", a.horizon},
          {"sampled", a.sampled},
          {"derivation", a.derivation},
          {"pass", a.pass},
          {"ends", ends}};
}

TreeDecomposition tree_from_json(const Truncation& t, const json& j) {
  TreeDecomposition td;
  try {
    if (j.at("schema").get<int>() != 1) throw ConfigError("unsupported schema version");
    if (j.at("kind") != "tree_decomposition") throw ConfigError("not a tree decomposition");
    td.family = j.at("family").at("name").get<std::string>();
    td.horizon = j.at("horizon").get<int>();
    td.levels = j.at("levels").get<int>();
    td.psi_kind = j.at("psi").at("kind").get<std::string>();
    td.psi_ids = j.at("psi").at("ends").get<std::vector<std::string>>();
    td.contracted = j.value("contracted", false);
    for (const auto& n : j.at("nodes")) {
      TreeNode node;
      node.id = n.at("id").get<int>();
      if (node.id != static_cast<int>(td.nodes.size())) throw ConfigError("node ids must be 0..n-1 in order");
      node.parent = n.at("parent").is_null() ? -1 : n.at("parent").get<int>();
      if (node.parent >= node.id || (node.id > 0 && node.parent < 0))
        throw ConfigError("node " + std::to_string(node.id) + " has a bad parent");
      node.bag = t.from_labels(n.at("bag").get<std::vector<std::string>>());
      if (node.parent >= 0) {
        node.height = td.nodes[node.parent].height + 1;
        td.nodes[node.parent].children.push_back(node.id);
      }
      td.nodes.push_back(std::move(node));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("decomposition JSON: ") + e.what());
  }
  if (td.nodes.empty()) throw ConfigError("decomposition JSON has no nodes");
  td.regions.resize(td.nodes.size());
  Host full(t);
  for (const Region& c : components_minus(full, td.covered())) {
    int leaf = -1;
    for (int n = static_cast<int>(td.nodes.size()) - 1; n >= 0 && leaf < 0; --n)
      if (is_subset(c.neighborhood, td.nodes[n].bag)) leaf = n;
    if (leaf < 0) leaf = static_cast<int>(td.nodes.size()) - 1;
    td.pending.push_back({leaf, c.vertices, c.neighborhood});
  }
  return td;
}

std::string to_dot(const Truncation& t, const TreeDecomposition& td) {
  std::ostringstream o;
  o << "digraph decomposition {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& n : td.nodes) {
    o << "  n" << n.id << " [label=\"" << n.id << " | " << n.bag.size() << " vertices";
    if (n.bag.size() <= 8) {
      o << "\\n";
      for (const auto& l : t.labels(n.bag)) o << l << " ";
    }
    o << "\"];\n";
  }
  for (std::size_t n = 1; n < td.nodes.size(); ++n)
    o << "  n" << td.nodes[n].parent << " -> n" << n << " [label=\""
      << td.adhesion(static_cast<int>(n)).size() << "\"];\n";
  for (std::size_t k = 0; k < td.pending.size(); ++k) {
    const auto& p = td.pending[k];
    o << "  p" << k << " [shape=ellipse, style=dashed, label=\"pending " << p.vertices.size() << "\"];\n";
    o << "  n" << p.leaf << " -> p" << k << " [style=dashed, label=\"" << p.neighborhood.size() << "\"];\n";
  }
  o << "}\n";
  return o.str();
}

}  // namespace endtd
