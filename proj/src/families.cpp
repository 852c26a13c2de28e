#include "endtd/families.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

namespace endtd {

namespace {

enum Tag : std::int32_t {
  kFinite = 0,
  kHalfGrid = 1,
  kFullGrid = 2,
  kTree = 3,
  kSpine = 4,
  kTooth = 5,
  kApex = 6,
  kOuter = 7,
  kSpecial = 8,
  kH3 = 9,
  kH4 = 10,
  kRay = 11,
};

std::string pair_label(const Vertex& v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

void grid_neighbors(std::int32_t tag, const Vertex& v, int width, std::vector<Vertex>& out,
                    std::int32_t copy = -1) {
  // width <= 0: unbounded in both directions
  auto mk = [&](int i, int j) {
    return copy < 0 ? Vertex{tag, i, j, 0} : Vertex{tag, copy, i, j};
  };
  int i = copy < 0 ? v.a : v.b;
  int j = copy < 0 ? v.b : v.c;
  if (i > 1) out.push_back(mk(i - 1, j));
  if (width <= 0 || i < width) out.push_back(mk(i + 1, j));
  if (j > 1) out.push_back(mk(i, j - 1));
  out.push_back(mk(i, j + 1));
}

std::shared_ptr<EndOracle> make_oracle(int band, std::function<int(int, int)> stab,
                                       std::string derivation) {
  auto o = std::make_shared<EndOracle>();
  o->band = band;
  o->resolve_margin = band + 2;
  o->stabilization_depth = std::move(stab);
  o->derivation = std::move(derivation);
  return o;
}

}  // namespace

FamilyPtr half_grid(int width) {
  if (width < 1) throw ConfigError("half_grid: width must be positive");
  auto f = std::make_shared<GraphFamily>();
  f->name = "half_grid";
  f->params = {{"k", std::to_string(width)}};
  f->root = {kHalfGrid, 1, 1, 0};
  f->neighbors = [width](const Vertex& v) -> std::optional<std::vector<Vertex>> {
    std::vector<Vertex> out;
    grid_neighbors(kHalfGrid, v, width, out);
    return out;
  };
  f->label = pair_label;
  auto o = make_oracle(
      2, [width](int, int d) { return d + 2 * width + 2; },
      "one end; every diagonal is a tail cut of size k, so degree k and no dominators");
  o->enumerate = [width](int) {
    EndHandle e;
    e.id = "psi";
    e.rank = 0;
    e.ray = [](std::size_t n) { return Vertex{kHalfGrid, 1, static_cast<int>(n) + 1, 0}; };
    e.in_tail = [](const Vertex& v) { return v.tag == kHalfGrid; };
    e.degree = width;
    return std::vector<EndHandle>{e};
  };
  f->oracle = o;
  return f;
}

FamilyPtr full_grid() {
  auto f = std::make_shared<GraphFamily>();
  f->name = "full_grid";
  f->root = {kFullGrid, 1, 1, 0};
  f->neighbors = [](const Vertex& v) -> std::optional<std::vector<Vertex>> {
    std::vector<Vertex> out;
    grid_neighbors(kFullGrid, v, 0, out);
    return out;
  };
  f->label = pair_label;
  auto o = make_oracle(
      2, [](int k, int d) { return 2 * d + k + 4; },
      "one end; diagonals grow without bound, so infinite degree and no dominators");
  o->enumerate = [](int) {
    EndHandle e;
    e.id = "psi";
    e.ray = [](std::size_t n) { return Vertex{kFullGrid, 1, static_cast<int>(n) + 1, 0}; };
    e.in_tail = [](const Vertex& v) { return v.tag == kFullGrid; };
    e.degree = std::nullopt;
    return std::vector<EndHandle>{e};
  };
  f->oracle = o;
  return f;
}

FamilyPtr binary_tree() {
  auto f = std::make_shared<GraphFamily>();
  f->name = "binary_tree";
  f->root = {kTree, 0, 0, 0};
  f->neighbors = [](const Vertex& v) -> std::optional<std::vector<Vertex>> {
    std::vector<Vertex> out;
    if (v.a > 0) out.push_back({kTree, v.a - 1, v.b / 2, 0});
    if (v.a >= 30) throw GraphError("binary_tree: depth beyond index range");
    out.push_back({kTree, v.a + 1, 2 * v.b, 0});
    out.push_back({kTree, v.a + 1, 2 * v.b + 1, 0});
    return out;
  };
  f->label = [](const Vertex& v) {
    std::string s = "r";
    for (int i = v.a - 1; i >= 0; --i) s += ((v.b >> i) & 1) ? 'R' : 'L';
    return s;
  };
  auto o = make_oracle(1, [](int, int d) { return d + 2; },
                       "ends are infinite root paths; sample of four periodic ones, degree 1");
  o->sampled = true;
  o->enumerate = [](int) {
    std::vector<EndHandle> out;
    const std::vector<std::pair<std::string, std::string>> pats = {
        {"L", "L^inf"}, {"R", "R^inf"}, {"LR", "(LR)^inf"}, {"RL", "(RL)^inf"}};
    int rank = 0;
    for (auto& [pat, id] : pats) {
      EndHandle e;
      e.id = id;
      e.rank = rank++;
      auto at = [pat](std::size_t n) {
        std::int32_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) idx = 2 * idx + (pat[i % pat.size()] == 'R');
        return Vertex{kTree, static_cast<int>(n), idx, 0};
      };
      e.ray = at;
      e.in_tail = [at](const Vertex& v) { return v.tag == kTree && v == at(v.a); };
      e.degree = 1;
      out.push_back(e);
    }
    return out;
  };
  f->oracle = o;
  return f;
}

namespace {

std::shared_ptr<GraphFamily> comb_base(bool apex) {
  auto f = std::make_shared<GraphFamily>();
  f->name = apex ? "comb_apex" : "comb";
  f->root = {kSpine, 0, 0, 0};
  f->neighbors = [apex](const Vertex& v) -> std::optional<std::vector<Vertex>> {
    std::vector<Vertex> out;
    if (v.tag == kApex) return std::nullopt;
    if (v.tag == kSpine) {
      if (v.a > 0) out.push_back({kSpine, v.a - 1, 0, 0});
      out.push_back({kSpine, v.a + 1, 0, 0});
      out.push_back({kTooth, v.a, 1, 0});
      if (apex) out.push_back({kApex, 0, 0, 0});
    } else {
      out.push_back(v.b == 1 ? Vertex{kSpine, v.a, 0, 0} : Vertex{kTooth, v.a, v.b - 1, 0});
      out.push_back({kTooth, v.a, v.b + 1, 0});
    }
    return out;
  };
  f->label = [](const Vertex& v) {
    if (v.tag == kApex) return std::string("apex");
    if (v.tag == kSpine) return "s" + std::to_string(v.a);
    return "t" + std::to_string(v.a) + "_" + std::to_string(v.b);
  };
  auto o = make_oracle(1, [](int, int d) { return d + 2; },
                       apex ? "spine end dominated by the apex; tooth ends of degree 1"
                            : "spine end and one end per tooth, all of degree 1");
  o->enumerate = [apex](int horizon) {
    std::vector<EndHandle> out;
    EndHandle sp;
    sp.id = "spine";
    sp.ray = [](std::size_t n) { return Vertex{kSpine, static_cast<int>(n), 0, 0}; };
    sp.in_tail = [](const Vertex& v) { return v.tag == kSpine; };
    sp.degree = 1;
    if (apex) sp.dominators = {Vertex{kApex, 0, 0, 0}};
    out.push_back(sp);
    for (int i = 0; i + 1 <= horizon; ++i) {
      EndHandle e;
      e.id = "tooth@" + std::to_string(i);
      e.rank = i + 1;
      e.anchor_depth = i + 1;
      e.ray = [i](std::size_t n) {
        int m = static_cast<int>(n);
        return m <= i ? Vertex{kSpine, m, 0, 0} : Vertex{kTooth, i, m - i, 0};
      };
      e.in_tail = [i](const Vertex& v) { return v.tag == kTooth && v.a == i; };
      e.degree = 1;
      out.push_back(e);
    }
    return out;
  };
  f->oracle = o;
  return f;
}

}  // namespace

FamilyPtr comb() { return comb_base(false); }
FamilyPtr comb_apex() { return comb_base(true); }

namespace gadget {
Vertex outer(int i, int j) { return {kOuter, i, j, 0}; }
Vertex y1(int j) { return {kSpecial, j, 0, 0}; }
Vertex y2(int j) { return {kSpecial, j, 1, 0}; }
Vertex s2(int j) { return {kSpecial, j, 2, 0}; }
Vertex s1(int j) { return outer(4, j); }
Vertex h3(int j, int i, int m) { return {kH3, j, i, m}; }
Vertex h4(int j, int i, int m) { return {kH4, j, i, m}; }
}  // namespace gadget

FamilyPtr appendix_gadget(GadgetMutation mut, int mutated_rung) {
  using namespace gadget;
  auto f = std::make_shared<GraphFamily>();
  f->name = "appendix_gadget";
  if (mut == GadgetMutation::DropX3S1) f->params["mutation"] = "drop-x3-s1";
  if (mut == GadgetMutation::DropS2H3) f->params["mutation"] = "drop-s2-h3";
  f->root = outer(1, 1);
  f->neighbors = [mut, mutated_rung](const Vertex& v) -> std::optional<std::vector<Vertex>> {
    std::vector<Vertex> out;
    auto dropped = [&](GadgetMutation m, int j) { return mut == m && j == mutated_rung; };
    switch (v.tag) {
      case kOuter: {
        grid_neighbors(kOuter, v, 4, out);
        int i = v.a, j = v.b;
        if (i <= 3) {
          out.push_back(y1(j));
          out.push_back(y2(j));
        }
        if (i == 4)
          for (int c = 1; c <= 3; ++c) out.push_back(h3(j, c, 1));
        if (dropped(GadgetMutation::DropX3S1, j) && (i == 3 || i == 4))
          std::erase(out, outer(i == 3 ? 4 : 3, j));
        break;
      }
      case kSpecial: {
        int j = v.a;
        for (int c = 1; c <= 4; ++c) out.push_back(h4(j, c, 1));
        if (v.b <= 1)
          for (int c = 1; c <= 3; ++c) out.push_back(outer(c, j));
        else if (!dropped(GadgetMutation::DropS2H3, j))
          for (int c = 1; c <= 3; ++c) out.push_back(h3(j, c, 1));
        break;
      }
      case kH3:
      case kH4: {
        int j = v.a;
        grid_neighbors(v.tag, v, v.tag == kH3 ? 3 : 4, out, j);
        if (v.c == 1) {
          if (v.tag == kH3) {
            out.push_back(s1(j));
            if (!dropped(GadgetMutation::DropS2H3, j)) out.push_back(s2(j));
          } else {
            out.push_back(y1(j));
            out.push_back(y2(j));
            out.push_back(s2(j));
          }
        }
        break;
      }
      default:
        throw ConfigError("appendix_gadget: foreign vertex");
    }
    return out;
  };
  f->label = [](const Vertex& v) {
    auto rc = [&](const Vertex& w) {
      return "@" + std::to_string(w.a) + "(" + std::to_string(w.b) + "," + std::to_string(w.c) + ")";
    };
    switch (v.tag) {
      case kOuter: return pair_label(v);
      case kSpecial: {
        static const char* names[] = {"y1@", "y2@", "s2@"};
        return names[v.b] + std::to_string(v.a);
      }
      case kH3: return "h3" + rc(v);
      default: return "h4" + rc(v);
    }
  };
  auto o = make_oracle(
      2, [](int k, int d) { return d + k + 4; },
      "outer end of degree 4; per rung j an end of degree 3 in the H3 copy and one of "
      "degree 4 in the H4 copy; no dominators");
  o->enumerate = [](int horizon) {
    std::vector<EndHandle> out;
    EndHandle psi;
    psi.id = "psi";
    psi.ray = [](std::size_t n) { return outer(1, static_cast<int>(n) + 1); };
    psi.in_tail = [](const Vertex& v) { return v.tag == kOuter; };
    psi.degree = 4;
    out.push_back(psi);
    for (int j = 1; j + 1 <= horizon; ++j) {
      EndHandle e4;
      e4.id = "eps4@" + std::to_string(j);
      e4.rank = 2 * j;
      e4.anchor_depth = j + 1;
      e4.degree = 4;
      e4.ray = [j](std::size_t n) {
        int m = static_cast<int>(n);
        if (m < j) return outer(1, m + 1);
        if (m == j) return y1(j);
        return h4(j, 1, m - j);
      };
      e4.in_tail = [j](const Vertex& v) { return v.tag == kH4 && v.a == j; };
      if (j + 3 <= horizon) {
        EndHandle e3;
        e3.id = "eps3@" + std::to_string(j);
        e3.rank = 2 * j - 1;
        e3.anchor_depth = j + 3;
        e3.degree = 3;
        e3.ray = [j](std::size_t n) {
          int m = static_cast<int>(n);
          if (m < j) return outer(1, m + 1);
          if (m <= j + 2) return outer(m - j + 2, j);
          return h3(j, 1, m - j - 2);
        };
        e3.in_tail = [j](const Vertex& v) { return v.tag == kH3 && v.a == j; };
        out.push_back(e3);
      }
      out.push_back(e4);
    }
    return out;
  };
  f->oracle = o;
  return f;
}

FamilyPtr finite_family(const FiniteSpec& spec, const std::string& name) {
  const int n = static_cast<int>(spec.names.size());
  if (n == 0) throw ConfigError("finite graph has no vertices");
  if (spec.root < 0 || spec.root >= n) throw ConfigError("finite graph: root out of range");
  auto adj = std::make_shared<std::vector<std::vector<int>>>(n);
  for (auto [u, v] : spec.edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ConfigError("finite graph: bad edge");
    (*adj)[u].push_back(v);
    (*adj)[v].push_back(u);
  }
  auto rays = std::make_shared<std::vector<int>>(spec.ray_anchors);
  for (int a : *rays)
    if (a < 0 || a >= n) throw ConfigError("finite graph: ray anchor out of range");

  std::vector<int> dist(n, -1), parent(n, -1);
  std::deque<int> q{spec.root};
  dist[spec.root] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    auto nb = (*adj)[v];
    std::sort(nb.begin(), nb.end());
    for (int u : nb)
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        parent[u] = v;
        q.push_back(u);
      }
  }
  if (std::count(dist.begin(), dist.end(), -1) > 0) throw ConfigError("finite graph is not connected");
  const int core_depth = *std::max_element(dist.begin(), dist.end());

  auto names = std::make_shared<std::vector<std::string>>(spec.names);
  auto f = std::make_shared<GraphFamily>();
  f->name = name;
  f->params = {{"vertices", std::to_string(n)}, {"rays", std::to_string(rays->size())}};
  f->root = {kFinite, spec.root, 0, 0};
  f->neighbors = [adj, rays](const Vertex& v) -> std::optional<std::vector<Vertex>> {
    std::vector<Vertex> out;
    if (v.tag == kFinite) {
      for (int u : (*adj)[v.a]) out.push_back({kFinite, u, 0, 0});
      for (int r = 0; r < static_cast<int>(rays->size()); ++r)
        if ((*rays)[r] == v.a) out.push_back({kRay, r, 1, 0});
    } else {
      out.push_back(v.b == 1 ? Vertex{kFinite, (*rays)[v.a], 0, 0} : Vertex{kRay, v.a, v.b - 1, 0});
      out.push_back({kRay, v.a, v.b + 1, 0});
    }
    return out;
  };
  f->label = [names](const Vertex& v) {
    if (v.tag == kFinite) return (*names)[v.a];
    return "ray" + std::to_string(v.a) + ":" + std::to_string(v.b);
  };
  auto o = make_oracle(
      1, [core_depth](int, int d) { return std::max(core_depth + 1, d) + 1; },
      "one end of degree 1 per planted ray; the core is finite");
  std::vector<std::vector<Vertex>> approach;
  for (int a : *rays) {
    std::vector<Vertex> path;
    for (int v = a; v >= 0; v = parent[v]) path.push_back({kFinite, v, 0, 0});
    std::reverse(path.begin(), path.end());
    approach.push_back(std::move(path));
  }
  o->enumerate = [approach](int horizon) {
    std::vector<EndHandle> out;
    for (int r = 0; r < static_cast<int>(approach.size()); ++r) {
      const auto& path = approach[r];
      int anchor = static_cast<int>(path.size());
      if (anchor > horizon) continue;
      EndHandle e;
      e.id = "ray" + std::to_string(r);
      e.rank = r;
      e.anchor_depth = anchor;
      e.degree = 1;
      e.ray = [path, r](std::size_t n) {
        if (n < path.size()) return path[n];
        return Vertex{kRay, r, static_cast<int>(n - path.size()) + 1, 0};
      };
      e.in_tail = [r](const Vertex& v) { return v.tag == kRay && v.a == r; };
      out.push_back(e);
    }
    return out;
  };
  f->oracle = o;
  return f;
}

FiniteSpec parse_finite_spec(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("finite graph JSON: ") + e.what());
  }
  FiniteSpec s;
  std::map<std::string, int> idx;
  try {
    for (auto& v : j.at("vertices")) {
      std::string name = v.is_string() ? v.get<std::string>() : v.dump();
      if (idx.count(name)) throw ConfigError("finite graph: duplicate vertex " + name);
      idx[name] = static_cast<int>(s.names.size());
      s.names.push_back(name);
    }
    auto id = [&](const json& v) {
      std::string name = v.is_string() ? v.get<std::string>() : v.dump();
      auto it = idx.find(name);
      if (it == idx.end()) throw ConfigError("finite graph: unknown vertex " + name);
      return it->second;
    };
    for (auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ConfigError("finite graph: edge must be a pair");
      s.edges.emplace_back(id(e[0]), id(e[1]));
    }
    if (j.contains("rays"))
      for (auto& r : j["rays"]) s.ray_anchors.push_back(id(r));
    if (j.contains("root")) s.root = id(j["root"]);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("finite graph JSON: ") + e.what());
  }
  return s;
}

FiniteSpec read_finite_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_finite_spec(ss.str());
}

FiniteSpec random_planted(std::uint64_t seed, int core, int rays, double extra_edge_p) {
  std::mt19937_64 rng(seed);
  FiniteSpec s;
  for (int i = 0; i < core; ++i) s.names.push_back("v" + std::to_string(i));
  for (int i = 1; i < core; ++i)
    s.edges.emplace_back(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
  std::bernoulli_distribution extra(extra_edge_p);
  for (int i = 0; i < core; ++i)
    for (int j = i + 1; j < core; ++j)
      if (extra(rng) &&
          std::find(s.edges.begin(), s.edges.end(), std::pair{i, j}) == s.edges.end() &&
          std::find(s.edges.begin(), s.edges.end(), std::pair{j, i}) == s.edges.end())
        s.edges.emplace_back(i, j);
  std::uniform_int_distribution<int> pick(0, core - 1);
  for (int r = 0; r < rays; ++r) s.ray_anchors.push_back(pick(rng));
  return s;
}

std::vector<FamilyInfo> list_families() {
  return {
      {"half_grid", "k", "[k] x N grid, one end of degree k"},
      {"full_grid", "", "N x N grid, one end of infinite degree"},
      {"binary_tree", "", "rooted binary tree, sampled oracle of four periodic ends"},
      {"comb", "", "spine ray with a tooth ray at every spine vertex"},
      {"comb_apex", "", "comb plus an apex dominating the spine end (not expandable)"},
      {"appendix_gadget", "mutation", "[4] x N grid with a separator gadget on every rung"},
      {"finite", "input", "finite graph from JSON, optionally with planted rays"},
  };
}

FamilyPtr make_family(const std::string& name, const std::map<std::string, std::string>& params) {
  auto get = [&](const std::string& key) -> std::string {
    auto it = params.find(key);
    return it == params.end() ? std::string() : it->second;
  };
  if (name == "half_grid") {
    std::string k = get("k");
    try {
      return half_grid(k.empty() ? 4 : std::stoi(k));
    } catch (const std::logic_error&) {
      throw ConfigError("half_grid: bad width '" + k + "'");
    }
  }
  if (name == "full_grid") return full_grid();
  if (name == "binary_tree") return binary_tree();
  if (name == "comb") return comb();
  if (name == "comb_apex") return comb_apex();
  if (name == "appendix_gadget") {
    std::string m = get("mutation");
    if (m.empty()) return appendix_gadget();
    if (m == "drop-x3-s1") return appendix_gadget(GadgetMutation::DropX3S1);
    if (m == "drop-s2-h3") return appendix_gadget(GadgetMutation::DropS2H3);
    throw ConfigError("appendix_gadget: unknown mutation '" + m + "'");
  }
  if (name == "finite") {
    std::string in = get("input");
    if (in.empty()) throw ConfigError("finite family needs --input");
    return finite_family(read_finite_spec(in));
  }
  throw ConfigError("unknown family '" + name + "'");
}

}  // namespace endtd
