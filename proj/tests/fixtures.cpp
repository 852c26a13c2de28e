#include "fixtures.hpp"

#include <json.hpp>

#include "endtd/io.hpp"

namespace fixtures {

using namespace endtd;

namespace {

constexpr int kGrid = 1;  // same tag as the built-in half grid
constexpr int kPendant = 20;
constexpr int kLadder = 21;
constexpr int kRay = 22;
constexpr int kBox = 23;

std::string pair_label(const Vertex& v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

std::shared_ptr<EndOracle> oracle(int band, std::function<int(int, int)> stab) {
  auto o = std::make_shared<EndOracle>();
  o->band = band;
  o->resolve_margin = band + 2;
  o->stabilization_depth = std::move(stab);
  o->derivation = "test fixture";
  return o;
}

}  // namespace

FamilyPtr pendant_half_grid(int width) {
  auto f = std::make_shared<GraphFamily>();
  f->name = "pendant_half_grid";
  f->params = {{"k", std::to_string(width)}};
  f->root = {kGrid, 1, 1, 0};
  const Vertex p0{kPendant, 0, 0, 0}, p1{kPendant, 1, 0, 0};
  const std::vector<Vertex> attach{{kGrid, 1, 2, 0}, {kGrid, 2, 1, 0}, {kGrid, 2, 2, 0}};
  f->neighbors = [=](const Vertex& v) -> std::optional<std::vector<Vertex>> {
    std::vector<Vertex> out;
    if (v == p0) {
      out = attach;
      out.push_back(p1);
      return out;
    }
    if (v == p1) return std::vector<Vertex>{p0};
    if (v.a > 1) out.push_back({kGrid, v.a - 1, v.b, 0});
    if (v.a < width) out.push_back({kGrid, v.a + 1, v.b, 0});
    if (v.b > 1) out.push_back({kGrid, v.a, v.b - 1, 0});
    out.push_back({kGrid, v.a, v.b + 1, 0});
    if (std::find(attach.begin(), attach.end(), v) != attach.end()) out.push_back(p0);
    return out;
  };
  f->label = [](const Vertex& v) {
    return v.tag == kPendant ? "p" + std::to_string(v.a) : pair_label(v);
  };
  auto o = oracle(2, [width](int, int d) { return d + 2 * width + 3; });
  o->enumerate = [width](int) {
    EndHandle e;
    e.id = "psi";
    e.ray = [](std::size_t n) { return Vertex{kGrid, 1, static_cast<int>(n) + 1, 0}; };
    e.in_tail = [](const Vertex& v) { return v.tag == kGrid; };
    e.degree = width;
    return std::vector<EndHandle>{e};
  };
  f->oracle = o;
  return f;
}

FamilyPtr grid_with_rays() {
  auto f = std::make_shared<GraphFamily>();
  f->name = "grid_with_rays";
  f->root = {kBox, 1, 1, 0};
  f->neighbors = [](const Vertex& v) -> std::optional<std::vector<Vertex>> {
    std::vector<Vertex> out;
    if (v.tag == kBox) {
      if (v.a > 1) out.push_back({kBox, v.a - 1, v.b, 0});
      if (v.a < 6) out.push_back({kBox, v.a + 1, v.b, 0});
      if (v.b > 1) out.push_back({kBox, v.a, v.b - 1, 0});
      if (v.b < 6) out.push_back({kBox, v.a, v.b + 1, 0});
      if (v.a == 6 && v.b == 5) out.push_back({kLadder, 1, 1, 0});
      if (v.a == 6 && v.b == 6) out.push_back({kLadder, 2, 1, 0});
      if (v.a == 1 && v.b == 6) out.push_back({kRay, 1, 0, 0});
    } else if (v.tag == kLadder) {
      out.push_back({kLadder, 3 - v.a, v.b, 0});
      out.push_back(v.b == 1 ? Vertex{kBox, 6, v.a == 1 ? 5 : 6, 0} : Vertex{kLadder, v.a, v.b - 1, 0});
      out.push_back({kLadder, v.a, v.b + 1, 0});
    } else {
      out.push_back(v.a == 1 ? Vertex{kBox, 1, 6, 0} : Vertex{kRay, v.a - 1, 0, 0});
      out.push_back({kRay, v.a + 1, 0, 0});
    }
    return out;
  };
  f->label = [](const Vertex& v) {
    if (v.tag == kBox) return "g" + std::to_string(v.a) + std::to_string(v.b);
    if (v.tag == kLadder) return "L" + std::to_string(v.a) + ":" + std::to_string(v.b);
    return "R:" + std::to_string(v.a);
  };
  auto o = oracle(2, [](int k, int d) { return std::max(d, 10) + k + 4; });
  o->enumerate = [](int) {
    EndHandle ladder;
    ladder.id = "ladder";
    ladder.rank = 0;
    ladder.degree = 2;
    ladder.anchor_depth = 10;
    ladder.ray = [](std::size_t n) {
      int i = static_cast<int>(n);
      if (i <= 5) return Vertex{kBox, i + 1, 1, 0};
      if (i <= 9) return Vertex{kBox, 6, i - 4, 0};
      return Vertex{kLadder, 1, i - 9, 0};
    };
    ladder.in_tail = [](const Vertex& v) { return v.tag == kLadder; };
    EndHandle ray;
    ray.id = "ray";
    ray.rank = 1;
    ray.degree = 1;
    ray.anchor_depth = 6;
    ray.ray = [](std::size_t n) {
      int i = static_cast<int>(n);
      if (i <= 5) return Vertex{kBox, 1, i + 1, 0};
      return Vertex{kRay, i - 5, 0, 0};
    };
    ray.in_tail = [](const Vertex& v) { return v.tag == kRay; };
    return std::vector<EndHandle>{ladder, ray};
  };
  f->oracle = o;
  return f;
}

TreeDecomposition td_from_bags(const Truncation& t, const std::vector<std::vector<std::string>>& bags,
                               const std::vector<int>& parents) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = "tree_decomposition";
  j["family"] = {{"name", t.family().name}};
  j["horizon"] = t.horizon();
  j["levels"] = static_cast<int>(bags.size());
  j["psi"] = {{"kind", "all"}, {"ends", nlohmann::json::array()}};
  j["contracted"] = true;
  j["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < bags.size(); ++i) {
    nlohmann::json n{{"id", i}, {"bag", bags[i]}};
    n["parent"] = parents[i] < 0 ? nlohmann::json() : nlohmann::json(parents[i]);
    j["nodes"].push_back(n);
  }
  return tree_from_json(t, j);
}

std::vector<Corrupted> corrupted_decompositions() {
  std::vector<Corrupted> out;
  {
    // rows r0..r2 and r4, r5 of width 3; p1, p2 join every vertex of r2 to every vertex of r4
    FiniteSpec s;
    auto add = [&](const std::string& n) {
      s.names.push_back(n);
      return static_cast<int>(s.names.size()) - 1;
    };
    std::vector<std::vector<int>> rows;
    for (int r : {0, 1, 2, 4, 5}) {
      std::vector<int> row;
      for (int c = 0; c < 3; ++c) row.push_back(add("r" + std::to_string(r) + std::to_string(c)));
      for (int c = 0; c + 1 < 3; ++c) s.edges.push_back({row[c], row[c + 1]});
      if (!rows.empty() && r != 4)
        for (int c = 0; c < 3; ++c) s.edges.push_back({rows.back()[c], row[c]});
      rows.push_back(row);
    }
    int p1 = add("p1"), p2 = add("p2");
    for (int p : {p1, p2})
      for (int c = 0; c < 3; ++c) {
        s.edges.push_back({rows[2][c], p});
        s.edges.push_back({p, rows[3][c]});
      }
    s.root = rows[0][0];
    auto row = [](int r) {
      std::vector<std::string> v;
      for (int c = 0; c < 3; ++c) v.push_back("r" + std::to_string(r) + std::to_string(c));
      return v;
    };
    auto cat = [](std::vector<std::string> a, const std::vector<std::string>& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };
    out.push_back({"inflated_bag", "linked", finite_family(s, "pinched_ladder"),
                   {cat(row(0), row(1)), cat(row(1), row(2)), cat(cat(row(2), {"p1", "p2"}), row(4)),
                    cat(row(4), row(5))},
                   {-1, 0, 1, 2}});
  }
  {
    FiniteSpec s{{"c", "a", "b"}, {{0, 1}, {0, 2}}, {}, 0};
    out.push_back({"split_upper_part", "componental", finite_family(s, "star"),
                   {{"c"}, {"c", "a", "b"}}, {-1, 0}});
  }
  {
    FiniteSpec s{{"a", "b", "c"}, {{0, 1}, {1, 2}}, {}, 0};
    out.push_back({"loose_adhesion", "tight", finite_family(s, "path"), {{"a", "b"}, {"a", "b", "c"}},
                   {-1, 0}});
  }
  return out;
}

}  // namespace fixtures
