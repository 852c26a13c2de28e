#include <doctest.h>

#include <random>

#include "endtd/families.hpp"
#include "endtd/separation.hpp"
#include "oracles.hpp"

using namespace endtd;

namespace {

std::vector<int> ints(const VertexSet& s) { return {s.begin(), s.end()}; }

VertexSet rung(const Truncation& t, int j) {
  VertexSet s;
  for (int i = 1; i <= 4; ++i) s.insert(t.at(Vertex{1, i, j, 0}));
  return s;
}

VertexSet deep_rows(const Truncation& t, int tag, int j, int width, int row) {
  VertexSet s;
  for (int i = 1; i <= width; ++i) s.insert(t.at(Vertex{tag, j, i, row}));
  return s;
}

VertexSet q_rung(const Truncation& t, int j) {
  return {t.at(gadget::outer(1, j)), t.at(gadget::outer(2, j)), t.at(gadget::outer(3, j)),
          t.at(gadget::s1(j))};
}

}  // namespace

TEST_CASE("trivial path when source equals sink") {
  auto t = Truncation::expand(half_grid(2), 3);
  Host h(t);
  auto p = max_disjoint_paths(h, {0}, {0});
  REQUIRE(p.paths.size() == 1);
  CHECK(p.paths[0].size() == 1);
}

TEST_CASE("Menger on random small graphs against subset enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 8;
    auto g = oracle::random_graph(rng, n, 0.35);
    endtd::FiniteSpec s;
    for (int i = 0; i < n; ++i) s.names.push_back("v" + std::to_string(i));
    // join into one component by a path so the family is valid
    for (int i = 0; i + 1 < n; ++i)
      if (rng() % 2) s.edges.push_back({i, i + 1});
    for (int v = 0; v < n; ++v)
      for (int u : g.adj[v])
        if (u > v) s.edges.push_back({v, u});
    FamilyPtr fam;
    try {
      fam = finite_family(s);
    } catch (const ConfigError&) {
      continue;  // disconnected sample
    }
    auto t = Truncation::expand(fam, 50);
    auto og = oracle::from_truncation(t);
    Host h(t);
    std::vector<Idx> xs, ys;
    for (Idx v = 0; v < n; ++v) {
      auto r = rng() % 4;
      if (r == 0) xs.push_back(v);
      if (r == 1) ys.push_back(v);
    }
    if (xs.empty() || ys.empty()) continue;
    VertexSet x(xs), y(ys);
    auto paths = max_disjoint_paths(h, x, y);
    auto brute = oracle::min_separator(og, ints(x), ints(y), 4);
    REQUIRE(brute.has_value());
    CHECK(paths.paths.size() == brute->size());
    auto sep = min_separator(h, x, y);
    CHECK(sep.size() == brute->size());
    CHECK(separates(h, sep, x, y));
    CHECK(is_linked_set(h, x, y) == oracle::linked(og, ints(x), ints(y)));
  }
}

TEST_CASE("already separated sets need no separator") {
  FiniteSpec s{{"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}}, {}, 0};
  auto t = Truncation::expand(finite_family(s), 10);
  Host h(t, t.from_labels({"a", "b", "d"}));
  CHECK(min_separator(h, t.from_labels({"a"}), t.from_labels({"d"})).empty());
}

TEST_CASE("gadget: rung to deep H3 row has the unique cut {s1, s2}") {
  auto t = Truncation::expand(appendix_gadget(), 14);
  Host h(t);
  VertexSet x = q_rung(t, 2), y = deep_rows(t, 9, 2, 3, 4);
  VertexSet want{t.at(gadget::s1(2)), t.at(gadget::s2(2))};
  CHECK(min_separator(h, x, y, CutSide::NearSource) == want);
  CHECK(min_separator(h, x, y, CutSide::NearSink) == want);
  CHECK(all_min_separators(h, x, y) == std::vector<VertexSet>{want});
  CHECK_FALSE(is_linked_set(h, x, y));
}

TEST_CASE("gadget: rung to deep H4 row has flow three through y1, y2, s2") {
  auto t = Truncation::expand(appendix_gadget(), 14);
  Host h(t);
  VertexSet x = q_rung(t, 2), y = deep_rows(t, 10, 2, 4, 4);
  auto p = max_disjoint_paths(h, x, y);
  CHECK(p.paths.size() == 3);
  CHECK(min_separator(h, x, y, CutSide::NearSink) ==
        VertexSet{t.at(gadget::y1(2)), t.at(gadget::y2(2)), t.at(gadget::s2(2))});
}

TEST_CASE("half grid: every rung in between is a minimum separator") {
  auto t = Truncation::expand(half_grid(4), 12);
  Host h(t);
  VertexSet x = rung(t, 1), y = rung(t, 6);
  CHECK(min_separator(h, x, y, CutSide::NearSource) == x);
  CHECK(min_separator(h, x, y, CutSide::NearSink) == y);
  CHECK(is_linked_set(h, x, y));
  auto all = all_min_separators(h, x, y);
  for (int j = 1; j <= 6; ++j) CHECK(std::find(all.begin(), all.end(), rung(t, j)) != all.end());
  // brute force over 4-subsets of the first seven rungs
  std::vector<int> pool;
  for (Idx v = 0; v < static_cast<Idx>(t.size()); ++v)
    if (t.vertex(v).b <= 7) pool.push_back(v);
  auto brute = oracle::separators_of_size(oracle::from_truncation(t), ints(x), ints(y), 4, pool);
  CHECK(brute.size() == all.size());
  for (auto& s : all) CHECK(std::find(brute.begin(), brute.end(), ints(s)) != brute.end());
}

TEST_CASE("subset is trivially linked") {
  auto t = Truncation::expand(half_grid(3), 6);
  Host h(t);
  VertexSet x = t.from_labels({"(1,2)", "(2,2)"});
  CHECK(is_linked_set(h, x, set_union(x, t.from_labels({"(3,5)"}))));
}

TEST_CASE("separations, tightness, componentality") {
  FiniteSpec s{{"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {1, 3}}, {}, 0};
  auto t = Truncation::expand(finite_family(s), 10);
  Host h(t);
  Separation sep{t.from_labels({"b", "c", "d"}), t.from_labels({"a", "b"})};
  CHECK(is_separation(h, sep));
  CHECK(sep.order() == 1);
  CHECK(is_left_tight(h, sep));
  CHECK_FALSE(is_left_componental(h, sep));
  Separation bad{t.from_labels({"c", "d"}), t.from_labels({"a", "b"})};
  CHECK_FALSE(is_separation(h, bad));
  Separation loose{t.from_labels({"a", "b", "c"}), t.from_labels({"a", "b", "d"})};
  CHECK(is_separation(h, loose));
  CHECK_FALSE(is_left_tight(h, loose));
}

TEST_CASE("stars from regions") {
  auto t = Truncation::expand(half_grid(3), 6);
  Host h(t);
  auto empty = star_from_regions(h, {});
  CHECK(empty.separations.empty());
  CHECK(empty.interior == t.all());
  auto c = make_region(h, t.from_labels({"(3,1)"}));
  auto one = star_from_regions(h, {c});
  REQUIRE(one.separations.size() == 1);
  CHECK(one.separations[0].separator() == c.neighborhood);
  CHECK(one.interior == set_difference(t.all(), c.vertices));
  auto d = make_region(h, t.from_labels({"(1,5)"}));
  CHECK(is_star(star_from_regions(h, {c, d})));
  auto e = make_region(h, t.from_labels({"(2,1)"}));
  CHECK_THROWS_AS(star_from_regions(h, {c, e}), PreconditionError);
}
