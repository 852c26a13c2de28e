#include <doctest.h>

#include "endtd/ends.hpp"
#include "endtd/families.hpp"
#include "oracles.hpp"

using namespace endtd;

namespace {

std::vector<int> ints(const VertexSet& s) { return {s.begin(), s.end()}; }

EndHandle end_named(const std::vector<EndHandle>& ends, const std::string& id) {
  for (auto& e : ends)
    if (e.id == id) return e;
  FAIL("no end " << id);
  throw 0;
}

VertexSet rung(const Truncation& t, int j) {
  VertexSet s;
  for (int i = 1; i <= 4; ++i) s.insert(t.at(Vertex{1, i, j, 0}));
  return s;
}

VertexSet q_rung(const Truncation& t, int j) {
  return {t.at(gadget::outer(1, j)), t.at(gadget::outer(2, j)), t.at(gadget::outer(3, j)),
          t.at(gadget::s1(j))};
}

std::vector<int> pool_to_depth(const Truncation& t, int d) {
  std::vector<int> p;
  for (Idx v = 0; v < static_cast<Idx>(t.size()); ++v)
    if (t.depth(v) <= d) p.push_back(v);
  return p;
}

}  // namespace

TEST_CASE("end lookup and resolution") {
  auto t = Truncation::expand(appendix_gadget(), 14);
  auto ends = oracle_of(t).resolved(14);
  for (auto& e : ends) {
    CHECK(e.anchor_depth + oracle_of(t).resolve_margin <= 14);
    // the ray is a geodesic from the root
    for (int i = 0; i <= 14; ++i) CHECK(t.depth(t.at(e.ray(i))) == i);
  }
  Host full(t);
  CHECK(ends_in(full).size() == ends.size());
  CHECK_THROWS_AS(require_horizon(t, 4, 20, "test"), HorizonError);
}

TEST_CASE("component of an end") {
  auto t = Truncation::expand(half_grid(4), 16);
  Host h(t);
  const auto psi = oracle_of(t).resolved(16).front();
  CHECK(component_of_end(h, {}, psi).vertices == t.all());
  auto c = component_of_end(h, rung(t, 3), psi);
  for (Idx v = 0; v < static_cast<Idx>(t.size()); ++v) CHECK(c.vertices.contains(v) == (t.vertex(v).b >= 4));
  CHECK(c.neighborhood == rung(t, 3));
  CHECK(lives_in(h, psi, c.vertices));
}

TEST_CASE("gadget: C({s1,s2}, eps3) is the H3 copy") {
  auto t = Truncation::expand(appendix_gadget(), 14);
  Host h(t);
  const auto& e3 = end_named(oracle_of(t).resolved(14), "eps3@2");
  VertexSet s{t.at(gadget::s1(2)), t.at(gadget::s2(2))};
  auto c = component_of_end(h, s, e3);
  for (Idx v = 0; v < static_cast<Idx>(t.size()); ++v) {
    const Vertex& x = t.vertex(v);
    CHECK(c.vertices.contains(v) == (x.tag == gadget::h3(2, 1, 1).tag && x.a == 2));
  }
}

TEST_CASE("minimum end separators against brute force") {
  SUBCASE("half grid rung") {
    auto t = Truncation::expand(half_grid(4), 16);
    Host h(t);
    const auto psi = oracle_of(t).resolved(16).front();
    auto sep = min_end_separator(h, rung(t, 2), psi);
    CHECK(sep.separator == rung(t, 2));
    CHECK(sep.witness.paths.size() == 4);
    auto g = oracle::from_truncation(t);
    auto brute = oracle::min_separator(g, ints(rung(t, 2)), ints(frontier_slice(h, psi)), 4,
                                       pool_to_depth(t, 6));
    REQUIRE(brute);
    CHECK(brute->size() == 4);
    CHECK(is_linked_to_end(h, rung(t, 3), psi));
    CHECK(is_linked_to_end(h, {t.at(psi.ray(3))}, psi));
  }
  SUBCASE("gadget eps3 and eps4") {
    auto t = Truncation::expand(appendix_gadget(), 14);
    Host h(t);
    auto ends = oracle_of(t).resolved(14);
    const auto& e3 = end_named(ends, "eps3@2");
    const auto& e4 = end_named(ends, "eps4@2");
    VertexSet x = q_rung(t, 2);
    auto s3 = min_end_separator(h, x, e3);
    CHECK(s3.separator == VertexSet{t.at(gadget::s1(2)), t.at(gadget::s2(2))});
    CHECK_FALSE(is_linked_to_end(h, x, e3));
    CHECK(min_end_separator(h, x, e4).separator.size() == 3);
    auto g = oracle::from_truncation(t);
    auto pool = pool_to_depth(t, 7);
    auto two = oracle::separators_of_size(g, ints(x), ints(frontier_slice(h, e3)), 2, pool);
    CHECK(two == std::vector<std::vector<int>>{ints(s3.separator)});
    CHECK(oracle::separators_of_size(g, ints(x), ints(frontier_slice(h, e3)), 1, pool).empty());
  }
  SUBCASE("comb tooth from inside its own ray") {
    auto t = Truncation::expand(comb(), 12);
    Host h(t);
    auto comb_ends = oracle_of(t).resolved(12);
    const auto& tooth = end_named(comb_ends, "tooth@2");
    VertexSet x = t.from_labels({"t2_1", "t2_2"});
    auto sep = min_end_separator(h, x, tooth);
    CHECK(sep.separator.size() == 1);
    CHECK(sep.separator == t.from_labels({"t2_2"}));
  }
}

TEST_CASE("boundary of vertex sets") {
  auto t = Truncation::expand(half_grid(4), 16);
  Host h(t);
  auto ends = oracle_of(t).resolved(16);
  CHECK(boundary_of(h, t.all(), ends) == std::vector<std::string>{"psi"});
  CHECK(boundary_of(h, t.ball(5), ends).empty());
  VertexSet column;
  for (Idx v = 0; v < static_cast<Idx>(t.size()); ++v)
    if (t.vertex(v).a == 1) column.insert(v);
  CHECK(boundary_of(h, column, ends) == std::vector<std::string>{"psi"});
  auto deep = deep_region(h, ends.front());
  for (Idx v : deep) CHECK(t.depth(v) >= 16 - oracle_of(t).band);
  CHECK(ray_tail(h, ends.front()) == column);
}

TEST_CASE("G-delta presentations") {
  auto hg = half_grid(4);
  auto s = undominated_gdelta(*hg);
  auto psi = hg->oracle->enumerate(10).front();
  CHECK(s.in_psi(psi));
  CHECK_FALSE(s.xi_index(psi).has_value());

  auto ca = comb_apex();
  auto sa = undominated_gdelta(*ca);
  for (auto& e : ca->oracle->enumerate(6)) {
    if (e.id == "spine") {
      CHECK_FALSE(sa.in_psi(e));
      CHECK(sa.xi_index(e) == 1);
      CHECK(sa.end_in(e, 1));
    } else {
      CHECK(sa.in_psi(e));
    }
  }

  auto fin = finite_family({{"a", "b"}, {{0, 1}}, {}, 0});
  CHECK(fin->oracle->enumerate(10).empty());

  auto listed = listed_gdelta({"eps3@2"});
  for (auto& e : appendix_gadget()->oracle->enumerate(10)) {
    CHECK(listed.in_psi(e) == (e.id == "eps3@2"));
    if (e.id != "eps3@2") CHECK(listed.xi_index(e) == e.rank + 1);
  }
}

TEST_CASE("oracle audits") {
  for (auto f : {half_grid(4), full_grid(), binary_tree(), comb(), appendix_gadget()}) {
    auto t = Truncation::expand(f, 12);
    auto a = audit_oracle(t);
    INFO(f->name);
    CHECK(a.pass);
    CHECK_FALSE(a.ends.empty());
  }
}
