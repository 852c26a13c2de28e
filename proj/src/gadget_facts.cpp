#include "endtd/gadget_facts.hpp"

#include <algorithm>

#include "endtd/ends.hpp"
#include "endtd/families.hpp"
#include "endtd/separation.hpp"

namespace endtd {

namespace {

const EndHandle& need_end(const std::vector<EndHandle>& ends, const std::string& id, const Truncation& t) {
  for (const auto& e : ends)
    if (e.id == id) return e;
  throw HorizonError("end " + id + " is not resolved at horizon " + std::to_string(t.horizon()),
                     t.horizon() + 1);
}

std::vector<std::vector<std::string>> named(const Truncation& t, const std::vector<VertexSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(t.labels(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GadgetFacts gadget_facts(const Truncation& t) {
  using namespace gadget;
  if (t.family().name != "appendix_gadget") throw ConfigError("gadget facts need the appendix_gadget family");
  const int rung = 2;
  VertexSet base{};
  for (int i = 1; i <= 4; ++i)
    if (auto v = t.index_of(outer(i, 1))) base.insert(*v);
  require_horizon(t, static_cast<int>(base.size()), t.max_depth(base), "gadget facts");
  Host full(t);
  auto ends = ends_in(full);
  const EndHandle& e3 = need_end(ends, "eps3@" + std::to_string(rung), t);
  const EndHandle& e4 = need_end(ends, "eps4@" + std::to_string(rung), t);

  GadgetFacts f;
  VertexSet s1v{t.at(s1(rung))}, s2v{t.at(s2(rung))};
  VertexSet y{t.at(y1(rung)), t.at(y2(rung))};

  auto h3 = all_min_separators(full, base, end_target(full, e3));
  f.h3_separators = named(t, h3);
  f.unique_h3_pair = h3.size() == 1 && h3[0] == set_union(s1v, s2v);

  auto h4 = all_min_separators(full, base, end_target(full, e4));
  f.h4_order = h4.empty() ? 0 : static_cast<int>(h4[0].size());
  f.h4_separators = named(t, h4);
  f.h4_order_three = f.h4_order == 3;
  std::vector<VertexSet> want{set_union(y, s1v), set_union(y, s2v)};
  std::sort(want.begin(), want.end());
  f.h4_exact_pair = h4 == want;
  return f;
}

}  // namespace endtd
