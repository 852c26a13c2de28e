#include "endtd/region_algorithm.hpp"

#include <algorithm>
#include <optional>

#include "endtd/separation.hpp"

namespace endtd {

std::vector<Region> AlgorithmRun::regions() const {
  std::vector<Region> out;
  for (const auto& c : output) out.push_back(c.region);
  return out;
}

bool is_end_linked_region(const Host& h, const Region& r, const EndHandle& e) {
  VertexSet f = frontier_slice(h, e);
  if (f.empty() || !is_subset(f, r.vertices)) return false;
  Host local(h.truncation(), set_union(r.vertices, r.neighborhood));
  return VertexFlow(local, r.neighborhood, f).value() == static_cast<int>(r.order());
}

namespace {

struct Candidate {
  Region region;
  bool uncrossed = false;
};

/// End region cut off by the X-nearest minimum cut, with `fixed` vertices
/// uncuttable. nullopt when the cut has order >= limit.
std::optional<Region> constrained_region(const Host& h, const VertexSet& from, const EndHandle& e,
                                         const std::vector<char>& fixed, std::size_t limit) {
  VertexSet target = end_target(h, e);
  VertexFlow f(h, from, target, &fixed);
  if (static_cast<std::size_t>(f.value()) >= limit) return std::nullopt;
  VertexSet s = f.cut(CutSide::NearSource);
  VertexSet r = reach(h, VertexSet{*target.begin()}, s);
  if (!is_subset(target, r))
    throw HorizonError("frontier slice of " + e.id + " is split by a cut", h.truncation().horizon() + 1);
  return make_region(h, std::move(r));
}

bool nested_with_all(const Truncation& t, const Region& r, const std::vector<Region>& others) {
  for (const auto& o : others)
    if (!nested(t, r, o)) return false;
  return true;
}

void check_input(const Host& h, const VertexSet& x, const std::vector<Region>& input) {
  const auto& t = h.truncation();
  auto ends = ends_in(h);
  for (std::size_t i = 0; i < input.size(); ++i) {
    const Region& d = input[i];
    std::string tag = "input region " + std::to_string(i);
    if (!is_subset(d.vertices, h.vertices())) throw PreconditionError(tag + " leaves the host");
    if (intersects(d.vertices, x)) throw PreconditionError(tag + " meets X");
    if (d.order() >= x.size()) throw PreconditionError(tag + " has order >= |X|");
    for (std::size_t j = i + 1; j < input.size(); ++j)
      if (touch(t, d, input[j]))
        throw PreconditionError(tag + " touches input region " + std::to_string(j));
    bool linked = std::any_of(ends.begin(), ends.end(),
                              [&](const EndHandle& e) { return is_end_linked_region(h, d, e); });
    if (!linked) throw PreconditionError(tag + " is not end-linked");
  }
}

}  // namespace

Region uncross(const Host& h, const Region& c, const std::vector<Region>& others, const EndHandle& eps,
               const VertexSet& anchor) {
  const auto& t = h.truncation();
  if (anchor.empty()) throw PreconditionError("uncross: empty anchor");
  if (intersects(anchor, c.vertices)) throw PreconditionError("uncross: anchor meets the region");
  if (!lives_in(h, eps, c.vertices)) throw PreconditionError("uncross: end does not live in the region");

  std::vector<std::size_t> crossing;
  std::vector<char> fixed(t.size(), 0);
  for (std::size_t i = 0; i < others.size(); ++i) {
    if (lives_in(h, eps, others[i].vertices))
      throw PreconditionError("uncross: end lives in region " + std::to_string(i));
    for (Idx v : others[i].vertices) fixed[v] = 1;
    if (!nested(t, c, others[i])) crossing.push_back(i);
  }
  for (Idx v : anchor)
    if (fixed[v]) throw PreconditionError("uncross: anchor meets a region");
  if (crossing.empty()) return c;

  std::optional<Region> best;
  auto consider = [&](const Region& r) {
    if (!is_end_linked_region(h, r, eps) || !nested_with_all(t, r, others)) return;
    if (intersects(r.vertices, anchor)) return;
    if (!best || r.order() < best->order() ||
        (r.order() == best->order() && r.vertices.size() > best->vertices.size()))
      best = r;
  };

  // Every crossing region either stays whole on the anchor side or is kept
  // uncuttable; try each split.
  const std::size_t m = std::min<std::size_t>(crossing.size(), 10);
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    VertexSet from = anchor;
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (std::size_t{1} << b)) from = set_union(from, others[crossing[b]].vertices);
    auto r = constrained_region(h, from, eps, fixed, t.size() + 1);
    if (!r) continue;
    consider(*r);
    // A cut that fails linkage leaves a strictly smaller linked one behind it.
    VertexSet sep = r->neighborhood;
    VertexSet f = end_target(h, eps);
    VertexSet inner = VertexFlow(h, sep, f).cut(CutSide::NearSink);
    VertexSet rr = reach(h, VertexSet{*f.begin()}, inner);
    if (is_subset(f, rr)) consider(make_region(h, rr));
  }
  if (!best) throw PreconditionError("uncross: no nested end-linked region for " + eps.id);
  return *best;
}

Region uncross(const Host& h, const Region& c, const std::vector<Region>& others, const EndHandle& eps) {
  VertexSet blocked = set_union(c.vertices, c.neighborhood);
  for (const auto& o : others) blocked = set_union(blocked, set_union(o.vertices, o.neighborhood));
  return uncross(h, c, others, eps, set_difference(h.vertices(), blocked));
}

AlgorithmRun run_region_algorithm(const Host& h, const VertexSet& x, const std::vector<Region>& input) {
  const auto& t = h.truncation();
  if (x.empty()) throw PreconditionError("region algorithm: X is empty");
  if (!is_subset(x, h.vertices())) throw PreconditionError("region algorithm: X leaves the host");
  const std::size_t k = x.size();
  require_horizon(t, static_cast<int>(k), t.max_depth(x), "region algorithm");
  check_input(h, x, input);

  AlgorithmRun run;
  run.host = h.vertices();
  run.x = x;
  run.input = input;

  auto ends = ends_in(h);
  std::vector<const EndHandle*> eligible;
  for (const auto& e : ends) {
    bool inside = std::any_of(input.begin(), input.end(),
                              [&](const Region& d) { return lives_in(h, e, d.vertices); });
    if (inside) {
      run.input_ends.push_back(e.id);
      continue;
    }
    if (VertexFlow(h, x, end_target(h, e)).value() >= static_cast<int>(k))
      run.linked_ends.push_back(e.id);
    else
      eligible.push_back(&e);
  }

  std::vector<char> fixed(t.size(), 0);
  for (const auto& d : input)
    for (Idx v : d.vertices) fixed[v] = 1;
  std::vector<Region> placed = input;

  std::vector<std::optional<Candidate>> cache(eligible.size());
  std::vector<char> valid(eligible.size(), 0), done(eligible.size(), 0);
  for (;;) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < eligible.size(); ++i) {
      if (done[i]) continue;
      if (!valid[i]) {
        valid[i] = 1;
        cache[i].reset();
        auto r = constrained_region(h, x, *eligible[i], fixed, k);
        if (r) {
          if (is_end_linked_region(h, *r, *eligible[i])) {
            cache[i] = Candidate{*r, false};
          } else {
            Region u = uncross(h, *r, placed, *eligible[i], x);
            if (u.order() < k) cache[i] = Candidate{u, true};
          }
        }
      }
      if (!cache[i]) continue;
      if (!pick || cache[i]->region.order() < cache[*pick]->region.order()) pick = i;
    }
    if (!pick) break;
    Candidate chosen = *cache[*pick];
    run.output.push_back({chosen.region, eligible[*pick]->id, chosen.uncrossed});
    placed.push_back(chosen.region);
    for (Idx v : chosen.region.vertices) fixed[v] = 1;
    for (std::size_t i = 0; i < eligible.size(); ++i) {
      if (done[i]) continue;
      if (lives_in(h, *eligible[i], chosen.region.vertices)) {
        done[i] = 1;
        continue;
      }
      if (cache[i] && !nested(t, cache[i]->region, chosen.region)) valid[i] = 0;
    }
  }
  return run;
}

ObservationReport audit_observation(const Host& h, const VertexSet& x, const std::vector<Region>& input,
                                    const std::vector<Region>& output) {
  const auto& t = h.truncation();
  ObservationReport rep;
  auto ends = ends_in(h);
  for (const auto& e : ends) {
    bool inside = std::any_of(input.begin(), input.end(),
                              [&](const Region& d) { return lives_in(h, e, d.vertices); });
    if (inside) continue;
    if (VertexFlow(h, x, end_target(h, e)).value() >= static_cast<int>(x.size())) continue;
    ++rep.ends_checked;
    bool covered = std::any_of(output.begin(), output.end(),
                               [&](const Region& c) { return is_end_linked_region(h, c, e); });
    if (!covered) rep.failures.push_back("end " + e.id + " has no end-linked output region");
  }
  for (std::size_t i = 0; i < output.size(); ++i) {
    const Region& c = output[i];
    ++rep.regions_checked;
    std::string tag = "output region " + std::to_string(i);
    if (VertexFlow(h, c.neighborhood, x).value() != static_cast<int>(c.order()))
      rep.failures.push_back(tag + ": neighbourhood not linked to X");
    if (intersects(c.vertices, x)) rep.failures.push_back(tag + " meets X");
    if (c.order() >= x.size()) rep.failures.push_back(tag + " has order >= |X|");
    for (std::size_t j = 0; j < input.size(); ++j)
      if (!nested(t, c, input[j]))
        rep.failures.push_back(tag + " crosses input region " + std::to_string(j));
    for (std::size_t j = i + 1; j < output.size(); ++j) {
      const Region& d = output[j];
      if (!nested(t, c, d)) {
        rep.failures.push_back(tag + " crosses output region " + std::to_string(j));
        continue;
      }
      bool c_in_d = is_subset(c.vertices, d.vertices), d_in_c = is_subset(d.vertices, c.vertices);
      if (c_in_d && d_in_c) rep.failures.push_back(tag + " repeats output region " + std::to_string(j));
      else if (c_in_d && c.order() >= d.order())
        rep.failures.push_back(tag + " inside output region " + std::to_string(j) + " without smaller order");
      else if (d_in_c && d.order() >= c.order())
        rep.failures.push_back("output region " + std::to_string(j) + " inside " + tag +
                               " without smaller order");
    }
  }
  return rep;
}

ObservationReport audit_observation(const Host& h, const AlgorithmRun& run) {
  return audit_observation(h, run.x, run.input, run.regions());
}

}  // namespace endtd
