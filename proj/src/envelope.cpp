#include "endtd/envelope.hpp"

#include <algorithm>
#include <set>

#include "endtd/separation.hpp"

namespace endtd {

namespace {

int band_floor(const Truncation& t) { return t.horizon() - oracle_of(t).band; }

std::vector<std::string> sorted_union(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

const EndHandle& find_end(const std::vector<EndHandle>& ends, const std::string& id) {
  for (const auto& e : ends)
    if (e.id == id) return e;
  throw PreconditionError("end " + id + " is not resolved in the host");
}

bool slice_inside(const Host& h, const EndHandle& e, const VertexSet& s) {
  VertexSet f = frontier_slice(h, e);
  return !f.empty() && is_subset(f, s);
}

}  // namespace

Adhesion classify_adhesion(const Truncation& t, const VertexSet& nbhd) {
  int lo = band_floor(t);
  bool deep = false, shallow = false;
  for (Idx v : nbhd) (t.depth(v) >= lo ? deep : shallow) = true;
  if (!deep) return Adhesion::Finite;
  return shallow ? Adhesion::Infinite : Adhesion::Unresolved;
}

EnvelopeResult envelope(const Host& h, const VertexSet& x, const std::vector<std::string>& x_ends) {
  const auto& t = h.truncation();
  auto ends = ends_in(h);
  EnvelopeResult r;
  r.core = x;
  r.core_ends = x_ends;
  std::sort(r.core_ends.begin(), r.core_ends.end());
  auto from_vertices = boundary_of(h, x, ends);
  r.target = sorted_union(from_vertices, r.core_ends);

  VertexSet cur = x;
  for (const auto& id : r.core_ends) {
    const EndHandle& e = find_end(ends, id);
    if (!std::binary_search(from_vertices.begin(), from_vertices.end(), id))
      cur = set_union(cur, ray_tail(h, e));
  }

  std::set<std::string> good(r.target.begin(), r.target.end());
  for (bool changed = true; changed;) {
    changed = false;
    ++r.sealing_rounds;
    for (const Region& k : components_minus(h, cur)) {
      if (classify_adhesion(t, k.neighborhood) != Adhesion::Infinite) continue;
      const EndHandle* bad = nullptr;
      for (const auto& e : ends)
        if (!good.count(e.id) && slice_inside(h, e, k.vertices)) {
          bad = &e;
          break;
        }
      if (!bad) {
        cur = set_union(cur, k.vertices);
      } else {
        Host local(t, set_union(k.vertices, k.neighborhood));
        VertexSet target = frontier_slice(local, *bad);
        VertexFlow flow(local, k.neighborhood, target);
        VertexSet cut = flow.cut(CutSide::NearSource);
        if (is_subset(cut, cur)) cut = flow.cut(CutSide::NearSink);
        if (is_subset(cut, cur))
          throw HorizonError("envelope: cannot shield end " + bad->id + " at this horizon",
                             t.horizon() + oracle_of(t).band);
        cur = set_union(cur, cut);
      }
      changed = true;
      break;
    }
  }
  r.base = cur;
  r.envelope = cur;
  r.boundary = boundary_of(h, cur, ends);
  for (const Region& k : components_minus(h, cur))
    if (classify_adhesion(t, k.neighborhood) == Adhesion::Unresolved) ++r.unresolved;
  return r;
}

EnvelopeResult envelope_avoiding(const Host& h, const VertexSet& x,
                                 const std::vector<std::string>& x_ends,
                                 const std::vector<Region>& avoid) {
  const auto& t = h.truncation();
  for (std::size_t i = 0; i < avoid.size(); ++i) {
    for (std::size_t j = i + 1; j < avoid.size(); ++j)
      if (touch(t, avoid[i], avoid[j]))
        throw PreconditionError("envelope_avoiding: regions " + std::to_string(i) + " and " +
                                std::to_string(j) + " touch");
    if (intersects(avoid[i].vertices, x))
      throw PreconditionError("envelope_avoiding: region " + std::to_string(i) + " meets X");
  }
  auto ends = ends_in(h);
  for (const auto& id : x_ends)
    for (std::size_t i = 0; i < avoid.size(); ++i)
      if (lives_in(h, find_end(ends, id), avoid[i].vertices))
        throw PreconditionError("envelope_avoiding: end " + id + " lives in region " +
                                std::to_string(i));

  EnvelopeResult r = envelope(h, x, x_ends);
  VertexSet cut = r.base;
  VertexSet add;
  for (std::size_t i = 0; i < avoid.size(); ++i)
    if (intersects(avoid[i].vertices, r.base)) {
      r.touched.push_back(i);
      cut = set_difference(cut, avoid[i].vertices);
      add = set_union(add, avoid[i].neighborhood);
    }
  r.envelope = set_union(cut, add);
  r.boundary = boundary_of(h, r.envelope, ends);
  r.unresolved = 0;
  for (const Region& k : components_minus(h, r.envelope))
    if (classify_adhesion(t, k.neighborhood) == Adhesion::Unresolved) ++r.unresolved;
  return r;
}

EnvelopeAudit audit_envelope(const Host& h, const EnvelopeResult& r, const std::vector<Region>& avoid) {
  const auto& t = h.truncation();
  EnvelopeAudit a;
  if (!is_subset(r.core, r.envelope)) {
    a.contains_core = false;
    a.failures.push_back("envelope misses input vertices");
  }
  for (const Region& k : components_minus(h, r.envelope)) {
    auto c = classify_adhesion(t, k.neighborhood);
    if (c == Adhesion::Infinite) {
      a.finite_adhesion = false;
      a.failures.push_back("complement component at " + t.label(*k.vertices.begin()) +
                           " has a neighbourhood reaching the frontier band");
    } else if (c == Adhesion::Unresolved) {
      ++a.unresolved;
    }
  }
  auto b = boundary_of(h, r.envelope, ends_in(h));
  if (b != r.target) {
    a.boundary_matches = false;
    std::string got, want;
    for (auto& s : b) got += s + " ";
    for (auto& s : r.target) want += s + " ";
    a.failures.push_back("boundary {" + got + "} differs from closure {" + want + "}");
  }
  int lo = band_floor(t);
  for (std::size_t i = 0; i < avoid.size(); ++i) {
    if (intersects(avoid[i].vertices, r.envelope)) {
      a.avoids = false;
      a.failures.push_back("envelope meets avoided region " + std::to_string(i));
    }
    if (classify_adhesion(t, avoid[i].neighborhood) != Adhesion::Finite) continue;
    for (Idx v : set_intersection(avoid[i].vertices, r.base))
      if (t.depth(v) >= lo) {
        a.moreover = false;
        a.failures.push_back("base envelope runs deep into region " + std::to_string(i));
        break;
      }
  }
  return a;
}

}  // namespace endtd
