#pragma once

#include <string>
#include <vector>

#include "endtd/ends.hpp"
#include "endtd/graph.hpp"

namespace endtd {

/// How a complement component's neighbourhood looks in the finite window.
enum class Adhesion {
  Finite,      ///< stays out of the frontier band
  Infinite,    ///< reaches the band from a shallow vertex
  Unresolved,  ///< lies entirely in the band; cannot be judged at this horizon
};

Adhesion classify_adhesion(const Truncation& t, const VertexSet& nbhd);

struct EnvelopeResult {
  VertexSet core;                       ///< input vertices
  std::vector<std::string> core_ends;   ///< input ends
  std::vector<std::string> target;      ///< boundary the envelope must have
  VertexSet base;                       ///< sealed envelope before avoidance
  VertexSet envelope;
  std::vector<std::size_t> touched;     ///< avoided regions the base met
  std::vector<std::string> boundary;    ///< boundary of the envelope as computed
  std::size_t unresolved = 0;           ///< complement components skipped as unresolved
  int sealing_rounds = 0;
};

/// Smallest-effort set containing X whose complement components have finite
/// neighbourhoods and whose end boundary equals the closure of X.
EnvelopeResult envelope(const Host& h, const VertexSet& x, const std::vector<std::string>& x_ends);

/// Envelope that misses the given pairwise non-touching regions: the base
/// envelope with every region it meets swapped for that region's neighbourhood.
EnvelopeResult envelope_avoiding(const Host& h, const VertexSet& x,
                                 const std::vector<std::string>& x_ends,
                                 const std::vector<Region>& avoid);

struct EnvelopeAudit {
  bool contains_core = true;
  bool finite_adhesion = true;
  bool boundary_matches = true;
  bool avoids = true;
  bool moreover = true;
  std::size_t unresolved = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Checks the envelope contract, plus avoidance and the finite-intersection
/// clause of the base for the given regions.
EnvelopeAudit audit_envelope(const Host& h, const EnvelopeResult& r,
                             const std::vector<Region>& avoid = {});

}  // namespace endtd
