#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endtd/decomposition.hpp"

namespace endtd {

struct PropertyResult {
  explicit PropertyResult(std::string n = {}) : name(std::move(n)) {}
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::size_t unresolved = 0;  ///< items that cannot be judged at this horizon
  std::vector<std::string> witnesses;
};

struct EndSummary {
  std::string id;
  bool in_psi = false;
  std::vector<int> path;
  bool reaches_frontier = false;
  std::vector<std::size_t> adhesion_sizes;  ///< along the path, top edge first
  bool stabilized = false;
  std::size_t stable_size = 0;
  std::size_t stable_from = 0;              ///< index in adhesion_sizes
  std::vector<std::string> limit_set;       ///< consistent up to the horizon
  std::optional<int> combined_degree;
  std::vector<std::string> dominators;
};

struct VerificationReport {
  std::vector<PropertyResult> properties;
  std::vector<EndSummary> ends;
  std::size_t pairs_total = 0;
  std::size_t pairs_checked = 0;

  bool pass() const;
  const PropertyResult& property(const std::string& name) const;
};

struct VerifyOptions {
  std::size_t pair_budget = 1'000'000;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

/// Checks tree-decomposition axioms, finite adhesion, tightness,
/// componentality, linkedness of comparable edges, how ends sit in the tree,
/// and that each ray edge is followed by a minimum separator to its end.
VerificationReport verify(const Truncation& t, const TreeDecomposition& td, const GDeltaSpec& spec,
                          const VerifyOptions& opt = {});

struct CoverageViolation {
  std::string vertex;
  int index = 0;       ///< first n with the vertex in X_n
  int entered = -1;    ///< round whose bag first holds it; -1 if never
  std::size_t bound_adhesion = 0;
};

struct CoverageReport {
  std::size_t checked = 0;
  std::size_t beyond_levels = 0;
  std::vector<CoverageViolation> violations;
};

/// Every vertex of X_n is in a bag by round n + |V_e| - 1, where e is the
/// edge above the node built in round n for the component holding the vertex.
/// Needs the uncontracted decomposition with its log.
CoverageReport check_coverage(const Truncation& t, const TreeDecomposition& td);

}  // namespace endtd
