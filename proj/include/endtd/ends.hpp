#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "endtd/graph.hpp"
#include "endtd/separation.hpp"

namespace endtd {

/// Handle to one end, as declared by a family's oracle.
struct EndHandle {
  std::string id;
  int rank = 0;
  /// i-th vertex of the canonical ray; ray(0) is the root and depth(ray(i)) = i.
  std::function<Vertex(std::size_t)> ray;
  /// Membership in the declared tail that contains the end's frontier slice.
  std::function<bool(const Vertex&)> in_tail;
  std::vector<Vertex> dominators;
  std::optional<int> degree;  ///< nullopt: infinite
  int anchor_depth = 0;       ///< depth where the tail starts

  /// Degree plus number of dominators; nullopt if infinite.
  std::optional<int> combined_degree() const {
    if (!degree) return std::nullopt;
    return *degree + static_cast<int>(dominators.size());
  }
};

/// Declared end structure of a family.
class EndOracle {
 public:
  /// Ends whose tails start at depth <= horizon, in rank order.
  std::function<std::vector<EndHandle>(int horizon)> enumerate;
  /// Horizon needed before the X-nearest minimum separator between a vertex
  /// set of size k within depth d and any resolved end is final.
  std::function<int(int k, int d)> stabilization_depth;
  int band = 2;            ///< width of the deep band used by boundary tests
  int resolve_margin = 4;  ///< an end is resolved once anchor + margin <= horizon
  bool sampled = false;    ///< enumerate lists a sample, not every end
  std::string derivation;

  std::vector<EndHandle> resolved(int horizon) const;
};

const EndOracle& oracle_of(const Truncation& t);

/// Throws HorizonError unless the truncation certifies queries with |X| = k
/// and X within depth d.
void require_horizon(const Truncation& t, int k, int d, const std::string& what);

/// Resolved ends whose frontier slice lies in the host.
std::vector<EndHandle> ends_in(const Host& h);
/// Frontier vertices in the end's tail, restricted to the host.
VertexSet frontier_slice(const Host& h, const EndHandle& e);
/// Frontier slice together with the dominators present in the host.
VertexSet end_target(const Host& h, const EndHandle& e);

/// Does the end live in `s` (its whole frontier slice inside)? Throws
/// HorizonError if the slice is split.
bool lives_in(const Host& h, const EndHandle& e, const VertexSet& s);

/// The component of host minus S in which the end lives.
Region component_of_end(const Host& h, const VertexSet& s, const EndHandle& e);

struct EndSeparator {
  VertexSet separator;
  PathFamily witness;
};

/// Minimum X–end separator; nearest X by default.
EndSeparator min_end_separator(const Host& h, const VertexSet& x, const EndHandle& e,
                               CutSide side = CutSide::NearSource);
bool is_linked_to_end(const Host& h, const VertexSet& x, const EndHandle& e);

/// The end's deep region: vertices of its tail in the frontier band that are
/// connected to its slice there.
VertexSet deep_region(const Host& h, const EndHandle& e);
/// Resolved ends in the closure of X: those whose deep region X meets or
/// is adjacent to.
std::vector<std::string> boundary_of(const Host& h, const VertexSet& x,
                                     const std::vector<EndHandle>& ends);

/// Vertices of the canonical ray inside the truncation, as the maximal
/// suffix that lies inside the host.
VertexSet ray_tail(const Host& h, const EndHandle& e);

/// Distinguished end set Ψ together with a cover of its complement by closed
/// sets X_n. X_n ∩ V is the ball of radius n (root counted in X_1).
struct GDeltaSpec {
  std::string kind;
  std::vector<std::string> psi_ids;  ///< only for kind "ends"
  std::function<bool(const EndHandle&)> in_psi;
  /// Smallest n with the end in X_n; nullopt for Ψ ends.
  std::function<std::optional<int>(const EndHandle&)> xi_index;

  static int vertex_index(const Truncation& t, Idx v) { return std::max(1, t.depth(v)); }
  bool end_in(const EndHandle& e, int n) const {
    auto i = xi_index(e);
    return i && *i <= n;
  }
};

/// Ψ = undominated ends; dominated ends enter once a dominator is in the ball.
GDeltaSpec undominated_gdelta(const GraphFamily& f);
/// Ψ = every end.
GDeltaSpec all_ends_gdelta();
/// Ψ = listed end ids; the other ends enter X_n by rank.
GDeltaSpec listed_gdelta(std::vector<std::string> ids);

/// BFS distance from the root that never expands infinite-degree vertices.
std::optional<int> family_distance(const GraphFamily& f, const Vertex& target, int limit);

struct EndAudit {
  std::string id;
  std::optional<int> declared_degree;
  int checked_degree = 0;
  std::size_t slice_size = 0;
  std::vector<std::string> declared_dominators;
  std::vector<std::string> undeclared_dominators;
  bool tail_connected = false;
  bool pass = false;
  std::string note;
};

struct OracleAudit {
  std::string family;
  int horizon = 0;
  bool sampled = false;
  std::string derivation;
  std::vector<EndAudit> ends;
  bool pass = true;
};

/// Checks declared degrees, dominators and tails against the truncation.
OracleAudit audit_oracle(const Truncation& t);

}  // namespace endtd
