#pragma once

#include <string>
#include <vector>

#include "endtd/ends.hpp"
#include "endtd/graph.hpp"

namespace endtd {

struct ChosenRegion {
  Region region;
  std::string end_id;  ///< end the region was chosen for
  bool uncrossed = false;
};

struct AlgorithmRun {
  VertexSet host;
  VertexSet x;
  std::vector<Region> input;
  std::vector<ChosenRegion> output;
  std::vector<std::string> linked_ends;  ///< ends X is linked to
  std::vector<std::string> input_ends;   ///< ends living in an input region

  std::vector<Region> regions() const;
};

/// Is the region end-linked for `e`: e lives in it and its neighbourhood is
/// linked to e?
bool is_end_linked_region(const Host& h, const Region& r, const EndHandle& e);

/// Greedy sequence of end-linked regions of order < |X|, nested with each
/// other and with the input regions. Each step takes the least order over the
/// ends not yet covered, ties broken by end rank, and the X-nearest cut.
/// Input regions must be pairwise non-touching, miss X, have order < |X| and
/// be end-linked.
AlgorithmRun run_region_algorithm(const Host& h, const VertexSet& x, const std::vector<Region>& input);

/// An end-linked region for `eps` nested with every region of `others`,
/// found as a cut from `anchor` to the end.
Region uncross(const Host& h, const Region& c, const std::vector<Region>& others, const EndHandle& eps,
               const VertexSet& anchor);
/// Anchor defaults to the host minus c, the others and their neighbourhoods.
Region uncross(const Host& h, const Region& c, const std::vector<Region>& others, const EndHandle& eps);

struct ObservationReport {
  std::size_t ends_checked = 0;
  std::size_t regions_checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Every end not linked to X and outside the inputs has an end-linked output
/// region; every output neighbourhood is linked to X; outputs are nested,
/// miss X, have order < |X|, and orders increase strictly along inclusions.
ObservationReport audit_observation(const Host& h, const VertexSet& x, const std::vector<Region>& input,
                                    const std::vector<Region>& output);
ObservationReport audit_observation(const Host& h, const AlgorithmRun& run);

}  // namespace endtd
