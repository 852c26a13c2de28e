#pragma once

// Hand-built graphs and decompositions shared by the unit and acceptance tests.

#include <string>
#include <vector>

#include "endtd/decomposition.hpp"
#include "endtd/families.hpp"

namespace fixtures {

/// half_grid(width) with a two-vertex pendant {p0, p1}; p0 is joined to
/// (1,2), (2,1) and (2,2), so the pendant is a finite region of order 3.
endtd::FamilyPtr pendant_half_grid(int width);

/// 6x6 grid g(i,j) with a ladder (degree-2 end "ladder") hanging off g(6,5)
/// and g(6,6), and a single ray (end "ray") hanging off g(1,6). Root g(1,1).
endtd::FamilyPtr grid_with_rays();

/// Decomposition read from bags given by label; parents[i] < i, root first.
endtd::TreeDecomposition td_from_bags(const endtd::Truncation& t,
                                      const std::vector<std::vector<std::string>>& bags,
                                      const std::vector<int>& parents);

struct Corrupted {
  std::string name;
  std::string broken;  ///< the one property that should fail
  endtd::FamilyPtr family;
  std::vector<std::vector<std::string>> bags;
  std::vector<int> parents;
};

/// Ladder with a two-vertex pinch hidden inside an inflated bag (linked fails),
/// a star split under one bag (componental fails), a path whose adhesion is
/// not tight (tight fails).
std::vector<Corrupted> corrupted_decompositions();

}  // namespace fixtures
