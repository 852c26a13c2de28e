#pragma once

#include <string>
#include <vector>

#include "endtd/graph.hpp"

namespace endtd {

/// Separator facts for the gadget at rung 2 seen from rung 1 of the outer grid.
struct GadgetFacts {
  std::vector<std::vector<std::string>> h3_separators;  ///< all minimum rung-1 to H3-end separators
  int h4_order = 0;                                     ///< minimum rung-1 to H4-end separator size
  std::vector<std::vector<std::string>> h4_separators;  ///< all of that size
  bool unique_h3_pair = false;
  bool h4_order_three = false;
  bool h4_exact_pair = false;
  bool pass() const { return unique_h3_pair && h4_order_three && h4_exact_pair; }
};

/// Needs a truncation of the gadget family. Throws HorizonError if
/// the horizon does not certify the queries.
GadgetFacts gadget_facts(const Truncation& t);

}  // namespace endtd
