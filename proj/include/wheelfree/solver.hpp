#pragma once

#include "wheelfree/decomposition.hpp"
#include "wheelfree/weights.hpp"

namespace wheelfree {

struct SolveOptions {
  bool trace = true;
};

struct SolveResult {
  Weight alpha = 0;
  DecompositionTrace trace;  // empty when tracing is off
  int steps = 0;             // recursion levels before the basic terminal
};

// Maximum weight of a stable set of an {ISK4, wheel}-free weighted trigraph.
// Class violations detected on the way surface as InvalidInput.
SolveResult alpha(const WeightedTrigraph& wt, const SolveOptions& options = {});

struct ExtractionResult {
  VertexSet stable_set;
  Weight weight = 0;
};

// Maximum weight stable set of an {ISK4, wheel}-free weighted graph by
// self-reduction on the lowest remaining label.
ExtractionResult max_stable_set_graph(const WeightedTrigraph& wg);

}  // namespace wheelfree
