#pragma once

#include <utility>
#include <vector>

#include "modc/delta02.hpp"
#include "modc/hierarchy.hpp"

namespace modc {

// Evidence produced alongside the selected representative: the chain, the
// perfect kernels of every F and H, and the selected set itself.
struct SelectionReport {
  DifferenceChain chain;
  std::vector<std::pair<ClosedSet, ClosedSet>> kernels;
  Delta02Set selected;
};

// The canonical representative of a's class modulo countable: the union of
// differences of the perfect kernels along a's decomposition chain. Two
// sets with countable symmetric difference select the identical value, and
// the selected value differs from a by a countable set.
Delta02Set select_representative(const Delta02Set& a);

SelectionReport selection_report(const Delta02Set& a);

}  // namespace modc
