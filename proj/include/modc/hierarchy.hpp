#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "modc/closed_set.hpp"
#include "modc/delta02.hpp"

namespace modc {

// The canonical difference-hierarchy decomposition of a set A: a strictly
// decreasing sequence of closed pairs
//
//   F_0 = 2^w,  H_i = closure(F_i \ A),  F_{i+1} = H_i n closure(F_i n A),
//
// stopping at the first empty F. The represented set is the union of the
// differences F_i \ H_i. Padded chains may carry trailing (empty, empty)
// pairs, which leave the represented set unchanged.
class DifferenceChain {
 public:
  using Pair = std::pair<ClosedSet, ClosedSet>;

  // Validates the chain invariants; argument_error on violation.
  static DifferenceChain from_pairs(std::vector<Pair> pairs);

  std::size_t rank() const noexcept { return pairs_.size(); }
  const Pair& pair(std::size_t i) const { return pairs_[i]; }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }

  friend bool operator==(const DifferenceChain&, const DifferenceChain&) = default;

 private:
  std::vector<Pair> pairs_;
};

// The canonical decomposition; reconstruct(decompose(a)) equals a exactly.
DifferenceChain decompose(const Delta02Set& a);

// The union of differences represented by the chain.
Delta02Set reconstruct(const DifferenceChain& chain);

// Extends the chain with (empty, empty) pairs up to the requested rank;
// argument_error if rank is smaller than the current one.
DifferenceChain pad_chain(const DifferenceChain& chain, std::size_t rank);

// Pads both chains to a common rank, then compares all F and H pairs
// modulo countable.
bool chains_equiv_mod_countable(const DifferenceChain& a, const DifferenceChain& b);

}  // namespace modc
