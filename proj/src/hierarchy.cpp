#include "modc/hierarchy.hpp"

#include <utility>

#include "modc/errors.hpp"

namespace modc {

DifferenceChain DifferenceChain::from_pairs(std::vector<Pair> pairs) {
  if (pairs.empty()) {
    throw argument_error("difference chain: rank must be at least 1");
  }
  if (pairs.front().first != full_space()) {
    throw argument_error("difference chain: F_0 must be the full space");
  }
  bool seen_empty = false;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [f, h] = pairs[i];
    if (seen_empty && !f.is_empty_set()) {
      throw argument_error("difference chain: F may not grow after becoming empty");
    }
    if (!subset_closed(h, f)) {
      throw argument_error("difference chain: H must be a subset of F");
    }
    if (i + 1 < pairs.size()) {
      const ClosedSet& next_f = pairs[i + 1].first;
      if (!subset_closed(next_f, h)) {
        throw argument_error("difference chain: F_{i+1} must be a subset of H_i");
      }
      if (!f.is_empty_set() && next_f == f) {
        throw argument_error("difference chain: F must strictly decrease while nonempty");
      }
    }
    seen_empty = seen_empty || f.is_empty_set();
  }
  DifferenceChain chain;
  chain.pairs_ = std::move(pairs);
  return chain;
}

DifferenceChain decompose(const Delta02Set& a) {
  // The chain's sets are all bodies of induced subgraphs of the product of
  // a's components, so the rank cannot exceed the product state count.
  std::uint64_t rank_bound = 1;
  for (const ClosedSet& c : a.components()) {
    rank_bound *= c.state_count() + 1;
  }

  std::vector<DifferenceChain::Pair> pairs;
  ClosedSet f = full_space();
  while (!f.is_empty_set()) {
    if (pairs.size() >= rank_bound) {
      throw internal_error("decompose: rank exceeded the product state bound");
    }
    const ClosedSet h = closure(combine(SetOp::Difference, lift(f), a));
    ClosedSet next_f = intersect_closed(h, closure(combine(SetOp::Intersect, lift(f), a)));
    if (next_f == f) {
      throw internal_error("decompose: F failed to strictly decrease while nonempty");
    }
    pairs.emplace_back(std::move(f), h);
    f = std::move(next_f);
  }
  return DifferenceChain::from_pairs(std::move(pairs));
}

Delta02Set reconstruct(const DifferenceChain& chain) {
  Delta02Set out = Delta02Set::constant(false);
  for (const auto& [f, h] : chain.pairs()) {
    out = combine(SetOp::Union, out, combine(SetOp::Difference, lift(f), lift(h)));
  }
  return out;
}

DifferenceChain pad_chain(const DifferenceChain& chain, std::size_t rank) {
  if (rank < chain.rank()) {
    throw argument_error("pad_chain: requested rank is below the chain rank");
  }
  std::vector<DifferenceChain::Pair> pairs = chain.pairs();
  pairs.resize(rank, {empty_closed(), empty_closed()});
  return DifferenceChain::from_pairs(std::move(pairs));
}

bool chains_equiv_mod_countable(const DifferenceChain& a, const DifferenceChain& b) {
  const std::size_t rank = std::max(a.rank(), b.rank());
  const DifferenceChain pa = pad_chain(a, rank);
  const DifferenceChain pb = pad_chain(b, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (!eq_mod_countable(lift(pa.pair(i).first), lift(pb.pair(i).first))) return false;
    if (!eq_mod_countable(lift(pa.pair(i).second), lift(pb.pair(i).second))) return false;
  }
  return true;
}

}  // namespace modc
