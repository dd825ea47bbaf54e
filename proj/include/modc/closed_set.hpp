#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "modc/up_point.hpp"

namespace modc {

// A closed subset of Cantor space: the set of infinite runs of a trimmed
// partial DFA over {0,1}, equivalently the body of a regular pruned tree.
//
// Values are canonical: every state is reachable and lies on an infinite
// path, the automaton is minimal (absent transitions count as a
// distinguishing observation), and states carry BFS discovery numbers with
// the 0-edge explored before the 1-edge. Two ClosedSet values denote the
// same set iff they compare equal. The empty set is the unique zero-state
// value; otherwise state 0 is initial.
class ClosedSet {
 public:
  static constexpr std::uint32_t kNoTransition = 0xffffffffu;

  ClosedSet() = default;  // the empty set

  std::uint32_t state_count() const noexcept {
    return static_cast<std::uint32_t>(transitions_.size());
  }
  bool is_empty_set() const noexcept { return transitions_.empty(); }

  std::optional<std::uint32_t> initial_state() const noexcept {
    if (transitions_.empty()) return std::nullopt;
    return 0u;
  }

  // Target of (state, bit), or kNoTransition.
  std::uint32_t next(std::uint32_t state, unsigned bit) const {
    return transitions_[state][bit];
  }

  friend bool operator==(const ClosedSet&, const ClosedSet&) = default;
  friend std::strong_ordering operator<=>(const ClosedSet&, const ClosedSet&) = default;

  // Trims (keeps states reachable from the initial one that lie on an
  // infinite path), minimizes, and renumbers an arbitrary partial
  // transition table. `initial` = kNoTransition builds the empty set.
  static ClosedSet canonicalize(std::uint32_t initial,
                                std::vector<std::array<std::uint32_t, 2>> transitions);

 private:
  std::vector<std::array<std::uint32_t, 2>> transitions_;
};

// Primitive builders. All results are canonical.
ClosedSet full_space();
ClosedSet empty_closed();
// All points extending the finite bit string w.
ClosedSet cylinder(std::string_view w);
// The singleton {stem.cycle^w}.
ClosedSet up_singleton(const UpPoint& p);
ClosedSet up_singleton(std::string_view stem, std::string_view cycle);
// All points not containing w as a factor.
ClosedSet no_factor(std::string_view w);
// All points every finite prefix of which lies in the prefix closure of
// the language of `pattern`, a regular expression over {0,1} with union
// '|', concatenation, star '*' and grouping.
ClosedSet prefix_tree(std::string_view pattern);

// Closed-set algebra over canonical values.
ClosedSet union_closed(const ClosedSet& a, const ClosedSet& b);
ClosedSet intersect_closed(const ClosedSet& a, const ClosedSet& b);
bool subset_closed(const ClosedSet& a, const ClosedSet& b);
bool member_up_closed(const ClosedSet& c, const UpPoint& p);

// One Cantor-Bendixson step: removes the isolated points.
ClosedSet derivative(const ClosedSet& c);

// The largest perfect subset. Computed by two independent algorithms
// (derivative iteration and uncountable-state analysis) whose agreement is
// asserted; disagreement raises internal_error.
ClosedSet perfect_kernel(const ClosedSet& c);

// The two routes behind perfect_kernel, exposed so the harness can re-test
// their agreement.
ClosedSet kernel_by_derivative_fixpoint(const ClosedSet& c);
ClosedSet kernel_by_state_analysis(const ClosedSet& c);

// Number of derivative steps until the fixpoint is reached.
unsigned cb_rank(const ClosedSet& c);

// A closed set is countable iff its perfect kernel is empty.
bool is_countable_closed(const ClosedSet& c);

}  // namespace modc
