#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "modc/closed_set.hpp"
#include "modc/up_point.hpp"

namespace modc {

// A finite Boolean combination of regular closed sets: a list of closed
// components plus a condition table on the membership flag vector. A point
// belongs to the set iff condition(b) holds, where bit i of b says whether
// the point lies in component i.
//
// Values are normalized: components are canonical, nonempty, not the full
// space, pairwise distinct, sorted, and every flag matters to the
// condition. At most 16 components. Every such value denotes a set that is
// simultaneously F-sigma and G-delta.
class Delta02Set {
 public:
  static constexpr std::size_t kMaxComponents = 16;

  Delta02Set() : condition_{false} {}  // the constant-false set

  static Delta02Set constant(bool value) {
    Delta02Set s;
    s.condition_ = {value};
    return s;
  }

  // Normalizes arbitrary parts; condition must have size 1 << components.size().
  static Delta02Set from_parts(std::vector<ClosedSet> components,
                               std::vector<bool> condition);

  std::size_t component_count() const noexcept { return components_.size(); }
  const ClosedSet& component(std::size_t i) const { return components_[i]; }
  const std::vector<ClosedSet>& components() const noexcept { return components_; }

  // Condition value at a flag vector, bit i = flag of component i.
  bool condition_at(std::uint32_t flags) const { return condition_[flags]; }
  const std::vector<bool>& condition() const noexcept { return condition_; }

  bool is_constant_true() const noexcept { return components_.empty() && condition_[0]; }
  bool is_constant_false() const noexcept { return components_.empty() && !condition_[0]; }

  friend bool operator==(const Delta02Set&, const Delta02Set&) = default;

 private:
  std::vector<ClosedSet> components_;
  std::vector<bool> condition_;
};

enum class SetOp { Union, Intersect, Difference, SymDiff };

Delta02Set lift(const ClosedSet& c);
Delta02Set complement(const Delta02Set& s);
Delta02Set combine(SetOp op, const Delta02Set& a, const Delta02Set& b);

bool member_up(const Delta02Set& s, const UpPoint& p);

// Emptiness via the component product: the set is nonempty iff some
// reachable product state lies on a cycle whose dead-set satisfies the
// condition.
bool is_empty(const Delta02Set& s);

// Topological closure, always a regular closed set.
ClosedSet closure(const Delta02Set& s);

// Countability. Decided by stratum analysis of the component product: the
// set is uncountable iff some reachable product stratum that satisfies the
// condition contains a state on two distinct cycles.
bool is_countable(const Delta02Set& s);

// The stratum route behind is_countable.
bool is_countable_direct(const Delta02Set& s);

// The closure route: whether closure(s) is a countable closed set. Sound
// one way only — a countable closure forces a countable set, but a
// countable set whose isolated points accumulate onto a perfect closed set
// has an uncountable closure. The property harness compares the two routes
// on instances where they are expected to coincide.
bool is_countable_via_closure(const Delta02Set& s);

// Exact set equality and equality modulo countable sets.
bool equals(const Delta02Set& a, const Delta02Set& b);
bool eq_mod_countable(const Delta02Set& a, const Delta02Set& b);

}  // namespace modc
