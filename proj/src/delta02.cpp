#include "modc/delta02.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <utility>

#include "detail_graph.hpp"
#include "modc/errors.hpp"

namespace modc {

namespace {

constexpr std::uint32_t kNone = ClosedSet::kNoTransition;

// --- condition-table helpers --------------------------------------------
//
// Tables are indexed by flag masks; bit i of the index is the flag of
// component i. All helpers shrink the table by one flag position.

std::uint32_t insert_bit(std::uint32_t mask, std::size_t pos, std::uint32_t bit) {
  const std::uint32_t low = mask & ((1u << pos) - 1);
  const std::uint32_t high = mask >> pos;
  return low | (bit << pos) | (high << (pos + 1));
}

// Fixes flag `pos` to `value` and removes it.
std::vector<bool> restrict_flag(const std::vector<bool>& table, std::size_t pos,
                                std::uint32_t value) {
  std::vector<bool> out(table.size() / 2);
  for (std::uint32_t m = 0; m < out.size(); ++m) {
    out[m] = table[insert_bit(m, pos, value)];
  }
  return out;
}

// Identifies flag `dup` with flag `keep` (keep < dup) and removes `dup`.
std::vector<bool> merge_flags(const std::vector<bool>& table, std::size_t keep,
                              std::size_t dup) {
  std::vector<bool> out(table.size() / 2);
  for (std::uint32_t m = 0; m < out.size(); ++m) {
    out[m] = table[insert_bit(m, dup, (m >> keep) & 1u)];
  }
  return out;
}

bool flag_relevant(const std::vector<bool>& table, std::size_t pos) {
  for (std::uint32_t m = 0; m < table.size() / 2; ++m) {
    if (table[insert_bit(m, pos, 0)] != table[insert_bit(m, pos, 1)]) return true;
  }
  return false;
}

}  // namespace

Delta02Set Delta02Set::from_parts(std::vector<ClosedSet> components,
                                  std::vector<bool> condition) {
  if (condition.size() != (std::size_t{1} << components.size())) {
    throw argument_error("delta02: condition table size must be 2^k");
  }
  const ClosedSet full = full_space();

  // Fold constant components into the condition.
  for (std::size_t i = 0; i < components.size();) {
    if (components[i].is_empty_set()) {
      condition = restrict_flag(condition, i, 0);
      components.erase(components.begin() + static_cast<std::ptrdiff_t>(i));
    } else if (components[i] == full) {
      condition = restrict_flag(condition, i, 1);
      components.erase(components.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  // Merge duplicate components.
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = i + 1; j < components.size();) {
      if (components[i] == components[j]) {
        condition = merge_flags(condition, i, j);
        components.erase(components.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        ++j;
      }
    }
  }

  // Drop flags the condition ignores.
  for (std::size_t i = 0; i < components.size();) {
    if (!flag_relevant(condition, i)) {
      condition = restrict_flag(condition, i, 0);
      components.erase(components.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  if (components.size() > kMaxComponents) {
    throw resource_error("delta02: component limit exceeded");
  }

  // Sort components and permute the table accordingly.
  std::vector<std::size_t> order(components.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return components[a] < components[b];
  });

  Delta02Set out;
  out.components_.reserve(components.size());
  for (std::size_t i : order) out.components_.push_back(std::move(components[i]));
  out.condition_.assign(condition.size(), false);
  for (std::uint32_t m = 0; m < condition.size(); ++m) {
    std::uint32_t old_mask = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      old_mask |= ((m >> i) & 1u) << order[i];
    }
    out.condition_[m] = condition[old_mask];
  }
  return out;
}

Delta02Set lift(const ClosedSet& c) {
  return Delta02Set::from_parts({c}, {false, true});
}

Delta02Set complement(const Delta02Set& s) {
  std::vector<bool> negated(s.condition().size());
  for (std::size_t m = 0; m < negated.size(); ++m) negated[m] = !s.condition()[m];
  return Delta02Set::from_parts(s.components(), std::move(negated));
}

Delta02Set combine(SetOp op, const Delta02Set& a, const Delta02Set& b) {
  // Merge the component lists, reusing shared components.
  std::vector<ClosedSet> components = a.components();
  std::vector<std::size_t> b_position(b.component_count());
  for (std::size_t j = 0; j < b.component_count(); ++j) {
    const auto it = std::find(components.begin(), components.end(), b.component(j));
    if (it != components.end()) {
      b_position[j] = static_cast<std::size_t>(it - components.begin());
    } else {
      b_position[j] = components.size();
      components.push_back(b.component(j));
    }
  }
  // Beyond this many distinct components the table itself is infeasible;
  // normalization could not bring the count back under the cap anyway.
  if (components.size() > 20) {
    throw resource_error("combine: component limit exceeded");
  }

  const std::size_t k = components.size();
  std::vector<bool> condition(std::size_t{1} << k);
  for (std::uint32_t m = 0; m < condition.size(); ++m) {
    const std::uint32_t ma = m & ((1u << a.component_count()) - 1u);
    std::uint32_t mb = 0;
    for (std::size_t j = 0; j < b.component_count(); ++j) {
      mb |= ((m >> b_position[j]) & 1u) << j;
    }
    const bool va = a.condition_at(ma);
    const bool vb = b.condition_at(mb);
    switch (op) {
      case SetOp::Union: condition[m] = va || vb; break;
      case SetOp::Intersect: condition[m] = va && vb; break;
      case SetOp::Difference: condition[m] = va && !vb; break;
      case SetOp::SymDiff: condition[m] = va != vb; break;
    }
  }
  return Delta02Set::from_parts(std::move(components), std::move(condition));
}

bool member_up(const Delta02Set& s, const UpPoint& p) {
  std::uint32_t flags = 0;
  for (std::size_t i = 0; i < s.component_count(); ++i) {
    if (member_up_closed(s.component(i), p)) flags |= 1u << i;
  }
  return s.condition_at(flags);
}

namespace {

// --- the component product ----------------------------------------------
//
// Product states are tuples of per-component states, where a component may
// have entered an absorbing dead marker. Dead-sets grow monotonically along
// every run and are constant on cycles, so the limiting flag vector of a
// point is alive(D) for the dead-set D its run stabilizes at.

struct Product {
  std::vector<std::array<std::uint32_t, 2>> next;  // total: both letters defined
  std::vector<std::uint32_t> dead_mask;
  std::vector<std::vector<std::uint32_t>> tuples;  // per-component state or kNone
};

struct TupleHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

Product build_product(const Delta02Set& s) {
  const std::size_t k = s.component_count();
  Product p;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, TupleHash> ids;

  std::vector<std::uint32_t> root(k);
  for (std::size_t i = 0; i < k; ++i) root[i] = 0;  // components are nonempty
  ids.emplace(root, 0);
  p.tuples.push_back(std::move(root));
  p.next.push_back({kNone, kNone});
  p.dead_mask.push_back(0);

  for (std::size_t head = 0; head < p.tuples.size(); ++head) {
    for (unsigned bit = 0; bit < 2; ++bit) {
      std::vector<std::uint32_t> target(k);
      std::uint32_t dead = p.dead_mask[head];
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint32_t q = p.tuples[head][i];
        const std::uint32_t nq = q == kNone ? kNone : s.component(i).next(q, bit);
        target[i] = nq;
        if (nq == kNone) dead |= 1u << i;
      }
      auto [it, inserted] = ids.emplace(target, static_cast<std::uint32_t>(p.tuples.size()));
      if (inserted) {
        if (p.tuples.size() >= state_budget()) {
          throw resource_error("delta02 product: state budget exceeded");
        }
        p.tuples.push_back(std::move(target));
        p.next.push_back({kNone, kNone});
        p.dead_mask.push_back(dead);
      }
      p.next[head][bit] = it->second;
    }
  }
  return p;
}

std::uint32_t alive_mask(const Product& p, std::uint32_t state, std::size_t k) {
  return ~p.dead_mask[state] & ((k == 0 ? 0u : (1u << k) - 1u));
}

// States on a cycle whose stabilized dead-set satisfies the condition;
// exactly the states witnessing a point of the set from that state on.
std::vector<char> good_cycle_states(const Delta02Set& s, const Product& p) {
  const detail::SccResult scc = detail::strongly_connected(p.next);
  const std::vector<char> cyclic = detail::on_cycle_flags(p.next, scc);
  std::vector<char> good(p.next.size(), 0);
  for (std::uint32_t v = 0; v < p.next.size(); ++v) {
    good[v] = cyclic[v] && s.condition_at(alive_mask(p, v, s.component_count()));
  }
  return good;
}

}  // namespace

bool is_empty(const Delta02Set& s) {
  const Product p = build_product(s);
  const std::vector<char> good = good_cycle_states(s, p);
  return std::none_of(good.begin(), good.end(), [](char g) { return g != 0; });
}

ClosedSet closure(const Delta02Set& s) {
  const Product p = build_product(s);
  const std::vector<char> good = good_cycle_states(s, p);
  // States from which a condition-satisfying infinite run exists; the
  // sub-automaton on them is the closure.
  const std::vector<char> keep = detail::reaches(p.next, good);
  if (!keep[0]) return {};

  std::vector<std::array<std::uint32_t, 2>> t(p.next.size(), {kNone, kNone});
  for (std::uint32_t v = 0; v < p.next.size(); ++v) {
    if (!keep[v]) continue;
    for (unsigned b = 0; b < 2; ++b) {
      const std::uint32_t w = p.next[v][b];
      if (keep[w]) t[v][b] = w;
    }
  }
  return ClosedSet::canonicalize(0, std::move(t));
}

bool is_countable_via_closure(const Delta02Set& s) {
  return is_countable_closed(closure(s));
}

bool is_countable_direct(const Delta02Set& s) {
  const Product p = build_product(s);
  const detail::SccResult scc = detail::strongly_connected(p.next);

  // A stratum component is branching if some vertex keeps both letters
  // inside it; two distinct cycles through that vertex then witness a
  // perfect subset of the stratum's points.
  std::vector<char> branching(scc.count, 0);
  for (std::uint32_t v = 0; v < p.next.size(); ++v) {
    if (scc.component[p.next[v][0]] == scc.component[v] &&
        scc.component[p.next[v][1]] == scc.component[v]) {
      branching[scc.component[v]] = 1;
    }
  }
  for (std::uint32_t v = 0; v < p.next.size(); ++v) {
    if (branching[scc.component[v]] &&
        s.condition_at(alive_mask(p, v, s.component_count()))) {
      return false;
    }
  }
  return true;
}

bool is_countable(const Delta02Set& s) {
  // The stratum route is the decision procedure. The closure route is only
  // sound one way: a countable closure forces a countable set, but a
  // countable set may be dense in an uncountable closed set (isolated
  // points accumulating onto a perfect spine), so the two routes are
  // compared by the harness on instances where agreement is expected, not
  // asserted here.
  return is_countable_direct(s);
}

bool equals(const Delta02Set& a, const Delta02Set& b) {
  return is_empty(combine(SetOp::SymDiff, a, b));
}

bool eq_mod_countable(const Delta02Set& a, const Delta02Set& b) {
  return is_countable(combine(SetOp::SymDiff, a, b));
}

}  // namespace modc
