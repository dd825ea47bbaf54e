#include "modc/closed_set.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>
#include <utility>

#include "detail_graph.hpp"
#include "modc/errors.hpp"

namespace modc {

namespace {

constexpr std::uint32_t kNone = ClosedSet::kNoTransition;

using Table = std::vector<std::array<std::uint32_t, 2>>;

struct Raw {
  std::uint32_t initial = kNone;
  Table t;
};

// Keeps the states that are reachable from the initial state and admit an
// infinite continuation; drops every other state and every edge into one.
Raw trim(const Raw& in) {
  if (in.initial == kNone || in.t.empty()) return {};
  const std::uint32_t n = static_cast<std::uint32_t>(in.t.size());

  std::vector<char> reachable(n, 0);
  {
    std::vector<std::uint32_t> queue{in.initial};
    reachable[in.initial] = 1;
    while (!queue.empty()) {
      const std::uint32_t v = queue.back();
      queue.pop_back();
      for (unsigned b = 0; b < 2; ++b) {
        const std::uint32_t w = in.t[v][b];
        if (w != kNone && !reachable[w]) {
          reachable[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }

  // A state lies on an infinite path iff it can reach a cycle.
  const detail::SccResult scc = detail::strongly_connected(in.t);
  const std::vector<char> cyclic = detail::on_cycle_flags(in.t, scc);
  const std::vector<char> live = detail::reaches(in.t, cyclic);

  std::vector<std::uint32_t> remap(n, kNone);
  std::uint32_t kept = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (reachable[v] && live[v]) remap[v] = kept++;
  }
  if (remap[in.initial] == kNone) return {};

  Raw out;
  out.initial = remap[in.initial];
  out.t.assign(kept, {kNone, kNone});
  for (std::uint32_t v = 0; v < n; ++v) {
    if (remap[v] == kNone) continue;
    for (unsigned b = 0; b < 2; ++b) {
      const std::uint32_t w = in.t[v][b];
      if (w != kNone && remap[w] != kNone) out.t[remap[v]][b] = remap[w];
    }
  }
  return out;
}

// Moore partition refinement on the trimmed partial DFA. An absent
// transition is a distinguishing observation, so the Nerode classes of the
// prefix language are computed exactly.
Raw minimize(const Raw& in) {
  if (in.initial == kNone) return {};
  const std::uint32_t n = static_cast<std::uint32_t>(in.t.size());
  std::vector<std::uint32_t> cls(n, 0);
  std::uint32_t classes = 1;

  while (true) {
    std::map<std::array<std::uint32_t, 3>, std::uint32_t> ids;
    std::vector<std::uint32_t> next_cls(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      const std::array<std::uint32_t, 3> sig{
          cls[v],
          in.t[v][0] == kNone ? kNone : cls[in.t[v][0]],
          in.t[v][1] == kNone ? kNone : cls[in.t[v][1]],
      };
      const auto [it, inserted] = ids.emplace(sig, static_cast<std::uint32_t>(ids.size()));
      next_cls[v] = it->second;
      (void)inserted;
    }
    const std::uint32_t next_classes = static_cast<std::uint32_t>(ids.size());
    cls.swap(next_cls);
    if (next_classes == classes) break;
    classes = next_classes;
  }

  Raw out;
  out.initial = cls[in.initial];
  out.t.assign(classes, {kNone, kNone});
  for (std::uint32_t v = 0; v < n; ++v) {
    for (unsigned b = 0; b < 2; ++b) {
      out.t[cls[v]][b] = in.t[v][b] == kNone ? kNone : cls[in.t[v][b]];
    }
  }
  return out;
}

}  // namespace

ClosedSet ClosedSet::canonicalize(std::uint32_t initial, Table transitions) {
  Raw raw{initial, std::move(transitions)};
  raw = trim(raw);
  raw = minimize(raw);
  if (raw.initial == kNone) return {};

  // BFS renumbering, 0-edge before 1-edge.
  const std::uint32_t n = static_cast<std::uint32_t>(raw.t.size());
  std::vector<std::uint32_t> number(n, kNone);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  number[raw.initial] = 0;
  order.push_back(raw.initial);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t v = order[head];
    for (unsigned b = 0; b < 2; ++b) {
      const std::uint32_t w = raw.t[v][b];
      if (w != kNone && number[w] == kNone) {
        number[w] = static_cast<std::uint32_t>(order.size());
        order.push_back(w);
      }
    }
  }

  ClosedSet out;
  out.transitions_.assign(order.size(), {kNone, kNone});
  for (std::uint32_t v : order) {
    for (unsigned b = 0; b < 2; ++b) {
      const std::uint32_t w = raw.t[v][b];
      out.transitions_[number[v]][b] = w == kNone ? kNone : number[w];
    }
  }
  return out;
}

ClosedSet full_space() {
  Table t{{0, 0}};
  return ClosedSet::canonicalize(0, std::move(t));
}

ClosedSet empty_closed() { return {}; }

ClosedSet cylinder(std::string_view w) {
  if (!is_bit_string(w)) throw argument_error("cylinder: prefix must be a bit string");
  const std::uint32_t m = static_cast<std::uint32_t>(w.size());
  Table t(m + 1, {kNone, kNone});
  for (std::uint32_t i = 0; i < m; ++i) t[i][w[i] - '0'] = i + 1;
  t[m] = {m, m};
  return ClosedSet::canonicalize(0, std::move(t));
}

ClosedSet up_singleton(const UpPoint& p) {
  const std::uint32_t s = static_cast<std::uint32_t>(p.stem().size());
  const std::uint32_t c = static_cast<std::uint32_t>(p.cycle().size());
  Table t(s + c, {kNone, kNone});
  for (std::uint32_t i = 0; i < s; ++i) t[i][p.stem()[i] - '0'] = i + 1;
  for (std::uint32_t j = 0; j < c; ++j) t[s + j][p.cycle()[j] - '0'] = s + (j + 1) % c;
  return ClosedSet::canonicalize(0, std::move(t));
}

ClosedSet up_singleton(std::string_view stem, std::string_view cycle) {
  return up_singleton(UpPoint(stem, cycle));
}

ClosedSet no_factor(std::string_view w) {
  if (!is_bit_string(w)) throw argument_error("no_factor: factor must be a bit string");
  if (w.empty()) return {};  // the empty word is a factor of everything
  const std::uint32_t m = static_cast<std::uint32_t>(w.size());

  // KMP failure function; state i = length of the longest suffix of the
  // input matching a prefix of w. Reaching length m is the forbidden match,
  // modeled as an absent transition.
  std::vector<std::uint32_t> fail(m + 1, 0);
  for (std::uint32_t i = 1; i < m; ++i) {
    std::uint32_t k = fail[i];
    while (k > 0 && w[i] != w[k]) k = fail[k];
    fail[i + 1] = w[i] == w[k] ? k + 1 : 0;
  }

  Table t(m, {kNone, kNone});
  for (std::uint32_t i = 0; i < m; ++i) {
    for (unsigned b = 0; b < 2; ++b) {
      const char c = static_cast<char>('0' + b);
      std::uint32_t k = i;
      while (k > 0 && w[k] != c) k = fail[k];
      if (w[k] == c) ++k;
      if (k < m) t[i][b] = k;
    }
  }
  return ClosedSet::canonicalize(0, std::move(t));
}

namespace {

// --- regular-expression patterns for prefix_tree ------------------------

struct RegexNode {
  enum class Kind { Epsilon, Literal, Concat, Alternate, Star };
  Kind kind;
  unsigned bit = 0;
  std::vector<RegexNode> children;
};

class RegexParser {
 public:
  explicit RegexParser(std::string_view text) : text_(text) {}

  RegexNode parse() {
    RegexNode node = alternation();
    if (pos_ != text_.size()) fail("unexpected character in pattern");
    return node;
  }

 private:
  RegexNode alternation() {
    RegexNode node{RegexNode::Kind::Alternate, 0, {concatenation()}};
    while (peek() == '|') {
      ++pos_;
      node.children.push_back(concatenation());
    }
    if (node.children.size() == 1) return std::move(node.children.front());
    return node;
  }

  RegexNode concatenation() {
    RegexNode node{RegexNode::Kind::Concat, 0, {}};
    while (true) {
      skip_space();
      const char c = peek();
      if (c == '\0' || c == '|' || c == ')') break;
      node.children.push_back(starred());
    }
    if (node.children.empty()) return RegexNode{RegexNode::Kind::Epsilon, 0, {}};
    if (node.children.size() == 1) return std::move(node.children.front());
    return node;
  }

  RegexNode starred() {
    RegexNode node = atom();
    skip_space();
    while (peek() == '*') {
      ++pos_;
      node = RegexNode{RegexNode::Kind::Star, 0, {std::move(node)}};
      skip_space();
    }
    return node;
  }

  RegexNode atom() {
    skip_space();
    const char c = peek();
    if (c == '0' || c == '1') {
      ++pos_;
      return RegexNode{RegexNode::Kind::Literal, static_cast<unsigned>(c - '0'), {}};
    }
    if (c == '(') {
      ++pos_;
      RegexNode inner = alternation();
      skip_space();
      if (peek() != ')') fail("expected ')' in pattern");
      ++pos_;
      return inner;
    }
    fail("expected '0', '1' or '(' in pattern");
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& message) {
    throw parse_error(message, 1, pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Nfa {
  // Per state: epsilon successors and letter successors.
  std::vector<std::vector<std::uint32_t>> eps;
  std::vector<std::array<std::vector<std::uint32_t>, 2>> step;

  std::uint32_t add_state() {
    eps.emplace_back();
    step.emplace_back();
    return static_cast<std::uint32_t>(eps.size() - 1);
  }
};

struct Fragment {
  std::uint32_t start;
  std::uint32_t accept;
};

Fragment thompson(Nfa& nfa, const RegexNode& node) {
  switch (node.kind) {
    case RegexNode::Kind::Epsilon: {
      const std::uint32_t s = nfa.add_state();
      const std::uint32_t a = nfa.add_state();
      nfa.eps[s].push_back(a);
      return {s, a};
    }
    case RegexNode::Kind::Literal: {
      const std::uint32_t s = nfa.add_state();
      const std::uint32_t a = nfa.add_state();
      nfa.step[s][node.bit].push_back(a);
      return {s, a};
    }
    case RegexNode::Kind::Concat: {
      Fragment f = thompson(nfa, node.children.front());
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        const Fragment g = thompson(nfa, node.children[i]);
        nfa.eps[f.accept].push_back(g.start);
        f.accept = g.accept;
      }
      return f;
    }
    case RegexNode::Kind::Alternate: {
      const std::uint32_t s = nfa.add_state();
      const std::uint32_t a = nfa.add_state();
      for (const RegexNode& child : node.children) {
        const Fragment g = thompson(nfa, child);
        nfa.eps[s].push_back(g.start);
        nfa.eps[g.accept].push_back(a);
      }
      return {s, a};
    }
    case RegexNode::Kind::Star: {
      const Fragment g = thompson(nfa, node.children.front());
      const std::uint32_t s = nfa.add_state();
      const std::uint32_t a = nfa.add_state();
      nfa.eps[s].push_back(g.start);
      nfa.eps[s].push_back(a);
      nfa.eps[g.accept].push_back(g.start);
      nfa.eps[g.accept].push_back(a);
      return {s, a};
    }
  }
  throw internal_error("prefix_tree: unhandled pattern node");
}

}  // namespace

ClosedSet prefix_tree(std::string_view pattern) {
  const RegexNode ast = RegexParser(pattern).parse();
  Nfa nfa;
  const Fragment f = thompson(nfa, ast);
  const std::uint32_t n = static_cast<std::uint32_t>(nfa.eps.size());

  // States that can still reach acceptance; only those witness membership
  // in the prefix closure.
  std::vector<char> useful(n, 0);
  {
    std::vector<std::vector<std::uint32_t>> reverse(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      for (std::uint32_t w : nfa.eps[v]) reverse[w].push_back(v);
      for (unsigned b = 0; b < 2; ++b) {
        for (std::uint32_t w : nfa.step[v][b]) reverse[w].push_back(v);
      }
    }
    std::vector<std::uint32_t> queue{f.accept};
    useful[f.accept] = 1;
    while (!queue.empty()) {
      const std::uint32_t v = queue.back();
      queue.pop_back();
      for (std::uint32_t w : reverse[v]) {
        if (!useful[w]) {
          useful[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }

  const auto closure = [&](std::vector<std::uint32_t> states) {
    std::vector<char> seen(n, 0);
    for (std::uint32_t v : states) seen[v] = 1;
    for (std::size_t head = 0; head < states.size(); ++head) {
      for (std::uint32_t w : nfa.eps[states[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          states.push_back(w);
        }
      }
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t v : states) {
      if (useful[v]) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  // Subset construction; every nonempty subset is a node of the prefix
  // tree, so all subset states accept.
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  std::vector<std::vector<std::uint32_t>> subsets;
  Table t;

  const std::vector<std::uint32_t> start = closure({f.start});
  if (start.empty()) return {};
  ids.emplace(start, 0);
  subsets.push_back(start);
  t.push_back({kNone, kNone});

  for (std::size_t head = 0; head < subsets.size(); ++head) {
    for (unsigned b = 0; b < 2; ++b) {
      std::vector<std::uint32_t> moved;
      for (std::uint32_t v : subsets[head]) {
        for (std::uint32_t w : nfa.step[v][b]) moved.push_back(w);
      }
      const std::vector<std::uint32_t> target = closure(std::move(moved));
      if (target.empty()) continue;
      auto [it, inserted] = ids.emplace(target, static_cast<std::uint32_t>(subsets.size()));
      if (inserted) {
        if (subsets.size() >= state_budget()) {
          throw resource_error("prefix_tree: state budget exceeded");
        }
        subsets.push_back(target);
        t.push_back({kNone, kNone});
      }
      t[head][b] = it->second;
    }
  }
  return ClosedSet::canonicalize(0, std::move(t));
}

namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

ClosedSet intersect_closed(const ClosedSet& a, const ClosedSet& b) {
  if (a.is_empty_set() || b.is_empty_set()) return {};

  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs{{0, 0}};
  ids.emplace(pair_key(0, 0), 0);
  Table t{{kNone, kNone}};

  for (std::size_t head = 0; head < pairs.size(); ++head) {
    const auto [qa, qb] = pairs[head];
    for (unsigned bit = 0; bit < 2; ++bit) {
      const std::uint32_t na = a.next(qa, bit);
      const std::uint32_t nb = b.next(qb, bit);
      if (na == kNone || nb == kNone) continue;
      auto [it, inserted] =
          ids.emplace(pair_key(na, nb), static_cast<std::uint32_t>(pairs.size()));
      if (inserted) {
        if (pairs.size() >= state_budget()) {
          throw resource_error("intersect_closed: state budget exceeded");
        }
        pairs.emplace_back(na, nb);
        t.push_back({kNone, kNone});
      }
      t[head][bit] = it->second;
    }
  }
  return ClosedSet::canonicalize(0, std::move(t));
}

ClosedSet union_closed(const ClosedSet& a, const ClosedSet& b) {
  if (a.is_empty_set()) return b;
  if (b.is_empty_set()) return a;

  // Product over (state or dead) pairs with at least one side alive; the
  // union of pruned trees has the union as its body.
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs{{0, 0}};
  ids.emplace(pair_key(0, 0), 0);
  Table t{{kNone, kNone}};

  for (std::size_t head = 0; head < pairs.size(); ++head) {
    const auto [qa, qb] = pairs[head];
    for (unsigned bit = 0; bit < 2; ++bit) {
      const std::uint32_t na = qa == kNone ? kNone : a.next(qa, bit);
      const std::uint32_t nb = qb == kNone ? kNone : b.next(qb, bit);
      if (na == kNone && nb == kNone) continue;
      auto [it, inserted] =
          ids.emplace(pair_key(na, nb), static_cast<std::uint32_t>(pairs.size()));
      if (inserted) {
        if (pairs.size() >= state_budget()) {
          throw resource_error("union_closed: state budget exceeded");
        }
        pairs.emplace_back(na, nb);
        t.push_back({kNone, kNone});
      }
      t[head][bit] = it->second;
    }
  }
  return ClosedSet::canonicalize(0, std::move(t));
}

bool subset_closed(const ClosedSet& a, const ClosedSet& b) {
  if (a.is_empty_set()) return true;
  if (b.is_empty_set()) return false;

  // Search for a path alive in a that escapes b; on trimmed automata every
  // such prefix extends to a point of [a] outside [b].
  std::set<std::uint64_t> seen{pair_key(0, 0)};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{0, 0}};
  while (!queue.empty()) {
    const auto [qa, qb] = queue.back();
    queue.pop_back();
    for (unsigned bit = 0; bit < 2; ++bit) {
      const std::uint32_t na = a.next(qa, bit);
      if (na == kNone) continue;
      const std::uint32_t nb = b.next(qb, bit);
      if (nb == kNone) return false;
      if (seen.insert(pair_key(na, nb)).second) queue.emplace_back(na, nb);
    }
  }
  return true;
}

bool member_up_closed(const ClosedSet& c, const UpPoint& p) {
  if (c.is_empty_set()) return false;
  std::uint32_t state = 0;
  for (char ch : p.stem()) {
    state = c.next(state, ch - '0');
    if (state == kNone) return false;
  }
  // Iterate the cycle until a state repeats at a cycle boundary.
  std::set<std::uint32_t> seen{state};
  while (true) {
    for (char ch : p.cycle()) {
      state = c.next(state, ch - '0');
      if (state == kNone) return false;
    }
    if (!seen.insert(state).second) return true;
  }
}

ClosedSet derivative(const ClosedSet& c) {
  if (c.is_empty_set()) return c;
  const std::uint32_t n = c.state_count();

  // A point is isolated iff its run enters a state from which no branching
  // state is reachable; those unique-path states are removed.
  Table t(n);
  std::vector<char> branching(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    t[v] = {c.next(v, 0), c.next(v, 1)};
    branching[v] = t[v][0] != kNone && t[v][1] != kNone;
  }
  const std::vector<char> keep = detail::reaches(t, branching);

  Table out(n, {kNone, kNone});
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    for (unsigned b = 0; b < 2; ++b) {
      const std::uint32_t w = t[v][b];
      if (w != kNone && keep[w]) out[v][b] = w;
    }
  }
  if (!keep[0]) return {};
  return ClosedSet::canonicalize(0, std::move(out));
}

// Kernel by state analysis: keep exactly the states from which the set of
// continuations is uncountable, i.e. the states reaching a component that
// contains a vertex with both out-edges inside the component.
ClosedSet kernel_by_state_analysis(const ClosedSet& c) {
  if (c.is_empty_set()) return c;
  const std::uint32_t n = c.state_count();
  Table t(n);
  for (std::uint32_t v = 0; v < n; ++v) t[v] = {c.next(v, 0), c.next(v, 1)};

  const detail::SccResult scc = detail::strongly_connected(t);
  std::vector<char> branching_component(scc.count, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (t[v][0] != kNone && t[v][1] != kNone &&
        scc.component[t[v][0]] == scc.component[v] &&
        scc.component[t[v][1]] == scc.component[v]) {
      branching_component[scc.component[v]] = 1;
    }
  }
  std::vector<char> seed(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) seed[v] = branching_component[scc.component[v]];
  const std::vector<char> keep = detail::reaches(t, seed);

  if (!keep[0]) return {};
  Table out(n, {kNone, kNone});
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    for (unsigned b = 0; b < 2; ++b) {
      const std::uint32_t w = t[v][b];
      if (w != kNone && keep[w]) out[v][b] = w;
    }
  }
  return ClosedSet::canonicalize(0, std::move(out));
}

ClosedSet kernel_by_derivative_fixpoint(const ClosedSet& c) {
  ClosedSet current = c;
  while (true) {
    ClosedSet next = derivative(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

ClosedSet perfect_kernel(const ClosedSet& c) {
  ClosedSet by_derivatives = kernel_by_derivative_fixpoint(c);
  const ClosedSet by_states = kernel_by_state_analysis(c);
  if (by_derivatives != by_states) {
    throw internal_error("perfect_kernel: derivative fixpoint and state analysis disagree");
  }
  return by_derivatives;
}

unsigned cb_rank(const ClosedSet& c) {
  unsigned rank = 0;
  ClosedSet current = c;
  while (true) {
    ClosedSet next = derivative(current);
    if (next == current) return rank;
    current = std::move(next);
    ++rank;
  }
}

bool is_countable_closed(const ClosedSet& c) { return perfect_kernel(c).is_empty_set(); }

}  // namespace modc
