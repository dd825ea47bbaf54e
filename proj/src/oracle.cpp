#include "modc/oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "modc/errors.hpp"
#include "modc/hierarchy.hpp"
#include "modc/io.hpp"
#include "modc/selector.hpp"

namespace modc {

std::vector<UpPoint> enumerate_up(std::size_t max_stem, std::size_t max_cycle) {
  if (max_cycle == 0) throw argument_error("enumerate_up: max_cycle must be positive");
  std::vector<UpPoint> out;
  for (std::size_t sl = 0; sl <= max_stem; ++sl) {
    for (std::uint64_t sm = 0; sm < (std::uint64_t{1} << sl); ++sm) {
      std::string stem(sl, '0');
      for (std::size_t i = 0; i < sl; ++i) {
        if ((sm >> i) & 1u) stem[i] = '1';
      }
      for (std::size_t cl = 1; cl <= max_cycle; ++cl) {
        for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << cl); ++cm) {
          std::string cycle(cl, '0');
          for (std::size_t i = 0; i < cl; ++i) {
            if ((cm >> i) & 1u) cycle[i] = '1';
          }
          out.emplace_back(stem, cycle);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

constexpr std::uint32_t kNone = ClosedSet::kNoTransition;

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

bool oracle_equals(const Delta02Set& a, const Delta02Set& b, UpPoint* witness) {
  const std::size_t ka = a.component_count();
  const std::size_t kb = b.component_count();
  const std::size_t k = ka + kb;

  // Per-component total step tables; state n_i is an absorbing dead sink.
  std::vector<std::uint32_t> size(k);
  std::vector<std::vector<std::array<std::uint32_t, 2>>> step(k);
  for (std::size_t i = 0; i < k; ++i) {
    const ClosedSet& c = i < ka ? a.component(i) : b.component(i - ka);
    const std::uint32_t n = c.state_count();
    size[i] = n + 1;
    step[i].assign(n + 1, {n, n});
    for (std::uint32_t q = 0; q < n; ++q) {
      for (unsigned bit = 0; bit < 2; ++bit) {
        const std::uint32_t to = c.next(q, bit);
        step[i][q][bit] = to == kNone ? n : to;
      }
    }
  }

  // Stems: every reachable tuple of the combined product is reached by a
  // stem no longer than the product state count, and the membership of
  // stem.cycle^w depends on the stem only through its tuple.
  std::vector<std::vector<std::uint32_t>> tuples;
  std::vector<std::pair<std::uint32_t, unsigned>> stem_edge;  // (parent, letter)
  {
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> ids;
    std::vector<std::uint32_t> root(k, 0);
    ids.emplace(root, 0);
    tuples.push_back(std::move(root));
    stem_edge.emplace_back(kNone, 0);
    for (std::size_t head = 0; head < tuples.size(); ++head) {
      for (unsigned bit = 0; bit < 2; ++bit) {
        std::vector<std::uint32_t> target(k);
        for (std::size_t i = 0; i < k; ++i) target[i] = step[i][tuples[head][i]][bit];
        auto [it, inserted] =
            ids.emplace(target, static_cast<std::uint32_t>(tuples.size()));
        if (inserted) {
          if (tuples.size() >= state_budget()) {
            throw resource_error("oracle_equals: state budget exceeded");
          }
          tuples.push_back(std::move(target));
          stem_edge.emplace_back(static_cast<std::uint32_t>(head), bit);
        }
      }
    }
  }
  const std::size_t bound = tuples.size();

  const auto stem_word = [&](std::uint32_t t) {
    std::string word;
    while (stem_edge[t].first != kNone) {
      word += static_cast<char>('0' + stem_edge[t].second);
      t = stem_edge[t].first;
    }
    std::reverse(word.begin(), word.end());
    return word;
  };

  // Cycles: the verdict at (tuple, v^w) depends on v only through the
  // per-component transition functions of v, so cycle words up to the
  // bound are explored as elements of the transition monoid, breadth
  // first by word length.
  std::size_t total_size = 0;
  std::vector<std::size_t> offset(k);
  for (std::size_t i = 0; i < k; ++i) {
    offset[i] = total_size;
    total_size += size[i];
  }
  using Element = std::vector<std::uint32_t>;  // concatenated per-component maps

  Element identity(total_size);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint32_t q = 0; q < size[i]; ++q) identity[offset[i] + q] = q;
  }
  const auto extend = [&](const Element& e, unsigned bit) {
    Element out(total_size);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::uint32_t q = 0; q < size[i]; ++q) {
        out[offset[i] + q] = step[i][e[offset[i] + q]][bit];
      }
    }
    return out;
  };

  std::unordered_map<Element, std::uint32_t, VecHash> seen;
  std::vector<Element> elements{identity};
  std::vector<std::pair<std::uint32_t, unsigned>> cycle_edge{{kNone, 0}};
  std::vector<std::size_t> depth{0};
  seen.emplace(identity, 0);

  const auto cycle_word = [&](std::uint32_t e) {
    std::string word;
    while (cycle_edge[e].first != kNone) {
      word += static_cast<char>('0' + cycle_edge[e].second);
      e = cycle_edge[e].first;
    }
    std::reverse(word.begin(), word.end());
    return word;
  };

  std::vector<char> survive(total_size);
  const std::uint32_t mask_a = ka == 0 ? 0u : (1u << ka) - 1u;

  // Checks agreement at every reachable tuple for the cycle behavior e;
  // `word` is a nonempty cycle word realizing e.
  const auto check = [&](const Element& e, const std::string& word) -> bool {
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t dead = size[i] - 1;
      for (std::uint32_t q = 0; q < size[i]; ++q) {
        // The orbit of q enters its cycle within size[i] steps; the run of
        // v^w from q survives iff the orbit never touches the dead sink.
        std::uint32_t r = q;
        bool alive = true;
        for (std::uint32_t s = 0; s <= size[i] && alive; ++s) {
          if (r == dead) alive = false;
          r = e[offset[i] + r];
        }
        survive[offset[i] + q] = alive;
      }
    }
    for (std::uint32_t t = 0; t < tuples.size(); ++t) {
      std::uint32_t flags = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (survive[offset[i] + tuples[t][i]]) flags |= 1u << i;
      }
      const bool in_a = a.condition_at(flags & mask_a);
      const bool in_b = b.condition_at(flags >> ka);
      if (in_a != in_b) {
        if (witness != nullptr) {
          *witness = UpPoint(stem_word(t), word);
        }
        return false;
      }
    }
    return true;
  };

  std::vector<char> checked{0};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    if (depth[head] >= bound) continue;
    for (unsigned bit = 0; bit < 2; ++bit) {
      Element child = extend(elements[head], bit);
      const auto it = seen.find(child);
      std::uint32_t id;
      if (it == seen.end()) {
        id = static_cast<std::uint32_t>(elements.size());
        if (elements.size() >= state_budget()) {
          throw resource_error("oracle_equals: transition monoid budget exceeded");
        }
        seen.emplace(child, id);
        elements.push_back(std::move(child));
        cycle_edge.emplace_back(static_cast<std::uint32_t>(head), bit);
        depth.push_back(depth[head] + 1);
        checked.push_back(0);
      } else {
        id = it->second;
      }
      if (!checked[id]) {
        checked[id] = 1;
        // The element may have been discovered as the identity at depth
        // zero; realize it by the word that produced this visit.
        const std::string word = cycle_word(static_cast<std::uint32_t>(head)) +
                                 static_cast<char>('0' + bit);
        if (!check(elements[id], word)) return false;
      }
    }
  }
  return true;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  Rng rng(seed ^ (0x517cc1b727220a95ull * (stream + 1)));
  return rng.next();
}

ClosedSet random_closed(std::uint64_t seed, std::uint32_t max_states) {
  if (max_states == 0) throw argument_error("random_closed: max_states must be positive");
  Rng rng(derive_seed(seed, 0x636c6f7365ull));
  for (int attempt = 0; attempt < 256; ++attempt) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(max_states));
    std::vector<std::array<std::uint32_t, 2>> t(n, {kNone, kNone});
    for (std::uint32_t q = 0; q < n; ++q) {
      for (unsigned bit = 0; bit < 2; ++bit) {
        if (rng.below(4) != 0) {
          t[q][bit] = static_cast<std::uint32_t>(rng.below(n));
        }
      }
    }
    ClosedSet c = ClosedSet::canonicalize(0, std::move(t));
    if (!c.is_empty_set()) return c;
  }
  throw generator_error("random_closed: rejection limit exceeded");
}

Delta02Set random_delta02(std::uint64_t seed, std::uint32_t max_components,
                          std::uint32_t max_states) {
  Rng rng(derive_seed(seed, 0x64656c7461ull));
  const std::uint32_t k = static_cast<std::uint32_t>(rng.below(max_components + 1));
  std::vector<ClosedSet> components;
  components.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    components.push_back(random_closed(rng.next(), max_states));
  }
  std::vector<bool> condition(std::size_t{1} << k);
  for (std::size_t m = 0; m < condition.size(); ++m) condition[m] = rng.coin();
  return Delta02Set::from_parts(std::move(components), std::move(condition));
}

namespace {

// A chain of simple cycles with forward exits; every strongly connected
// component is a single cycle, so the body is countable.
ClosedSet random_layered_lasso(Rng& rng) {
  const std::uint32_t layers = 1 + static_cast<std::uint32_t>(rng.below(2));
  std::vector<std::uint32_t> length(layers);
  std::vector<std::uint32_t> start(layers);
  std::uint32_t total = 0;
  for (std::uint32_t l = 0; l < layers; ++l) {
    length[l] = 1 + static_cast<std::uint32_t>(rng.below(3));
    start[l] = total;
    total += length[l];
  }
  std::vector<std::array<std::uint32_t, 2>> t(total, {kNone, kNone});
  for (std::uint32_t l = 0; l < layers; ++l) {
    for (std::uint32_t i = 0; i < length[l]; ++i) {
      const std::uint32_t q = start[l] + i;
      const unsigned loop_bit = rng.coin() ? 1 : 0;
      t[q][loop_bit] = start[l] + (i + 1) % length[l];
      if (l + 1 < layers && rng.coin()) {
        t[q][1 - loop_bit] = start[l + 1] +
                             static_cast<std::uint32_t>(rng.below(length[l + 1]));
      }
    }
  }
  return ClosedSet::canonicalize(0, std::move(t));
}

}  // namespace

Delta02Set random_countable(std::uint64_t seed, std::uint32_t max_terms) {
  if (max_terms == 0) throw argument_error("random_countable: max_terms must be positive");
  Rng rng(derive_seed(seed, 0x636e74ull));
  const std::uint32_t terms = 1 + static_cast<std::uint32_t>(rng.below(max_terms));
  Delta02Set out = Delta02Set::constant(false);
  for (std::uint32_t term = 0; term < terms; ++term) {
    ClosedSet c;
    if (rng.coin()) {
      const std::string stem = rng.bit_string(rng.below(4));
      const std::string cycle = rng.bit_string(1 + rng.below(3));
      c = up_singleton(stem, cycle);
    } else {
      c = random_layered_lasso(rng);
    }
    if (!is_countable_closed(c)) {
      throw generator_error("random_countable: generated term is not countable");
    }
    out = combine(SetOp::Union, out, lift(c));
  }
  return out;
}

std::optional<Suite> suite_from_name(std::string_view name) {
  if (name == "algebra") return Suite::Algebra;
  if (name == "closure") return Suite::Closure;
  if (name == "lemma") return Suite::Lemma;
  if (name == "chain") return Suite::Chain;
  if (name == "star") return Suite::Star;
  if (name == "theorem") return Suite::Theorem;
  if (name == "oracle") return Suite::Oracle;
  return std::nullopt;
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::Algebra: return "algebra";
    case Suite::Closure: return "closure";
    case Suite::Lemma: return "lemma";
    case Suite::Chain: return "chain";
    case Suite::Star: return "star";
    case Suite::Theorem: return "theorem";
    case Suite::Oracle: return "oracle";
  }
  return "?";
}

namespace {

struct CaseFailure {
  std::string property;
  Json inputs;
};

using CaseCheck = std::optional<CaseFailure> (*)(std::uint64_t);

std::optional<CaseFailure> algebra_case(std::uint64_t seed) {
  const ClosedSet c1 = random_closed(derive_seed(seed, 1), 5);
  const ClosedSet c2 = random_closed(derive_seed(seed, 2), 5);
  const ClosedSet c3 = random_closed(derive_seed(seed, 3), 5);
  const Delta02Set s1 = random_delta02(derive_seed(seed, 4), 3, 4);
  const Delta02Set s2 = random_delta02(derive_seed(seed, 5), 3, 4);
  const Delta02Set s3 = random_delta02(derive_seed(seed, 6), 3, 4);

  const auto fail = [&](const std::string& property) {
    return CaseFailure{property,
                       Json{{"c1", to_json(c1)},
                            {"c2", to_json(c2)},
                            {"c3", to_json(c3)},
                            {"s1", to_json(s1)},
                            {"s2", to_json(s2)},
                            {"s3", to_json(s3)}}};
  };

  if (union_closed(c1, c2) != union_closed(c2, c1)) return fail("union commutative");
  if (union_closed(union_closed(c1, c2), c3) != union_closed(c1, union_closed(c2, c3))) {
    return fail("union associative");
  }
  if (union_closed(c1, c1) != c1) return fail("union idempotent");
  if (union_closed(empty_closed(), c1) != c1) return fail("union identity");
  if (intersect_closed(c1, c2) != intersect_closed(c2, c1)) {
    return fail("intersection commutative");
  }
  if (intersect_closed(intersect_closed(c1, c2), c3) !=
      intersect_closed(c1, intersect_closed(c2, c3))) {
    return fail("intersection associative");
  }
  if (intersect_closed(c1, c1) != c1) return fail("intersection idempotent");
  if (intersect_closed(full_space(), c1) != c1) return fail("intersection identity");

  if (complement(combine(SetOp::Union, s1, s2)) !=
      combine(SetOp::Intersect, complement(s1), complement(s2))) {
    return fail("De Morgan");
  }
  if (combine(SetOp::Intersect, s1, combine(SetOp::Union, s2, s3)) !=
      combine(SetOp::Union, combine(SetOp::Intersect, s1, s2),
              combine(SetOp::Intersect, s1, s3))) {
    return fail("distributivity");
  }
  if (combine(SetOp::Union, s1, combine(SetOp::Intersect, s1, s2)) != s1) {
    return fail("absorption");
  }
  if (complement(complement(s1)) != s1) return fail("complement involution");
  if (combine(SetOp::SymDiff, s1, s1) != Delta02Set::constant(false)) {
    return fail("symmetric difference with itself");
  }
  return std::nullopt;
}

std::optional<CaseFailure> closure_case(std::uint64_t seed) {
  const Delta02Set s = random_delta02(derive_seed(seed, 1), 3, 4);
  const Delta02Set extra = random_delta02(derive_seed(seed, 2), 2, 3);
  const ClosedSet cl = closure(s);

  const auto fail = [&](const std::string& property) {
    return CaseFailure{property, Json{{"s", to_json(s)}, {"extra", to_json(extra)}}};
  };

  for (const UpPoint& p : enumerate_up(4, 4)) {
    if (member_up(s, p) && !member_up_closed(cl, p)) {
      return fail("set contained in its closure");
    }
  }
  if (closure(lift(cl)) != cl) return fail("closure idempotent");
  const Delta02Set bigger = combine(SetOp::Union, s, extra);
  if (!subset_closed(cl, closure(bigger))) return fail("closure monotone");
  return std::nullopt;
}

std::optional<CaseFailure> lemma_case(std::uint64_t seed) {
  const Delta02Set s = random_delta02(derive_seed(seed, 1), 3, 4);
  const Delta02Set countable = random_countable(derive_seed(seed, 2), 3);

  const auto fail = [&](const std::string& property) {
    return CaseFailure{property,
                       Json{{"s", to_json(s)}, {"countable", to_json(countable)}}};
  };

  if (is_countable_via_closure(s) != is_countable_direct(s)) {
    return fail("countability routes agree");
  }
  if (!is_countable_closed(closure(countable))) {
    return fail("closure of a countable set is countable");
  }
  if (!is_countable(countable)) return fail("constructed set is countable");
  return std::nullopt;
}

std::optional<CaseFailure> chain_case(std::uint64_t seed) {
  const Delta02Set a = random_delta02(derive_seed(seed, 1), 3, 5);

  const auto fail = [&](const std::string& property) {
    return CaseFailure{property, Json{{"a", to_json(a)}}};
  };

  const DifferenceChain chain = decompose(a);
  if (!equals(reconstruct(chain), a)) return fail("reconstruct inverts decompose");
  if (chain.pair(0).first != full_space()) return fail("chain starts at the full space");
  for (std::size_t i = 0; i < chain.rank(); ++i) {
    const auto& [f, h] = chain.pair(i);
    if (!subset_closed(h, f)) return fail("H below F");
    if (i + 1 < chain.rank()) {
      if (!subset_closed(chain.pair(i + 1).first, h)) return fail("next F below H");
      if (chain.pair(i + 1).first == f) return fail("F strictly decreases");
    }
  }
  std::uint64_t bound = 1;
  for (const ClosedSet& c : a.components()) bound *= c.state_count() + 1;
  if (chain.rank() > bound) return fail("rank bounded by the product state count");
  return std::nullopt;
}

std::optional<CaseFailure> star_case(std::uint64_t seed) {
  const Delta02Set a = random_delta02(derive_seed(seed, 1), 2, 4);
  const Delta02Set c = random_countable(derive_seed(seed, 2), 2);
  const Delta02Set b = combine(SetOp::SymDiff, a, c);

  if (!chains_equiv_mod_countable(decompose(a), decompose(b))) {
    return CaseFailure{"chains equivalent modulo countable",
                       Json{{"a", to_json(a)}, {"c", to_json(c)}}};
  }
  return std::nullopt;
}

std::optional<CaseFailure> theorem_case(std::uint64_t seed) {
  const Delta02Set a = random_delta02(derive_seed(seed, 1), 2, 4);
  const Delta02Set c = random_countable(derive_seed(seed, 2), 2);
  const Delta02Set b = combine(SetOp::SymDiff, a, c);
  const ClosedSet closed = random_closed(derive_seed(seed, 3), 5);

  const auto fail = [&](const std::string& property) {
    return CaseFailure{property,
                       Json{{"a", to_json(a)},
                            {"c", to_json(c)},
                            {"closed", to_json(closed)}}};
  };

  const Delta02Set selected_a = select_representative(a);
  const Delta02Set selected_b = select_representative(b);
  if (!equals(selected_a, selected_b)) return fail("selector invariance");
  if (!eq_mod_countable(a, selected_a)) return fail("selector soundness");
  if (!equals(select_representative(selected_a), selected_a)) {
    return fail("selector idempotence");
  }

  // Kernel coincidence along the padded chains.
  const DifferenceChain cha = decompose(a);
  const DifferenceChain chb = decompose(b);
  const std::size_t rank = std::max(cha.rank(), chb.rank());
  const DifferenceChain pa = pad_chain(cha, rank);
  const DifferenceChain pb = pad_chain(chb, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (perfect_kernel(pa.pair(i).first) != perfect_kernel(pb.pair(i).first)) {
      return fail("F kernels coincide");
    }
    if (perfect_kernel(pa.pair(i).second) != perfect_kernel(pb.pair(i).second)) {
      return fail("H kernels coincide");
    }
  }

  const ClosedSet kernel = perfect_kernel(closed);
  if (!eq_mod_countable(lift(closed), lift(kernel))) {
    return fail("closed set equivalent to its kernel");
  }
  if (!equals(select_representative(lift(closed)), select_representative(lift(kernel)))) {
    return fail("selector constant on a closed set and its kernel");
  }
  if (!equals(select_representative(c), Delta02Set::constant(false))) {
    return fail("countable sets select to the empty set");
  }
  return std::nullopt;
}

std::optional<CaseFailure> oracle_case(std::uint64_t seed) {
  const Delta02Set s1 = random_delta02(derive_seed(seed, 1), 2, 3);
  const bool equal_pair = derive_seed(seed, 3) % 4 == 0;
  const Delta02Set s2 =
      equal_pair ? reconstruct(decompose(s1)) : random_delta02(derive_seed(seed, 2), 2, 3);

  const auto fail = [&](const std::string& property) {
    return CaseFailure{property, Json{{"s1", to_json(s1)}, {"s2", to_json(s2)}}};
  };

  if (equals(s1, s2) != oracle_equals(s1, s2)) {
    return fail("equals agrees with the enumeration oracle");
  }
  if (is_empty(s1) != oracle_equals(s1, Delta02Set::constant(false))) {
    return fail("emptiness agrees with the enumeration oracle");
  }
  return std::nullopt;
}

}  // namespace

SuiteReport run_suite(Suite suite, std::uint64_t cases, std::uint64_t seed) {
  CaseCheck check = nullptr;
  switch (suite) {
    case Suite::Algebra: check = algebra_case; break;
    case Suite::Closure: check = closure_case; break;
    case Suite::Lemma: check = lemma_case; break;
    case Suite::Chain: check = chain_case; break;
    case Suite::Star: check = star_case; break;
    case Suite::Theorem: check = theorem_case; break;
    case Suite::Oracle: check = oracle_case; break;
  }

  SuiteReport report;
  report.suite = suite_name(suite);
  report.cases = cases;
  for (std::uint64_t i = 0; i < cases; ++i) {
    const std::uint64_t case_seed = derive_seed(seed, 0x1000 + i);
    const std::optional<CaseFailure> failure = check(case_seed);
    if (!failure) {
      ++report.passed;
    } else {
      ++report.failed;
      if (!report.counterexample) {
        Json j;
        j["case"] = i;
        j["seed"] = case_seed;
        j["property"] = failure->property;
        j["inputs"] = failure->inputs;
        report.counterexample = j.dump();
      }
    }
  }
  return report;
}

}  // namespace modc
