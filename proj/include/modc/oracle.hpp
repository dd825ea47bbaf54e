#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modc/closed_set.hpp"
#include "modc/delta02.hpp"
#include "modc/up_point.hpp"

namespace modc {

// All canonical ultimately periodic points with stem length at most
// max_stem and cycle length at most max_cycle, in lexicographic order of
// (stem, cycle).
std::vector<UpPoint> enumerate_up(std::size_t max_stem, std::size_t max_cycle);

// Brute-force equality: do the two sets agree on every ultimately periodic
// point whose stem and cycle lengths are bounded by the number of states of
// the combined product automaton of all components of both sets? Two
// distinct sets of this class always differ on such a bounded point, so
// agreement decides equality. Independent of the product/stratum decision
// procedures: works by enumerating stem states and cycle-word behaviors.
// On disagreement a separating point is stored through `witness` if given.
bool oracle_equals(const Delta02Set& a, const Delta02Set& b, UpPoint* witness = nullptr);

// Deterministic generator state (splitmix64); identical seeds produce
// identical values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  bool coin() { return next() & 1u; }

  std::string bit_string(std::size_t length) {
    std::string out(length, '0');
    for (char& c : out) c = coin() ? '1' : '0';
    return out;
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream from (seed, stream index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Random nonempty canonical closed set (random partial table, trimmed and
// canonicalized; empties rejected).
ClosedSet random_closed(std::uint64_t seed, std::uint32_t max_states);

// Random normalized set with at most max_components components.
Delta02Set random_delta02(std::uint64_t seed, std::uint32_t max_components,
                          std::uint32_t max_states);

// Random countable set, built countable by construction: a union of up to
// max_terms ultimately periodic singletons and layered-lasso closed sets
// (chains of simple cycles with forward exits), each verified countable.
Delta02Set random_countable(std::uint64_t seed, std::uint32_t max_terms);

enum class Suite { Algebra, Closure, Lemma, Chain, Star, Theorem, Oracle };

std::optional<Suite> suite_from_name(std::string_view name);
std::string suite_name(Suite suite);

struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  // Serialized inputs of the first failing case, if any.
  std::optional<std::string> counterexample;
};

// Runs the named invariant suite on `cases` seeded instances.
SuiteReport run_suite(Suite suite, std::uint64_t cases, std::uint64_t seed);

}  // namespace modc
