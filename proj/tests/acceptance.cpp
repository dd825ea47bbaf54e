// Acceptance suite: one line per criterion, nonzero exit on any failure.
// The CLI transcript criterion needs the binary path (--cli PATH).

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "modc/delta02.hpp"
#include "modc/hierarchy.hpp"
#include "modc/io.hpp"
#include "modc/oracle.hpp"
#include "modc/selector.hpp"

using namespace modc;

namespace {

bool all_passed = true;

void report(int number, const std::string& name, std::uint64_t passed,
            std::uint64_t total) {
  const bool ok = passed == total;
  all_passed = all_passed && ok;
  std::printf("criterion %2d %s: %s (%llu/%llu)\n", number, ok ? "PASS" : "FAIL",
              name.c_str(), static_cast<unsigned long long>(passed),
              static_cast<unsigned long long>(total));
}

struct Invocation {
  std::string args;
  std::string expected_stdout;
  int expected_exit;
};

// Runs the CLI through the shell, capturing stdout and the exit code.
bool run_cli(const std::string& cli, const Invocation& invocation) {
  const std::string command = cli + " " + invocation.args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return false;
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (output != invocation.expected_stdout || exit_code != invocation.expected_exit) {
    std::fprintf(stderr, "transcript mismatch for: %s\n  exit %d (expected %d)\n",
                 invocation.args.c_str(), exit_code, invocation.expected_exit);
    std::fprintf(stderr, "  output:\n%s  expected:\n%s", output.c_str(),
                 invocation.expected_stdout.c_str());
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = "./modc";
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }

  // 1 + 2: reconstruction identity and chain shape on 200 random sets with
  // up to 3 components of up to 6 states.
  {
    std::uint64_t reconstruction = 0;
    std::uint64_t shape = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const Delta02Set a = random_delta02(derive_seed(9001, i), 3, 6);
      const DifferenceChain chain = decompose(a);
      if (equals(reconstruct(chain), a)) ++reconstruction;

      bool ok = chain.pair(0).first == full_space();
      for (std::size_t j = 0; j < chain.rank() && ok; ++j) {
        const auto& [f, h] = chain.pair(j);
        ok = subset_closed(h, f) && !f.is_empty_set();
        if (ok && j + 1 < chain.rank()) {
          ok = subset_closed(chain.pair(j + 1).first, h) && chain.pair(j + 1).first != f;
        }
      }
      std::uint64_t bound = 1;
      for (const ClosedSet& c : a.components()) bound *= c.state_count() + 1;
      if (ok && chain.rank() <= bound) ++shape;
    }
    report(1, "reconstruct inverts decompose", reconstruction, 200);
    report(2, "chain shape and finite rank", shape, 200);
  }

  // 3: countability routes agree on 200 random sets; the closure of each of
  // 100 constructively countable sets is countable.
  {
    std::uint64_t passed = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const Delta02Set s = random_delta02(derive_seed(9003, i), 3, 6);
      if (is_countable_via_closure(s) == is_countable_direct(s)) ++passed;
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
      const Delta02Set s = random_countable(derive_seed(9004, i), 3);
      if (is_countable_closed(closure(s))) ++passed;
    }
    report(3, "countability routes and countable closures", passed, 300);
  }

  // 4: chains of a set and a countable perturbation are pairwise
  // equivalent modulo countable, on 100 pairs.
  std::vector<std::pair<Delta02Set, Delta02Set>> pairs;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Delta02Set a = random_delta02(derive_seed(9005, i), 2, 4);
    const Delta02Set c = random_countable(derive_seed(9006, i), 2);
    pairs.emplace_back(a, combine(SetOp::SymDiff, a, c));
  }
  {
    std::uint64_t passed = 0;
    for (const auto& [a, b] : pairs) {
      if (chains_equiv_mod_countable(decompose(a), decompose(b))) ++passed;
    }
    report(4, "chains equivalent modulo countable", passed, 100);
  }

  // 5: the selector is invariant on the same pairs and sound on the left
  // member; 200 checks.
  std::vector<Delta02Set> selected;
  {
    std::uint64_t passed = 0;
    for (const auto& [a, b] : pairs) {
      const Delta02Set sa = select_representative(a);
      selected.push_back(sa);
      if (equals(sa, select_representative(b))) ++passed;
      if (eq_mod_countable(a, sa)) ++passed;
    }
    report(5, "selector invariance and soundness", passed, 200);
  }

  // 6: the selector is idempotent on the 100 left members.
  {
    std::uint64_t passed = 0;
    for (const Delta02Set& sa : selected) {
      if (equals(select_representative(sa), sa)) ++passed;
    }
    report(6, "selector idempotence", passed, 100);
  }

  // 7: kernel algorithms agree on 300 random closed sets of up to 10
  // states, and the worked rank values hold.
  {
    std::uint64_t passed = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
      const ClosedSet c = random_closed(derive_seed(9007, i), 10);
      if (kernel_by_derivative_fixpoint(c) == kernel_by_state_analysis(c)) ++passed;
    }
    std::uint64_t ranks = 0;
    if (cb_rank(full_space()) == 0) ++ranks;
    if (cb_rank(up_singleton("", "0")) == 1) ++ranks;
    if (cb_rank(prefix_tree("0* | 0*10*")) == 2) ++ranks;
    report(7, "kernel algorithms agree, worked ranks", passed + ranks, 303);
  }

  // 8: the equality decision agrees with the enumeration oracle on 200
  // random pairs (every fourth pair equal by construction).
  {
    std::uint64_t passed = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const Delta02Set a = random_delta02(derive_seed(9008, i), 2, 3);
      const Delta02Set b = i % 4 == 0 ? reconstruct(decompose(a))
                                      : random_delta02(derive_seed(9009, i), 2, 3);
      if (equals(a, b) == oracle_equals(a, b)) ++passed;
    }
    report(8, "equality agrees with the enumeration oracle", passed, 200);
  }

  // 9: golden command-line transcript, byte-identical output and exit codes.
  {
    const std::vector<Invocation> transcript = {
        {"select -e 'pt(0,0) ^ cyl(0)'",
         "states: 2\ninitial: 0\n0 -0-> 1\n1 -0-> 1\n1 -1-> 1\n", 0},
        {"equiv -e 'full' -f 'full \\ pt(0,0)' --mod-countable", "true\n", 0},
        {"countable -e 'nofactor(11)'", "false\n", 1},
        {"eval -e 'cyl(0) | cyl(1)'", "states: 1\ninitial: 0\n0 -0-> 0\n0 -1-> 0\n", 0},
        {"eval -e 'full \\ pt(0,0)' --json",
         "{\"components\":[{\"states\":1,\"initial\":0,\"edges\":[[0,0,0]]}],"
         "\"condition\":[\"0\"]}\n",
         0},
        {"decompose -e 'pt(e,0)'",
         "rank: 2\n"
         "F[0]\nstates: 1\ninitial: 0\n0 -0-> 0\n0 -1-> 0\n"
         "H[0]\nstates: 1\ninitial: 0\n0 -0-> 0\n0 -1-> 0\n"
         "F[1]\nstates: 1\ninitial: 0\n0 -0-> 0\n"
         "H[1]\nstates: 0\ninitial: none\n",
         0},
        {"member -e 'nofactor(11)' -u 1 -v 10", "false\n", 1},
        {"member -e 'nofactor(11)' -u 0 -v 01", "true\n", 0},
        {"kernel -e 'cyl(0) | pt(1,1)'",
         "states: 2\ninitial: 0\n0 -0-> 1\n1 -0-> 1\n1 -1-> 1\n", 0},
        {"derivative -e 'tree(0* | 0*10*)'", "states: 1\ninitial: 0\n0 -0-> 0\n", 0},
        {"rank -e 'tree(0* | 0*10*)'", "2\n", 0},
        {"eval -e 'cyl(0)' --dot",
         "digraph closed_set {\n  rankdir=LR;\n  node [shape=circle];\n"
         "  0 [shape=doublecircle];\n  0 -> 1 [label=\"0\"];\n"
         "  1 -> 1 [label=\"0\"];\n  1 -> 1 [label=\"1\"];\n}\n",
         0},
        {"eval -e 'pt(,0)'", "", 2},
        {"closure -e 'full \\ pt(0,0)'", "states: 1\ninitial: 0\n0 -0-> 0\n0 -1-> 0\n", 0},
        {"equiv -e 'cyl(0)' -f 'cyl(1)' --mod-countable", "false\n", 1},
        {"eval -e 'let P = nofactor(11); P & !cyl(1)'",
         "states: 2\ninitial: 0\n0 -0-> 1\n1 -0-> 1\n1 -1-> 0\n", 0},
        {"kernel -e 'full \\ pt(0,0)'", "", 2},
        {"check --suite algebra --cases 5 --seed 42",
         "suite: algebra\ncases: 5\npassed: 5\nfailed: 0\n", 0},
    };
    std::uint64_t passed = 0;
    for (const Invocation& invocation : transcript) {
      if (run_cli(cli, invocation)) ++passed;
    }
    report(9, "golden command-line transcript", passed, transcript.size());
  }

  // 10: countable sets select to the empty set, 50 instances.
  {
    std::uint64_t passed = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
      const Delta02Set c = random_countable(derive_seed(9010, i), 3);
      if (equals(select_representative(c), Delta02Set::constant(false))) ++passed;
    }
    report(10, "countable sets select to the empty set", passed, 50);
  }

  if (!all_passed) {
    std::puts("acceptance: FAILURES");
    return 1;
  }
  std::puts("acceptance: all criteria passed");
  return 0;
}
