#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "modc/errors.hpp"
#include "modc/expr.hpp"
#include "modc/hierarchy.hpp"
#include "modc/io.hpp"
#include "modc/oracle.hpp"
#include "modc/selector.hpp"

namespace {

// Exit codes: 0 success/true, 1 predicate false or suite failure,
// 2 parse/argument error, 3 resource limit, 4 internal assertion failure.

modc::Delta02Set compile_argument(const std::string& text) {
  return modc::compile(modc::parse_script(text));
}

// Commands operating on closed sets insist that the expression denotes one.
modc::ClosedSet compile_closed(const std::string& text) {
  const modc::Delta02Set s = compile_argument(text);
  modc::ClosedSet c = modc::closure(s);
  if (!modc::equals(s, modc::lift(c))) {
    throw modc::argument_error("expression does not denote a closed set");
  }
  return c;
}

void print_closed(const modc::ClosedSet& c, bool as_json, bool as_dot) {
  if (as_json) {
    std::cout << modc::to_json(c).dump() << "\n";
  } else if (as_dot) {
    std::cout << modc::to_dot(c);
  } else {
    std::cout << modc::to_text(c);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Decision procedures and a canonical selector for Boolean "
               "combinations of regular closed subsets of Cantor space"};
  app.require_subcommand(1);

  std::uint64_t max_states = modc::state_budget();
  app.add_option("--max-states", max_states,
                 "State budget for product constructions");

  std::string expr_text;
  std::string second_text;
  std::string stem_text;
  std::string cycle_text;
  bool as_json = false;
  bool as_dot = false;
  bool mod_countable = false;
  bool with_report = false;
  std::string suite_name;
  std::uint64_t suite_cases = 100;
  std::uint64_t suite_seed = 0;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression and print the set");
  eval->add_option("-e,--expr", expr_text, "Set expression")->required();
  eval->add_flag("--json", as_json, "Print the JSON encoding");
  eval->add_flag("--dot", as_dot, "Print Graphviz DOT");

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "Print the canonical difference chain");
  decompose_cmd->add_option("-e,--expr", expr_text, "Set expression")->required();
  decompose_cmd->add_flag("--json", as_json, "Print the JSON encoding");

  CLI::App* select_cmd =
      app.add_subcommand("select", "Print the selected representative modulo countable");
  select_cmd->add_option("-e,--expr", expr_text, "Set expression")->required();
  select_cmd->add_flag("--json", as_json, "Print the JSON encoding");
  select_cmd->add_flag("--report", with_report,
                       "Print the full selection report (chain, kernels, selected) as JSON");

  CLI::App* equiv = app.add_subcommand("equiv", "Compare two expressions");
  equiv->add_option("-e,--expr", expr_text, "First expression")->required();
  equiv->add_option("-f,--other", second_text, "Second expression")->required();
  equiv->add_flag("--mod-countable", mod_countable, "Compare modulo countable sets");

  CLI::App* countable = app.add_subcommand("countable", "Decide countability");
  countable->add_option("-e,--expr", expr_text, "Set expression")->required();

  CLI::App* member = app.add_subcommand(
      "member", "Decide membership of the ultimately periodic point stem.cycle^w");
  member->add_option("-e,--expr", expr_text, "Set expression")->required();
  member->add_option("-u,--stem", stem_text, "Stem bits (e or empty for the empty stem)")
      ->required();
  member->add_option("-v,--cycle", cycle_text, "Cycle bits (nonempty)")->required();

  CLI::App* closure_cmd = app.add_subcommand("closure", "Print the topological closure");
  closure_cmd->add_option("-e,--expr", expr_text, "Set expression")->required();
  closure_cmd->add_flag("--json", as_json, "Print the JSON encoding");
  closure_cmd->add_flag("--dot", as_dot, "Print Graphviz DOT");

  CLI::App* kernel = app.add_subcommand(
      "kernel", "Print the perfect kernel of a closed expression");
  kernel->add_option("-e,--expr", expr_text, "Closed set expression")->required();
  kernel->add_flag("--json", as_json, "Print the JSON encoding");
  kernel->add_flag("--dot", as_dot, "Print Graphviz DOT");

  CLI::App* derivative_cmd = app.add_subcommand(
      "derivative", "Print the Cantor-Bendixson derivative of a closed expression");
  derivative_cmd->add_option("-e,--expr", expr_text, "Closed set expression")->required();
  derivative_cmd->add_flag("--json", as_json, "Print the JSON encoding");
  derivative_cmd->add_flag("--dot", as_dot, "Print Graphviz DOT");

  CLI::App* rank = app.add_subcommand(
      "rank", "Print the Cantor-Bendixson rank of a closed expression");
  rank->add_option("-e,--expr", expr_text, "Closed set expression")->required();

  CLI::App* check = app.add_subcommand("check", "Run a property suite");
  check->add_option("--suite", suite_name,
                    "Suite: algebra, closure, lemma, chain, star, theorem, oracle")
      ->required();
  check->add_option("--cases", suite_cases, "Number of seeded cases");
  check->add_option("--seed", suite_seed, "Generator seed");
  check->add_flag("--json", as_json, "Print the JSON report");

  // Let --max-states appear after the subcommand as well.
  for (CLI::App* sub : {eval, decompose_cmd, select_cmd, equiv, countable, member,
                        closure_cmd, kernel, derivative_cmd, rank, check}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  modc::set_state_budget(max_states);

  if (eval->parsed()) {
    const modc::Delta02Set s = compile_argument(expr_text);
    if (as_json) {
      std::cout << modc::to_json(s).dump() << "\n";
    } else if (as_dot) {
      std::cout << modc::to_dot(s);
    } else {
      std::cout << modc::to_text(s);
    }
    return 0;
  }
  if (decompose_cmd->parsed()) {
    const modc::DifferenceChain chain = modc::decompose(compile_argument(expr_text));
    if (as_json) {
      std::cout << modc::to_json(chain).dump() << "\n";
    } else {
      std::cout << modc::to_text(chain);
    }
    return 0;
  }
  if (select_cmd->parsed()) {
    if (with_report) {
      std::cout << modc::to_json(modc::selection_report(compile_argument(expr_text))).dump()
                << "\n";
      return 0;
    }
    const modc::Delta02Set selected =
        modc::select_representative(compile_argument(expr_text));
    if (as_json) {
      std::cout << modc::to_json(selected).dump() << "\n";
    } else {
      std::cout << modc::to_text(selected);
    }
    return 0;
  }
  if (equiv->parsed()) {
    const modc::Delta02Set a = compile_argument(expr_text);
    const modc::Delta02Set b = compile_argument(second_text);
    const bool result = mod_countable ? modc::eq_mod_countable(a, b) : modc::equals(a, b);
    std::cout << (result ? "true" : "false") << "\n";
    return result ? 0 : 1;
  }
  if (countable->parsed()) {
    const bool result = modc::is_countable(compile_argument(expr_text));
    std::cout << (result ? "true" : "false") << "\n";
    return result ? 0 : 1;
  }
  if (member->parsed()) {
    if (stem_text == "e") stem_text.clear();
    if (cycle_text == "e" || cycle_text.empty()) {
      throw modc::argument_error("member: cycle must be nonempty");
    }
    const modc::UpPoint p(stem_text, cycle_text);
    const bool result = modc::member_up(compile_argument(expr_text), p);
    std::cout << (result ? "true" : "false") << "\n";
    return result ? 0 : 1;
  }
  if (closure_cmd->parsed()) {
    print_closed(modc::closure(compile_argument(expr_text)), as_json, as_dot);
    return 0;
  }
  if (kernel->parsed()) {
    print_closed(modc::perfect_kernel(compile_closed(expr_text)), as_json, as_dot);
    return 0;
  }
  if (derivative_cmd->parsed()) {
    print_closed(modc::derivative(compile_closed(expr_text)), as_json, as_dot);
    return 0;
  }
  if (rank->parsed()) {
    std::cout << modc::cb_rank(compile_closed(expr_text)) << "\n";
    return 0;
  }
  if (check->parsed()) {
    const auto suite = modc::suite_from_name(suite_name);
    if (!suite) {
      throw modc::argument_error("check: unknown suite '" + suite_name + "'");
    }
    const modc::SuiteReport report = modc::run_suite(*suite, suite_cases, suite_seed);
    if (as_json) {
      modc::Json j;
      j["suite"] = report.suite;
      j["cases"] = report.cases;
      j["passed"] = report.passed;
      j["failed"] = report.failed;
      j["counterexample"] =
          report.counterexample ? modc::Json::parse(*report.counterexample) : modc::Json();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "suite: " << report.suite << "\n"
                << "cases: " << report.cases << "\n"
                << "passed: " << report.passed << "\n"
                << "failed: " << report.failed << "\n";
      if (report.counterexample) {
        std::cout << "counterexample: " << *report.counterexample << "\n";
      }
    }
    return report.failed == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const modc::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const modc::argument_error& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const modc::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const modc::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
