#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <memory>
#include <string>

#include "modc/errors.hpp"
#include "modc/expr.hpp"
#include "modc/oracle.hpp"

using namespace modc;

namespace {

// Direct recursive evaluation of an expression at a point, independent of
// compilation to flag automata.
bool eval_at(const SetExpr& e, const UpPoint& p) {
  switch (e.kind) {
    case SetExpr::Kind::Full: return true;
    case SetExpr::Kind::Empty: return false;
    case SetExpr::Kind::Cylinder: return p.prefix(e.text.size()) == e.text;
    case SetExpr::Kind::Point: return p == UpPoint(e.text, e.text2);
    case SetExpr::Kind::NoFactor: {
      const std::string window =
          p.prefix(p.stem().size() + p.cycle().size() + e.text.size());
      return window.find(e.text) == std::string::npos;
    }
    case SetExpr::Kind::Complement: return !eval_at(*e.lhs, p);
    case SetExpr::Kind::Union: return eval_at(*e.lhs, p) || eval_at(*e.rhs, p);
    case SetExpr::Kind::Intersect: return eval_at(*e.lhs, p) && eval_at(*e.rhs, p);
    case SetExpr::Kind::Difference: return eval_at(*e.lhs, p) && !eval_at(*e.rhs, p);
    case SetExpr::Kind::SymDiff: return eval_at(*e.lhs, p) != eval_at(*e.rhs, p);
    default: FAIL("unexpected node"); return false;
  }
}

// Random expression over leaf primitives, for round-trip and semantics
// properties.
SetExprPtr random_expr(Rng& rng, int depth) {
  const auto leaf_node = [&]() -> SetExprPtr {
    switch (rng.below(5)) {
      case 0: return std::make_shared<SetExpr>(SetExpr{SetExpr::Kind::Full, "", "", nullptr, nullptr});
      case 1: return std::make_shared<SetExpr>(SetExpr{SetExpr::Kind::Empty, "", "", nullptr, nullptr});
      case 2:
        return std::make_shared<SetExpr>(
            SetExpr{SetExpr::Kind::Cylinder, rng.bit_string(rng.below(3)), "", nullptr, nullptr});
      case 3: {
        const UpPoint p(rng.bit_string(rng.below(3)), rng.bit_string(1 + rng.below(2)));
        return std::make_shared<SetExpr>(
            SetExpr{SetExpr::Kind::Point, p.stem(), p.cycle(), nullptr, nullptr});
      }
      default:
        return std::make_shared<SetExpr>(
            SetExpr{SetExpr::Kind::NoFactor, rng.bit_string(1 + rng.below(3)), "", nullptr, nullptr});
    }
  };
  if (depth == 0 || rng.below(3) == 0) return leaf_node();
  if (rng.below(5) == 0) {
    return std::make_shared<SetExpr>(
        SetExpr{SetExpr::Kind::Complement, "", "", random_expr(rng, depth - 1), nullptr});
  }
  const SetExpr::Kind kinds[] = {SetExpr::Kind::Union, SetExpr::Kind::Intersect,
                                 SetExpr::Kind::Difference, SetExpr::Kind::SymDiff};
  return std::make_shared<SetExpr>(SetExpr{kinds[rng.below(4)], "", "",
                                           random_expr(rng, depth - 1),
                                           random_expr(rng, depth - 1)});
}

}  // namespace

TEST_CASE("parsing") {
  SUBCASE("operators and atoms") {
    const SetExprPtr e = parse_expression("cyl(0) ^ pt(0,0)");
    REQUIRE(e->kind == SetExpr::Kind::SymDiff);
    CHECK(e->lhs->kind == SetExpr::Kind::Cylinder);
    CHECK(e->lhs->text == "0");
    CHECK(e->rhs->kind == SetExpr::Kind::Point);
    CHECK(e->rhs->text == "0");
    CHECK(e->rhs->text2 == "0");
  }

  SUBCASE("scripts with bindings") {
    const Script script = parse_script("let P = nofactor(11); P & !cyl(1)");
    REQUIRE(script.bindings.size() == 1);
    CHECK(script.bindings[0].first == "P");
    CHECK(script.bindings[0].second->kind == SetExpr::Kind::NoFactor);
    REQUIRE(script.main->kind == SetExpr::Kind::Intersect);
    CHECK(script.main->lhs->kind == SetExpr::Kind::Name);
    CHECK(script.main->lhs->text == "P");
    CHECK(script.main->rhs->kind == SetExpr::Kind::Complement);
  }

  SUBCASE("empty stem is spelled e") {
    const SetExprPtr e = parse_expression("pt(e,0)");
    CHECK(e->text.empty());
    CHECK(e->text2 == "0");
    CHECK(parse_expression("cyl(e)")->text.empty());
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_expression("pt(,0)"), parse_error);
    CHECK_THROWS_AS(parse_expression("pt(0)"), parse_error);
    CHECK_THROWS_AS(parse_expression("pt(0,e)"), parse_error);
    CHECK_THROWS_AS(parse_expression("cyl(2)"), parse_error);
    CHECK_THROWS_AS(parse_expression("full |"), parse_error);
    CHECK_THROWS_AS(parse_expression("(full"), parse_error);
    CHECK_THROWS_AS(parse_expression("tree(0*"), parse_error);
    CHECK_THROWS_AS(parse_expression("tree((0|2)*)"), parse_error);
    CHECK_THROWS_AS(parse_expression("let x = full; let x = empty; x"), parse_error);
    CHECK_THROWS_AS(parse_expression(""), parse_error);

    SUBCASE("positions are reported") {
      try {
        parse_expression("full |");
        FAIL("expected a parse error");
      } catch (const parse_error& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 7);
      }
    }
  }

  SUBCASE("precedence") {
    // Tightest first: ! & \ ^ |, all left-associative.
    const SetExprPtr e = parse_expression("full | empty & full");
    REQUIRE(e->kind == SetExpr::Kind::Union);
    CHECK(e->rhs->kind == SetExpr::Kind::Intersect);

    const SetExprPtr d = parse_expression("full \\ empty ^ full");
    REQUIRE(d->kind == SetExpr::Kind::SymDiff);
    CHECK(d->lhs->kind == SetExpr::Kind::Difference);

    const SetExprPtr assoc = parse_expression("full \\ full \\ empty");
    REQUIRE(assoc->kind == SetExpr::Kind::Difference);
    CHECK(assoc->lhs->kind == SetExpr::Kind::Difference);
    CHECK(assoc->rhs->kind == SetExpr::Kind::Empty);

    const SetExprPtr n = parse_expression("!full & empty");
    REQUIRE(n->kind == SetExpr::Kind::Intersect);
    CHECK(n->lhs->kind == SetExpr::Kind::Complement);
  }
}

TEST_CASE("printing round trip") {
  for (const std::string text :
       {"cyl(0) ^ pt(0,0)", "full | empty & full", "!(full | empty)",
        "full \\ (full \\ empty)", "pt(e,0) | tree(0* | 0*10*)",
        "nofactor(11) & !cyl(1)"}) {
    const SetExprPtr e = parse_expression(text);
    const SetExprPtr reparsed = parse_expression(to_string(*e));
    CHECK(expr_equal(*e, *reparsed));
  }

  SUBCASE("random trees") {
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
      const SetExprPtr e = random_expr(rng, 4);
      const SetExprPtr reparsed = parse_expression(to_string(*e));
      CHECK(expr_equal(*e, *reparsed));
    }
  }
}

TEST_CASE("compilation") {
  const std::map<std::string, Delta02Set> empty_env;

  CHECK(compile(parse_script("full")) == Delta02Set::constant(true));
  // The cylinders partition the space; the flag table cannot see that, so
  // the equality is semantic.
  CHECK(equals(compile(parse_script("cyl(0) | cyl(1)")), Delta02Set::constant(true)));

  SUBCASE("negated flag for a removed point") {
    const Delta02Set s = compile(parse_script("full \\ pt(0,0)"));
    REQUIRE(s.component_count() == 1);
    CHECK(s.component(0) == up_singleton("", "0"));
    CHECK(s.condition_at(0));
    CHECK(!s.condition_at(1));
  }

  SUBCASE("bindings resolve in order") {
    const Delta02Set s = compile(parse_script("let P = nofactor(11); P & !cyl(1)"));
    CHECK(equals(s, combine(SetOp::Intersect, lift(no_factor("11")),
                            complement(lift(cylinder("1"))))));
  }

  SUBCASE("unknown identifier") {
    CHECK_THROWS_AS(compile(parse_script("P & full")), argument_error);
    CHECK_THROWS_AS(compile(*parse_expression("Q"), empty_env), argument_error);
  }

  SUBCASE("compiled sets match direct evaluation") {
    Rng rng(123);
    const auto points = enumerate_up(4, 4);
    for (int i = 0; i < 60; ++i) {
      const SetExprPtr e = random_expr(rng, 3);
      const Delta02Set s = compile(*e, empty_env);
      for (const UpPoint& p : points) {
        CHECK(member_up(s, p) == eval_at(*e, p));
      }
    }
  }
}
