#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modc/delta02.hpp"

namespace modc {

// Surface syntax tree for set expressions.
//
// Grammar (loosest binding first, all binary operators left-associative):
//   expr := or;  or := xor ('|' xor)*;  xor := diff ('^' diff)*
//   diff := and ('\' and)*;  and := not ('&' not)*;  not := '!' not | atom
//   atom := 'full' | 'empty' | 'cyl(' bits ')' | 'pt(' bits ',' bits ')'
//         | 'nofactor(' bits ')' | 'tree(' pattern ')' | ident | '(' expr ')'
// A bits argument is a word over {0,1}, or the single letter e denoting
// the empty word. Scripts are ('let' ident '=' expr ';')* expr.
struct SetExpr {
  enum class Kind {
    Full,
    Empty,
    Cylinder,    // text = prefix
    Point,       // text = stem, text2 = cycle
    NoFactor,    // text = factor
    Tree,        // text = pattern
    Name,        // text = identifier
    Complement,  // child lhs
    Union,
    Intersect,
    Difference,
    SymDiff,
  };

  Kind kind;
  std::string text;
  std::string text2;
  std::shared_ptr<const SetExpr> lhs;
  std::shared_ptr<const SetExpr> rhs;
};

using SetExprPtr = std::shared_ptr<const SetExpr>;

bool expr_equal(const SetExpr& a, const SetExpr& b);

// Prints with minimal parentheses; parsing the result yields an equal tree.
std::string to_string(const SetExpr& e);

struct Script {
  std::vector<std::pair<std::string, SetExprPtr>> bindings;
  SetExprPtr main;
};

// Parses a script; a bare expression is a script with no bindings.
Script parse_script(std::string_view text);
SetExprPtr parse_expression(std::string_view text);

Delta02Set compile(const SetExpr& e, const std::map<std::string, Delta02Set>& env);
Delta02Set compile(const Script& script);

}  // namespace modc
