#include "modc/expr.hpp"

#include <cctype>
#include <utility>

#include "modc/errors.hpp"

namespace modc {

bool expr_equal(const SetExpr& a, const SetExpr& b) {
  if (a.kind != b.kind || a.text != b.text || a.text2 != b.text2) return false;
  if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
  if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
  if (a.lhs && !expr_equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !expr_equal(*a.rhs, *b.rhs)) return false;
  return true;
}

namespace {

// Binding strength; higher binds tighter.
int precedence(SetExpr::Kind kind) {
  switch (kind) {
    case SetExpr::Kind::Union: return 1;
    case SetExpr::Kind::SymDiff: return 2;
    case SetExpr::Kind::Difference: return 3;
    case SetExpr::Kind::Intersect: return 4;
    case SetExpr::Kind::Complement: return 5;
    default: return 6;
  }
}

char operator_char(SetExpr::Kind kind) {
  switch (kind) {
    case SetExpr::Kind::Union: return '|';
    case SetExpr::Kind::SymDiff: return '^';
    case SetExpr::Kind::Difference: return '\\';
    case SetExpr::Kind::Intersect: return '&';
    default: return '?';
  }
}

void print(const SetExpr& e, int context, std::string& out) {
  const int level = precedence(e.kind);
  switch (e.kind) {
    case SetExpr::Kind::Full: out += "full"; return;
    case SetExpr::Kind::Empty: out += "empty"; return;
    case SetExpr::Kind::Cylinder:
      out += "cyl(" + (e.text.empty() ? std::string("e") : e.text) + ")";
      return;
    case SetExpr::Kind::Point:
      out += "pt(" + (e.text.empty() ? std::string("e") : e.text) + "," + e.text2 + ")";
      return;
    case SetExpr::Kind::NoFactor:
      out += "nofactor(" + (e.text.empty() ? std::string("e") : e.text) + ")";
      return;
    case SetExpr::Kind::Tree: out += "tree(" + e.text + ")"; return;
    case SetExpr::Kind::Name: out += e.text; return;
    case SetExpr::Kind::Complement:
      out += '!';
      print(*e.lhs, level, out);
      return;
    default: break;
  }
  const bool parens = level < context;
  if (parens) out += '(';
  // Left-associative: the left child may share the level, the right child
  // must bind strictly tighter.
  print(*e.lhs, level, out);
  out += ' ';
  out += operator_char(e.kind);
  out += ' ';
  print(*e.rhs, level + 1, out);
  if (parens) out += ')';
}

SetExprPtr leaf(SetExpr::Kind kind, std::string text = {}, std::string text2 = {}) {
  return std::make_shared<SetExpr>(
      SetExpr{kind, std::move(text), std::move(text2), nullptr, nullptr});
}

SetExprPtr node(SetExpr::Kind kind, SetExprPtr lhs, SetExprPtr rhs = nullptr) {
  return std::make_shared<SetExpr>(SetExpr{kind, {}, {}, std::move(lhs), std::move(rhs)});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Script script() {
    Script out;
    skip_space();
    while (match_keyword("let")) {
      const std::string name = identifier("binding name");
      for (const auto& [existing, unused] : out.bindings) {
        if (existing == name) fail("duplicate definition of '" + name + "'");
      }
      expect('=');
      SetExprPtr value = expression();
      expect(';');
      out.bindings.emplace_back(name, std::move(value));
      skip_space();
    }
    out.main = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input after expression");
    return out;
  }

 private:
  SetExprPtr expression() { return union_level(); }

  SetExprPtr union_level() {
    SetExprPtr left = symdiff_level();
    while (match('|')) left = node(SetExpr::Kind::Union, left, symdiff_level());
    return left;
  }

  SetExprPtr symdiff_level() {
    SetExprPtr left = difference_level();
    while (match('^')) left = node(SetExpr::Kind::SymDiff, left, difference_level());
    return left;
  }

  SetExprPtr difference_level() {
    SetExprPtr left = intersect_level();
    while (match('\\')) left = node(SetExpr::Kind::Difference, left, intersect_level());
    return left;
  }

  SetExprPtr intersect_level() {
    SetExprPtr left = complement_level();
    while (match('&')) left = node(SetExpr::Kind::Intersect, left, complement_level());
    return left;
  }

  SetExprPtr complement_level() {
    if (match('!')) return node(SetExpr::Kind::Complement, complement_level());
    return atom();
  }

  SetExprPtr atom() {
    skip_space();
    if (match('(')) {
      SetExprPtr inner = expression();
      expect(')');
      return inner;
    }
    if (peek() == '\0') fail("expected an expression");
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
      fail(std::string("unexpected character '") + peek() + "'");
    }

    const std::size_t at = pos_;
    const std::string word = identifier("name");
    if (word == "full") return leaf(SetExpr::Kind::Full);
    if (word == "empty") return leaf(SetExpr::Kind::Empty);
    if (word == "cyl") {
      expect('(');
      std::string bits = bit_argument("cylinder prefix");
      expect(')');
      return leaf(SetExpr::Kind::Cylinder, std::move(bits));
    }
    if (word == "nofactor") {
      expect('(');
      std::string bits = bit_argument("factor");
      expect(')');
      return leaf(SetExpr::Kind::NoFactor, std::move(bits));
    }
    if (word == "pt") {
      expect('(');
      std::string stem = bit_argument("point stem");
      expect(',');
      const std::size_t cycle_at = pos_;
      std::string cycle = bit_argument("point cycle");
      if (cycle.empty()) fail_at(cycle_at, "point cycle must be nonempty");
      expect(')');
      return leaf(SetExpr::Kind::Point, std::move(stem), std::move(cycle));
    }
    if (word == "tree") {
      expect('(');
      const std::size_t pattern_at = pos_;
      std::string pattern = balanced_until_close();
      // Validate eagerly so syntax errors surface at parse time.
      try {
        prefix_tree(pattern);
      } catch (const parse_error& e) {
        fail_at(pattern_at, std::string("bad pattern: ") + e.what());
      }
      expect(')');
      return leaf(SetExpr::Kind::Tree, std::move(pattern));
    }
    if (word == "let") fail_at(at, "'let' is only allowed before the expression");
    return leaf(SetExpr::Kind::Name, word);
  }

  std::string identifier(const std::string& what) {
    skip_space();
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
      fail("expected " + what);
    }
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      out += text_[pos_++];
    }
    return out;
  }

  // A word over {0,1}, or the letter e for the empty word.
  std::string bit_argument(const std::string& what) {
    skip_space();
    if (peek() == 'e') {
      ++pos_;
      return {};
    }
    if (peek() != '0' && peek() != '1') {
      fail("expected a bit string (or e for the empty one) as " + what);
    }
    std::string out;
    while (peek() == '0' || peek() == '1') out += text_[pos_++];
    return out;
  }

  // Raw text up to the ')' matching the already-consumed '('.
  std::string balanced_until_close() {
    std::string out;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) return out;
        --depth;
      }
      out += c;
      ++pos_;
    }
    fail("unterminated tree pattern");
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool match(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool match_keyword(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_')) {
      return false;
    }
    pos_ = after;
    return true;
  }

  void expect(char c) {
    if (!match(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& message) { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw parse_error(message, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const SetExpr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

Script parse_script(std::string_view text) { return Parser(text).script(); }

SetExprPtr parse_expression(std::string_view text) {
  Script script = Parser(text).script();
  if (!script.bindings.empty()) {
    throw parse_error("expected a bare expression without let bindings", 1, 1);
  }
  return script.main;
}

Delta02Set compile(const SetExpr& e, const std::map<std::string, Delta02Set>& env) {
  switch (e.kind) {
    case SetExpr::Kind::Full: return Delta02Set::constant(true);
    case SetExpr::Kind::Empty: return Delta02Set::constant(false);
    case SetExpr::Kind::Cylinder: return lift(cylinder(e.text));
    case SetExpr::Kind::Point: return lift(up_singleton(e.text, e.text2));
    case SetExpr::Kind::NoFactor: return lift(no_factor(e.text));
    case SetExpr::Kind::Tree: return lift(prefix_tree(e.text));
    case SetExpr::Kind::Name: {
      const auto it = env.find(e.text);
      if (it == env.end()) throw argument_error("unknown identifier '" + e.text + "'");
      return it->second;
    }
    case SetExpr::Kind::Complement: return complement(compile(*e.lhs, env));
    case SetExpr::Kind::Union:
      return combine(SetOp::Union, compile(*e.lhs, env), compile(*e.rhs, env));
    case SetExpr::Kind::Intersect:
      return combine(SetOp::Intersect, compile(*e.lhs, env), compile(*e.rhs, env));
    case SetExpr::Kind::Difference:
      return combine(SetOp::Difference, compile(*e.lhs, env), compile(*e.rhs, env));
    case SetExpr::Kind::SymDiff:
      return combine(SetOp::SymDiff, compile(*e.lhs, env), compile(*e.rhs, env));
  }
  throw internal_error("compile: unhandled expression node");
}

Delta02Set compile(const Script& script) {
  std::map<std::string, Delta02Set> env;
  for (const auto& [name, value] : script.bindings) {
    env.emplace(name, compile(*value, env));
  }
  return compile(*script.main, env);
}

}  // namespace modc
