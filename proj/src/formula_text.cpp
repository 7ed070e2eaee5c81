#include <cctype>
#include <sstream>

#include "fole/formula.hpp"

namespace fole {

std::string to_string(const TypeList& list) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [i, s] : list.sorts) {
    if (!first) out << ", ";
    first = false;
    out << i << ": " << s;
  }
  out << "}";
  return out.str();
}

std::string to_string(const TypeListMorphism& h) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [i, j] : h.map) {
    if (!first) out << ", ";
    first = false;
    out << i << " -> " << j;
  }
  out << " : " << to_string(h.source) << " => " << to_string(h.target) << "}";
  return out.str();
}

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return f.relation();
    case FormulaKind::Top:
      return "top[" + to_string(f.fiber()) + "]";
    case FormulaKind::Bottom:
      return "bot[" + to_string(f.fiber()) + "]";
    case FormulaKind::Neg:
      return "~" + to_string(f.body());
    case FormulaKind::Meet:
      return "(" + to_string(f.lhs()) + " /\\ " + to_string(f.rhs()) + ")";
    case FormulaKind::Join:
      return "(" + to_string(f.lhs()) + " \\/ " + to_string(f.rhs()) + ")";
    case FormulaKind::Impl:
      return "(" + to_string(f.lhs()) + " -> " + to_string(f.rhs()) + ")";
    case FormulaKind::Diff:
      return "(" + to_string(f.lhs()) + " \\ " + to_string(f.rhs()) + ")";
    case FormulaKind::SumFlow:
      return "exists[" + to_string(f.morphism()) + "](" + to_string(f.body()) + ")";
    case FormulaKind::ProdFlow:
      return "forall[" + to_string(f.morphism()) + "](" + to_string(f.body()) + ")";
    case FormulaKind::Subst:
      return "subst[" + to_string(f.morphism()) + "](" + to_string(f.body()) + ")";
  }
  return "?";
}

std::string to_string(const Constraint& c) {
  std::string lhs = c.h.is_identity() ? to_string(c.target)
                                      : "exists[" + to_string(c.h) + "](" + to_string(c.target) + ")";
  return lhs + " |- " + to_string(c.source);
}

namespace {

enum class Tok { Ident, Punct, End };

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  Tok kind = Tok::End;
  std::string value;   // identifier text or punctuation spelling
  int tok_line = 1, tok_col = 1;

  explicit Lexer(std::string_view t) : text(t) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg, tok_line, tok_col);
  }

  void bump(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (pos < text.size() && text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  void advance() {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) != 0)) bump(1);
    tok_line = line;
    tok_col = col;
    if (pos >= text.size()) {
      kind = Tok::End;
      value.clear();
      return;
    }
    char c = text[pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
              text[pos] == '.'))
        bump(1);
      kind = Tok::Ident;
      value = std::string(text.substr(start, pos - start));
      return;
    }
    kind = Tok::Punct;
    auto two = text.substr(pos, 2);
    if (two == "/\\" || two == "\\/" || two == "->" || two == "=>" || two == "|-") {
      value = std::string(two);
      bump(2);
      return;
    }
    value = std::string(1, c);
    bump(1);
  }

  bool is_punct(std::string_view p) const { return kind == Tok::Punct && value == p; }
  bool is_ident(std::string_view name) const { return kind == Tok::Ident && value == name; }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
    advance();
  }

  std::string expect_ident(const char* what) {
    if (kind != Tok::Ident) fail(std::string("expected ") + what);
    std::string out = value;
    advance();
    return out;
  }
};

struct FormulaParser {
  Lexer lex;
  const FormulaSymbols& symbols;

  FormulaParser(std::string_view text, const FormulaSymbols& syms) : lex(text), symbols(syms) {}

  TypeList parse_list_literal() {
    lex.expect_punct("{");
    TypeList list;
    if (!lex.is_punct("}")) {
      for (;;) {
        std::string index = lex.expect_ident("index identifier");
        lex.expect_punct(":");
        std::string sort = lex.expect_ident("sort identifier");
        if (!list.sorts.emplace(index, sort).second) lex.fail("duplicate index '" + index + "'");
        if (lex.is_punct(",")) {
          lex.advance();
          continue;
        }
        break;
      }
    }
    lex.expect_punct("}");
    return list;
  }

  TypeList parse_list_ref() {
    if (lex.kind == Tok::Ident) {
      std::string name = lex.expect_ident("type list name");
      auto it = symbols.typelists.find(name);
      if (it == symbols.typelists.end()) lex.fail("unknown type list '" + name + "'");
      return it->second;
    }
    return parse_list_literal();
  }

  TypeListMorphism parse_morphism_literal() {
    lex.expect_punct("{");
    NameMap map;
    while (lex.kind == Tok::Ident) {
      std::string from = lex.expect_ident("index identifier");
      lex.expect_punct("->");
      std::string to = lex.expect_ident("index identifier");
      if (!map.emplace(from, to).second) lex.fail("duplicate index '" + from + "'");
      if (lex.is_punct(",")) lex.advance();
    }
    lex.expect_punct(":");
    TypeList source = parse_list_ref();
    lex.expect_punct("=>");
    TypeList target = parse_list_ref();
    lex.expect_punct("}");
    TypeListMorphism h{std::move(source), std::move(target), std::move(map)};
    try {
      ensure_valid(h);
    } catch (const Error& e) {
      lex.fail(e.what());
    }
    return h;
  }

  TypeListMorphism parse_morphism_ref() {
    if (lex.kind == Tok::Ident) {
      std::string name = lex.expect_ident("morphism name");
      auto it = symbols.morphisms.find(name);
      if (it == symbols.morphisms.end()) lex.fail("unknown type list morphism '" + name + "'");
      return it->second;
    }
    return parse_morphism_literal();
  }

  Formula parse_flow(FormulaKind kind) {
    lex.advance();  // the keyword
    lex.expect_punct("[");
    TypeListMorphism h = parse_morphism_ref();
    lex.expect_punct("]");
    lex.expect_punct("(");
    Formula body = parse_formula();
    lex.expect_punct(")");
    switch (kind) {
      case FormulaKind::SumFlow: return Formula::sum_flow(std::move(h), std::move(body));
      case FormulaKind::ProdFlow: return Formula::prod_flow(std::move(h), std::move(body));
      default: return Formula::subst(std::move(h), std::move(body));
    }
  }

  Formula parse_primary() {
    if (lex.is_punct("(")) {
      lex.advance();
      Formula f = parse_formula();
      lex.expect_punct(")");
      return f;
    }
    if (lex.is_ident("top") || lex.is_ident("bot")) {
      bool is_top = lex.value == "top";
      lex.advance();
      lex.expect_punct("[");
      TypeList list = parse_list_ref();
      lex.expect_punct("]");
      return is_top ? Formula::top(std::move(list)) : Formula::bottom(std::move(list));
    }
    if (lex.is_ident("exists")) return parse_flow(FormulaKind::SumFlow);
    if (lex.is_ident("forall")) return parse_flow(FormulaKind::ProdFlow);
    if (lex.is_ident("subst")) return parse_flow(FormulaKind::Subst);
    if (lex.kind == Tok::Ident) return Formula::atom(lex.expect_ident("relation"));
    lex.fail("expected a formula");
  }

  Formula parse_unary() {
    if (lex.is_punct("~")) {
      lex.advance();
      return Formula::neg(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_conj() {
    Formula f = parse_unary();
    while (lex.is_punct("/\\")) {
      lex.advance();
      f = Formula::meet(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (lex.is_punct("\\/")) {
      lex.advance();
      f = Formula::join(std::move(f), parse_conj());
    }
    return f;
  }

  Formula parse_diff() {
    Formula f = parse_disj();
    while (lex.is_punct("\\")) {
      lex.advance();
      f = Formula::diff(std::move(f), parse_disj());
    }
    return f;
  }

  Formula parse_formula() {
    Formula f = parse_diff();
    if (lex.is_punct("->")) {
      lex.advance();
      return Formula::impl(std::move(f), parse_formula());
    }
    return f;
  }
};

}  // namespace

Formula parse_formula(std::string_view text, const FormulaSymbols& symbols) {
  FormulaParser p(text, symbols);
  Formula f = p.parse_formula();
  if (p.lex.kind != Tok::End) p.lex.fail("trailing input after formula");
  return f;
}

TypeList parse_typelist(std::string_view text, const FormulaSymbols& symbols) {
  FormulaParser p(text, symbols);
  TypeList list = p.parse_list_ref();
  if (p.lex.kind != Tok::End) p.lex.fail("trailing input after type list");
  return list;
}

TypeListMorphism parse_typelist_morphism(std::string_view text, const FormulaSymbols& symbols) {
  FormulaParser p(text, symbols);
  TypeListMorphism h = p.parse_morphism_ref();
  if (p.lex.kind != Tok::End) p.lex.fail("trailing input after morphism");
  return h;
}

Constraint parse_constraint(std::string_view text, const Schema& schema,
                            const FormulaSymbols& symbols) {
  FormulaParser p(text, symbols);
  bool explicit_morphism = false;
  TypeListMorphism h;
  if (p.lex.is_punct("{")) {
    h = p.parse_morphism_literal();
    p.lex.expect_punct(":");
    explicit_morphism = true;
  } else if (p.lex.kind == Tok::Ident && symbols.morphisms.count(p.lex.value)) {
    // a named morphism followed by ':' — otherwise the identifier is a formula
    Lexer probe = p.lex;
    probe.advance();
    if (probe.is_punct(":")) {
      h = symbols.morphisms.at(p.lex.value);
      p.lex.advance();
      p.lex.expect_punct(":");
      explicit_morphism = true;
    }
  }
  Formula target = p.parse_formula();
  p.lex.expect_punct("|-");
  Formula source = p.parse_formula();
  if (p.lex.kind != Tok::End) p.lex.fail("trailing input after constraint");
  if (!explicit_morphism) h = identity_morphism(infer_typelist(schema, target));
  return Constraint{std::move(h), std::move(target), std::move(source)};
}

}  // namespace fole
