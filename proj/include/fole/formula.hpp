#ifndef FOLE_FORMULA_HPP
#define FOLE_FORMULA_HPP

#include <memory>
#include <string>
#include <string_view>

#include "fole/schema.hpp"

namespace fole {

enum class FormulaKind {
  Atom,
  Meet,
  Join,
  Top,
  Bottom,
  Neg,
  Impl,
  Diff,
  SumFlow,   // existential flow along a type list morphism
  ProdFlow,  // universal flow
  Subst,     // inverse-image flow
};

/// Immutable formula AST over a schema. Fiber connectives join operands of
/// one type list; flow operators move formulas between fibers along a type
/// list morphism carried by value. Equality is structural.
class Formula {
 public:
  Formula() = default;

  static Formula atom(Name relation);
  static Formula meet(Formula lhs, Formula rhs);
  static Formula join(Formula lhs, Formula rhs);
  static Formula top(TypeList fiber);
  static Formula bottom(TypeList fiber);
  static Formula neg(Formula body);
  static Formula impl(Formula lhs, Formula rhs);
  static Formula diff(Formula lhs, Formula rhs);
  static Formula sum_flow(TypeListMorphism h, Formula body);
  static Formula prod_flow(TypeListMorphism h, Formula body);
  static Formula subst(TypeListMorphism h, Formula body);

  FormulaKind kind() const;
  const Name& relation() const;             // Atom
  const Formula& lhs() const;               // binary connectives
  const Formula& rhs() const;
  const Formula& body() const;              // Neg and flow operators
  const TypeList& fiber() const;            // Top / Bottom
  const TypeListMorphism& morphism() const; // flow operators

  bool valid() const { return node_ != nullptr; }
  int depth() const;

  friend bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }
  static int compare(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula binary(FormulaKind kind, Formula lhs, Formula rhs);
  static Formula flow(FormulaKind kind, TypeListMorphism h, Formula body);
  std::shared_ptr<const Node> node_;
};

struct Sequent {
  Formula lhs, rhs;

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
  friend bool operator<(const Sequent& a, const Sequent& b) {
    if (a.lhs < b.lhs) return true;
    if (b.lhs < a.lhs) return false;
    return a.rhs < b.rhs;
  }
};

/// A sequent along a type list morphism h: source list -> target list.
/// `target` lives in the target fiber, `source` in the source fiber; the
/// constraint asserts the entailment of `source` by the h-flow of `target`.
struct Constraint {
  TypeListMorphism h;
  Formula target;  // over target(h)
  Formula source;  // over source(h)

  friend bool operator==(const Constraint& a, const Constraint& b) {
    return a.h == b.h && a.target == b.target && a.source == b.source;
  }
  friend bool operator<(const Constraint& a, const Constraint& b);
};

/// Returns the inferred type list of the formula or throws
/// TypeMismatch / UnknownRelation when it is ill-typed over the schema.
TypeList infer_typelist(const Schema& s, const Formula& f);

/// Homomorphic translation along a schema morphism: atoms through the
/// relation map, embedded type lists and morphisms re-sorted along the
/// type map, connectives preserved.
Formula translate(const SchemaMorphism& m, const Formula& f);
Sequent translate_sequent(const SchemaMorphism& m, const Sequent& q);
Constraint translate_constraint(const SchemaMorphism& m, const Constraint& c);

/// Named type lists and type list morphisms available to the surface parser.
struct FormulaSymbols {
  std::map<Name, TypeList> typelists;
  std::map<Name, TypeListMorphism> morphisms;
};

/// Parses the surface syntax. Named references in exists/forall/subst/top/bot
/// brackets are resolved against the symbol table; fully inline literals are
/// accepted as well. Throws SyntaxError with line/column.
Formula parse_formula(std::string_view text, const FormulaSymbols& symbols = {});

TypeList parse_typelist(std::string_view text, const FormulaSymbols& symbols = {});
TypeListMorphism parse_typelist_morphism(std::string_view text, const FormulaSymbols& symbols = {});

/// Parses `formula |- formula` (an identity constraint over the left
/// formula's fiber) or `morphism : formula |- formula`. The left formula is
/// the target-fiber formula, the right one the source-fiber formula.
Constraint parse_constraint(std::string_view text, const Schema& schema,
                            const FormulaSymbols& symbols = {});

/// Canonical fully parenthesized self-contained text. Reparsing the output
/// yields a structurally equal formula.
std::string to_string(const Formula& f);
std::string to_string(const TypeList& list);
std::string to_string(const TypeListMorphism& h);
std::string to_string(const Constraint& c);

}  // namespace fole

#endif
