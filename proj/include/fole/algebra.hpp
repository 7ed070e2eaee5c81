#ifndef FOLE_ALGEBRA_HPP
#define FOLE_ALGEBRA_HPP

#include <memory>

#include "fole/structure.hpp"

namespace fole {

/// A function symbol: result sort plus argument signature. Constants have an
/// empty signature.
struct OpSymbol {
  Name result_sort;
  TypeList signature;

  auto operator<=>(const OpSymbol&) const = default;
};

struct OperatorDomain {
  NameSet sorts;
  std::map<Name, OpSymbol> symbols;

  const OpSymbol& symbol(const Name& e) const;

  auto operator<=>(const OperatorDomain&) const = default;
};

Report operator_domain_validate(const OperatorDomain& o);

/// Terms over an operator domain in some context type list: either a context
/// index or a symbol applied to a vector of terms keyed by its signature.
class Term {
 public:
  Term() = default;

  static Term var(Name index);
  static Term app(Name symbol, std::map<Name, Term> args);

  bool is_var() const;
  const Name& name() const;  // index or symbol
  const std::map<Name, Term>& args() const;

  bool valid() const { return node_ != nullptr; }
  int depth() const;

  friend bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
  friend bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }
  static int compare(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Depth bound on parsed/evaluated terms.
inline constexpr int kMaxTermDepth = 32;

/// A family of context terms, one of the source sort per source index:
/// tv : source -| context.
struct TermVector {
  TypeList source;   // <I', s'>
  TypeList context;  // <I, s>
  std::map<Name, Term> terms;

  bool variables_only() const;
  /// For a variable-only vector, the underlying type list morphism.
  TypeListMorphism as_morphism() const;

  auto operator<=>(const TermVector&) const = default;
};

TermVector identity_vector(const TypeList& list);

/// Substitution: plug `first`'s terms into `second`'s variables.
/// first: A -| B, second: B -| C gives A -| C.
TermVector compose(const TermVector& first, const TermVector& second);
Term substitute(const Term& t, const TermVector& env_terms);

struct Equation {
  TermVector lhs, rhs;  // parallel pair: shared source and context
};

struct EquationalPresentation {
  OperatorDomain domain;
  std::vector<Equation> equations;
};

/// A finite algebra: operations over the classification's extents.
/// Carriers coincide with the sort extents of the entity classification.
struct Algebra {
  Classification entities;
  OperatorDomain domain;
  std::map<Name, std::map<Tuple, Name>> operations;  // delta_e as a finite graph

  auto operator<=>(const Algebra&) const = default;
};

Report algebra_validate(const Algebra& a);

/// Returns the sort of the term in the context or throws SortError.
Name term_typecheck(const OperatorDomain& o, const TypeList& context, const Term& t);
void vector_typecheck(const OperatorDomain& o, const TermVector& tv);

Name eval_term(const Algebra& a, const TypeList& context, const Term& t, const Tuple& env);

/// The interpretation A*(tv) at one environment: tup(context) -> tup(source).
Tuple eval_vector(const Algebra& a, const TermVector& tv, const Tuple& env);

bool satisfies_equation(const Algebra& a, const Equation& eq);

struct OperatorDomainMorphism {
  NameMap sort_map;    // X_from -> X_to
  NameMap symbol_map;  // symbols(from) -> symbols(to)
};

Report operator_domain_morphism_validate(const OperatorDomainMorphism& m,
                                         const OperatorDomain& from, const OperatorDomain& to);

Term translate_term(const OperatorDomainMorphism& m, const Term& t);
TermVector translate_vector(const OperatorDomainMorphism& m, const TermVector& tv);

/// Relational flow lifted along A*(tv) instead of a plain tuple map.
/// Exists/Forall take a relation over the context list to one over the
/// source list; Inverse goes the other way.
TupleRelation flow_along_term(const Algebra& a, const TermVector& tv, FlowMode mode,
                              const TupleRelation& r);

struct FOLLanguage {
  Schema schema;
  OperatorDomain domain;
};

Report fol_language_validate(const FOLLanguage& l);

struct FOLStructure {
  Structure structure;
  Algebra algebra;
};

Report fol_structure_validate(const FOLStructure& m);

/// First-order constraint satisfaction along a representative term vector.
/// Variable-only vectors agree exactly with the relational reading.
bool fol_satisfies_constraint(const FOLStructure& fm, const Formula& source_formula,
                              const TermVector& tv, const Formula& target_formula);

/// Algebra homomorphism from -> to: sorts and symbols travel forward, tokens
/// travel backward; carrier maps are the token map restricted to extents.
struct AlgebraHom {
  NameMap sort_map;    // X_from -> X_to
  NameMap token_map;   // Y_to -> Y_from
  NameMap symbol_map;  // symbols(from) -> symbols(to)
};

Report algebra_hom_validate(const AlgebraHom& h, const Algebra& from, const Algebra& to);

/// Checks that translated equations of `from` hold in a witness algebra of
/// `to`; the witness must itself satisfy `to`'s equations.
Report presentation_morphism_validate(const OperatorDomainMorphism& m,
                                      const EquationalPresentation& from,
                                      const EquationalPresentation& to, const Algebra& witness);

std::string to_string(const Term& t);
Term parse_term(std::string_view text);

}  // namespace fole

#endif
