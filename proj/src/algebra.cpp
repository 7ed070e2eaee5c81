#include "fole/algebra.hpp"

#include <cctype>
#include <sstream>

namespace fole {

namespace {

std::string tuple_text(const Tuple& t) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const auto& [i, y] : t.values) {
    if (!first) out << ", ";
    first = false;
    out << i << ": " << y;
  }
  out << ")";
  return out.str();
}

}  // namespace

const OpSymbol& OperatorDomain::symbol(const Name& e) const {
  auto it = symbols.find(e);
  if (it == symbols.end()) throw Error(Errc::UnknownSymbol, "symbol '" + e + "' not declared");
  return it->second;
}

Report operator_domain_validate(const OperatorDomain& o) {
  Report report;
  for (const auto& [e, sym] : o.symbols) {
    if (!o.sorts.count(sym.result_sort))
      report.push_back({e, "result sort '" + sym.result_sort + "' not declared"});
    for (const auto& [i, s] : sym.signature.sorts)
      if (!o.sorts.count(s))
        report.push_back({e, "signature sort '" + s + "' not declared"});
  }
  return report;
}

struct Term::Node {
  bool var;
  Name name;
  std::map<Name, Term> args;
  int depth = 0;
};

Term Term::var(Name index) {
  auto n = std::make_shared<Node>();
  n->var = true;
  n->name = std::move(index);
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

Term Term::app(Name symbol, std::map<Name, Term> args) {
  auto n = std::make_shared<Node>();
  n->var = false;
  n->name = std::move(symbol);
  int d = 0;
  for (const auto& [i, t] : args) d = std::max(d, t.depth());
  n->depth = 1 + d;
  n->args = std::move(args);
  if (n->depth > kMaxTermDepth) throw Error(Errc::CapacityExceeded, "term depth exceeds cap");
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

bool Term::is_var() const { return node_->var; }
const Name& Term::name() const { return node_->name; }
const std::map<Name, Term>& Term::args() const { return node_->args; }
int Term::depth() const { return node_ ? node_->depth : 0; }

int Term::compare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  if (!a.node_) return -1;
  if (!b.node_) return 1;
  if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
  if (int c = a.name().compare(b.name()); c != 0) return c;
  auto ai = a.args().begin(), bi = b.args().begin();
  for (; ai != a.args().end() && bi != b.args().end(); ++ai, ++bi) {
    if (int c = ai->first.compare(bi->first); c != 0) return c;
    if (int c = compare(ai->second, bi->second); c != 0) return c;
  }
  if (ai != a.args().end()) return 1;
  if (bi != b.args().end()) return -1;
  return 0;
}

bool TermVector::variables_only() const {
  for (const auto& [i, t] : terms)
    if (!t.is_var()) return false;
  return true;
}

TypeListMorphism TermVector::as_morphism() const {
  if (!variables_only())
    throw Error(Errc::SortError, "term vector uses function symbols; no underlying arity map");
  TypeListMorphism h{source, context, {}};
  for (const auto& [i, t] : terms) h.map[i] = t.name();
  return h;
}

TermVector identity_vector(const TypeList& list) {
  TermVector tv{list, list, {}};
  for (const auto& [i, s] : list.sorts) tv.terms[i] = Term::var(i);
  return tv;
}

Term substitute(const Term& t, const TermVector& binding) {
  if (t.is_var()) {
    auto it = binding.terms.find(t.name());
    if (it == binding.terms.end())
      throw Error(Errc::SortError, "substitution misses index '" + t.name() + "'");
    return it->second;
  }
  std::map<Name, Term> args;
  for (const auto& [i, sub] : t.args()) args[i] = substitute(sub, binding);
  return Term::app(t.name(), std::move(args));
}

TermVector compose(const TermVector& first, const TermVector& second) {
  if (first.context != second.source)
    throw Error(Errc::CompositionMismatch, "term vectors do not meet");
  TermVector out{first.source, second.context, {}};
  for (const auto& [i, t] : first.terms) out.terms[i] = substitute(t, second);
  return out;
}

Report algebra_validate(const Algebra& a) {
  Report report;
  try {
    a.entities.ensure_wellformed();
  } catch (const Error& e) {
    report.push_back({"entities", e.what()});
  }
  for (const auto& f : operator_domain_validate(a.domain)) report.push_back(f);
  for (const auto& s : a.domain.sorts)
    if (!a.entities.types.count(s))
      report.push_back({s, "operator domain sort is not an entity type"});
  if (!report.empty()) return report;

  for (const auto& [e, sym] : a.domain.symbols) {
    auto op = a.operations.find(e);
    TupleRelation domain = tup(a.entities, sym.signature);
    NameSet carrier = a.entities.extent(sym.result_sort);
    for (const auto& t : domain.tuples) {
      if (op == a.operations.end() || !op->second.count(t)) {
        report.push_back({e, "operation undefined at " + tuple_text(t)});
        continue;
      }
      if (!carrier.count(op->second.at(t)))
        report.push_back({e, "operation leaves the carrier of sort '" + sym.result_sort + "'"});
    }
    if (op != a.operations.end())
      for (const auto& [t, y] : op->second)
        if (!domain.tuples.count(t))
          report.push_back({e, "operation defined outside its enumerated domain at " + tuple_text(t)});
  }
  for (const auto& [e, graph] : a.operations)
    if (!a.domain.symbols.count(e)) report.push_back({e, "operation for undeclared symbol"});
  return report;
}

Name term_typecheck(const OperatorDomain& o, const TypeList& context, const Term& t) {
  if (t.is_var()) {
    if (!context.has(t.name()))
      throw Error(Errc::SortError, "variable '" + t.name() + "' is not a context index");
    return context.sort(t.name());
  }
  const OpSymbol& sym = o.symbol(t.name());
  if (t.args().size() != sym.signature.sorts.size())
    throw Error(Errc::SortError, "symbol '" + t.name() + "' applied with the wrong arity");
  for (const auto& [i, s] : sym.signature.sorts) {
    auto it = t.args().find(i);
    if (it == t.args().end()) throw Error(Errc::SortError, "application misses slot '" + i + "'");
    Name got = term_typecheck(o, context, it->second);
    if (got != s)
      throw Error(Errc::SortError, "slot '" + i + "' expects sort '" + s + "', got '" + got + "'");
  }
  return sym.result_sort;
}

void vector_typecheck(const OperatorDomain& o, const TermVector& tv) {
  for (const auto& [i, s] : tv.source.sorts) {
    auto it = tv.terms.find(i);
    if (it == tv.terms.end()) throw Error(Errc::SortError, "term vector misses index '" + i + "'");
    Name got = term_typecheck(o, tv.context, it->second);
    if (got != s)
      throw Error(Errc::SortError,
                  "vector index '" + i + "' expects sort '" + s + "', got '" + got + "'");
  }
  if (tv.terms.size() != tv.source.sorts.size())
    throw Error(Errc::SortError, "term vector has indices outside its source arity");
}

Name eval_term(const Algebra& a, const TypeList& context, const Term& t, const Tuple& env) {
  if (t.is_var()) {
    if (!context.has(t.name()))
      throw Error(Errc::SortError, "variable '" + t.name() + "' is not a context index");
    return env.at(t.name());
  }
  const OpSymbol& sym = a.domain.symbol(t.name());
  Tuple args;
  for (const auto& [i, s] : sym.signature.sorts) {
    auto it = t.args().find(i);
    if (it == t.args().end()) throw Error(Errc::SortError, "application misses slot '" + i + "'");
    args.values[i] = eval_term(a, context, it->second, env);
  }
  auto op = a.operations.find(t.name());
  if (op == a.operations.end() || !op->second.count(args))
    throw Error(Errc::SortError, "operation '" + t.name() + "' undefined at its arguments");
  return op->second.at(args);
}

Tuple eval_vector(const Algebra& a, const TermVector& tv, const Tuple& env) {
  Tuple out;
  for (const auto& [i, s] : tv.source.sorts) {
    auto it = tv.terms.find(i);
    if (it == tv.terms.end()) throw Error(Errc::SortError, "term vector misses index '" + i + "'");
    out.values[i] = eval_term(a, tv.context, it->second, env);
  }
  return out;
}

bool satisfies_equation(const Algebra& a, const Equation& eq) {
  if (eq.lhs.source != eq.rhs.source || eq.lhs.context != eq.rhs.context)
    throw Error(Errc::SortError, "equation sides are not a parallel pair");
  vector_typecheck(a.domain, eq.lhs);
  vector_typecheck(a.domain, eq.rhs);
  for (const auto& env : tup(a.entities, eq.lhs.context).tuples)
    if (eval_vector(a, eq.lhs, env) != eval_vector(a, eq.rhs, env)) return false;
  return true;
}

Report operator_domain_morphism_validate(const OperatorDomainMorphism& m,
                                         const OperatorDomain& from, const OperatorDomain& to) {
  Report report;
  for (const auto& s : from.sorts)
    if (!m.sort_map.count(s))
      report.push_back({s, "sort map is not total"});
    else if (!to.sorts.count(m.sort_map.at(s)))
      report.push_back({s, "sort map targets undeclared sort"});
  for (const auto& [e, sym] : from.symbols) {
    if (!m.symbol_map.count(e)) {
      report.push_back({e, "symbol map is not total"});
      continue;
    }
    const Name& image = m.symbol_map.at(e);
    if (!to.symbols.count(image)) {
      report.push_back({e, "symbol map targets undeclared symbol '" + image + "'"});
      continue;
    }
    try {
      const OpSymbol& target = to.symbol(image);
      if (target.result_sort != map_at(m.sort_map, sym.result_sort, Errc::UnknownSort, "sort"))
        report.push_back({e, "result sort is not preserved"});
      if (target.signature != sum_along(m.sort_map, sym.signature))
        report.push_back({e, "signature is not preserved"});
    } catch (const Error& err) {
      report.push_back({e, err.what()});
    }
  }
  return report;
}

Term translate_term(const OperatorDomainMorphism& m, const Term& t) {
  if (t.is_var()) return t;
  std::map<Name, Term> args;
  for (const auto& [i, sub] : t.args()) args[i] = translate_term(m, sub);
  return Term::app(map_at(m.symbol_map, t.name(), Errc::UnknownSymbol, "symbol"), std::move(args));
}

TermVector translate_vector(const OperatorDomainMorphism& m, const TermVector& tv) {
  TermVector out{sum_along(m.sort_map, tv.source), sum_along(m.sort_map, tv.context), {}};
  for (const auto& [i, t] : tv.terms) out.terms[i] = translate_term(m, t);
  return out;
}

TupleRelation flow_along_term(const Algebra& a, const TermVector& tv, FlowMode mode,
                              const TupleRelation& r) {
  vector_typecheck(a.domain, tv);
  const TypeList& expect = (mode == FlowMode::Inverse) ? tv.source : tv.context;
  if (r.type_list != expect)
    throw Error(Errc::SortError, "flow input relation lives in the wrong fiber");
  switch (mode) {
    case FlowMode::Exists: {
      TupleRelation out{tv.source, {}};
      for (const auto& t : r.tuples) out.tuples.insert(eval_vector(a, tv, t));
      return out;
    }
    case FlowMode::Forall: {
      TupleRelation out{tv.source, {}};
      std::map<Tuple, bool> covered;
      for (const auto& t : tup(a.entities, tv.context).tuples) {
        Tuple image = eval_vector(a, tv, t);
        auto [it, inserted] = covered.emplace(image, true);
        if (!r.tuples.count(t)) it->second = false;
      }
      for (const auto& cand : tup(a.entities, tv.source).tuples) {
        auto it = covered.find(cand);
        if (it == covered.end() || it->second) out.tuples.insert(cand);
      }
      return out;
    }
    case FlowMode::Inverse: {
      TupleRelation out{tv.context, {}};
      for (const auto& t : tup(a.entities, tv.context).tuples)
        if (r.tuples.count(eval_vector(a, tv, t))) out.tuples.insert(t);
      return out;
    }
  }
  throw Error(Errc::SortError, "unreachable flow mode");
}

Report fol_language_validate(const FOLLanguage& l) {
  Report report = schema_validate(l.schema);
  for (const auto& f : operator_domain_validate(l.domain)) report.push_back(f);
  if (l.schema.types != l.domain.sorts)
    report.push_back({"language", "schema and operator domain do not share the type set"});
  return report;
}

Report fol_structure_validate(const FOLStructure& m) {
  Report report = structure_validate(m.structure);
  for (const auto& f : algebra_validate(m.algebra)) report.push_back(f);
  if (!(m.structure.entities == m.algebra.entities))
    report.push_back(
        {"structure", "relational and algebraic parts do not share the entity classification"});
  return report;
}

bool fol_satisfies_constraint(const FOLStructure& fm, const Formula& source_formula,
                              const TermVector& tv, const Formula& target_formula) {
  const Structure& m = fm.structure;
  vector_typecheck(fm.algebra.domain, tv);
  TypeList target_list = infer_typelist(m.schema, target_formula);
  TypeList source_list = infer_typelist(m.schema, source_formula);
  if (target_list != tv.context || source_list != tv.source)
    throw Error(Errc::TypeMismatch, "constraint formulas do not match the term vector endpoints");
  if (tv.variables_only())
    return satisfies_constraint(m, Constraint{tv.as_morphism(), target_formula, source_formula});
  Evaluator ev(m);
  TupleRelation source_rel = ev.relation_interp(source_formula);
  for (const auto& k : ev.eval(target_formula))
    if (!source_rel.tuples.count(eval_vector(fm.algebra, tv, m.tuple_of(k)))) return false;
  return true;
}

Report algebra_hom_validate(const AlgebraHom& h, const Algebra& from, const Algebra& to) {
  Report report;
  Infomorphism info{h.sort_map, h.token_map};
  for (const auto& f : infomorphism_validate(from.entities, to.entities, info))
    report.push_back({"entity: " + f.subject, f.message});
  OperatorDomainMorphism odm{h.sort_map, h.symbol_map};
  for (const auto& f : operator_domain_morphism_validate(odm, from.domain, to.domain))
    report.push_back(f);
  if (!report.empty()) return report;

  for (const auto& [e, sym] : from.domain.symbols) {
    const Name& image = h.symbol_map.at(e);
    TypeList resorted = sum_along(h.sort_map, sym.signature);
    for (const auto& t1 : tup(to.entities, resorted).tuples) {
      auto op1 = to.operations.find(image);
      if (op1 == to.operations.end() || !op1->second.count(t1)) {
        report.push_back({e, "target operation undefined at " + tuple_text(t1)});
        continue;
      }
      Name lhs = map_at(h.token_map, op1->second.at(t1), Errc::UnknownName, "token");
      Tuple bridged = tuple_bridge(info, t1);
      auto op2 = from.operations.find(e);
      if (op2 == from.operations.end() || !op2->second.count(bridged)) {
        report.push_back({e, "source operation undefined at the bridged arguments"});
        continue;
      }
      if (lhs != op2->second.at(bridged))
        report.push_back({e, "operation square fails at " + tuple_text(t1)});
    }
  }
  return report;
}

Report presentation_morphism_validate(const OperatorDomainMorphism& m,
                                      const EquationalPresentation& from,
                                      const EquationalPresentation& to, const Algebra& witness) {
  for (const auto& eq : to.equations)
    if (!satisfies_equation(witness, eq))
      throw Error(Errc::UnsoundWitness,
                  "witness algebra fails an equation of the target presentation");
  Report report;
  for (const auto& f : operator_domain_morphism_validate(m, from.domain, to.domain))
    report.push_back(f);
  if (!report.empty()) return report;
  int index = 0;
  for (const auto& eq : from.equations) {
    Equation translated{translate_vector(m, eq.lhs), translate_vector(m, eq.rhs)};
    if (!satisfies_equation(witness, translated))
      report.push_back(
          {"equation " + std::to_string(index), "translated equation fails in the witness"});
    ++index;
  }
  return report;
}

std::string to_string(const Term& t) {
  if (t.is_var()) return t.name();
  std::ostringstream out;
  out << t.name() << "(";
  bool first = true;
  for (const auto& [i, sub] : t.args()) {
    if (!first) out << ", ";
    first = false;
    out << i << ": " << to_string(sub);
  }
  out << ")";
  return out.str();
}

namespace {

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) bump();
  }
  void bump() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(Errc::SyntaxError, msg, line, col);
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      bump();
      return true;
    }
    return false;
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected identifier");
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '.'))
      bump();
    return std::string(text.substr(start, pos - start));
  }

  Term parse() {
    std::string head = ident();
    skip();
    if (!eat('(')) return Term::var(head);
    std::map<Name, Term> args;
    skip();
    if (!eat(')')) {
      for (;;) {
        std::string slot = ident();
        if (!eat(':')) fail("expected ':' after slot name");
        args[slot] = parse();
        if (eat(',')) continue;
        if (eat(')')) break;
        fail("expected ',' or ')' in argument list");
      }
    }
    return Term::app(std::move(head), std::move(args));
  }
};

}  // namespace

Term parse_term(std::string_view text) {
  TermParser p{text};
  Term t = p.parse();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input after term");
  return t;
}

}  // namespace fole
