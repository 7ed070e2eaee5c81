#include "fole/formula.hpp"

namespace fole {

struct Formula::Node {
  FormulaKind kind;
  Name relation;
  Formula left, right;      // binary: left/right; unary and flow: left is the body
  TypeList fiber;
  TypeListMorphism morphism;
  int depth = 0;
};

Formula Formula::atom(Name relation) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Atom;
  n->relation = std::move(relation);
  n->depth = 0;
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::binary(FormulaKind kind, Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->depth = 1 + std::max(lhs.depth(), rhs.depth());
  n->left = std::move(lhs);
  n->right = std::move(rhs);
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::meet(Formula lhs, Formula rhs) { return binary(FormulaKind::Meet, std::move(lhs), std::move(rhs)); }
Formula Formula::join(Formula lhs, Formula rhs) { return binary(FormulaKind::Join, std::move(lhs), std::move(rhs)); }
Formula Formula::impl(Formula lhs, Formula rhs) { return binary(FormulaKind::Impl, std::move(lhs), std::move(rhs)); }
Formula Formula::diff(Formula lhs, Formula rhs) { return binary(FormulaKind::Diff, std::move(lhs), std::move(rhs)); }

Formula Formula::top(TypeList fiber) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = FormulaKind::Top;
  n->fiber = std::move(fiber);
  n->depth = 0;
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::bottom(TypeList fiber) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = FormulaKind::Bottom;
  n->fiber = std::move(fiber);
  n->depth = 0;
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::neg(Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Neg;
  n->depth = 1 + body.depth();
  n->left = std::move(body);
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::flow(FormulaKind kind, TypeListMorphism h, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->depth = 1 + body.depth();
  n->left = std::move(body);
  n->morphism = std::move(h);
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::sum_flow(TypeListMorphism h, Formula body) { return flow(FormulaKind::SumFlow, std::move(h), std::move(body)); }
Formula Formula::prod_flow(TypeListMorphism h, Formula body) { return flow(FormulaKind::ProdFlow, std::move(h), std::move(body)); }
Formula Formula::subst(TypeListMorphism h, Formula body) { return flow(FormulaKind::Subst, std::move(h), std::move(body)); }

FormulaKind Formula::kind() const { return node_->kind; }
const Name& Formula::relation() const { return node_->relation; }
const Formula& Formula::lhs() const { return node_->left; }
const Formula& Formula::rhs() const { return node_->right; }
const Formula& Formula::body() const { return node_->left; }
const TypeList& Formula::fiber() const { return node_->fiber; }
const TypeListMorphism& Formula::morphism() const { return node_->morphism; }
int Formula::depth() const { return node_ ? node_->depth : 0; }

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (!a.node_) return -1;
  if (!b.node_) return 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case FormulaKind::Atom:
      return a.relation().compare(b.relation());
    case FormulaKind::Top:
    case FormulaKind::Bottom: {
      if (a.fiber() == b.fiber()) return 0;
      return a.fiber() < b.fiber() ? -1 : 1;
    }
    case FormulaKind::Neg:
      return compare(a.body(), b.body());
    case FormulaKind::Meet:
    case FormulaKind::Join:
    case FormulaKind::Impl:
    case FormulaKind::Diff: {
      int c = compare(a.lhs(), b.lhs());
      return c != 0 ? c : compare(a.rhs(), b.rhs());
    }
    case FormulaKind::SumFlow:
    case FormulaKind::ProdFlow:
    case FormulaKind::Subst: {
      if (a.morphism() != b.morphism()) return a.morphism() < b.morphism() ? -1 : 1;
      return compare(a.body(), b.body());
    }
  }
  return 0;
}

bool operator<(const Constraint& a, const Constraint& b) {
  if (a.h != b.h) return a.h < b.h;
  if (!(a.target == b.target)) return a.target < b.target;
  return a.source < b.source;
}

TypeList infer_typelist(const Schema& s, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return s.sig(f.relation());
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      return f.fiber();
    case FormulaKind::Neg:
      return infer_typelist(s, f.body());
    case FormulaKind::Meet:
    case FormulaKind::Join:
    case FormulaKind::Impl:
    case FormulaKind::Diff: {
      TypeList l = infer_typelist(s, f.lhs());
      TypeList r = infer_typelist(s, f.rhs());
      if (l != r)
        throw Error(Errc::TypeMismatch, "connective joins formulas of different type lists");
      return l;
    }
    case FormulaKind::SumFlow:
    case FormulaKind::ProdFlow: {
      TypeList body = infer_typelist(s, f.body());
      if (body != f.morphism().target)
        throw Error(Errc::TypeMismatch, "flow body does not live in the morphism target fiber");
      return f.morphism().source;
    }
    case FormulaKind::Subst: {
      TypeList body = infer_typelist(s, f.body());
      if (body != f.morphism().source)
        throw Error(Errc::TypeMismatch, "substitution body does not live in the morphism source fiber");
      return f.morphism().target;
    }
  }
  throw Error(Errc::TypeMismatch, "unreachable formula kind");
}

static TypeListMorphism resort(const NameMap& type_map, const TypeListMorphism& h) {
  return TypeListMorphism{sum_along(type_map, h.source), sum_along(type_map, h.target), h.map};
}

Formula translate(const SchemaMorphism& m, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return Formula::atom(map_at(m.rel_map, f.relation(), Errc::UnknownRelation, "relation"));
    case FormulaKind::Top:
      return Formula::top(sum_along(m.type_map, f.fiber()));
    case FormulaKind::Bottom:
      return Formula::bottom(sum_along(m.type_map, f.fiber()));
    case FormulaKind::Neg:
      return Formula::neg(translate(m, f.body()));
    case FormulaKind::Meet:
      return Formula::meet(translate(m, f.lhs()), translate(m, f.rhs()));
    case FormulaKind::Join:
      return Formula::join(translate(m, f.lhs()), translate(m, f.rhs()));
    case FormulaKind::Impl:
      return Formula::impl(translate(m, f.lhs()), translate(m, f.rhs()));
    case FormulaKind::Diff:
      return Formula::diff(translate(m, f.lhs()), translate(m, f.rhs()));
    case FormulaKind::SumFlow:
      return Formula::sum_flow(resort(m.type_map, f.morphism()), translate(m, f.body()));
    case FormulaKind::ProdFlow:
      return Formula::prod_flow(resort(m.type_map, f.morphism()), translate(m, f.body()));
    case FormulaKind::Subst:
      return Formula::subst(resort(m.type_map, f.morphism()), translate(m, f.body()));
  }
  throw Error(Errc::TypeMismatch, "unreachable formula kind");
}

Sequent translate_sequent(const SchemaMorphism& m, const Sequent& q) {
  return Sequent{translate(m, q.lhs), translate(m, q.rhs)};
}

Constraint translate_constraint(const SchemaMorphism& m, const Constraint& c) {
  return Constraint{resort(m.type_map, c.h), translate(m, c.target), translate(m, c.source)};
}

}  // namespace fole
