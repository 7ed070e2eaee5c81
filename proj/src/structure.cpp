#include "fole/structure.hpp"

namespace fole {

const Tuple& Structure::tuple_of(const Name& key) const {
  auto it = tuples.find(key);
  if (it == tuples.end()) throw Error(Errc::UnknownName, "key '" + key + "' has no tuple");
  return it->second;
}

NameSet Structure::rel_extent(const Name& relation) const {
  NameSet out;
  for (const auto& [k, r] : rel_incidence)
    if (r == relation) out.insert(k);
  return out;
}

Report structure_validate(const Structure& m) {
  Report report;
  for (const auto& f : schema_validate(m.schema)) report.push_back(f);
  try {
    m.entities.ensure_wellformed();
  } catch (const Error& e) {
    report.push_back({"entities", e.what()});
  }
  for (const auto& k : m.keys)
    if (!m.tuples.count(k)) report.push_back({k, "key has no tuple"});
  for (const auto& [k, t] : m.tuples) {
    if (!m.keys.count(k)) report.push_back({k, "tuple map mentions undeclared key"});
    for (const auto& [i, y] : t.values)
      if (!m.entities.tokens.count(y))
        report.push_back({k, "tuple value '" + y + "' is not a declared token"});
  }
  for (const auto& [k, r] : m.rel_incidence) {
    if (!m.keys.count(k)) {
      report.push_back({k, "relation incidence mentions undeclared key"});
      continue;
    }
    if (!m.schema.has_relation(r)) {
      report.push_back({k, "relation incidence mentions undeclared relation '" + r + "'"});
      continue;
    }
    if (!list_holds(m.entities, m.tuple_of(k), m.schema.sig(r)))
      report.push_back({k, "structure condition fails at relation '" + r + "'"});
  }
  return report;
}

NameSet typed_fiber(const Structure& m, const TypeList& list) {
  NameSet out;
  for (const auto& k : m.keys)
    if (list_holds(m.entities, m.tuple_of(k), list)) out.insert(k);
  return out;
}

NameSet Evaluator::eval(const Formula& f) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(f);
    if (it != cache_.end()) return it->second;
  }
  NameSet result = compute(f);
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = cache_.emplace(f, std::move(result));
  return it->second;
}

NameSet Evaluator::compute(const Formula& f) const {
  TypeList list = infer_typelist(m_.schema, f);
  switch (f.kind()) {
    case FormulaKind::Atom: {
      NameSet out;
      for (const auto& k : m_.rel_extent(f.relation()))
        if (list_holds(m_.entities, m_.tuple_of(k), list)) out.insert(k);
      return out;
    }
    case FormulaKind::Top:
      return typed_fiber(m_, list);
    case FormulaKind::Bottom:
      return {};
    case FormulaKind::Meet: {
      NameSet l = eval(f.lhs()), r = eval(f.rhs()), out;
      for (const auto& k : l)
        if (r.count(k)) out.insert(k);
      return out;
    }
    case FormulaKind::Join: {
      NameSet out = eval(f.lhs());
      for (const auto& k : eval(f.rhs())) out.insert(k);
      return out;
    }
    case FormulaKind::Neg: {
      NameSet body = eval(f.body()), out;
      for (const auto& k : typed_fiber(m_, list))
        if (!body.count(k)) out.insert(k);
      return out;
    }
    case FormulaKind::Impl: {
      NameSet l = eval(f.lhs()), r = eval(f.rhs()), out;
      for (const auto& k : typed_fiber(m_, list))
        if (!l.count(k) || r.count(k)) out.insert(k);
      return out;
    }
    case FormulaKind::Diff: {
      NameSet l = eval(f.lhs()), r = eval(f.rhs()), out;
      for (const auto& k : l)
        if (!r.count(k)) out.insert(k);
      return out;
    }
    case FormulaKind::SumFlow:
    case FormulaKind::ProdFlow: {
      TupleRelation image = relation_interp(f.body());
      FlowMode mode = f.kind() == FormulaKind::SumFlow ? FlowMode::Exists : FlowMode::Forall;
      TupleRelation flowed = flow(m_.entities, f.morphism(), mode, image);
      NameSet out;
      for (const auto& k : typed_fiber(m_, list))
        if (flowed.tuples.count(m_.tuple_of(k))) out.insert(k);
      return out;
    }
    case FormulaKind::Subst: {
      TupleRelation image = relation_interp(f.body());
      TupleRelation flowed = flow(m_.entities, f.morphism(), FlowMode::Inverse, image);
      NameSet out;
      for (const auto& k : typed_fiber(m_, list))
        if (flowed.tuples.count(m_.tuple_of(k))) out.insert(k);
      return out;
    }
  }
  throw Error(Errc::TypeMismatch, "unreachable formula kind");
}

TupleRelation Evaluator::relation_interp(const Formula& f) const {
  TupleRelation out{infer_typelist(m_.schema, f), {}};
  for (const auto& k : eval(f)) out.tuples.insert(m_.tuple_of(k));
  return out;
}

NameSet eval(const Structure& m, const Formula& f) { return Evaluator(m).eval(f); }

TupleRelation relation_interp(const Structure& m, const Formula& f) {
  return Evaluator(m).relation_interp(f);
}

Table table_interp(const Structure& m, const Formula& f) {
  Table out;
  out.type_list = infer_typelist(m.schema, f);
  out.keys = eval(m, f);
  for (const auto& k : out.keys) out.tuples[k] = m.tuple_of(k);
  return out;
}

bool satisfies_sequent(const Structure& m, const Sequent& q) {
  Evaluator ev(m);
  TypeList l = infer_typelist(m.schema, q.lhs);
  TypeList r = infer_typelist(m.schema, q.rhs);
  if (l != r) throw Error(Errc::TypeMismatch, "sequent sides live in different fibers");
  NameSet lhs = ev.eval(q.lhs), rhs = ev.eval(q.rhs);
  for (const auto& k : lhs)
    if (!rhs.count(k)) return false;
  return true;
}

bool satisfies_constraint(const Evaluator& ev, const Constraint& c) {
  const Structure& m = ev.structure();
  TypeList target_list = infer_typelist(m.schema, c.target);
  TypeList source_list = infer_typelist(m.schema, c.source);
  if (target_list != c.h.target || source_list != c.h.source)
    throw Error(Errc::TypeMismatch, "constraint formulas do not match the morphism endpoints");
  NameSet lhs = ev.eval(c.target);
  if (c.h.is_identity()) {
    NameSet rhs = ev.eval(c.source);
    for (const auto& k : lhs)
      if (!rhs.count(k)) return false;
    return true;
  }
  TupleRelation source_rel = ev.relation_interp(c.source);
  for (const auto& k : lhs)
    if (!source_rel.tuples.count(tup_map(c.h, m.tuple_of(k)))) return false;
  return true;
}

bool satisfies_constraint(const Structure& m, const Constraint& c) {
  Evaluator ev(m);
  return satisfies_constraint(ev, c);
}

SchemaMorphism schema_part(const StructureMorphism& h) {
  return SchemaMorphism{h.rel_map, h.type_map};
}

StructureMorphism structure_identity(const Structure& m) {
  StructureMorphism out;
  out.rel_map = identity_map(m.schema.relations());
  out.type_map = identity_map(m.schema.types);
  out.key_map = identity_map(m.keys);
  out.token_map = identity_map(m.entities.tokens);
  return out;
}

StructureMorphism compose(const StructureMorphism& first, const StructureMorphism& second) {
  StructureMorphism out;
  out.rel_map = compose_maps(first.rel_map, second.rel_map);
  out.type_map = compose_maps(first.type_map, second.type_map);
  out.key_map = compose_maps(second.key_map, first.key_map);
  out.token_map = compose_maps(second.token_map, first.token_map);
  return out;
}

Report structure_morphism_validate(const StructureMorphism& h, const Structure& from,
                                   const Structure& to) {
  Report report;
  for (const auto& f :
       schema_morphism_validate(schema_part(h), from.schema, to.schema))
    report.push_back(f);
  for (const auto& f :
       infomorphism_validate(from.entities, to.entities, Infomorphism{h.type_map, h.token_map}))
    report.push_back({"entity: " + f.subject, f.message});

  // Relation infomorphism over keys.
  for (const auto& [r, list] : from.schema.signature) {
    if (!h.rel_map.count(r)) continue;  // reported above
    for (const auto& k : to.keys) {
      if (!h.key_map.count(k)) {
        report.push_back({k, "key map is not total"});
        break;
      }
      bool lhs = to.key_holds(k, h.rel_map.at(r));
      bool rhs = from.key_holds(h.key_map.at(k), r);
      if (lhs != rhs)
        report.push_back({k + " / " + r, "relation infomorphism condition fails"});
    }
  }

  // Tuple squares: tau_from(key_map(k)) must be the token-bridged tau_to(k).
  for (const auto& k : to.keys) {
    if (!h.key_map.count(k)) continue;
    const Name& pre = h.key_map.at(k);
    if (!from.keys.count(pre)) {
      report.push_back({k, "key map leaves the source structure"});
      continue;
    }
    Tuple expected;
    bool ok = true;
    for (const auto& [i, y] : to.tuple_of(k).values) {
      auto it = h.token_map.find(y);
      if (it == h.token_map.end()) {
        ok = false;
        break;
      }
      expected.values[i] = it->second;
    }
    if (!ok) continue;  // token totality reported above
    if (from.tuple_of(pre) != expected)
      report.push_back({k, "tuple square fails: tau(key_map(k)) differs from bridged tau(k)"});
  }
  return report;
}

Reduct reduct(const SchemaMorphism& m, const Schema& from, const Structure& m1) {
  Report morphism_report = schema_morphism_validate(m, from, m1.schema);
  if (!morphism_report.empty())
    throw Error(Errc::InvalidMorphism,
                "schema morphism invalid: " + morphism_report.front().message);
  Reduct out;
  out.structure.schema = from;
  out.structure.entities = inverse_image_classification(m.type_map, m1.entities);
  out.structure.keys = m1.keys;
  out.structure.tuples = m1.tuples;
  for (const auto& [r2, list] : from.signature) {
    const Name& r1 = m.rel_map.at(r2);
    for (const auto& k : m1.rel_extent(r1)) out.structure.rel_incidence.insert({k, r2});
  }
  out.bridge.rel_map = m.rel_map;
  out.bridge.type_map = m.type_map;
  out.bridge.key_map = identity_map(m1.keys);
  out.bridge.token_map = identity_map(m1.entities.tokens);
  return out;
}

bool intent_order_holds(const Structure& m2, const Structure& m1,
                        const std::vector<Sequent>& sequents) {
  for (const auto& q : sequents)
    if (satisfies_sequent(m2, q) && !satisfies_sequent(m1, q)) return false;
  return true;
}

}  // namespace fole
