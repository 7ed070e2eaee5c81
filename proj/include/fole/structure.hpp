#ifndef FOLE_STRUCTURE_HPP
#define FOLE_STRUCTURE_HPP

#include <mutex>

#include "fole/formula.hpp"

namespace fole {

/// A finite relational structure: entity classification, keys classified by
/// relation symbols, and a tuple for every key. The structure condition says
/// a key classified by r carries a tuple classified by sig(r).
struct Structure {
  Schema schema;
  Classification entities;
  NameSet keys;
  std::set<std::pair<Name, Name>> rel_incidence;  // (key, relation)
  std::map<Name, Tuple> tuples;                   // tau

  bool key_holds(const Name& key, const Name& relation) const {
    return rel_incidence.count({key, relation}) != 0;
  }
  const Tuple& tuple_of(const Name& key) const;
  NameSet rel_extent(const Name& relation) const;

  auto operator<=>(const Structure&) const = default;
};

Report structure_validate(const Structure& m);

/// Keys whose tuple is classified by the given type list.
NameSet typed_fiber(const Structure& m, const TypeList& list);

/// Formula evaluation over one structure with an internal memo table.
/// The memo is invisible: eval is a pure function of (structure, formula)
/// and safe to call from concurrent threads.
class Evaluator {
 public:
  explicit Evaluator(const Structure& m) : m_(m) {}

  const Structure& structure() const { return m_; }
  NameSet eval(const Formula& f) const;
  TupleRelation relation_interp(const Formula& f) const;

 private:
  const Structure& m_;
  mutable std::mutex mutex_;
  mutable std::map<Formula, NameSet> cache_;

  NameSet compute(const Formula& f) const;
};

NameSet eval(const Structure& m, const Formula& f);

/// The tuples of the keys satisfying the formula, within tup(typelist(f)).
TupleRelation relation_interp(const Structure& m, const Formula& f);

/// A keyed table: the satisfying keys with the tuple map restricted to them.
struct Table {
  TypeList type_list;
  NameSet keys;
  std::map<Name, Tuple> tuples;

  auto operator<=>(const Table&) const = default;
};

Table table_interp(const Structure& m, const Formula& f);

bool satisfies_sequent(const Structure& m, const Sequent& q);

/// Constraint satisfaction. Along an identity morphism this is sequent
/// satisfaction; along a proper morphism it is the substitution reading:
/// every key of the target formula h-projects into the relation image of
/// the source formula.
bool satisfies_constraint(const Structure& m, const Constraint& c);
bool satisfies_constraint(const Evaluator& ev, const Constraint& c);

/// Structure morphism from -> to: relations and types travel forward,
/// keys and tokens travel backward.
struct StructureMorphism {
  NameMap rel_map;    // R_from -> R_to
  NameMap type_map;   // X_from -> X_to
  NameMap key_map;    // K_to -> K_from
  NameMap token_map;  // Y_to -> Y_from

  auto operator<=>(const StructureMorphism&) const = default;
};

SchemaMorphism schema_part(const StructureMorphism& h);
StructureMorphism structure_identity(const Structure& m);

/// Diagrammatic composition: first: A -> B, second: B -> C.
StructureMorphism compose(const StructureMorphism& first, const StructureMorphism& second);

Report structure_morphism_validate(const StructureMorphism& h, const Structure& from,
                                   const Structure& to);

struct Reduct {
  Structure structure;        // over the source schema of the morphism
  StructureMorphism bridge;   // reduct -> original
};

/// Inverse image structure along a schema morphism m: from -> to applied to
/// a structure over `to`'s schema. Keys and tokens are unchanged.
Reduct reduct(const SchemaMorphism& m, const Schema& from, const Structure& m1);

/// True iff every sequent of the set satisfied by m2 is satisfied by m1.
bool intent_order_holds(const Structure& m2, const Structure& m1,
                        const std::vector<Sequent>& sequents);

}  // namespace fole

#endif
