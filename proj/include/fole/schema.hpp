#ifndef FOLE_SCHEMA_HPP
#define FOLE_SCHEMA_HPP

#include "fole/kernel.hpp"

namespace fole {

/// A relational schema: relation symbols with a type list each, over a
/// shared set of entity types.
struct Schema {
  NameSet types;                    // X
  std::map<Name, TypeList> signature;  // R -> List(X)

  bool has_relation(const Name& r) const { return signature.count(r) != 0; }
  const TypeList& sig(const Name& r) const;
  NameSet relations() const;

  auto operator<=>(const Schema&) const = default;
};

/// Schema morphism from -> to: relation and type functions with
/// sig_to(rel_map(r)) == sum_along(type_map, sig_from(r)).
struct SchemaMorphism {
  NameMap rel_map;   // R_from -> R_to
  NameMap type_map;  // X_from -> X_to

  auto operator<=>(const SchemaMorphism&) const = default;
};

SchemaMorphism schema_identity(const Schema& s);

Report schema_validate(const Schema& s);

Report schema_morphism_validate(const SchemaMorphism& m, const Schema& from, const Schema& to);

/// Diagrammatic composition: first: A -> B, second: B -> C.
SchemaMorphism schema_morphism_compose(const SchemaMorphism& first, const SchemaMorphism& second);

}  // namespace fole

#endif
