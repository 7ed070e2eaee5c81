#ifndef FOLE_DATABASE_HPP
#define FOLE_DATABASE_HPP

#include <filesystem>

#include "fole/speclogic.hpp"

namespace fole {

/// The database of a sound logic over a bounded formula universe: one keyed
/// table per formula, plus the key maps realized by the derivable constraints.
struct Database {
  Schema schema;
  Classification entities;
  std::vector<Formula> formulas;
  std::map<Formula, Table> tables;
  std::vector<Constraint> constraints;          // generating consequence
  std::vector<NameMap> key_maps;                // per constraint, target keys -> source keys
};

Database db_of_logic(const Logic& l, const FormulaUniverse& u);

/// Informational equivalence: equal relation images.
bool tables_equivalent(const Table& a, const Table& b);

struct DatabaseMorphism {
  SchemaMorphism schema_morphism;               // the formula passage acts by translation
  Infomorphism entity;
  std::map<Formula, NameMap> key_transformations;  // per source-db formula
};

/// Builds and checks the database morphism induced by a logic morphism
/// (structure morphism whose schema part is also the specification morphism).
/// Throws ConditionViolated naming the offending formula and key.
DatabaseMorphism db_morphism_of(const StructureMorphism& lm, const Database& from,
                                const Database& to);

struct JoinResult {
  Formula formula;        // subst-and-conjoin over the fibered sum
  TupleRelation relation; // its relation-level interpretation
};

/// The join of the relation interpretations of the two constraint targets,
/// glued along the shared source of the span.
JoinResult join_via_formula(const Structure& m, const Constraint& leg1, const Constraint& leg2);

struct ExportResult {
  std::map<Formula, std::filesystem::path> files;
  std::filesystem::path manifest;
};

/// One CSV per formula (leading _key column, then the sorted indices) plus a
/// JSON manifest. Byte output is deterministic for identical inputs.
ExportResult export_database(const Database& db, const std::filesystem::path& directory);

}  // namespace fole

#endif
