#ifndef FOLE_SPECLOGIC_HPP
#define FOLE_SPECLOGIC_HPP

#include <vector>

#include "fole/structure.hpp"

namespace fole {

/// A finite set of constraints over one schema.
struct Specification {
  Schema schema;
  std::vector<Constraint> constraints;
};

Report specification_validate(const Specification& t);

/// A structure paired with a specification over the same schema.
struct Logic {
  Structure structure;
  Specification spec;
};

/// The finitization device for closure: every well-typed formula of depth
/// at most `depth` whose flow operators range over the given morphism pool.
/// Fibers are the relation signatures plus the pool endpoints.
class FormulaUniverse {
 public:
  static FormulaUniverse build(const Schema& schema, int depth,
                               std::vector<TypeListMorphism> pool,
                               std::size_t max_formulas = 20000);

  const Schema& schema() const { return schema_; }
  int depth() const { return depth_; }
  const std::vector<TypeListMorphism>& pool() const { return pool_; }
  const std::vector<Formula>& formulas() const { return formulas_; }
  const std::set<TypeList>& fibers() const { return fibers_; }

  bool contains(const Formula& f) const { return index_.count(f) != 0; }
  int index_of(const Formula& f) const;
  const std::vector<int>& fiber_members(const TypeList& list) const;

 private:
  Schema schema_;
  int depth_ = 0;
  std::vector<TypeListMorphism> pool_;
  std::vector<Formula> formulas_;
  std::map<Formula, int> index_;
  std::set<TypeList> fibers_;
  std::map<TypeList, std::vector<int>> by_fiber_;
  std::vector<int> empty_;
};

/// Bounded consequence closure: the least set of sequents over the universe
/// closed under reflexivity, transitivity, the fiber lattice rules, and
/// monotonicity of the three flow operators, seeded by the specification.
/// Returned as constraints along the identity morphisms of the universe's
/// fibers and along the pool morphisms.
std::vector<Constraint> consequence(const Specification& t, const FormulaUniverse& u);

/// Alias of structure-level constraint satisfaction.
bool semantic_entails(const Structure& m, const Constraint& c);

/// Checks that every translated constraint of `from` is in the bounded
/// consequence of `to`.
Report spec_morphism_validate(const SchemaMorphism& m, const Specification& from,
                              const Specification& to, const FormulaUniverse& u_to);

/// Lists the constraints of the specification that the structure fails.
Report soundness_check(const Logic& l);

}  // namespace fole

#endif
