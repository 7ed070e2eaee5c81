#ifndef FOLE_KERNEL_HPP
#define FOLE_KERNEL_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "fole/error.hpp"

namespace fole {

using Name = std::string;
using NameMap = std::map<Name, Name>;
using NameSet = std::set<Name>;

/// A relational arity: a finite index set with a sort for every index.
/// Indices and sorts are opaque names; equality is extensional.
struct TypeList {
  NameMap sorts;  // index -> entity type

  bool empty() const { return sorts.empty(); }
  bool has(const Name& index) const { return sorts.count(index) != 0; }
  const Name& sort(const Name& index) const;
  NameSet arity() const;

  auto operator<=>(const TypeList&) const = default;
};

/// An arity function h between type lists, directed source -> target,
/// with sort(source, i) == sort(target, h(i)) for every source index.
struct TypeListMorphism {
  TypeList source;  // <I', s'>
  TypeList target;  // <I, s>
  NameMap map;      // I' -> I

  bool is_identity() const;
  const Name& apply(const Name& index) const;

  auto operator<=>(const TypeListMorphism&) const = default;
};

TypeListMorphism identity_morphism(const TypeList& list);

/// Diagrammatic composition: first: A -> B, second: B -> C gives A -> C.
TypeListMorphism compose(const TypeListMorphism& first, const TypeListMorphism& second);

/// Throws InvalidMorphism unless the sort condition and totality hold.
void ensure_valid(const TypeListMorphism& h);

/// Finite types, finite tokens, and an incidence relation between them.
struct Classification {
  NameSet types;
  NameSet tokens;
  std::set<std::pair<Name, Name>> incidence;  // (token, type)

  bool holds(const Name& token, const Name& type) const {
    return incidence.count({token, type}) != 0;
  }
  NameSet extent(const Name& type) const;
  NameSet intent(const Name& token) const;

  /// Throws UnknownType / UnknownName when incidence mentions undeclared names.
  void ensure_wellformed() const;

  auto operator<=>(const Classification&) const = default;
};

/// The contravariant pair of maps between two classifications:
/// types travel from -> to, tokens travel to -> from.
struct Infomorphism {
  NameMap type_map;   // types(from) -> types(to)
  NameMap token_map;  // tokens(to) -> tokens(from)

  auto operator<=>(const Infomorphism&) const = default;
};

Report infomorphism_validate(const Classification& from, const Classification& to,
                             const Infomorphism& m);

/// A tuple: a total assignment of tokens to the indices of its arity.
struct Tuple {
  NameMap values;  // index -> token

  bool empty() const { return values.empty(); }
  const Name& at(const Name& index) const;

  auto operator<=>(const Tuple&) const = default;
};

/// A set of tuples all classified by one type list.
struct TupleRelation {
  TypeList type_list;
  std::set<Tuple> tuples;

  auto operator<=>(const TupleRelation&) const = default;
};

enum class FlowMode { Exists, Forall, Inverse };

/// Global guardrail on eager tuple enumeration (default 10^6).
std::size_t enumeration_cap();
void set_enumeration_cap(std::size_t cap);

/// True iff the tuple has exactly the arity of the list and every value is
/// a token of the corresponding sort.
bool list_holds(const Classification& e, const Tuple& t, const TypeList& list);

/// The full extent of a type list: every tuple it classifies.
/// Cardinality is the product of the sort extents.
TupleRelation tup(const Classification& e, const TypeList& list);

/// Precomposition: the result at index i' is t(h(i')).
Tuple tup_map(const TypeListMorphism& h, const Tuple& t);

/// The three flow operators on tuple relations.
///   Exists:  image of r under tup_map(h)          (target fiber -> source fiber)
///   Forall:  tuples whose whole tup_map preimage lies in r
///   Inverse: tup_map preimage of r                (source fiber -> target fiber)
TupleRelation flow(const Classification& e, const TypeListMorphism& h, FlowMode mode,
                   const TupleRelation& r);

/// Postcompose the sorts of a type list with a type function.
TypeList sum_along(const NameMap& type_fn, const TypeList& list);

/// Same tokens, types drawn from the map's domain, incidence pulled back.
Classification inverse_image_classification(const NameMap& type_map, const Classification& c1);

/// Pointwise postcomposition of a tuple's values with the token map.
Tuple tuple_bridge(const Infomorphism& m, const Tuple& t);

struct Pushout {
  TypeList list;
  TypeListMorphism left;   // target(h1) -> list
  TypeListMorphism right;  // target(h2) -> list
};

/// Fibered sum of two type lists under a shared source.
/// Indices identified along the legs; throws SortClash when identified
/// indices carry different sorts.
Pushout typelist_pushout(const TypeListMorphism& h1, const TypeListMorphism& h2);

// Small shared helpers.
const Name& map_at(const NameMap& m, const Name& key, Errc code, const char* what);
NameMap compose_maps(const NameMap& first, const NameMap& second);
NameMap identity_map(const NameSet& names);

}  // namespace fole

#endif
