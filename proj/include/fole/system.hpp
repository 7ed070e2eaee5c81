#ifndef FOLE_SYSTEM_HPP
#define FOLE_SYSTEM_HPP

#include "fole/speclogic.hpp"

namespace fole {

struct ShapeGraph {
  NameSet nodes;
  std::map<Name, std::pair<Name, Name>> edges;  // edge name -> (from node, to node)
};

/// A diagram of logics: one logic per node, one logic morphism per edge.
/// The edge morphism's structure part runs between the node structures; its
/// specification part is the underlying schema morphism.
struct InformationSystem {
  ShapeGraph shape;
  std::map<Name, Logic> logics;
  std::map<Name, StructureMorphism> links;
};

struct DistributedSystem {
  ShapeGraph shape;
  std::map<Name, Structure> structures;
  std::map<Name, StructureMorphism> links;
};

/// A common target structure with one component morphism per node.
struct Channel {
  Structure core;
  std::map<Name, StructureMorphism> components;  // node -> (M_node -> core)
};

Report information_system_validate(const InformationSystem& s);

DistributedSystem underlying(const InformationSystem& s);

/// True iff for every edge e: i -> j the i-component factors through the
/// edge morphism: gamma_i == m_e ; gamma_j.
bool channel_covers(const Channel& ch, const DistributedSystem& d);

/// The computed sum: relation and entity types are quotients of the disjoint
/// unions along the edge maps; keys and tokens are edge-compatible families;
/// incidence is read off at any member of a quotient class. The returned
/// channel always covers the input system.
Channel sum_system(const DistributedSystem& d, std::size_t family_cap = 100000);

/// Translates every constraint of the logic along the component's schema part.
Specification direct_flow(const Logic& lg, const StructureMorphism& gamma,
                          const Schema& core_schema);

/// The fused logic at the core: the channel core paired with the bounded
/// consequence of the union of all direct flows.
Logic fusion(const InformationSystem& s, const Channel& ch, const FormulaUniverse& core_universe);

/// Inverse flow of the fused specification back to the nodes: at node i the
/// constraints of the node universe whose translation is derivable at the core.
std::map<Name, std::vector<Constraint>> system_consequence(
    const InformationSystem& s, const Channel& ch,
    const std::map<Name, FormulaUniverse>& node_universes, const FormulaUniverse& core_universe);

/// Every constraint expressible in the universe: along fiber identities and
/// along the pool morphisms.
std::vector<Constraint> constraint_universe(const FormulaUniverse& u);

}  // namespace fole

#endif
