#include "fole/system.hpp"

#include <algorithm>

namespace fole {

Report information_system_validate(const InformationSystem& s) {
  Report report;
  for (const auto& [node, lg] : s.logics) {
    if (!s.shape.nodes.count(node)) report.push_back({node, "logic at undeclared node"});
    for (const auto& f : structure_validate(lg.structure))
      report.push_back({node + ": " + f.subject, f.message});
    for (const auto& f : specification_validate(lg.spec))
      report.push_back({node + ": " + f.subject, f.message});
    if (!(lg.structure.schema == lg.spec.schema))
      report.push_back({node, "structure and specification do not share a schema"});
  }
  for (const auto& node : s.shape.nodes)
    if (!s.logics.count(node)) report.push_back({node, "node has no logic"});
  for (const auto& [e, ends] : s.shape.edges) {
    if (!s.shape.nodes.count(ends.first) || !s.shape.nodes.count(ends.second)) {
      report.push_back({e, "edge endpoint is not a node"});
      continue;
    }
    auto it = s.links.find(e);
    if (it == s.links.end()) {
      report.push_back({e, "edge has no morphism"});
      continue;
    }
    if (!s.logics.count(ends.first) || !s.logics.count(ends.second)) continue;
    for (const auto& f : structure_morphism_validate(it->second, s.logics.at(ends.first).structure,
                                                     s.logics.at(ends.second).structure))
      report.push_back({e + ": " + f.subject, f.message});
  }
  for (const auto& [e, link] : s.links)
    if (!s.shape.edges.count(e)) report.push_back({e, "morphism for undeclared edge"});
  return report;
}

DistributedSystem underlying(const InformationSystem& s) {
  DistributedSystem d;
  d.shape = s.shape;
  for (const auto& [node, lg] : s.logics) d.structures.emplace(node, lg.structure);
  d.links = s.links;
  return d;
}

bool channel_covers(const Channel& ch, const DistributedSystem& d) {
  for (const auto& node : d.shape.nodes)
    if (!ch.components.count(node))
      throw Error(Errc::ShapeMismatch, "channel misses a component at node '" + node + "'");
  for (const auto& [e, ends] : d.shape.edges) {
    auto link = d.links.find(e);
    if (link == d.links.end())
      throw Error(Errc::ShapeMismatch, "distributed system misses the edge morphism '" + e + "'");
    StructureMorphism via = compose(link->second, ch.components.at(ends.second));
    if (!(via == ch.components.at(ends.first))) return false;
  }
  return true;
}

namespace {

struct TaggedUnionFind {
  std::map<std::pair<Name, Name>, std::pair<Name, Name>> parent;  // (node, name)

  void declare(const Name& node, const Name& name) {
    parent.emplace(std::make_pair(node, name), std::make_pair(node, name));
  }
  std::pair<Name, Name> find(std::pair<Name, Name> k) {
    auto it = parent.find(k);
    if (it == parent.end() || it->second == k) return k;
    auto root = find(it->second);
    parent[k] = root;
    return root;
  }
  void unite(std::pair<Name, Name> a, std::pair<Name, Name> b) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
};

Name class_label(const std::pair<Name, Name>& root) { return root.first + "." + root.second; }

/// Enumerates edge-compatible families component by component.
struct FamilyEnumerator {
  const std::vector<Name>& nodes;
  const std::map<Name, std::vector<Name>>& choices;  // node -> candidate names
  // per edge: (from node, to node, to-name -> from-name)
  const std::vector<std::tuple<Name, Name, const NameMap*>>& squares;
  std::size_t cap;

  std::vector<NameMap> run() const {
    std::vector<NameMap> families{NameMap{}};
    for (const auto& node : nodes) {
      std::vector<NameMap> next;
      for (const auto& partial : families)
        for (const auto& candidate : choices.at(node)) {
          NameMap extended = partial;
          extended[node] = candidate;
          if (compatible(extended)) next.push_back(std::move(extended));
          if (next.size() > cap)
            throw Error(Errc::CapacityExceeded, "core family enumeration exceeds cap");
        }
      families = std::move(next);
    }
    return families;
  }

  bool compatible(const NameMap& family) const {
    for (const auto& [from, to, map] : squares) {
      auto f = family.find(from);
      auto t = family.find(to);
      if (f == family.end() || t == family.end()) continue;
      auto it = map->find(t->second);
      if (it == map->end() || it->second != f->second) return false;
    }
    return true;
  }
};

}  // namespace

Channel sum_system(const DistributedSystem& d, std::size_t family_cap) {
  // Quotient of types and relations along the edge maps.
  TaggedUnionFind types, rels;
  for (const auto& [node, m] : d.structures) {
    for (const auto& x : m.schema.types) types.declare(node, x);
    for (const auto& [r, list] : m.schema.signature) rels.declare(node, r);
  }
  for (const auto& [e, ends] : d.shape.edges) {
    const StructureMorphism& link = d.links.at(e);
    for (const auto& [x, fx] : link.type_map) types.unite({ends.first, x}, {ends.second, fx});
    for (const auto& [r, fr] : link.rel_map) rels.unite({ends.first, r}, {ends.second, fr});
  }

  Structure core;
  std::map<std::pair<Name, Name>, Name> type_label, rel_label;
  for (const auto& [k, v] : types.parent) type_label[k] = class_label(types.find(k));
  for (const auto& [k, v] : rels.parent) rel_label[k] = class_label(rels.find(k));
  for (const auto& [k, label] : type_label) core.schema.types.insert(label);

  // Signatures read at the class representative; well-defined because edge
  // schema morphisms preserve type lists.
  for (const auto& [k, v] : rels.parent) {
    auto root = rels.find(k);
    if (k != root) continue;
    const TypeList& sig = d.structures.at(root.first).schema.sig(root.second);
    TypeList merged;
    for (const auto& [i, s] : sig.sorts) merged.sorts[i] = type_label.at({root.first, s});
    core.schema.signature[class_label(root)] = merged;
  }

  std::vector<Name> nodes(d.shape.nodes.begin(), d.shape.nodes.end());

  // Token families: limits of the token sets along the edge token maps.
  std::map<Name, std::vector<Name>> token_choices;
  for (const auto& node : nodes) {
    const auto& toks = d.structures.at(node).entities.tokens;
    token_choices[node] = std::vector<Name>(toks.begin(), toks.end());
  }
  std::vector<std::tuple<Name, Name, const NameMap*>> token_squares;
  for (const auto& [e, ends] : d.shape.edges)
    token_squares.emplace_back(ends.first, ends.second, &d.links.at(e).token_map);
  std::vector<NameMap> token_families =
      FamilyEnumerator{nodes, token_choices, token_squares, family_cap}.run();

  auto family_name = [&](const NameMap& family) {
    Name out;
    for (const auto& node : nodes) {
      if (!out.empty()) out += "+";
      out += family.at(node);
    }
    return out.empty() ? Name("unit") : out;
  };

  std::map<NameMap, Name> token_name;
  for (const auto& family : token_families) {
    Name label = family_name(family);
    token_name[family] = label;
    core.entities.tokens.insert(label);
  }

  // Core incidence at any member of the class; agreement along edges follows
  // from the edge infomorphism conditions.
  for (const auto& [tagged, label] : type_label) {
    core.entities.types.insert(label);
    for (const auto& [family, fam_label] : token_name)
      if (d.structures.at(tagged.first).entities.holds(family.at(tagged.first), tagged.second))
        core.entities.incidence.insert({fam_label, label});
  }

  // Key families additionally need all component tuples to share an arity.
  std::map<Name, std::vector<Name>> key_choices;
  for (const auto& node : nodes) {
    const auto& ks = d.structures.at(node).keys;
    key_choices[node] = std::vector<Name>(ks.begin(), ks.end());
  }
  std::vector<std::tuple<Name, Name, const NameMap*>> key_squares;
  for (const auto& [e, ends] : d.shape.edges)
    key_squares.emplace_back(ends.first, ends.second, &d.links.at(e).key_map);
  std::vector<NameMap> key_families =
      FamilyEnumerator{nodes, key_choices, key_squares, family_cap}.run();

  std::map<NameMap, Name> key_name;
  for (const auto& family : key_families) {
    NameSet arity;
    bool coherent = true;
    bool first = true;
    for (const auto& node : nodes) {
      const Tuple& t = d.structures.at(node).tuple_of(family.at(node));
      NameSet a;
      for (const auto& [i, y] : t.values) a.insert(i);
      if (first) {
        arity = a;
        first = false;
      } else if (a != arity) {
        coherent = false;
        break;
      }
    }
    if (!coherent) continue;
    Name label = family_name(family);
    key_name[family] = label;
    core.keys.insert(label);
    Tuple merged;
    for (const auto& i : arity) {
      NameMap value_family;
      for (const auto& node : nodes)
        value_family[node] = d.structures.at(node).tuple_of(family.at(node)).at(i);
      auto it = token_name.find(value_family);
      if (it == token_name.end())
        throw Error(Errc::ShapeMismatch, "component tuples do not form a compatible token family");
      merged.values[i] = it->second;
    }
    core.tuples[label] = merged;
  }

  for (const auto& [tagged, label] : rel_label)
    for (const auto& [family, fam_label] : key_name)
      if (d.structures.at(tagged.first).key_holds(family.at(tagged.first), tagged.second))
        core.rel_incidence.insert({fam_label, label});

  Channel ch;
  ch.core = core;
  for (const auto& node : nodes) {
    StructureMorphism gamma;
    const Structure& m = d.structures.at(node);
    for (const auto& x : m.schema.types) gamma.type_map[x] = type_label.at({node, x});
    for (const auto& [r, list] : m.schema.signature) gamma.rel_map[r] = rel_label.at({node, r});
    for (const auto& [family, label] : token_name) gamma.token_map[label] = family.at(node);
    for (const auto& [family, label] : key_name) gamma.key_map[label] = family.at(node);
    ch.components[node] = std::move(gamma);
  }
  return ch;
}

Specification direct_flow(const Logic& lg, const StructureMorphism& gamma,
                          const Schema& core_schema) {
  Specification out;
  SchemaMorphism sm = schema_part(gamma);
  out.schema = core_schema;
  for (const auto& c : lg.spec.constraints) out.constraints.push_back(translate_constraint(sm, c));
  return out;
}

Logic fusion(const InformationSystem& s, const Channel& ch, const FormulaUniverse& core_universe) {
  DistributedSystem d = underlying(s);
  if (!channel_covers(ch, d))
    throw Error(Errc::NotCovering, "channel does not cover the distributed system");
  Specification fused;
  fused.schema = ch.core.schema;
  for (const auto& [node, lg] : s.logics) {
    Specification flowed = direct_flow(lg, ch.components.at(node), ch.core.schema);
    fused.constraints.insert(fused.constraints.end(), flowed.constraints.begin(),
                             flowed.constraints.end());
  }
  std::sort(fused.constraints.begin(), fused.constraints.end());
  fused.constraints.erase(std::unique(fused.constraints.begin(), fused.constraints.end(),
                                      [](const Constraint& a, const Constraint& b) { return a == b; }),
                          fused.constraints.end());
  Logic out;
  out.structure = ch.core;
  out.spec.schema = ch.core.schema;
  out.spec.constraints = consequence(fused, core_universe);
  return out;
}

std::vector<Constraint> constraint_universe(const FormulaUniverse& u) {
  std::vector<Constraint> out;
  for (const auto& list : u.fibers()) {
    TypeListMorphism id = identity_morphism(list);
    const auto& members = u.fiber_members(list);
    for (int a : members)
      for (int b : members) out.push_back(Constraint{id, u.formulas()[a], u.formulas()[b]});
  }
  for (const auto& h : u.pool()) {
    if (h.is_identity()) continue;
    for (int a : u.fiber_members(h.target))
      for (int b : u.fiber_members(h.source))
        out.push_back(Constraint{h, u.formulas()[a], u.formulas()[b]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Name, std::vector<Constraint>> system_consequence(
    const InformationSystem& s, const Channel& ch,
    const std::map<Name, FormulaUniverse>& node_universes, const FormulaUniverse& core_universe) {
  Logic fused = fusion(s, ch, core_universe);
  std::set<Constraint> derivable(fused.spec.constraints.begin(), fused.spec.constraints.end());
  std::map<Name, std::vector<Constraint>> out;
  for (const auto& [node, u] : node_universes) {
    SchemaMorphism sm = schema_part(ch.components.at(node));
    std::vector<Constraint> kept;
    for (const auto& c : constraint_universe(u))
      if (derivable.count(translate_constraint(sm, c))) kept.push_back(c);
    out.emplace(node, std::move(kept));
  }
  return out;
}

}  // namespace fole
