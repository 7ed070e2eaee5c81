#include "fole/kernel.hpp"

#include <atomic>
#include <vector>

namespace fole {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnknownSort: return "UnknownSort";
    case Errc::UnknownType: return "UnknownType";
    case Errc::UnknownRelation: return "UnknownRelation";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::SortError: return "SortError";
    case Errc::SortClash: return "SortClash";
    case Errc::CompositionMismatch: return "CompositionMismatch";
    case Errc::InvalidMorphism: return "InvalidMorphism";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::UnsoundLogic: return "UnsoundLogic";
    case Errc::UnsoundWitness: return "UnsoundWitness";
    case Errc::NotCovering: return "NotCovering";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::IoError: return "IoError";
  }
  return "Error";
}

const Name& map_at(const NameMap& m, const Name& key, Errc code, const char* what) {
  auto it = m.find(key);
  if (it == m.end()) throw Error(code, std::string(what) + " '" + key + "' not mapped");
  return it->second;
}

NameMap compose_maps(const NameMap& first, const NameMap& second) {
  NameMap out;
  for (const auto& [k, v] : first)
    out[k] = map_at(second, v, Errc::CompositionMismatch, "intermediate name");
  return out;
}

NameMap identity_map(const NameSet& names) {
  NameMap out;
  for (const auto& n : names) out[n] = n;
  return out;
}

const Name& TypeList::sort(const Name& index) const {
  return map_at(sorts, index, Errc::ArityMismatch, "index");
}

NameSet TypeList::arity() const {
  NameSet out;
  for (const auto& [i, s] : sorts) out.insert(i);
  return out;
}

bool TypeListMorphism::is_identity() const {
  if (source != target) return false;
  for (const auto& [i, j] : map)
    if (i != j) return false;
  return map.size() == source.sorts.size();
}

const Name& TypeListMorphism::apply(const Name& index) const {
  return map_at(map, index, Errc::ArityMismatch, "source index");
}

TypeListMorphism identity_morphism(const TypeList& list) {
  TypeListMorphism h{list, list, {}};
  for (const auto& [i, s] : list.sorts) h.map[i] = i;
  return h;
}

TypeListMorphism compose(const TypeListMorphism& first, const TypeListMorphism& second) {
  if (first.target != second.source)
    throw Error(Errc::CompositionMismatch, "type list morphisms do not meet");
  return TypeListMorphism{first.source, second.target, compose_maps(first.map, second.map)};
}

void ensure_valid(const TypeListMorphism& h) {
  if (h.map.size() != h.source.sorts.size())
    throw Error(Errc::InvalidMorphism, "arity function is not total");
  for (const auto& [i, j] : h.map) {
    if (!h.source.has(i) || !h.target.has(j))
      throw Error(Errc::InvalidMorphism, "arity function leaves the declared index sets");
    if (h.source.sort(i) != h.target.sort(j))
      throw Error(Errc::InvalidMorphism,
                  "sort condition fails at index '" + i + "': " + h.source.sort(i) +
                      " vs " + h.target.sort(j));
  }
}

NameSet Classification::extent(const Name& type) const {
  NameSet out;
  for (const auto& [tok, ty] : incidence)
    if (ty == type) out.insert(tok);
  return out;
}

NameSet Classification::intent(const Name& token) const {
  NameSet out;
  for (const auto& [tok, ty] : incidence)
    if (tok == token) out.insert(ty);
  return out;
}

void Classification::ensure_wellformed() const {
  for (const auto& [tok, ty] : incidence) {
    if (!tokens.count(tok))
      throw Error(Errc::UnknownName, "incidence mentions undeclared token '" + tok + "'");
    if (!types.count(ty))
      throw Error(Errc::UnknownType, "incidence mentions undeclared type '" + ty + "'");
  }
}

Report infomorphism_validate(const Classification& from, const Classification& to,
                             const Infomorphism& m) {
  Report report;
  for (const auto& x : from.types)
    if (!m.type_map.count(x))
      report.push_back({x, "type map is not total"});
    else if (!to.types.count(m.type_map.at(x)))
      report.push_back({x, "type map leaves the target classification"});
  for (const auto& y : to.tokens)
    if (!m.token_map.count(y))
      report.push_back({y, "token map is not total"});
    else if (!from.tokens.count(m.token_map.at(y)))
      report.push_back({y, "token map leaves the source classification"});
  if (!report.empty()) return report;
  for (const auto& y : to.tokens)
    for (const auto& x : from.types) {
      bool lhs = to.holds(y, m.type_map.at(x));
      bool rhs = from.holds(m.token_map.at(y), x);
      if (lhs != rhs)
        report.push_back({y + " / " + x, "infomorphism condition fails"});
    }
  return report;
}

const Name& Tuple::at(const Name& index) const {
  return map_at(values, index, Errc::ArityMismatch, "tuple index");
}

std::size_t enumeration_cap_storage(bool set, std::size_t value) {
  static std::atomic<std::size_t> cap{1000000};
  if (set) cap.store(value);
  return cap.load();
}

std::size_t enumeration_cap() { return enumeration_cap_storage(false, 0); }
void set_enumeration_cap(std::size_t cap) { enumeration_cap_storage(true, cap); }

bool list_holds(const Classification& e, const Tuple& t, const TypeList& list) {
  if (t.values.size() != list.sorts.size()) return false;
  for (const auto& [i, s] : list.sorts) {
    auto it = t.values.find(i);
    if (it == t.values.end()) return false;
    if (!e.holds(it->second, s)) return false;
  }
  return true;
}

TupleRelation tup(const Classification& e, const TypeList& list) {
  std::vector<Name> indices;
  std::vector<std::vector<Name>> extents;
  std::size_t total = 1;
  for (const auto& [i, s] : list.sorts) {
    if (!e.types.count(s))
      throw Error(Errc::UnknownSort, "type list mentions undeclared sort '" + s + "'");
    NameSet ext = e.extent(s);
    indices.push_back(i);
    extents.emplace_back(ext.begin(), ext.end());
    total = extents.back().empty() ? 0 : total * extents.back().size();
    if (total > enumeration_cap())
      throw Error(Errc::CapacityExceeded, "tuple enumeration exceeds cap");
  }
  TupleRelation out{list, {}};
  if (total == 0) return out;
  std::vector<std::size_t> odometer(indices.size(), 0);
  for (;;) {
    Tuple t;
    for (std::size_t p = 0; p < indices.size(); ++p) t.values[indices[p]] = extents[p][odometer[p]];
    out.tuples.insert(std::move(t));
    std::size_t p = 0;
    while (p < odometer.size()) {
      if (++odometer[p] < extents[p].size()) break;
      odometer[p++] = 0;
    }
    if (p == odometer.size()) break;
  }
  return out;
}

Tuple tup_map(const TypeListMorphism& h, const Tuple& t) {
  if (t.values.size() != h.target.sorts.size())
    throw Error(Errc::ArityMismatch, "tuple arity differs from the morphism target");
  for (const auto& [i, s] : h.target.sorts)
    if (!t.values.count(i))
      throw Error(Errc::ArityMismatch, "tuple misses index '" + i + "'");
  Tuple out;
  for (const auto& [i, j] : h.map) out.values[i] = t.at(j);
  return out;
}

TupleRelation flow(const Classification& e, const TypeListMorphism& h, FlowMode mode,
                   const TupleRelation& r) {
  const TypeList& expect = (mode == FlowMode::Inverse) ? h.source : h.target;
  if (r.type_list != expect)
    throw Error(Errc::ArityMismatch, "flow input relation lives in the wrong fiber");
  switch (mode) {
    case FlowMode::Exists: {
      TupleRelation out{h.source, {}};
      for (const auto& t : r.tuples) out.tuples.insert(tup_map(h, t));
      return out;
    }
    case FlowMode::Forall: {
      TupleRelation out{h.source, {}};
      TupleRelation all = tup(e, h.target);
      std::map<Tuple, bool> covered;  // image tuple -> whole preimage in r
      for (const auto& t : all.tuples) {
        Tuple image = tup_map(h, t);
        auto [it, inserted] = covered.emplace(image, true);
        if (!r.tuples.count(t)) it->second = false;
      }
      for (const auto& cand : tup(e, h.source).tuples) {
        auto it = covered.find(cand);
        if (it == covered.end() || it->second) out.tuples.insert(cand);
      }
      return out;
    }
    case FlowMode::Inverse: {
      TupleRelation out{h.target, {}};
      for (const auto& t : tup(e, h.target).tuples)
        if (r.tuples.count(tup_map(h, t))) out.tuples.insert(t);
      return out;
    }
  }
  throw Error(Errc::ArityMismatch, "unreachable flow mode");
}

TypeList sum_along(const NameMap& type_fn, const TypeList& list) {
  TypeList out;
  for (const auto& [i, s] : list.sorts)
    out.sorts[i] = map_at(type_fn, s, Errc::UnknownSort, "sort");
  return out;
}

Classification inverse_image_classification(const NameMap& type_map, const Classification& c1) {
  Classification out;
  for (const auto& [x2, x1] : type_map) {
    if (!c1.types.count(x1))
      throw Error(Errc::UnknownType, "type map targets undeclared type '" + x1 + "'");
    out.types.insert(x2);
  }
  out.tokens = c1.tokens;
  for (const auto& y : c1.tokens)
    for (const auto& [x2, x1] : type_map)
      if (c1.holds(y, x1)) out.incidence.insert({y, x2});
  return out;
}

Tuple tuple_bridge(const Infomorphism& m, const Tuple& t) {
  Tuple out;
  for (const auto& [i, y] : t.values)
    out.values[i] = map_at(m.token_map, y, Errc::UnknownName, "token");
  return out;
}

namespace {

// Union-find over tagged indices for the pushout.
struct UnionFind {
  std::map<std::pair<int, Name>, std::pair<int, Name>> parent;

  std::pair<int, Name> find(std::pair<int, Name> k) {
    auto it = parent.find(k);
    if (it == parent.end() || it->second == k) return k;
    auto root = find(it->second);
    parent[k] = root;
    return root;
  }
  void unite(std::pair<int, Name> a, std::pair<int, Name> b) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
};

}  // namespace

Pushout typelist_pushout(const TypeListMorphism& h1, const TypeListMorphism& h2) {
  if (h1.source != h2.source)
    throw Error(Errc::CompositionMismatch, "pushout legs do not share a source");
  UnionFind uf;
  for (const auto& [i, s] : h1.target.sorts) uf.parent[{1, i}] = {1, i};
  for (const auto& [i, s] : h2.target.sorts) uf.parent[{2, i}] = {2, i};
  for (const auto& [i, s] : h1.source.sorts) uf.unite({1, h1.apply(i)}, {2, h2.apply(i)});

  // Group members per class and pick readable names: an index keeps its own
  // name when that is unambiguous, otherwise it is prefixed by its leg.
  std::map<std::pair<int, Name>, std::vector<std::pair<int, Name>>> classes;
  for (const auto& [k, v] : uf.parent) classes[uf.find(k)].push_back(k);
  std::map<Name, int> name_uses;
  for (const auto& [root, members] : classes) {
    NameSet names;
    for (const auto& m : members) names.insert(m.second);
    for (const auto& n : names) name_uses[n] += 1;
  }
  std::map<std::pair<int, Name>, Name> class_name;
  TypeList merged;
  for (const auto& [root, members] : classes) {
    Name sort;
    for (const auto& [tag, i] : members) {
      const Name& s = (tag == 1) ? h1.target.sort(i) : h2.target.sort(i);
      if (sort.empty()) sort = s;
      if (sort != s)
        throw Error(Errc::SortClash, "identified indices carry sorts '" + sort + "' and '" + s + "'");
    }
    Name base = root.second;
    Name label = (name_uses[base] > 1) ? (root.first == 1 ? "l." : "r.") + base : base;
    class_name[root] = label;
    merged.sorts[label] = sort;
  }

  Pushout out;
  out.list = merged;
  out.left = TypeListMorphism{h1.target, merged, {}};
  for (const auto& [i, s] : h1.target.sorts) out.left.map[i] = class_name[uf.find({1, i})];
  out.right = TypeListMorphism{h2.target, merged, {}};
  for (const auto& [i, s] : h2.target.sorts) out.right.map[i] = class_name[uf.find({2, i})];
  return out;
}

}  // namespace fole
