#include "fole/schema.hpp"

namespace fole {

const TypeList& Schema::sig(const Name& r) const {
  auto it = signature.find(r);
  if (it == signature.end())
    throw Error(Errc::UnknownRelation, "relation '" + r + "' not declared");
  return it->second;
}

NameSet Schema::relations() const {
  NameSet out;
  for (const auto& [r, list] : signature) out.insert(r);
  return out;
}

SchemaMorphism schema_identity(const Schema& s) {
  return SchemaMorphism{identity_map(s.relations()), identity_map(s.types)};
}

Report schema_validate(const Schema& s) {
  Report report;
  for (const auto& [r, list] : s.signature)
    for (const auto& [i, sort] : list.sorts)
      if (!s.types.count(sort))
        report.push_back({r, "signature index '" + i + "' has undeclared sort '" + sort + "'"});
  return report;
}

Report schema_morphism_validate(const SchemaMorphism& m, const Schema& from, const Schema& to) {
  Report report;
  for (const auto& x : from.types)
    if (!m.type_map.count(x))
      report.push_back({x, "type map is not total"});
    else if (!to.types.count(m.type_map.at(x)))
      report.push_back({x, "type map targets undeclared type '" + m.type_map.at(x) + "'"});
  for (const auto& [r, list] : from.signature) {
    if (!m.rel_map.count(r)) {
      report.push_back({r, "relation map is not total"});
      continue;
    }
    const Name& image = m.rel_map.at(r);
    if (!to.has_relation(image)) {
      report.push_back({r, "relation map targets undeclared relation '" + image + "'"});
      continue;
    }
    try {
      if (to.sig(image) != sum_along(m.type_map, list))
        report.push_back({r, "signature condition fails: sig(" + image +
                                 ") differs from the re-sorted signature"});
    } catch (const Error& e) {
      report.push_back({r, e.what()});
    }
  }
  return report;
}

SchemaMorphism schema_morphism_compose(const SchemaMorphism& first, const SchemaMorphism& second) {
  return SchemaMorphism{compose_maps(first.rel_map, second.rel_map),
                        compose_maps(first.type_map, second.type_map)};
}

}  // namespace fole
