#include <doctest.h>

#include "fixtures.hpp"

using namespace fole;
using namespace fixtures;

namespace {

Schema renamed_schema() {
  Schema s;
  s.types = {"Agent", "Place", "Vehicle"};
  s.signature = {{"Travel", TypeList{{{"agnt", "Agent"}, {"dest", "Place"}, {"inst", "Vehicle"}}}}};
  return s;
}

SchemaMorphism rename_morphism() {
  return SchemaMorphism{{{"Go", "Travel"}},
                        {{"Person", "Agent"}, {"City", "Place"}, {"Bus", "Vehicle"}}};
}

}  // namespace

TEST_CASE("schema_validate") {
  CHECK(schema_validate(s_go()).empty());
  CHECK(schema_validate(Schema{}).empty());

  Schema bad = s_go();
  bad.signature["Go"].sorts["inst"] = "Truck";
  Report report = schema_validate(bad);
  REQUIRE(report.size() == 1);
  CHECK(report[0].subject == "Go");
}

TEST_CASE("schema_morphism_validate") {
  Schema s = s_go();
  CHECK(schema_morphism_validate(schema_identity(s), s, s).empty());

  CHECK(schema_morphism_validate(rename_morphism(), s, renamed_schema()).empty());

  Schema with_binary = renamed_schema();
  with_binary.signature["Pair"] = TypeList{{{"a", "Agent"}, {"b", "Agent"}}};
  SchemaMorphism bad = rename_morphism();
  bad.rel_map["Go"] = "Pair";
  Report report = schema_morphism_validate(bad, s, with_binary);
  REQUIRE_FALSE(report.empty());
  CHECK(report[0].subject == "Go");
}

TEST_CASE("valid morphisms satisfy the signature condition pointwise") {
  Schema from = s_go();
  Schema to = renamed_schema();
  SchemaMorphism m = rename_morphism();
  for (const auto& [r, list] : from.signature)
    CHECK(to.sig(m.rel_map.at(r)) == sum_along(m.type_map, list));
}

TEST_CASE("schema morphism composition") {
  Schema s = s_go();
  SchemaMorphism m = rename_morphism();
  SchemaMorphism id_from = schema_identity(s);
  SchemaMorphism id_to = schema_identity(renamed_schema());
  CHECK(schema_morphism_compose(id_from, m) == m);
  CHECK(schema_morphism_compose(m, id_to) == m);

  Schema final_schema;
  final_schema.types = {"A", "P", "V"};
  final_schema.signature = {{"T2", TypeList{{{"agnt", "A"}, {"dest", "P"}, {"inst", "V"}}}}};
  SchemaMorphism second{{{"Travel", "T2"}}, {{"Agent", "A"}, {"Place", "P"}, {"Vehicle", "V"}}};
  SchemaMorphism composed = schema_morphism_compose(m, second);
  CHECK(composed.rel_map.at("Go") == "T2");
  CHECK(composed.type_map.at("Person") == "A");
  CHECK(schema_morphism_validate(composed, s, final_schema).empty());
}
