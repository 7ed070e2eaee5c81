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

FormulaSymbols go_symbols() {
  FormulaSymbols out;
  out.typelists["LGo"] = go_list();
  out.typelists["LDest"] = dest_list();
  out.morphisms["h"] = dest_inclusion();
  return out;
}

}  // namespace

TEST_CASE("infer_typelist") {
  Schema s = s_go();
  CHECK(infer_typelist(s, Formula::atom("Go")) == go_list());
  CHECK(infer_typelist(s, Formula::meet(Formula::atom("Go"), Formula::top(go_list()))) ==
        go_list());
  CHECK(infer_typelist(s, Formula::sum_flow(dest_inclusion(), Formula::atom("Go"))) ==
        dest_list());
  CHECK(infer_typelist(s, Formula::subst(dest_inclusion(), Formula::top(dest_list()))) ==
        go_list());

  CHECK_THROWS_AS(infer_typelist(s, Formula::atom("Gone")), Error);
  CHECK_THROWS_AS(
      infer_typelist(s, Formula::meet(Formula::atom("Go"), Formula::top(dest_list()))), Error);
  CHECK_THROWS_AS(
      infer_typelist(s, Formula::sum_flow(dest_inclusion(), Formula::top(dest_list()))), Error);
}

TEST_CASE("translate is homomorphic and renames atoms") {
  Schema s = s_go();
  SchemaMorphism id = schema_identity(s);
  Formula go = Formula::atom("Go");
  CHECK(translate(id, go) == go);

  SchemaMorphism m = rename_morphism();
  CHECK(translate(m, go) == Formula::atom("Travel"));

  Formula nested = Formula::sum_flow(dest_inclusion(), Formula::meet(go, go));
  Formula image = translate(m, nested);
  REQUIRE(image.kind() == FormulaKind::SumFlow);
  CHECK(image.morphism().target == renamed_schema().sig("Travel"));
  CHECK(image.morphism().map == dest_inclusion().map);
  CHECK(image.body() == Formula::meet(Formula::atom("Travel"), Formula::atom("Travel")));
}

TEST_CASE("typelist naturality of translate") {
  Schema from = s_go();
  Schema to = renamed_schema();
  SchemaMorphism m = rename_morphism();
  std::vector<Formula> samples = {
      Formula::atom("Go"),
      Formula::neg(Formula::atom("Go")),
      Formula::sum_flow(dest_inclusion(), Formula::atom("Go")),
      Formula::prod_flow(dest_inclusion(), Formula::top(go_list())),
      Formula::subst(dest_inclusion(), Formula::bottom(dest_list())),
  };
  for (const auto& f : samples)
    CHECK(infer_typelist(to, translate(m, f)) == sum_along(m.type_map, infer_typelist(from, f)));
}

TEST_CASE("translate is functorial") {
  Schema s = s_go();
  SchemaMorphism m = rename_morphism();
  Schema final_schema;
  final_schema.types = {"A", "P", "V"};
  final_schema.signature = {{"T2", TypeList{{{"agnt", "A"}, {"dest", "P"}, {"inst", "V"}}}}};
  SchemaMorphism second{{{"Travel", "T2"}}, {{"Agent", "A"}, {"Place", "P"}, {"Vehicle", "V"}}};
  SchemaMorphism composed = schema_morphism_compose(m, second);

  std::vector<Formula> samples = {
      Formula::atom("Go"),
      Formula::diff(Formula::atom("Go"), Formula::atom("Go")),
      Formula::prod_flow(dest_inclusion(), Formula::atom("Go")),
  };
  for (const auto& f : samples) CHECK(translate(composed, f) == translate(second, translate(m, f)));
}

TEST_CASE("translate_constraint renames both sides and re-sorts the morphism") {
  SchemaMorphism m = rename_morphism();
  Constraint c{dest_inclusion(), Formula::atom("Go"), Formula::top(dest_list())};
  Constraint image = translate_constraint(m, c);
  CHECK(image.target == Formula::atom("Travel"));
  CHECK(image.source == Formula::top(TypeList{{{"dest", "Place"}}}));
  CHECK(image.h.map == c.h.map);
  CHECK(image.h.target == renamed_schema().sig("Travel"));

  Constraint same = translate_constraint(schema_identity(s_go()), c);
  CHECK(same == c);
}

TEST_CASE("formula parsing") {
  FormulaSymbols symbols = go_symbols();
  CHECK(parse_formula("Go") == Formula::atom("Go"));
  CHECK(parse_formula("(Go /\\ Go)") == Formula::meet(Formula::atom("Go"), Formula::atom("Go")));
  CHECK(parse_formula("exists[h](Go)", symbols) ==
        Formula::sum_flow(dest_inclusion(), Formula::atom("Go")));
  CHECK(parse_formula("top[LGo]", symbols) == Formula::top(go_list()));
  CHECK(parse_formula("top[{dest: City}]") == Formula::top(dest_list()));
  CHECK(parse_formula("~~Go") == Formula::neg(Formula::neg(Formula::atom("Go"))));
  CHECK(parse_formula("Go \\ Go") == Formula::diff(Formula::atom("Go"), Formula::atom("Go")));
  CHECK(parse_formula("Go -> Go \\/ Go") ==
        Formula::impl(Formula::atom("Go"), Formula::join(Formula::atom("Go"), Formula::atom("Go"))));

  Formula inline_flow = parse_formula("forall[{dest -> dest : {dest: City} => LGo}](Go)", symbols);
  CHECK(inline_flow == Formula::prod_flow(dest_inclusion(), Formula::atom("Go")));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_formula("Go /\\");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code == Errc::SyntaxError);
    CHECK(e.line == 1);
    CHECK(e.column > 1);
  }
  CHECK_THROWS_AS(parse_formula("exists[nope](Go)"), Error);
  CHECK_THROWS_AS(parse_formula("(Go"), Error);
}

TEST_CASE("print then parse is the identity on ASTs") {
  FormulaSymbols symbols = go_symbols();
  std::vector<Formula> samples = {
      Formula::atom("Go"),
      Formula::meet(Formula::atom("Go"), Formula::neg(Formula::atom("Go"))),
      Formula::impl(Formula::top(go_list()), Formula::bottom(go_list())),
      Formula::sum_flow(dest_inclusion(), Formula::diff(Formula::atom("Go"), Formula::atom("Go"))),
      Formula::subst(dest_inclusion(), Formula::join(Formula::top(dest_list()),
                                                     Formula::bottom(dest_list()))),
      Formula::prod_flow(dest_inclusion(), Formula::atom("Go")),
  };
  for (const auto& f : samples) CHECK(parse_formula(to_string(f)) == f);
}

TEST_CASE("parse then print is canonical") {
  std::string canonical = to_string(parse_formula("Go /\\ Go \\/ Go"));
  CHECK(parse_formula(canonical) == parse_formula("Go /\\ Go \\/ Go"));
  CHECK(to_string(parse_formula(canonical)) == canonical);
}

TEST_CASE("constraint parsing") {
  Schema s = s_go();
  FormulaSymbols symbols = go_symbols();
  Constraint c = parse_constraint("h : Go |- top[LDest]", s, symbols);
  CHECK(c.h == dest_inclusion());
  CHECK(c.target == Formula::atom("Go"));
  CHECK(c.source == Formula::top(dest_list()));

  Constraint q = parse_constraint("Go |- top[LGo]", s, symbols);
  CHECK(q.h.is_identity());
  CHECK(q.h.source == go_list());

  // an atom named like a morphism stays a formula when not followed by ':'
  Constraint r = parse_constraint("Go |- Go", s, symbols);
  CHECK(r.h.is_identity());
}
