#include <doctest.h>

#include "fixtures.hpp"

using namespace fole;
using namespace fixtures;

TEST_CASE("list_holds classifies tuples against type lists") {
  Classification e = e_go();
  CHECK(list_holds(e, john_trip(), go_list()));
  Tuple swapped{{{"agnt", "boston"}, {"dest", "john"}, {"inst", "bus1"}}};
  CHECK_FALSE(list_holds(e, swapped, go_list()));
  CHECK(list_holds(e, Tuple{}, TypeList{}));
  // arity mismatch is plain false
  CHECK_FALSE(list_holds(e, Tuple{{{"dest", "boston"}}}, go_list()));
}

TEST_CASE("tup enumerates the full extent of a type list") {
  Classification e = e_go();
  TupleRelation all = tup(e, go_list());
  CHECK(all.tuples.size() == 2);  // product of extents 2 * 1 * 1
  CHECK(all.tuples.count(john_trip()));
  CHECK(all.tuples.count(jane_trip()));

  TupleRelation unit = tup(e, TypeList{});
  CHECK(unit.tuples.size() == 1);
  CHECK(unit.tuples.count(Tuple{}));

  TupleRelation cities = tup(e, TypeList{{{"a", "City"}}});
  CHECK(cities.tuples == std::set<Tuple>{Tuple{{{"a", "boston"}}}});

  CHECK_THROWS_AS(tup(e, TypeList{{{"a", "Truck"}}}), Error);
}

TEST_CASE("tup cardinality is the product of sort extents") {
  Classification e = e_go();
  TypeList two_people{{{"a", "Person"}, {"b", "Person"}}};
  CHECK(tup(e, two_people).tuples.size() == 4);
  TypeList with_empty{{{"a", "Person"}, {"b", "Ghost"}}};
  e.types.insert("Ghost");
  CHECK(tup(e, with_empty).tuples.empty());
}

TEST_CASE("tup respects the enumeration cap") {
  Classification e = e_go();
  std::size_t old_cap = enumeration_cap();
  set_enumeration_cap(3);
  CHECK_THROWS_AS(tup(e, TypeList{{{"a", "Person"}, {"b", "Person"}}}), Error);
  set_enumeration_cap(old_cap);
}

TEST_CASE("tup_map precomposes tuples with the arity function") {
  TypeListMorphism h = dest_inclusion();
  CHECK(tup_map(h, john_trip()) == Tuple{{{"dest", "boston"}}});
  CHECK(tup_map(identity_morphism(go_list()), john_trip()) == john_trip());

  TypeListMorphism dup{TypeList{{{"u", "City"}, {"v", "City"}}}, dest_list(),
                       {{"u", "dest"}, {"v", "dest"}}};
  CHECK(tup_map(dup, Tuple{{{"dest", "boston"}}}) ==
        Tuple{{{"u", "boston"}, {"v", "boston"}}});

  CHECK_THROWS_AS(tup_map(h, Tuple{{{"dest", "boston"}}}), Error);
}

TEST_CASE("tup_map preserves list_holds") {
  Classification e = e_go();
  TypeListMorphism h = dest_inclusion();
  for (const auto& t : tup(e, go_list()).tuples)
    CHECK(list_holds(e, tup_map(h, t), h.source));
}

TEST_CASE("flow computes image, universal image, and preimage") {
  Classification e = e_go();
  TypeListMorphism h = dest_inclusion();
  TupleRelation r{go_list(), {john_trip()}};

  TupleRelation image = flow(e, h, FlowMode::Exists, r);
  CHECK(image.tuples == std::set<Tuple>{Tuple{{{"dest", "boston"}}}});

  // (jane, boston, bus1) maps to (boston) as well but is missing from r.
  TupleRelation univ = flow(e, h, FlowMode::Forall, r);
  CHECK(univ.tuples.empty());

  TupleRelation back = flow(e, h, FlowMode::Inverse, TupleRelation{dest_list(), {Tuple{{{"dest", "boston"}}}}});
  CHECK(back.tuples == tup(e, go_list()).tuples);

  CHECK_THROWS_AS(flow(e, h, FlowMode::Exists, TupleRelation{dest_list(), {}}), Error);
}

TEST_CASE("flow adjointness on small generated cases") {
  // exists_h -| inverse_h -| forall_h, enumerated over all relations of a
  // two-index target and a one-index source.
  Classification e = e_go();
  TypeListMorphism h{dest_list(), TypeList{{{"agnt", "Person"}, {"dest", "City"}}},
                     {{"dest", "dest"}}};
  TupleRelation target_all = tup(e, h.target);
  TupleRelation source_all = tup(e, h.source);
  std::vector<Tuple> target(target_all.tuples.begin(), target_all.tuples.end());
  std::vector<Tuple> source(source_all.tuples.begin(), source_all.tuples.end());
  auto subset = [](const std::set<Tuple>& a, const std::set<Tuple>& b) {
    for (const auto& t : a)
      if (!b.count(t)) return false;
    return true;
  };
  for (unsigned rbits = 0; rbits < (1u << target.size()); ++rbits) {
    TupleRelation r{h.target, {}};
    for (std::size_t p = 0; p < target.size(); ++p)
      if (rbits & (1u << p)) r.tuples.insert(target[p]);
    TupleRelation ex = flow(e, h, FlowMode::Exists, r);
    TupleRelation fa = flow(e, h, FlowMode::Forall, r);
    for (unsigned sbits = 0; sbits < (1u << source.size()); ++sbits) {
      TupleRelation s{h.source, {}};
      for (std::size_t p = 0; p < source.size(); ++p)
        if (sbits & (1u << p)) s.tuples.insert(source[p]);
      TupleRelation inv = flow(e, h, FlowMode::Inverse, s);
      CHECK(subset(ex.tuples, s.tuples) == subset(r.tuples, inv.tuples));
      CHECK(subset(s.tuples, fa.tuples) == subset(inv.tuples, r.tuples));
    }
  }
}

TEST_CASE("tup_map is functorial, contravariantly") {
  Classification e = e_go();
  TypeListMorphism h1 = dest_inclusion();  // {dest} -> go_list
  TypeListMorphism h2{go_list(), go_list(), {{"agnt", "agnt"}, {"dest", "dest"}, {"inst", "inst"}}};
  TypeListMorphism comp = compose(h1, h2);
  for (const auto& t : tup(e, go_list()).tuples)
    CHECK(tup_map(comp, t) == tup_map(h1, tup_map(h2, t)));
}

TEST_CASE("sum_along postcomposes sorts") {
  NameMap id{{"Person", "Person"}, {"City", "City"}, {"Bus", "Bus"}};
  CHECK(sum_along(id, go_list()) == go_list());

  NameMap rename{{"Person", "Agent"}, {"City", "Place"}, {"Bus", "Vehicle"}};
  CHECK(sum_along(rename, go_list()) ==
        TypeList{{{"agnt", "Agent"}, {"dest", "Place"}, {"inst", "Vehicle"}}});

  NameMap collapse{{"Person", "Thing"}, {"City", "Thing"}, {"Bus", "Thing"}};
  CHECK(sum_along(collapse, go_list()) ==
        TypeList{{{"agnt", "Thing"}, {"dest", "Thing"}, {"inst", "Thing"}}});

  CHECK_THROWS_AS(sum_along(NameMap{}, go_list()), Error);
}

TEST_CASE("inverse image classification pulls incidence back") {
  Classification e = e_go();
  NameMap id{{"Person", "Person"}, {"City", "City"}, {"Bus", "Bus"}};
  CHECK(inverse_image_classification(id, e) == e);

  Classification pulled = inverse_image_classification(NameMap{{"P", "Person"}}, e);
  CHECK(pulled.types == NameSet{"P"});
  CHECK(pulled.extent("P") == NameSet{"john", "jane"});
  CHECK(pulled.tokens == e.tokens);

  Classification with_ghost = e;
  with_ghost.types.insert("Ghost");
  Classification empty = inverse_image_classification(NameMap{{"P", "Ghost"}}, with_ghost);
  CHECK(empty.incidence.empty());

  CHECK_THROWS_AS(inverse_image_classification(NameMap{{"P", "Truck"}}, e), Error);
}

TEST_CASE("inverse image classification composes and yields an infomorphism") {
  Classification e = e_go();
  NameMap f{{"P", "Person"}, {"C", "City"}};
  NameMap g{{"Q", "P"}};
  Classification once = inverse_image_classification(f, e);
  CHECK(inverse_image_classification(g, once) ==
        inverse_image_classification(compose_maps(g, f), e));

  Infomorphism into{f, identity_map(e.tokens)};
  CHECK(infomorphism_validate(once, e, into).empty());
}

TEST_CASE("tuple_bridge postcomposes values with the token map") {
  Infomorphism ident{identity_map(e_go().types), identity_map(e_go().tokens)};
  CHECK(tuple_bridge(ident, john_trip()) == john_trip());

  Infomorphism collapse{identity_map(e_go().types),
                        {{"john", "john"}, {"jane", "john"}, {"boston", "boston"}, {"bus1", "bus1"}}};
  CHECK(tuple_bridge(collapse, jane_trip()) == john_trip());
  CHECK(tuple_bridge(collapse, Tuple{}) == Tuple{});
}

TEST_CASE("infomorphism validator enforces the adjoint incidence condition") {
  Classification e = e_go();
  Infomorphism good{identity_map(e.types), identity_map(e.tokens)};
  CHECK(infomorphism_validate(e, e, good).empty());

  Infomorphism bad = good;
  bad.token_map["boston"] = "john";  // boston |= City but john does not
  CHECK_FALSE(infomorphism_validate(e, e, bad).empty());
}

TEST_CASE("typelist_pushout glues along the shared source") {
  TypeList left{{{"agnt", "Person"}, {"dest", "City"}}};
  TypeList right{{{"dest", "City"}, {"inst", "Bus"}}};
  TypeListMorphism h1{dest_list(), left, {{"dest", "dest"}}};
  TypeListMorphism h2{dest_list(), right, {{"dest", "dest"}}};

  Pushout p = typelist_pushout(h1, h2);
  CHECK(p.list == go_list());
  CHECK(p.left.map.at("dest") == p.right.map.at("dest"));
  // commuting square: h1 ; left == h2 ; right
  CHECK(compose(h1, p.left) == compose(h2, p.right));

  // empty shared source: disjoint union
  TypeListMorphism e1{TypeList{}, left, {}};
  TypeListMorphism e2{TypeList{}, right, {}};
  Pushout disjoint = typelist_pushout(e1, e2);
  CHECK(disjoint.list.sorts.size() == 4);  // dest appears on both sides, kept apart
  CHECK(disjoint.list.has("agnt"));
  CHECK(disjoint.list.has("inst"));
  CHECK(disjoint.list.has("l.dest"));
  CHECK(disjoint.list.has("r.dest"));

  // both legs the identity: the list itself
  TypeListMorphism i1 = identity_morphism(go_list());
  Pushout same = typelist_pushout(i1, i1);
  CHECK(same.list == go_list());
  CHECK(same.left.is_identity());
  CHECK(same.right.is_identity());

  // identifying indices of different sorts (possible only with an ill-sorted
  // leg) is reported as a clash rather than silently merged
  TypeListMorphism left_leg{TypeList{{{"x", "Person"}}}, TypeList{{{"dest", "Person"}}}, {{"x", "dest"}}};
  TypeListMorphism right_leg{TypeList{{{"x", "Person"}}}, TypeList{{{"dest", "City"}}}, {{"x", "dest"}}};
  CHECK_THROWS_AS(typelist_pushout(left_leg, right_leg), Error);
}
