#ifndef FOLE_TEST_FIXTURES_HPP
#define FOLE_TEST_FIXTURES_HPP

#include "fole/structure.hpp"

namespace fixtures {

using namespace fole;

// The going-to-Boston fixture: three entity types, four tokens, one ternary
// relation Go, one key whose tuple is (john, boston, bus1).

inline Classification e_go() {
  Classification e;
  e.types = {"Person", "City", "Bus"};
  e.tokens = {"john", "jane", "boston", "bus1"};
  e.incidence = {{"john", "Person"}, {"jane", "Person"}, {"boston", "City"}, {"bus1", "Bus"}};
  return e;
}

inline TypeList go_list() {
  return TypeList{{{"agnt", "Person"}, {"dest", "City"}, {"inst", "Bus"}}};
}

inline TypeList dest_list() { return TypeList{{{"dest", "City"}}}; }

inline TypeListMorphism dest_inclusion() {
  return TypeListMorphism{dest_list(), go_list(), {{"dest", "dest"}}};
}

inline Schema s_go() {
  Schema s;
  s.types = {"Person", "City", "Bus"};
  s.signature = {{"Go", go_list()}};
  return s;
}

inline Tuple john_trip() {
  return Tuple{{{"agnt", "john"}, {"dest", "boston"}, {"inst", "bus1"}}};
}

inline Tuple jane_trip() {
  return Tuple{{{"agnt", "jane"}, {"dest", "boston"}, {"inst", "bus1"}}};
}

inline Structure m_go() {
  Structure m;
  m.schema = s_go();
  m.entities = e_go();
  m.keys = {"k1"};
  m.rel_incidence = {{"k1", "Go"}};
  m.tuples = {{"k1", john_trip()}};
  return m;
}

// m_go extended with a second key typed by the dest list.
inline Structure m_go_with_dest_key() {
  Structure m = m_go();
  m.keys.insert("k2");
  m.tuples["k2"] = Tuple{{{"dest", "boston"}}};
  return m;
}

}  // namespace fixtures

#endif
