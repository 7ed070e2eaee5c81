#ifndef FOLE_TEXTIO_HPP
#define FOLE_TEXTIO_HPP

#include <filesystem>
#include <optional>

#include "fole/algebra.hpp"
#include "fole/system.hpp"

namespace fole {

/// A system file names its parts; they are resolved against the workspace
/// when the system is materialized.
struct SystemDecl {
  ShapeGraph shape;
  std::map<Name, std::pair<Name, Name>> node_refs;  // node -> (structure, spec)
  std::map<Name, Name> edge_refs;                   // edge -> structmorphism
  std::optional<Name> channel_core;                 // explicit channel, if any
  NameMap channel_components;                       // node -> structmorphism
};

struct UniverseDecl {
  Name schema;
  int depth = 0;
  std::vector<Name> pool;  // listmorphism names
};

/// All named objects parsed from declarative files.
struct Workspace {
  std::map<Name, TypeList> typelists;
  std::map<Name, TypeListMorphism> listmorphisms;
  std::map<Name, Classification> classifications;
  std::map<Name, Schema> schemas;
  std::map<Name, SchemaMorphism> schemamorphisms;
  std::map<Name, std::pair<Name, Name>> schemamorphism_endpoints;  // from -> to
  std::map<Name, Structure> structures;
  std::map<Name, StructureMorphism> structmorphisms;
  std::map<Name, std::pair<Name, Name>> structmorphism_endpoints;
  std::map<Name, Specification> specs;
  std::map<Name, OperatorDomain> opdomains;
  std::map<Name, Algebra> algebras;
  std::map<Name, SystemDecl> systems;
  std::map<Name, UniverseDecl> universes;

  FormulaSymbols symbols() const;
};

/// Parses one file's text into the workspace. Objects may reference names
/// declared earlier, including names from previously loaded files.
void parse_into(Workspace& ws, std::string_view text, const std::string& filename);

void load_file(Workspace& ws, const std::filesystem::path& path);

/// Cross-reference and semantic validation of every object in the workspace.
Report workspace_validate(const Workspace& ws);

InformationSystem make_information_system(const Workspace& ws, const Name& system);
Channel make_channel(const Workspace& ws, const Name& system);
FormulaUniverse make_universe(const Workspace& ws, const UniverseDecl& decl);

// Serializers; each emits one or more sections that reparse to equal values.
std::string to_text(const Name& name, const TypeList& list);
std::string to_text(const Name& name, const TypeListMorphism& h);
std::string to_text(const Name& name, const Classification& c);
std::string to_text(const Name& name, const Schema& s);
std::string to_text(const Name& name, const SchemaMorphism& m, const Name& from, const Name& to);
std::string to_text(const Name& name, const Structure& m);
std::string to_text(const Name& name, const StructureMorphism& m, const Name& from, const Name& to);
std::string to_text(const Name& name, const Specification& t);

}  // namespace fole

#endif
