// fole: command-line front end for the finite model engine.
//
// Objects are declared in .fole files (see docs/format.md). Flags that name
// an object accept either a workspace name or a file path; a path is loaded
// and, when it declares exactly one object of the expected kind, that object
// is selected.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "fole/database.hpp"
#include "fole/textio.hpp"

using namespace fole;

namespace {

struct Session {
  Workspace ws;
  std::map<std::string, std::vector<Name>> loaded_by_file;  // per kind+file record

  void load(const std::string& path) {
    load_file(ws, path);
  }

  template <class T>
  const T& resolve(const std::map<Name, T>& table, const std::string& ref, const char* kind) {
    auto it = table.find(ref);
    if (it != table.end()) return it->second;
    if (std::filesystem::exists(ref)) {
      std::set<Name> before;
      for (const auto& [name, obj] : table) before.insert(name);
      load(ref);
      std::vector<Name> added;
      for (const auto& [name, obj] : table)
        if (!before.count(name)) added.push_back(name);
      if (added.size() == 1) return table.at(added.front());
      if (added.empty())
        throw Error(Errc::UnknownName,
                    std::string("file declares no ") + kind + ": " + ref);
      throw Error(Errc::UnknownName, std::string("file declares several of kind ") + kind +
                                         "; name one explicitly: " + ref);
    }
    throw Error(Errc::UnknownName, std::string("unknown ") + kind + " '" + ref + "'");
  }
};

void print_report(const Report& report) {
  for (const auto& f : report) std::cout << f.subject << ": " << f.message << "\n";
}

void print_table(const Table& t) {
  std::cout << "_key";
  for (const auto& [i, s] : t.type_list.sorts) std::cout << "," << i;
  std::cout << "\n";
  for (const auto& [k, tuple] : t.tuples) {
    std::cout << k;
    for (const auto& [i, s] : t.type_list.sorts) std::cout << "," << tuple.at(i);
    std::cout << "\n";
  }
}

std::vector<Name> split_pool(const std::string& pool) {
  std::vector<Name> out;
  if (pool == "none") return out;
  std::string current;
  for (char c : pool) {
    if (c == ',') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

FormulaUniverse universe_from_flags(const Session& session, const Schema& schema, int depth,
                                    const std::string& pool) {
  std::vector<TypeListMorphism> morphisms;
  for (const auto& name : split_pool(pool)) {
    auto it = session.ws.listmorphisms.find(name);
    if (it == session.ws.listmorphisms.end())
      throw Error(Errc::UnknownName, "unknown listmorphism '" + name + "'");
    morphisms.push_back(it->second);
  }
  return FormulaUniverse::build(schema, depth, std::move(morphisms));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fole - finite model engine for first-order logical environments"};
  app.require_subcommand(1);

  Session session;
  std::vector<std::string> files;
  app.add_option("-f,--file", files, "workspace files to load")->expected(-1);

  std::string structure_ref, spec_ref, morphism_ref, system_ref, formula_text, out_dir;
  std::string pool = "";
  std::string object_name;
  int depth = 0;
  bool per_node = false;

  auto* validate = app.add_subcommand("validate", "validate loaded objects");
  validate->add_option("files", files, "workspace files");
  validate->add_option("--object", object_name, "restrict to one named object");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula over a structure");
  eval_cmd->add_option("--structure", structure_ref, "structure name or file")->required();
  eval_cmd->add_option("--formula", formula_text, "formula text")->required();
  eval_cmd->add_option("files", files, "workspace files");

  auto* check = app.add_subcommand("check", "check a structure against a spec");
  check->add_option("--structure", structure_ref, "structure name or file")->required();
  check->add_option("--spec", spec_ref, "spec name or file")->required();
  check->add_option("files", files, "workspace files");

  auto* sound = app.add_subcommand("sound", "per-constraint soundness report");
  sound->add_option("--structure", structure_ref, "structure name or file")->required();
  sound->add_option("--spec", spec_ref, "spec name or file")->required();
  sound->add_option("files", files, "workspace files");

  auto* translate_cmd = app.add_subcommand("translate", "translate a formula along a morphism");
  translate_cmd->add_option("--morphism", morphism_ref, "schema morphism name or file")->required();
  translate_cmd->add_option("--formula", formula_text, "formula text")->required();
  translate_cmd->add_option("files", files, "workspace files");

  auto* reduct_cmd = app.add_subcommand("reduct", "inverse image structure along a morphism");
  reduct_cmd->add_option("--morphism", morphism_ref, "schema morphism name or file")->required();
  reduct_cmd->add_option("--structure", structure_ref, "structure name or file")->required();
  reduct_cmd->add_option("--name", object_name, "name for the emitted structure");
  reduct_cmd->add_option("files", files, "workspace files");

  auto* consequence_cmd = app.add_subcommand("consequence", "bounded consequence closure");
  consequence_cmd->add_option("--spec", spec_ref, "spec name or file")->required();
  consequence_cmd->add_option("--depth", depth, "universe depth bound")->required();
  consequence_cmd->add_option("--pool", pool, "comma-separated listmorphism names, or 'none'")
      ->required();
  consequence_cmd->add_option("files", files, "workspace files");

  auto* fuse = app.add_subcommand("fuse", "fuse an information system at its channel core");
  fuse->add_option("--system", system_ref, "system name or file")->required();
  fuse->add_option("--depth", depth, "core universe depth bound")->required();
  fuse->add_option("--pool", pool, "comma-separated listmorphism names, or 'none'")->required();
  fuse->add_flag("--nodes", per_node, "also print per-node system consequence");
  fuse->add_option("files", files, "workspace files");

  auto* export_cmd = app.add_subcommand("export", "export the database of a sound logic");
  export_cmd->add_option("--structure", structure_ref, "structure name or file")->required();
  export_cmd->add_option("--spec", spec_ref, "spec name or file")->required();
  export_cmd->add_option("--depth", depth, "universe depth bound")->required();
  export_cmd->add_option("--pool", pool, "comma-separated listmorphism names, or 'none'")
      ->required();
  export_cmd->add_option("--out", out_dir, "output directory")->required();
  export_cmd->add_option("files", files, "workspace files");

  auto* prove = app.add_subcommand("prove-invariance",
                                    "check the satisfaction condition for a morphism/structure pair");
  prove->add_option("--morphism", morphism_ref, "schema morphism name or file")->required();
  prove->add_option("--structure", structure_ref, "structure name or file")->required();
  prove->add_option("--spec", spec_ref, "spec of constraints over the morphism source")->required();
  prove->add_option("files", files, "workspace files");

  CLI11_PARSE(app, argc, argv);

  if (const char* cap = std::getenv("FOLE_CAP")) set_enumeration_cap(std::strtoull(cap, nullptr, 10));

  try {
    for (const auto& f : files) session.load(f);

    if (app.got_subcommand(validate)) {
      Report report = workspace_validate(session.ws);
      if (!object_name.empty()) {
        Report filtered;
        for (const auto& f : report)
          if (f.subject.find(object_name) != std::string::npos) filtered.push_back(f);
        report = filtered;
      }
      print_report(report);
      std::cout << (report.empty() ? "valid" : "invalid") << "\n";
      return report.empty() ? 0 : 1;
    }

    if (app.got_subcommand(eval_cmd)) {
      const Structure& m = session.resolve(session.ws.structures, structure_ref, "structure");
      Formula f = parse_formula(formula_text, session.ws.symbols());
      print_table(table_interp(m, f));
      return 0;
    }

    if (app.got_subcommand(check) || app.got_subcommand(sound)) {
      const Structure& m = session.resolve(session.ws.structures, structure_ref, "structure");
      const Specification& t = session.resolve(session.ws.specs, spec_ref, "spec");
      Logic logic{m, t};
      Report report = soundness_check(logic);
      if (app.got_subcommand(sound)) {
        Evaluator ev(m);
        int index = 0;
        for (const auto& c : t.constraints) {
          bool ok = satisfies_constraint(ev, c);
          std::cout << (ok ? "ok   " : "FAIL ") << index++ << "  " << to_string(c) << "\n";
        }
      } else {
        print_report(report);
      }
      std::cout << (report.empty() ? "sound" : "unsound") << "\n";
      return report.empty() ? 0 : 1;
    }

    if (app.got_subcommand(translate_cmd)) {
      const SchemaMorphism& m =
          session.resolve(session.ws.schemamorphisms, morphism_ref, "morphism");
      Formula f = parse_formula(formula_text, session.ws.symbols());
      std::cout << to_string(translate(m, f)) << "\n";
      return 0;
    }

    if (app.got_subcommand(reduct_cmd)) {
      const SchemaMorphism& m =
          session.resolve(session.ws.schemamorphisms, morphism_ref, "morphism");
      // the morphism's declared source schema is the reduct's schema
      Name morphism_name;
      for (const auto& [name, sm] : session.ws.schemamorphisms)
        if (&sm == &m) morphism_name = name;
      const auto& endpoints = session.ws.schemamorphism_endpoints.at(morphism_name);
      const Structure& m1 = session.resolve(session.ws.structures, structure_ref, "structure");
      Reduct red = reduct(m, session.ws.schemas.at(endpoints.first), m1);
      Name out_name = object_name.empty() ? morphism_name + "_reduct" : object_name;
      std::cout << to_text(out_name, red.structure);
      return 0;
    }

    if (app.got_subcommand(consequence_cmd)) {
      const Specification& t = session.resolve(session.ws.specs, spec_ref, "spec");
      FormulaUniverse u = universe_from_flags(session, t.schema, depth, pool);
      for (const auto& c : consequence(t, u)) std::cout << to_string(c) << "\n";
      return 0;
    }

    if (app.got_subcommand(fuse)) {
      // resolve may load the file; systems are declarative so resolve by name after load
      if (session.ws.systems.find(system_ref) == session.ws.systems.end() &&
          std::filesystem::exists(system_ref))
        session.load(system_ref);
      Name sys_name;
      if (session.ws.systems.count(system_ref)) {
        sys_name = system_ref;
      } else if (session.ws.systems.size() == 1) {
        sys_name = session.ws.systems.begin()->first;
      } else {
        throw Error(Errc::UnknownName, "unknown system '" + system_ref + "'");
      }
      InformationSystem sys = make_information_system(session.ws, sys_name);
      Channel ch = make_channel(session.ws, sys_name);
      FormulaUniverse core_u = universe_from_flags(session, ch.core.schema, depth, pool);
      Logic fused = fusion(sys, ch, core_u);
      std::cout << "core keys: " << fused.structure.keys.size()
                << ", derived constraints: " << fused.spec.constraints.size() << "\n";
      for (const auto& c : fused.spec.constraints) std::cout << to_string(c) << "\n";
      if (per_node) {
        std::map<Name, FormulaUniverse> node_universes;
        for (const auto& [node, lg] : sys.logics)
          node_universes.emplace(node, FormulaUniverse::build(lg.structure.schema, depth, {}));
        auto per = system_consequence(sys, ch, node_universes, core_u);
        for (const auto& [node, constraints] : per) {
          std::cout << "node " << node << ":\n";
          for (const auto& c : constraints) std::cout << "  " << to_string(c) << "\n";
        }
      }
      return 0;
    }

    if (app.got_subcommand(export_cmd)) {
      const Structure& m = session.resolve(session.ws.structures, structure_ref, "structure");
      const Specification& t = session.resolve(session.ws.specs, spec_ref, "spec");
      FormulaUniverse u = universe_from_flags(session, t.schema, depth, pool);
      Database db = db_of_logic(Logic{m, t}, u);
      ExportResult result = export_database(db, out_dir);
      std::cout << "wrote " << result.files.size() << " tables and "
                << result.manifest.string() << "\n";
      return 0;
    }

    if (app.got_subcommand(prove)) {
      const SchemaMorphism& m =
          session.resolve(session.ws.schemamorphisms, morphism_ref, "morphism");
      Name morphism_name;
      for (const auto& [name, sm] : session.ws.schemamorphisms)
        if (&sm == &m) morphism_name = name;
      const auto& endpoints = session.ws.schemamorphism_endpoints.at(morphism_name);
      const Structure& m1 = session.resolve(session.ws.structures, structure_ref, "structure");
      const Specification& t2 = session.resolve(session.ws.specs, spec_ref, "spec");
      Reduct red = reduct(m, session.ws.schemas.at(endpoints.first), m1);
      bool all_match = true;
      int index = 0;
      for (const auto& c : t2.constraints) {
        bool on_reduct = satisfies_constraint(red.structure, c);
        bool on_translation = satisfies_constraint(m1, translate_constraint(m, c));
        bool match = on_reduct == on_translation;
        all_match = all_match && match;
        std::cout << index++ << "  reduct=" << (on_reduct ? "true" : "false")
                  << " translated=" << (on_translation ? "true" : "false") << "  "
                  << (match ? "MATCH" : "MISMATCH") << "  " << to_string(c) << "\n";
      }
      std::cout << (all_match ? "satisfaction condition holds" : "satisfaction condition fails")
                << "\n";
      return all_match ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
