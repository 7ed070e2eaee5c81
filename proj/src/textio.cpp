#include "fole/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fole {

FormulaSymbols Workspace::symbols() const {
  FormulaSymbols out;
  out.typelists = typelists;
  out.morphisms = listmorphisms;
  return out;
}

namespace {

/// Single-line scanner for the declarative format.
struct Scan {
  std::string_view text;
  std::size_t pos = 0;
  const std::string& file;
  int line;

  Scan(std::string_view t, const std::string& f, int ln) : text(t), file(f), line(ln) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg + " in " + file, line, static_cast<int>(pos) + 1);
  }
  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip();
    return pos >= text.size();
  }
  bool peek(char c) {
    skip();
    return pos < text.size() && text[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(std::string_view w) {
    skip();
    if (text.substr(pos, w.size()) == w) {
      std::size_t end = pos + w.size();
      if (end >= text.size() || !(std::isalnum(static_cast<unsigned char>(text[end])) ||
                                  text[end] == '_' || text[end] == '.')) {
        pos = end;
        return true;
      }
    }
    return false;
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected identifier");
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '.'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
  int integer() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stoi(std::string(text.substr(start, pos - start)));
  }
  void expect_arrow() {
    skip();
    if (text.substr(pos, 2) != "->") fail("expected '->'");
    pos += 2;
  }
  std::string rest() {
    skip();
    std::string out(text.substr(pos));
    pos = text.size();
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
  }

  /// `(a: A, b: B)` style assignment lists.
  NameMap paren_pairs() {
    NameMap out;
    expect('(');
    if (!eat(')')) {
      for (;;) {
        std::string key = ident();
        expect(':');
        std::string value = ident();
        if (!out.emplace(key, value).second) fail("duplicate index '" + key + "'");
        if (eat(',')) continue;
        expect(')');
        break;
      }
    }
    return out;
  }
};

struct SectionParser {
  Workspace& ws;
  const std::string& filename;

  template <class T>
  void declare(std::map<Name, T>& into, const Name& name, T value, const Scan& at) {
    if (!into.emplace(name, std::move(value)).second)
      at.fail("duplicate definition of '" + name + "'");
  }

  void typelist_line(TypeList& list, Scan& s) {
    if (s.eat_word("index")) {
      std::string index = s.ident();
      s.expect(':');
      std::string sort = s.ident();
      if (!list.sorts.emplace(index, sort).second) s.fail("duplicate index '" + index + "'");
      return;
    }
    s.fail("expected 'index'");
  }

  void listmorphism_line(TypeListMorphism& h, Scan& s) {
    if (s.eat_word("map")) {
      std::string from = s.ident();
      s.expect_arrow();
      std::string to = s.ident();
      if (!h.map.emplace(from, to).second) s.fail("duplicate index '" + from + "'");
      return;
    }
    s.fail("expected 'map'");
  }

  void classification_line(Classification& c, Scan& s) {
    if (s.eat_word("type")) {
      c.types.insert(s.ident());
      return;
    }
    if (s.eat_word("token")) {
      std::string token = s.ident();
      c.tokens.insert(token);
      if (s.eat(':'))
        while (!s.done()) c.incidence.insert({token, s.ident()});
      return;
    }
    if (s.eat_word("inc")) {
      std::string token = s.ident();
      std::string type = s.ident();
      c.incidence.insert({token, type});
      return;
    }
    s.fail("expected 'type', 'token', or 'inc'");
  }

  void schema_line(Schema& sch, Scan& s) {
    if (s.eat_word("type")) {
      sch.types.insert(s.ident());
      return;
    }
    if (s.eat_word("rel")) {
      std::string rel = s.ident();
      TypeList list{s.paren_pairs()};
      if (!sch.signature.emplace(rel, std::move(list)).second)
        s.fail("duplicate relation '" + rel + "'");
      return;
    }
    s.fail("expected 'type' or 'rel'");
  }

  void schemamorphism_line(SchemaMorphism& m, Scan& s) {
    if (s.eat_word("rel")) {
      std::string from = s.ident();
      s.expect_arrow();
      m.rel_map[from] = s.ident();
      return;
    }
    if (s.eat_word("type")) {
      std::string from = s.ident();
      s.expect_arrow();
      m.type_map[from] = s.ident();
      return;
    }
    s.fail("expected 'rel' or 'type'");
  }

  void structure_line(Structure& m, Scan& s) {
    if (s.eat_word("schema")) {
      std::string name = s.ident();
      auto it = ws.schemas.find(name);
      if (it == ws.schemas.end()) s.fail("unknown schema '" + name + "'");
      m.schema = it->second;
      return;
    }
    if (s.eat_word("classification")) {
      std::string name = s.ident();
      auto it = ws.classifications.find(name);
      if (it == ws.classifications.end()) s.fail("unknown classification '" + name + "'");
      m.entities = it->second;
      return;
    }
    if (s.eat_word("key")) {
      std::string key = s.ident();
      s.expect('=');
      Tuple t{s.paren_pairs()};
      if (!m.keys.insert(key).second) s.fail("duplicate key '" + key + "'");
      m.tuples[key] = std::move(t);
      if (s.eat(':'))
        for (;;) {
          m.rel_incidence.insert({key, s.ident()});
          if (!s.eat(',')) break;
        }
      return;
    }
    s.fail("expected 'schema', 'classification', or 'key'");
  }

  void structmorphism_line(StructureMorphism& m, Scan& s) {
    NameMap* map = nullptr;
    if (s.eat_word("rel")) map = &m.rel_map;
    else if (s.eat_word("type")) map = &m.type_map;
    else if (s.eat_word("key")) map = &m.key_map;
    else if (s.eat_word("token")) map = &m.token_map;
    else s.fail("expected 'rel', 'type', 'key', or 'token'");
    std::string from = s.ident();
    s.expect_arrow();
    (*map)[from] = s.ident();
  }

  void spec_line(Specification& t, Scan& s) {
    if (s.eat_word("schema")) {
      std::string name = s.ident();
      auto it = ws.schemas.find(name);
      if (it == ws.schemas.end()) s.fail("unknown schema '" + name + "'");
      t.schema = it->second;
      return;
    }
    if (s.eat_word("sequent") || s.eat_word("constraint")) {
      if (t.schema.types.empty() && t.schema.signature.empty())
        s.fail("spec must name its schema before constraints");
      std::string body = s.rest();
      try {
        t.constraints.push_back(parse_constraint(body, t.schema, ws.symbols()));
      } catch (const Error& e) {
        if (e.code != Errc::SyntaxError) s.fail(e.what());
        throw Error(Errc::SyntaxError, std::string(e.what()) + " in " + filename, s.line,
                    e.column);
      }
      return;
    }
    s.fail("expected 'schema', 'sequent', or 'constraint'");
  }

  void opdomain_line(OperatorDomain& o, Scan& s) {
    if (s.eat_word("sort")) {
      o.sorts.insert(s.ident());
      return;
    }
    if (s.eat_word("op")) {
      std::string symbol = s.ident();
      s.expect(':');
      TypeList sig{s.paren_pairs()};
      s.expect_arrow();
      std::string result = s.ident();
      if (!o.symbols.emplace(symbol, OpSymbol{result, std::move(sig)}).second)
        s.fail("duplicate symbol '" + symbol + "'");
      return;
    }
    s.fail("expected 'sort' or 'op'");
  }

  void algebra_line(Algebra& a, Scan& s) {
    if (s.eat_word("classification")) {
      std::string name = s.ident();
      auto it = ws.classifications.find(name);
      if (it == ws.classifications.end()) s.fail("unknown classification '" + name + "'");
      a.entities = it->second;
      return;
    }
    if (s.eat_word("opdomain")) {
      std::string name = s.ident();
      auto it = ws.opdomains.find(name);
      if (it == ws.opdomains.end()) s.fail("unknown opdomain '" + name + "'");
      a.domain = it->second;
      return;
    }
    if (s.eat_word("fn")) {
      // One operation-table row in term syntax with token arguments:
      //   fn John() = john          fn f(a: jane) = john
      std::string lhs_text;
      {
        std::size_t eq = s.text.find('=', s.pos);
        if (eq == std::string_view::npos) s.fail("expected '=' in fn line");
        lhs_text = std::string(s.text.substr(s.pos, eq - s.pos));
        s.pos = eq + 1;
      }
      Term lhs = parse_term(lhs_text);
      if (lhs.is_var()) s.fail("fn line must apply a symbol");
      Tuple args;
      for (const auto& [slot, sub] : lhs.args()) {
        if (!sub.is_var()) s.fail("fn arguments must be tokens");
        args.values[slot] = sub.name();
      }
      std::string result = s.ident();
      a.operations[lhs.name()][args] = result;
      return;
    }
    s.fail("expected 'classification', 'opdomain', or 'fn'");
  }

  void system_line(SystemDecl& sys, Scan& s) {
    if (s.eat_word("node")) {
      std::string node = s.ident();
      s.expect('=');
      std::string structure = s.ident();
      std::string spec = s.ident();
      sys.shape.nodes.insert(node);
      sys.node_refs[node] = {structure, spec};
      return;
    }
    if (s.eat_word("edge")) {
      std::string edge = s.ident();
      s.expect(':');
      std::string from = s.ident();
      s.expect_arrow();
      std::string to = s.ident();
      s.expect('=');
      std::string morphism = s.ident();
      sys.shape.edges[edge] = {from, to};
      sys.edge_refs[edge] = morphism;
      return;
    }
    if (s.eat_word("channel")) {
      sys.channel_core = s.ident();
      s.expect('{');
      if (!s.eat('}')) {
        for (;;) {
          std::string node = s.ident();
          s.expect('=');
          sys.channel_components[node] = s.ident();
          if (s.eat(',')) continue;
          s.expect('}');
          break;
        }
      }
      return;
    }
    s.fail("expected 'node', 'edge', or 'channel'");
  }

  void universe_line(UniverseDecl& u, Scan& s) {
    if (s.eat_word("schema")) {
      u.schema = s.ident();
      return;
    }
    if (s.eat_word("depth")) {
      u.depth = s.integer();
      return;
    }
    if (s.eat_word("pool")) {
      if (s.eat_word("none")) return;
      while (!s.done()) u.pool.push_back(s.ident());
      return;
    }
    s.fail("expected 'schema', 'depth', or 'pool'");
  }
};

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

void parse_into(Workspace& ws, std::string_view text, const std::string& filename) {
  SectionParser sections{ws, filename};
  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;

  std::string kind, name;
  // endpoint names for morphism sections
  std::string from_name, to_name;
  TypeList typelist;
  TypeListMorphism listmorphism;
  Classification classification;
  Schema schema;
  SchemaMorphism schemamorphism;
  Structure structure;
  StructureMorphism structmorphism;
  Specification spec;
  OperatorDomain opdomain;
  Algebra algebra;
  SystemDecl system;
  UniverseDecl universe;

  auto reset = [&] {
    typelist = {};
    listmorphism = {};
    classification = {};
    schema = {};
    schemamorphism = {};
    structure = {};
    structmorphism = {};
    spec = {};
    opdomain = {};
    algebra = {};
    system = {};
    universe = {};
  };

  auto commit = [&](const Scan& at) {
    if (kind == "typelist") sections.declare(ws.typelists, name, typelist, at);
    else if (kind == "listmorphism") {
      try {
        ensure_valid(listmorphism);
      } catch (const Error& e) {
        at.fail(e.what());
      }
      sections.declare(ws.listmorphisms, name, listmorphism, at);
    } else if (kind == "classification") {
      try {
        classification.ensure_wellformed();
      } catch (const Error& e) {
        at.fail(e.what());
      }
      sections.declare(ws.classifications, name, classification, at);
    } else if (kind == "schema") sections.declare(ws.schemas, name, schema, at);
    else if (kind == "morphism") {
      if (!ws.schemas.count(from_name)) at.fail("unknown schema '" + from_name + "'");
      if (!ws.schemas.count(to_name)) at.fail("unknown schema '" + to_name + "'");
      sections.declare(ws.schemamorphisms, name, schemamorphism, at);
      ws.schemamorphism_endpoints[name] = {from_name, to_name};
    } else if (kind == "structure") sections.declare(ws.structures, name, structure, at);
    else if (kind == "structmorphism") {
      if (!ws.structures.count(from_name)) at.fail("unknown structure '" + from_name + "'");
      if (!ws.structures.count(to_name)) at.fail("unknown structure '" + to_name + "'");
      sections.declare(ws.structmorphisms, name, structmorphism, at);
      ws.structmorphism_endpoints[name] = {from_name, to_name};
    } else if (kind == "spec") sections.declare(ws.specs, name, spec, at);
    else if (kind == "opdomain") sections.declare(ws.opdomains, name, opdomain, at);
    else if (kind == "algebra") sections.declare(ws.algebras, name, algebra, at);
    else if (kind == "system") sections.declare(ws.systems, name, system, at);
    else if (kind == "universe") sections.declare(ws.universes, name, universe, at);
  };

  while (std::getline(stream, raw)) {
    ++line_no;
    std::string body = strip_comment(raw);
    Scan s(body, filename, line_no);
    if (s.done()) continue;

    if (kind.empty()) {
      // section header: <kind> <name> [: A -> B] {
      for (const char* k : {"typelist", "listmorphism", "classification", "schema", "morphism",
                            "structure", "structmorphism", "spec", "opdomain", "algebra",
                            "system", "universe"}) {
        if (s.eat_word(k)) {
          kind = k;
          break;
        }
      }
      if (kind.empty()) s.fail("unknown section keyword");
      name = s.ident();
      from_name.clear();
      to_name.clear();
      if (s.eat(':')) {
        from_name = s.ident();
        s.expect_arrow();
        to_name = s.ident();
      }
      s.expect('{');
      reset();
      if (kind == "listmorphism") {
        auto src = ws.typelists.find(from_name);
        auto tgt = ws.typelists.find(to_name);
        if (src == ws.typelists.end()) s.fail("unknown type list '" + from_name + "'");
        if (tgt == ws.typelists.end()) s.fail("unknown type list '" + to_name + "'");
        listmorphism.source = src->second;
        listmorphism.target = tgt->second;
      }
      if (s.eat('}')) {
        commit(s);
        kind.clear();
      } else if (!s.done()) {
        s.fail("section body starts on the next line");
      }
      continue;
    }

    if (s.peek('}')) {
      s.expect('}');
      if (!s.done()) s.fail("trailing input after '}'");
      commit(s);
      kind.clear();
      continue;
    }

    if (kind == "typelist") sections.typelist_line(typelist, s);
    else if (kind == "listmorphism") sections.listmorphism_line(listmorphism, s);
    else if (kind == "classification") sections.classification_line(classification, s);
    else if (kind == "schema") sections.schema_line(schema, s);
    else if (kind == "morphism") sections.schemamorphism_line(schemamorphism, s);
    else if (kind == "structure") sections.structure_line(structure, s);
    else if (kind == "structmorphism") sections.structmorphism_line(structmorphism, s);
    else if (kind == "spec") sections.spec_line(spec, s);
    else if (kind == "opdomain") sections.opdomain_line(opdomain, s);
    else if (kind == "algebra") sections.algebra_line(algebra, s);
    else if (kind == "system") sections.system_line(system, s);
    else if (kind == "universe") sections.universe_line(universe, s);
    if (!s.done() && kind != "spec") s.fail("trailing input");
  }
  if (!kind.empty())
    throw Error(Errc::SyntaxError, "unterminated section '" + name + "' in " + filename, line_no,
                1);
}

void load_file(Workspace& ws, const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) throw Error(Errc::IoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  parse_into(ws, buffer.str(), path.filename().string());
}

Report workspace_validate(const Workspace& ws) {
  Report report;
  auto note = [&report](const Name& subject, const Report& sub) {
    for (const auto& f : sub) report.push_back({subject + ": " + f.subject, f.message});
  };
  for (const auto& [name, s] : ws.schemas) note("schema " + name, schema_validate(s));
  for (const auto& [name, m] : ws.structures) note("structure " + name, structure_validate(m));
  for (const auto& [name, t] : ws.specs) note("spec " + name, specification_validate(t));
  for (const auto& [name, o] : ws.opdomains) note("opdomain " + name, operator_domain_validate(o));
  for (const auto& [name, a] : ws.algebras) note("algebra " + name, algebra_validate(a));
  for (const auto& [name, m] : ws.schemamorphisms) {
    const auto& [from, to] = ws.schemamorphism_endpoints.at(name);
    note("morphism " + name,
         schema_morphism_validate(m, ws.schemas.at(from), ws.schemas.at(to)));
  }
  for (const auto& [name, m] : ws.structmorphisms) {
    const auto& [from, to] = ws.structmorphism_endpoints.at(name);
    note("structmorphism " + name,
         structure_morphism_validate(m, ws.structures.at(from), ws.structures.at(to)));
  }
  for (const auto& [name, decl] : ws.universes) {
    if (!ws.schemas.count(decl.schema))
      report.push_back({"universe " + name, "unknown schema '" + decl.schema + "'"});
    for (const auto& h : decl.pool)
      if (!ws.listmorphisms.count(h))
        report.push_back({"universe " + name, "unknown pool morphism '" + h + "'"});
  }
  for (const auto& [name, decl] : ws.systems) {
    try {
      InformationSystem sys = make_information_system(ws, name);
      note("system " + name, information_system_validate(sys));
      if (decl.channel_core) {
        Channel ch = make_channel(ws, name);
        DistributedSystem d = underlying(sys);
        for (const auto& [node, gamma] : ch.components)
          if (d.structures.count(node))
            note("system " + name + " channel component " + node,
                 structure_morphism_validate(gamma, d.structures.at(node), ch.core));
        if (!channel_covers(ch, d))
          report.push_back({"system " + name, "declared channel does not cover the system"});
      }
    } catch (const Error& e) {
      report.push_back({"system " + name, e.what()});
    }
  }
  return report;
}

InformationSystem make_information_system(const Workspace& ws, const Name& system) {
  auto it = ws.systems.find(system);
  if (it == ws.systems.end()) throw Error(Errc::UnknownName, "unknown system '" + system + "'");
  const SystemDecl& decl = it->second;
  InformationSystem out;
  out.shape = decl.shape;
  for (const auto& [node, refs] : decl.node_refs) {
    auto ms = ws.structures.find(refs.first);
    if (ms == ws.structures.end())
      throw Error(Errc::UnknownName, "unknown structure '" + refs.first + "'");
    auto ts = ws.specs.find(refs.second);
    if (ts == ws.specs.end()) throw Error(Errc::UnknownName, "unknown spec '" + refs.second + "'");
    out.logics.emplace(node, Logic{ms->second, ts->second});
  }
  for (const auto& [edge, morphism] : decl.edge_refs) {
    auto sm = ws.structmorphisms.find(morphism);
    if (sm == ws.structmorphisms.end())
      throw Error(Errc::UnknownName, "unknown structmorphism '" + morphism + "'");
    out.links.emplace(edge, sm->second);
  }
  return out;
}

Channel make_channel(const Workspace& ws, const Name& system) {
  const SystemDecl& decl = ws.systems.at(system);
  if (!decl.channel_core) return sum_system(underlying(make_information_system(ws, system)));
  Channel ch;
  auto core = ws.structures.find(*decl.channel_core);
  if (core == ws.structures.end())
    throw Error(Errc::UnknownName, "unknown core structure '" + *decl.channel_core + "'");
  ch.core = core->second;
  for (const auto& [node, morphism] : decl.channel_components) {
    auto sm = ws.structmorphisms.find(morphism);
    if (sm == ws.structmorphisms.end())
      throw Error(Errc::UnknownName, "unknown structmorphism '" + morphism + "'");
    ch.components.emplace(node, sm->second);
  }
  return ch;
}

FormulaUniverse make_universe(const Workspace& ws, const UniverseDecl& decl) {
  auto schema = ws.schemas.find(decl.schema);
  if (schema == ws.schemas.end())
    throw Error(Errc::UnknownName, "unknown schema '" + decl.schema + "'");
  std::vector<TypeListMorphism> pool;
  for (const auto& name : decl.pool) {
    auto h = ws.listmorphisms.find(name);
    if (h == ws.listmorphisms.end())
      throw Error(Errc::UnknownName, "unknown listmorphism '" + name + "'");
    pool.push_back(h->second);
  }
  return FormulaUniverse::build(schema->second, decl.depth, std::move(pool));
}

namespace {

std::string paren_pairs_text(const NameMap& pairs) {
  std::string out = "(";
  bool first = true;
  for (const auto& [k, v] : pairs) {
    if (!first) out += ", ";
    first = false;
    out += k + ": " + v;
  }
  return out + ")";
}

void emit_map_lines(std::ostringstream& out, const char* keyword, const NameMap& map) {
  for (const auto& [from, to] : map) out << "  " << keyword << " " << from << " -> " << to << "\n";
}

}  // namespace

std::string to_text(const Name& name, const TypeList& list) {
  std::ostringstream out;
  out << "typelist " << name << " {\n";
  for (const auto& [i, s] : list.sorts) out << "  index " << i << " : " << s << "\n";
  out << "}\n";
  return out.str();
}

std::string to_text(const Name& name, const TypeListMorphism& h) {
  std::ostringstream out;
  out << to_text(name + "_src", h.source);
  out << to_text(name + "_tgt", h.target);
  out << "listmorphism " << name << " : " << name << "_src -> " << name << "_tgt {\n";
  for (const auto& [i, j] : h.map) out << "  map " << i << " -> " << j << "\n";
  out << "}\n";
  return out.str();
}

std::string to_text(const Name& name, const Classification& c) {
  std::ostringstream out;
  out << "classification " << name << " {\n";
  for (const auto& t : c.types) out << "  type " << t << "\n";
  for (const auto& y : c.tokens) {
    out << "  token " << y;
    NameSet intent = c.intent(y);
    if (!intent.empty()) {
      out << " :";
      for (const auto& t : intent) out << " " << t;
    }
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const Name& name, const Schema& s) {
  std::ostringstream out;
  out << "schema " << name << " {\n";
  for (const auto& t : s.types) out << "  type " << t << "\n";
  for (const auto& [r, list] : s.signature)
    out << "  rel " << r << " " << paren_pairs_text(list.sorts) << "\n";
  out << "}\n";
  return out.str();
}

std::string to_text(const Name& name, const SchemaMorphism& m, const Name& from, const Name& to) {
  std::ostringstream out;
  out << "morphism " << name << " : " << from << " -> " << to << " {\n";
  emit_map_lines(out, "rel", m.rel_map);
  emit_map_lines(out, "type", m.type_map);
  out << "}\n";
  return out.str();
}

std::string to_text(const Name& name, const Structure& m) {
  std::ostringstream out;
  out << to_text(name + "_entities", m.entities);
  out << to_text(name + "_schema", m.schema);
  out << "structure " << name << " {\n";
  out << "  schema " << name << "_schema\n";
  out << "  classification " << name << "_entities\n";
  for (const auto& k : m.keys) {
    out << "  key " << k << " = " << paren_pairs_text(m.tuple_of(k).values);
    NameSet rels;
    for (const auto& [key, r] : m.rel_incidence)
      if (key == k) rels.insert(r);
    if (!rels.empty()) {
      out << " :";
      bool first = true;
      for (const auto& r : rels) {
        out << (first ? " " : ", ") << r;
        first = false;
      }
    }
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const Name& name, const StructureMorphism& m, const Name& from,
                    const Name& to) {
  std::ostringstream out;
  out << "structmorphism " << name << " : " << from << " -> " << to << " {\n";
  emit_map_lines(out, "rel", m.rel_map);
  emit_map_lines(out, "type", m.type_map);
  emit_map_lines(out, "key", m.key_map);
  emit_map_lines(out, "token", m.token_map);
  out << "}\n";
  return out.str();
}

std::string to_text(const Name& name, const Specification& t) {
  std::ostringstream out;
  out << to_text(name + "_schema", t.schema);
  out << "spec " << name << " {\n";
  out << "  schema " << name << "_schema\n";
  for (const auto& c : t.constraints) {
    if (c.h.is_identity())
      out << "  sequent " << to_string(c.target) << " |- " << to_string(c.source) << "\n";
    else
      out << "  constraint " << to_string(c.h) << " : " << to_string(c.target) << " |- "
          << to_string(c.source) << "\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fole
