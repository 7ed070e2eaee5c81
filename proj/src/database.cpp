#include "fole/database.hpp"

#include <fstream>

#include <json.hpp>

namespace fole {

Database db_of_logic(const Logic& l, const FormulaUniverse& u) {
  Report sound = soundness_check(l);
  if (!sound.empty())
    throw Error(Errc::UnsoundLogic, "structure fails a constraint: " + sound.front().message);

  Database db;
  db.schema = l.structure.schema;
  db.entities = l.structure.entities;
  db.formulas = u.formulas();
  Evaluator ev(l.structure);
  for (const auto& f : db.formulas) {
    Table t;
    t.type_list = infer_typelist(l.structure.schema, f);
    t.keys = ev.eval(f);
    for (const auto& k : t.keys) t.tuples[k] = l.structure.tuple_of(k);
    db.tables.emplace(f, std::move(t));
  }

  db.constraints = consequence(l.spec, u);
  for (const auto& c : db.constraints) {
    const Table& target = db.tables.at(c.target);
    const Table& source = db.tables.at(c.source);
    NameMap kappa;
    for (const auto& [k, t] : target.tuples) {
      Tuple image = c.h.is_identity() ? t : tup_map(c.h, t);
      bool found = false;
      for (const auto& [k2, t2] : source.tuples)
        if (t2 == image) {
          kappa[k] = k2;
          found = true;
          break;
        }
      if (!found)
        throw Error(Errc::ConditionViolated,
                    "no source key realizes the flowed tuple of key '" + k + "'");
    }
    db.key_maps.push_back(std::move(kappa));
  }
  return db;
}

bool tables_equivalent(const Table& a, const Table& b) {
  if (a.type_list != b.type_list) return false;
  std::set<Tuple> ra, rb;
  for (const auto& [k, t] : a.tuples) ra.insert(t);
  for (const auto& [k, t] : b.tuples) rb.insert(t);
  return ra == rb;
}

DatabaseMorphism db_morphism_of(const StructureMorphism& lm, const Database& from,
                                const Database& to) {
  DatabaseMorphism out;
  out.schema_morphism = schema_part(lm);
  out.entity = Infomorphism{lm.type_map, lm.token_map};
  for (const auto& f2 : from.formulas) {
    Formula image = translate(out.schema_morphism, f2);
    auto table1 = to.tables.find(image);
    if (table1 == to.tables.end())
      throw Error(Errc::ConditionViolated,
                  "translated formula has no table: " + to_string(image));
    const Table& t2 = from.tables.at(f2);
    NameMap kappa;
    for (const auto& [k1, tuple1] : table1->second.tuples) {
      auto pre = lm.key_map.find(k1);
      if (pre == lm.key_map.end())
        throw Error(Errc::ConditionViolated, "key map undefined at '" + k1 + "'");
      if (!t2.keys.count(pre->second))
        throw Error(Errc::ConditionViolated, "condition fails at formula " + to_string(f2) +
                                                 ", key '" + k1 + "'");
      Tuple bridged = tuple_bridge(out.entity, tuple1);
      if (!(t2.tuples.at(pre->second) == bridged))
        throw Error(Errc::ConditionViolated, "tuple square fails at formula " + to_string(f2) +
                                                 ", key '" + k1 + "'");
      kappa[k1] = pre->second;
    }
    out.key_transformations.emplace(f2, std::move(kappa));
  }
  return out;
}

JoinResult join_via_formula(const Structure& m, const Constraint& leg1, const Constraint& leg2) {
  if (!(leg1.source == leg2.source) || leg1.h.source != leg2.h.source)
    throw Error(Errc::TypeMismatch, "join legs do not share their span source");
  Pushout p = typelist_pushout(leg1.h, leg2.h);
  JoinResult out;
  out.formula = Formula::meet(Formula::subst(p.left, leg1.target),
                              Formula::subst(p.right, leg2.target));
  Evaluator ev(m);
  TupleRelation r1 = flow(m.entities, p.left, FlowMode::Inverse, ev.relation_interp(leg1.target));
  TupleRelation r2 = flow(m.entities, p.right, FlowMode::Inverse, ev.relation_interp(leg2.target));
  out.relation.type_list = p.list;
  for (const auto& t : r1.tuples)
    if (r2.tuples.count(t)) out.relation.tuples.insert(t);
  return out;
}

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string file_stem_for(const Formula& f) {
  std::string text = to_string(f);
  bool plain = !text.empty() && (std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_');
  for (char c : text)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) plain = false;
  if (plain) return text;
  char buf[32];
  std::snprintf(buf, sizeof buf, "f_%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

std::string csv_of(const Table& t) {
  std::string out = "_key";
  for (const auto& [i, s] : t.type_list.sorts) out += "," + i;
  out += "\n";
  for (const auto& [k, tuple] : t.tuples) {
    out += k;
    for (const auto& [i, s] : t.type_list.sorts) out += "," + tuple.at(i);
    out += "\n";
  }
  return out;
}

}  // namespace

ExportResult export_database(const Database& db, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw Error(Errc::IoError, "cannot create directory " + directory.string());

  ExportResult out;
  nlohmann::json manifest = nlohmann::json::object();
  for (const auto& f : db.formulas) {
    const Table& t = db.tables.at(f);
    std::filesystem::path file = directory / (file_stem_for(f) + ".csv");
    std::ofstream stream(file, std::ios::binary | std::ios::trunc);
    if (!stream) throw Error(Errc::IoError, "cannot write " + file.string());
    stream << csv_of(t);
    stream.close();
    out.files.emplace(f, file);

    nlohmann::json entry;
    entry["file"] = file.filename().string();
    nlohmann::json cols = nlohmann::json::object();
    for (const auto& [i, s] : t.type_list.sorts) cols[i] = s;
    entry["type_list"] = cols;
    entry["rows"] = t.tuples.size();
    manifest[to_string(f)] = entry;
  }
  out.manifest = directory / "manifest.json";
  std::ofstream stream(out.manifest, std::ios::binary | std::ios::trunc);
  if (!stream) throw Error(Errc::IoError, "cannot write " + out.manifest.string());
  stream << manifest.dump(2) << "\n";
  return out;
}

}  // namespace fole
