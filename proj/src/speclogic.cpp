#include "fole/speclogic.hpp"

#include <algorithm>

namespace fole {

Report specification_validate(const Specification& t) {
  Report report = schema_validate(t.schema);
  int index = 0;
  for (const auto& c : t.constraints) {
    std::string subject = "constraint " + std::to_string(index++);
    try {
      ensure_valid(c.h);
      if (infer_typelist(t.schema, c.target) != c.h.target)
        report.push_back({subject, "target formula does not live in the morphism target fiber"});
      if (infer_typelist(t.schema, c.source) != c.h.source)
        report.push_back({subject, "source formula does not live in the morphism source fiber"});
    } catch (const Error& e) {
      report.push_back({subject, e.what()});
    }
  }
  return report;
}

FormulaUniverse FormulaUniverse::build(const Schema& schema, int depth,
                                       std::vector<TypeListMorphism> pool,
                                       std::size_t max_formulas) {
  FormulaUniverse u;
  u.schema_ = schema;
  u.depth_ = depth;
  u.pool_ = std::move(pool);

  for (const auto& [r, list] : schema.signature) u.fibers_.insert(list);
  for (const auto& h : u.pool_) {
    ensure_valid(h);
    u.fibers_.insert(h.source);
    u.fibers_.insert(h.target);
  }

  auto add = [&](const Formula& f) {
    if (u.index_.count(f)) return;
    if (u.formulas_.size() >= max_formulas)
      throw Error(Errc::CapacityExceeded, "formula universe exceeds its size cap");
    int id = static_cast<int>(u.formulas_.size());
    u.index_.emplace(f, id);
    u.formulas_.push_back(f);
    u.by_fiber_[infer_typelist(schema, f)].push_back(id);
  };

  for (const auto& [r, list] : schema.signature) add(Formula::atom(r));
  for (const auto& list : u.fibers_) {
    add(Formula::top(list));
    add(Formula::bottom(list));
  }

  for (int d = 1; d <= depth; ++d) {
    // formulas of depth exactly d combine operands of depth up to d-1,
    // at least one of depth d-1
    std::vector<Formula> fresh;
    auto stage = [&](const Formula& f) { fresh.push_back(f); };
    for (const auto& list : u.fibers_) {
      const auto& members = u.by_fiber_[list];
      for (int a : members) {
        const Formula& fa = u.formulas_[a];
        if (fa.depth() == d - 1) stage(Formula::neg(fa));
        for (int b : members) {
          const Formula& fb = u.formulas_[b];
          if (std::max(fa.depth(), fb.depth()) != d - 1) continue;
          stage(Formula::meet(fa, fb));
          stage(Formula::join(fa, fb));
          stage(Formula::impl(fa, fb));
          stage(Formula::diff(fa, fb));
        }
      }
    }
    for (const auto& h : u.pool_) {
      for (int a : u.by_fiber_[h.target]) {
        const Formula& fa = u.formulas_[a];
        if (fa.depth() != d - 1) continue;
        stage(Formula::sum_flow(h, fa));
        stage(Formula::prod_flow(h, fa));
      }
      for (int a : u.by_fiber_[h.source]) {
        const Formula& fa = u.formulas_[a];
        if (fa.depth() != d - 1) continue;
        stage(Formula::subst(h, fa));
      }
    }
    for (const auto& f : fresh) add(f);
  }
  return u;
}

int FormulaUniverse::index_of(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) throw Error(Errc::UnknownName, "formula is not in the universe");
  return it->second;
}

const std::vector<int>& FormulaUniverse::fiber_members(const TypeList& list) const {
  auto it = by_fiber_.find(list);
  return it == by_fiber_.end() ? empty_ : it->second;
}

namespace {

/// Derivability between universe formulas as an adjacency structure with a
/// monotone rule loop. Every rule is sound for the fiber semantics of eval.
struct Closure {
  const FormulaUniverse& u;
  std::vector<std::set<int>> succ;
  bool changed = false;

  explicit Closure(const FormulaUniverse& universe)
      : u(universe), succ(universe.formulas().size()) {}

  bool has(int a, int b) const { return succ[a].count(b) != 0; }
  void add(int a, int b) {
    if (succ[a].insert(b).second) changed = true;
  }
  int lookup(const Formula& f) const {
    return u.contains(f) ? u.index_of(f) : -1;
  }

  void seed_axioms() {
    const auto& formulas = u.formulas();
    for (int a = 0; a < static_cast<int>(formulas.size()); ++a) add(a, a);
    for (const auto& list : u.fibers()) {
      const auto& members = u.fiber_members(list);
      int top = lookup(Formula::top(list));
      int bottom = lookup(Formula::bottom(list));
      for (int a : members) {
        if (top >= 0) add(a, top);
        if (bottom >= 0) add(bottom, a);
      }
    }
    for (int a = 0; a < static_cast<int>(formulas.size()); ++a) {
      const Formula& f = formulas[a];
      switch (f.kind()) {
        case FormulaKind::Meet: {
          add(a, u.index_of(f.lhs()));
          add(a, u.index_of(f.rhs()));
          break;
        }
        case FormulaKind::Join: {
          add(u.index_of(f.lhs()), a);
          add(u.index_of(f.rhs()), a);
          break;
        }
        case FormulaKind::Neg: {
          if (f.body().kind() == FormulaKind::Neg) {
            int inner = u.index_of(f.body().body());
            add(a, inner);
            add(inner, a);
          }
          break;
        }
        default:
          break;
      }
    }
  }

  void transitive_step() {
    for (std::size_t a = 0; a < succ.size(); ++a) {
      std::vector<int> frontier(succ[a].begin(), succ[a].end());
      for (int b : frontier)
        for (int c : succ[b]) add(static_cast<int>(a), c);
    }
  }

  void lattice_step() {
    const auto& formulas = u.formulas();
    for (int m = 0; m < static_cast<int>(formulas.size()); ++m) {
      const Formula& f = formulas[m];
      if (f.kind() == FormulaKind::Meet) {
        int x = u.index_of(f.lhs()), y = u.index_of(f.rhs());
        for (int z : u.fiber_members(infer_typelist(u.schema(), f)))
          if (has(z, x) && has(z, y)) add(z, m);
      } else if (f.kind() == FormulaKind::Join) {
        int x = u.index_of(f.lhs()), y = u.index_of(f.rhs());
        const auto& members = u.fiber_members(infer_typelist(u.schema(), f));
        for (int z : members)
          if (has(x, z) && has(y, z)) add(m, z);
      } else if (f.kind() == FormulaKind::Impl) {
        int y = u.index_of(f.lhs()), z = u.index_of(f.rhs());
        for (int x : u.fiber_members(infer_typelist(u.schema(), f))) {
          int meet_xy = lookup(Formula::meet(u.formulas()[x], u.formulas()[y]));
          if (meet_xy < 0) continue;
          if (has(meet_xy, z)) add(x, m);   // introduction
          if (has(x, m)) add(meet_xy, z);   // elimination
        }
      }
    }
  }

  void flow_step() {
    for (const auto& h : u.pool()) {
      const auto& targets = u.fiber_members(h.target);
      const auto& sources = u.fiber_members(h.source);
      for (int a : targets)
        for (int b : targets) {
          if (!has(a, b)) continue;
          int sa = lookup(Formula::sum_flow(h, u.formulas()[a]));
          int sb = lookup(Formula::sum_flow(h, u.formulas()[b]));
          if (sa >= 0 && sb >= 0) add(sa, sb);
          int pa = lookup(Formula::prod_flow(h, u.formulas()[a]));
          int pb = lookup(Formula::prod_flow(h, u.formulas()[b]));
          if (pa >= 0 && pb >= 0) add(pa, pb);
        }
      for (int a : sources)
        for (int b : sources) {
          if (!has(a, b)) continue;
          int ia = lookup(Formula::subst(h, u.formulas()[a]));
          int ib = lookup(Formula::subst(h, u.formulas()[b]));
          if (ia >= 0 && ib >= 0) add(ia, ib);
        }
    }
  }

  void run() {
    seed_axioms();
    do {
      changed = false;
      transitive_step();
      lattice_step();
      flow_step();
    } while (changed);
  }
};

}  // namespace

std::vector<Constraint> consequence(const Specification& t, const FormulaUniverse& u) {
  Closure closure(u);

  // Seed the specification. A constraint along an identity is its sequent;
  // along a proper morphism it is seeded in substitution form.
  for (const auto& c : t.constraints) {
    if (!u.contains(c.target) || !u.contains(c.source))
      throw Error(Errc::CapacityExceeded, "specification constraint is not expressible in the universe");
    if (c.h.is_identity()) {
      closure.add(u.index_of(c.target), u.index_of(c.source));
    } else {
      Formula sub = Formula::subst(c.h, c.source);
      if (!u.contains(sub))
        throw Error(Errc::CapacityExceeded,
                    "substitution form of a constraint is not expressible in the universe");
      closure.add(u.index_of(c.target), u.index_of(sub));
    }
  }
  closure.run();

  std::vector<Constraint> out;
  for (const auto& list : u.fibers()) {
    TypeListMorphism id = identity_morphism(list);
    const auto& members = u.fiber_members(list);
    for (int a : members)
      for (int b : members)
        if (closure.has(a, b)) out.push_back(Constraint{id, u.formulas()[a], u.formulas()[b]});
  }
  for (const auto& h : u.pool()) {
    if (h.is_identity()) continue;  // already emitted through the fiber pass
    for (int a : u.fiber_members(h.target))
      for (int b : u.fiber_members(h.source)) {
        int sub = closure.lookup(Formula::subst(h, u.formulas()[b]));
        if (sub >= 0 && closure.has(a, sub))
          out.push_back(Constraint{h, u.formulas()[a], u.formulas()[b]});
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool semantic_entails(const Structure& m, const Constraint& c) {
  return satisfies_constraint(m, c);
}

Report spec_morphism_validate(const SchemaMorphism& m, const Specification& from,
                              const Specification& to, const FormulaUniverse& u_to) {
  Report report;
  for (const auto& f : schema_morphism_validate(m, from.schema, to.schema)) report.push_back(f);
  if (!report.empty()) return report;
  std::vector<Constraint> cons = consequence(to, u_to);
  std::set<Constraint> derivable(cons.begin(), cons.end());
  int index = 0;
  for (const auto& c : from.constraints) {
    Constraint image = translate_constraint(m, c);
    if (!derivable.count(image))
      report.push_back({"constraint " + std::to_string(index),
                        "translated constraint is not derivable: " + to_string(image)});
    ++index;
  }
  return report;
}

Report soundness_check(const Logic& l) {
  Report report;
  Evaluator ev(l.structure);
  if (!(l.structure.schema == l.spec.schema))
    report.push_back({"logic", "structure and specification do not share a schema"});
  int index = 0;
  for (const auto& c : l.spec.constraints) {
    try {
      if (!satisfies_constraint(ev, c))
        report.push_back({"constraint " + std::to_string(index), "not satisfied: " + to_string(c)});
    } catch (const Error& e) {
      report.push_back({"constraint " + std::to_string(index), e.what()});
    }
    ++index;
  }
  return report;
}

}  // namespace fole
