#include "vkt/vietoris.hpp"

#include <array>

namespace vkt {

HyperPoint to_point(const StateSet& k) {
  if (k.size() > kMaxVietorisCarrier) throw LimitError("subset too wide for a hyperspace point");
  HyperPoint p = 0;
  for (std::size_t x : members(k)) p |= HyperPoint{1} << x;
  return p;
}

StateSet from_point(HyperPoint k, std::size_t n) {
  StateSet s(n);
  for (std::size_t x = 0; x < n; ++x) {
    if ((k >> x) & 1U) s.set(x);
  }
  return s;
}

VietorisSpace::VietorisSpace(FiniteTopology base) : base_(std::move(base)) {
  if (base_.carrier_size() > kMaxVietorisCarrier) {
    throw LimitError("Vietoris space over " + std::to_string(base_.carrier_size()) +
                     " points exceeds the limit of " + std::to_string(kMaxVietorisCarrier));
  }
  const std::size_t count = point_count();
  for (const auto& o : base_.opens()) {
    const HyperPoint mask = to_point(o);
    SubbaseEntry e{o, std::vector<bool>(count), std::vector<bool>(count)};
    for (HyperPoint k = 0; k < count; ++k) {
      e.meets[k] = (k & mask) != 0;
      e.inside[k] = (k & ~mask) == 0;
    }
    subbase_.push_back(std::move(e));
  }
}

const VietorisSpace::SubbaseEntry& VietorisSpace::entry_for(const StateSet& open) const {
  for (const auto& e : subbase_) {
    if (e.open == open) return e;
  }
  throw InputError("set is not open in the base space");
}

VietorisSpace vietoris_space(const FiniteTopology& t) { return VietorisSpace(t); }

StateSet preimage(const StateMap& f, const StateSet& target, std::size_t source_size) {
  StateSet out(source_size);
  for (std::size_t x = 0; x < source_size; ++x) {
    if (target.test(f.at(x))) out.set(x);
  }
  return out;
}

bool is_continuous(const StateMap& f, const FiniteTopology& from, const FiniteTopology& to) {
  if (f.size() != from.carrier_size()) return false;
  for (std::size_t y : f) {
    if (y >= to.carrier_size()) return false;
  }
  for (const auto& o : to.opens()) {
    if (!from.is_open(preimage(f, o, from.carrier_size()))) return false;
  }
  return true;
}

std::vector<HyperPoint> vietoris_map(const StateMap& f, const VietorisSpace& from,
                                     const VietorisSpace& to) {
  if (!is_continuous(f, from.base(), to.base())) {
    throw InputError("map is not continuous between the base spaces");
  }
  std::vector<HyperPoint> table(from.point_count());
  for (HyperPoint k = 0; k < table.size(); ++k) {
    HyperPoint img = 0;
    for (std::size_t x = 0; x < from.base().carrier_size(); ++x) {
      if ((k >> x) & 1U) img |= HyperPoint{1} << f[x];
    }
    table[k] = img;
  }
  return table;
}

Report structure_map_continuous(const TopologicalModel& tm) {
  const KripkeModel& m = tm.model;
  if (tm.topology.carrier_size() != m.size()) {
    throw InputError("topology carrier does not match the model's states");
  }
  const VietorisSpace space(tm.topology);
  const FiniteTopology& t = space.base();
  const std::size_t n = m.size();

  std::vector<HyperPoint> succ_point(n);
  for (std::size_t x = 0; x < n; ++x) succ_point[x] = to_point(m.successors(x));

  Report report{"structure-map-continuous", true, {}, {}};

  Clause compact{"compact-successors", true, std::nullopt};
  for (std::size_t x = 0; x < n; ++x) {
    if (succ_point[x] >= space.point_count()) {
      compact = {"compact-successors", false,
                 Witness{m.successors(x), {}, {}, {}, x, "R(x) is not a point of V(X)"}};
      break;
    }
  }
  report.clauses.push_back(std::move(compact));

  // The subbase of V(X) pulls back along x ↦ R(x) to these two families.
  Clause meets{"diamond-open", true, std::nullopt};
  Clause inside{"box-open", true, std::nullopt};
  for (const auto& e : space.subbase()) {
    StateSet pre_meets(n);
    StateSet pre_inside(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (e.meets[succ_point[x]]) pre_meets.set(x);
      if (e.inside[succ_point[x]]) pre_inside.set(x);
    }
    if (meets.pass && !t.is_open(pre_meets)) {
      meets = {"diamond-open", false,
               Witness{e.open, pre_meets, {}, {}, {}, "preimage of <O> is not open"}};
    }
    if (inside.pass && !t.is_open(pre_inside)) {
      inside = {"box-open", false,
                Witness{e.open, pre_inside, {}, {}, {}, "preimage of [O] is not open"}};
    }
  }
  report.clauses.push_back(std::move(meets));
  report.clauses.push_back(std::move(inside));

  // Subbase of P(Φ): ↑p and its complement.
  Clause valuation{"valuation-clopen", true, std::nullopt};
  for (const auto& p : m.atom_order()) {
    StateSet up(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (in_up_set(m.val(x), p)) up.set(x);
    }
    if (!t.is_open(up)) {
      valuation = {"valuation-clopen", false,
                   Witness{up, {}, p, {}, {}, "preimage of up(p) is not open"}};
      break;
    }
    if (!t.is_open(~up)) {
      valuation = {"valuation-clopen", false,
                   Witness{up, ~up, p, {}, {}, "preimage of the complement of up(p) is not open"}};
      break;
    }
  }
  report.clauses.push_back(std::move(valuation));
  return report;
}

namespace {

bool require_topological_model(const TopologicalModel& tm, Report& report, const char* label) {
  Report def = check_topological_model(tm);
  if (def.pass()) return true;
  report.precondition_ok = false;
  report.precondition_note = std::string(label) + " is not a topological model (" +
                             def.first_failure()->name + " fails)";
  return false;
}

}  // namespace

Report closed_subcoalgebra_check(const TopologicalModel& tm, const StateSet& u) {
  const KripkeModel& m = tm.model;
  Report report{"closed-subcoalgebra", true, {}, {}};
  if (u.size() != m.size()) throw InputError("subset width does not match the model");
  if (!require_topological_model(tm, report, "model")) return report;
  if (!is_substructure(m, u)) {
    report.precondition_ok = false;
    report.precondition_note = "subset is not closed under successors";
    return report;
  }
  const StateSet cl = closure(tm.topology, u);
  Clause c{"closure-successor-closed", true, std::nullopt};
  for (std::size_t x : members(cl)) {
    if (!m.successors(x).is_subset_of(cl)) {
      c = {c.name, false, Witness{cl, m.successors(x), {}, {}, x, "R(x) leaves the closure"}};
      break;
    }
  }
  report.clauses.push_back(std::move(c));
  return report;
}

Relation product_closure(const FiniteTopology& a, const FiniteTopology& b, const Relation& s) {
  if (s.left_size() != a.carrier_size() || s.right_size() != b.carrier_size()) {
    throw InputError("relation endpoints do not match the topologies");
  }
  // Finite product: the least open box around (x, y) is N(x) × N(y).
  Relation out(a.carrier_size(), b.carrier_size());
  for (std::size_t x = 0; x < a.carrier_size(); ++x) {
    for (std::size_t y = 0; y < b.carrier_size(); ++y) {
      for (std::size_t x2 : members(a.neighbourhood(x))) {
        if (s.row(x2).intersects(b.neighbourhood(y))) {
          out.insert(x, y);
          break;
        }
      }
    }
  }
  return out;
}

Report closed_bisimulation_check(const TopologicalModel& a, const TopologicalModel& b,
                                 const Relation& s) {
  Report report{"closed-bisimulation", true, {}, {}};
  if (!require_topological_model(a, report, "left model")) return report;
  if (!require_topological_model(b, report, "right model")) return report;
  if (!is_bisimulation(a.model, b.model, s)) {
    report.precondition_ok = false;
    report.precondition_note = "relation is not a bisimulation";
    return report;
  }
  const Relation cl = product_closure(a.topology, b.topology, s);
  std::array<Clause, 3> clauses{Clause{"closure-valuation", true, std::nullopt},
                                Clause{"closure-forth", true, std::nullopt},
                                Clause{"closure-back", true, std::nullopt}};
  for (auto [x, y] : cl.pairs()) {
    if (clauses[0].pass && a.model.val(x) != b.model.val(y)) {
      clauses[0].pass = false;
      clauses[0].witness = Witness{{}, {}, {}, Edge{x, y}, {}, "valuations differ"};
    }
    if (clauses[1].pass) {
      for (std::size_t xs : members(a.model.successors(x))) {
        if (!cl.row(xs).intersects(b.model.successors(y))) {
          clauses[1].pass = false;
          clauses[1].witness = Witness{{}, {}, {}, Edge{x, y}, xs, "left successor unmatched"};
          break;
        }
      }
    }
    if (clauses[2].pass) {
      StateSet matched(b.model.size());
      for (std::size_t xs : members(a.model.successors(x))) matched |= cl.row(xs);
      StateSet unmatched = b.model.successors(y) - matched;
      if (unmatched.any()) {
        clauses[2].pass = false;
        clauses[2].witness =
            Witness{{}, {}, {}, Edge{x, y}, unmatched.find_first(), "right successor unmatched", true};
      }
    }
  }
  report.clauses.assign(clauses.begin(), clauses.end());
  return report;
}

bool in_up_set(const AtomSet& u, const std::string& p) { return u.contains(p); }

std::optional<std::string> separating_atom(const AtomSet& atoms, const AtomSet& u,
                                           const AtomSet& w) {
  for (const auto& p : atoms) {
    if (in_up_set(u, p) != in_up_set(w, p)) return p;
  }
  return std::nullopt;
}

}  // namespace vkt
