#include "vkt/topology.hpp"

#include <algorithm>
#include <deque>

namespace vkt {

namespace {

bool canonical_less(const StateSet& a, const StateSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return members(a) < members(b);
}

std::vector<StateSet> canonical_family(std::set<StateSet> family) {
  std::vector<StateSet> out(family.begin(), family.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

void check_carrier(std::size_t n) {
  if (n > kMaxTopologyCarrier) {
    throw LimitError("topology carrier of " + std::to_string(n) + " points exceeds the limit of " +
                     std::to_string(kMaxTopologyCarrier));
  }
}

}  // namespace

FiniteTopology::FiniteTopology() : FiniteTopology(0, {StateSet(0)}) {}

FiniteTopology::FiniteTopology(std::size_t n, std::vector<StateSet> opens)
    : n_(n), opens_(std::move(opens)), index_(opens_.begin(), opens_.end()) {
  neighbourhoods_.assign(n_, ~StateSet(n_));
  for (const auto& o : opens_) {
    for (std::size_t x : members(o)) neighbourhoods_[x] &= o;
  }
}

std::optional<OpenFamilyViolation> find_open_family_violation(std::size_t n,
                                                              std::span<const StateSet> opens) {
  std::set<StateSet> family;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (opens[i].size() != n) return OpenFamilyViolation{i, i, false, true};
    family.insert(opens[i]);
  }
  const StateSet empty(n);
  if (!family.contains(empty) || !family.contains(~empty)) {
    return OpenFamilyViolation{0, 0, !family.contains(~empty), true};
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!family.contains(opens[i] | opens[j])) return OpenFamilyViolation{i, j, true, false};
      if (!family.contains(opens[i] & opens[j])) return OpenFamilyViolation{i, j, false, false};
    }
  }
  return std::nullopt;
}

FiniteTopology FiniteTopology::from_opens(std::size_t n, std::vector<StateSet> opens) {
  check_carrier(n);
  if (auto v = find_open_family_violation(n, opens)) {
    if (v->bound_missing) {
      throw InputError(v->union_missing ? "open family lacks the carrier"
                                        : "open family lacks the empty set or has a wrong width");
    }
    throw InputError("open family is not closed under " +
                     std::string(v->union_missing ? "union" : "intersection") + " of opens #" +
                     std::to_string(v->first) + " and #" + std::to_string(v->second));
  }
  return FiniteTopology(n, canonical_family({opens.begin(), opens.end()}));
}

FiniteTopology FiniteTopology::discrete(std::size_t n) {
  std::vector<StateSet> singletons;
  for (std::size_t x = 0; x < n; ++x) singletons.push_back(make_set(n, {x}));
  return generate(n, singletons);
}

FiniteTopology FiniteTopology::indiscrete(std::size_t n) {
  check_carrier(n);
  std::set<StateSet> family{StateSet(n), ~StateSet(n)};
  return FiniteTopology(n, canonical_family(std::move(family)));
}

FiniteTopology generate(std::size_t n, std::span<const StateSet> subbase) {
  check_carrier(n);
  // Least basic open around each point: the intersection of the subbase
  // members containing it. Every open is a union of these.
  std::vector<StateSet> basis(n, ~StateSet(n));
  for (const auto& s : subbase) {
    if (s.size() != n) throw InputError("subbase member has the wrong carrier width");
    for (std::size_t x : members(s)) basis[x] &= s;
  }
  std::set<StateSet> family{StateSet(n), ~StateSet(n)};
  std::deque<StateSet> queue{StateSet(n)};
  while (!queue.empty()) {
    StateSet o = std::move(queue.front());
    queue.pop_front();
    for (std::size_t x = 0; x < n; ++x) {
      if (o.test(x)) continue;
      StateSet grown = o | basis[x];
      if (family.insert(grown).second) queue.push_back(std::move(grown));
    }
  }
  return FiniteTopology(n, canonical_family(std::move(family)));
}

StateSet closure(const FiniteTopology& t, const StateSet& a) {
  StateSet out = ~StateSet(t.carrier_size());
  for (const auto& o : t.opens()) {
    StateSet closed = ~o;
    if (a.is_subset_of(closed)) out &= closed;
  }
  return out;
}

StateSet interior(const FiniteTopology& t, const StateSet& a) {
  StateSet out(t.carrier_size());
  for (const auto& o : t.opens()) {
    if (o.is_subset_of(a)) out |= o;
  }
  return out;
}

bool is_clopen(const FiniteTopology& t, const StateSet& a) { return t.is_open(a) && t.is_closed(a); }

TopologicalModel formula_topology(const KripkeModel& m) {
  Partition blocks = Partition::of_equivalence(largest_bisimulation(m, m));
  std::vector<StateSet> subbase;
  for (std::size_t b = 0; b < blocks.size(); ++b) subbase.push_back(blocks.block_set(b));
  return {m, generate(m.size(), subbase)};
}

Report check_topological_model(const TopologicalModel& tm) {
  const KripkeModel& m = tm.model;
  const FiniteTopology& t = tm.topology;
  if (t.carrier_size() != m.size()) {
    throw InputError("topology carrier does not match the model's states");
  }
  Report report{"topological-model", true, {}, {}};

  report.clauses.push_back({"compact-successors", true, std::nullopt});

  Clause diamond{"diamond-open", true, std::nullopt};
  Clause box{"box-open", true, std::nullopt};
  for (const auto& o : t.opens()) {
    if (diamond.pass) {
      StateSet d = diamond_pre(m, o);
      if (!t.is_open(d)) diamond = {"diamond-open", false, Witness{o, d, {}, {}, {}, "<R>O is not open"}};
    }
    if (box.pass) {
      StateSet b = box_pre(m, o);
      if (!t.is_open(b)) box = {"box-open", false, Witness{o, b, {}, {}, {}, "[R]O is not open"}};
    }
  }
  report.clauses.push_back(std::move(diamond));
  report.clauses.push_back(std::move(box));

  Clause valuation{"valuation-clopen", true, std::nullopt};
  for (const auto& p : m.atom_order()) {
    StateSet extent = eval(m, Formula::atom(p));
    if (!t.is_open(extent)) {
      valuation = {"valuation-clopen", false, Witness{extent, {}, p, {}, {}, "[[p]] is not open"}};
      break;
    }
    if (!t.is_closed(extent)) {
      valuation = {"valuation-clopen", false,
                   Witness{extent, ~extent, p, {}, {}, "complement of [[p]] is not open"}};
      break;
    }
  }
  report.clauses.push_back(std::move(valuation));
  return report;
}

}  // namespace vkt
