#include "vkt/random.hpp"

#include <algorithm>

namespace vkt {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Formula formula_node(Rng& rng, const std::vector<std::string>& atoms, std::size_t depth,
                     std::size_t nodes) {
  if (nodes <= 1) {
    if (!atoms.empty() && coin(rng, 0.75)) return Formula::atom(atoms[uniform(rng, 0, atoms.size() - 1)]);
    return coin(rng) ? Formula::top() : Formula::bot();
  }
  const std::size_t kinds = depth > 0 ? 5 : 3;
  switch (uniform(rng, 0, kinds - 1)) {
    case 0:
      return Formula::negation(formula_node(rng, atoms, depth, nodes - 1));
    case 1:
    case 2: {
      const std::size_t left = uniform(rng, 1, std::max<std::size_t>(1, nodes - 2));
      const std::size_t right = std::max<std::size_t>(1, nodes - 1 - left);
      Formula l = formula_node(rng, atoms, depth, left);
      Formula r = formula_node(rng, atoms, depth, right);
      return uniform(rng, 1, 2) == 1 ? Formula::conj(l, r) : Formula::disj(l, r);
    }
    case 3:
      return Formula::box(formula_node(rng, atoms, depth - 1, nodes - 1));
    default:
      return Formula::diamond(formula_node(rng, atoms, depth - 1, nodes - 1));
  }
}

// Merges two random blocks of the partition as long as the resulting partition
// topology still passes the checker.
TopologicalModel coarsen(Rng& rng, TopologicalModel tm) {
  Partition blocks = Partition::of_equivalence(largest_bisimulation(tm.model, tm.model));
  std::vector<std::vector<std::size_t>> current = blocks.blocks();
  for (std::size_t attempt = 0; attempt < 4 && current.size() > 1; ++attempt) {
    auto trial = current;
    const std::size_t i = uniform(rng, 0, trial.size() - 1);
    std::size_t j = uniform(rng, 0, trial.size() - 2);
    if (j >= i) ++j;
    trial[i].insert(trial[i].end(), trial[j].begin(), trial[j].end());
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<StateSet> subbase;
    Partition p(trial);
    for (std::size_t b = 0; b < p.size(); ++b) subbase.push_back(p.block_set(b));
    TopologicalModel candidate{tm.model, generate(tm.model.size(), subbase)};
    if (check_topological_model(candidate).pass()) {
      current = std::move(trial);
      tm = std::move(candidate);
    }
  }
  return tm;
}

// Models whose transitions are empty, self-loops or complete relations on a
// random subset, with a constant valuation: these admit many non-partition
// topologies.
KripkeModel tame_model(Rng& rng, std::size_t n, const AtomSet& atoms) {
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) names.push_back("x" + std::to_string(x));
  std::vector<Edge> edges;
  const std::size_t shape = uniform(rng, 0, 2);
  for (std::size_t x = 0; x < n; ++x) {
    if (shape == 1) edges.emplace_back(x, x);
    if (shape == 2) {
      for (std::size_t y = 0; y < n; ++y) edges.emplace_back(x, y);
    }
  }
  AtomSet v;
  for (const auto& p : atoms) {
    if (coin(rng)) v.insert(p);
  }
  return KripkeModel(std::move(names), atoms, std::move(edges), std::vector<AtomSet>(n, v));
}

}  // namespace

KripkeModel random_model(Rng& rng, std::size_t min_states, std::size_t max_states,
                         const AtomSet& atoms, double edge_probability) {
  const std::size_t n = uniform(rng, min_states, max_states);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) names.push_back("x" + std::to_string(x));
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (coin(rng, edge_probability)) edges.emplace_back(x, y);
    }
  }
  std::vector<AtomSet> val(n);
  for (auto& v : val) {
    for (const auto& p : atoms) {
      if (coin(rng)) v.insert(p);
    }
  }
  return KripkeModel(std::move(names), atoms, std::move(edges), std::move(val));
}

Formula random_formula(Rng& rng, const std::vector<std::string>& atoms, std::size_t max_depth,
                       std::size_t max_nodes) {
  return formula_node(rng, atoms, max_depth, uniform(rng, 1, std::max<std::size_t>(1, max_nodes)));
}

StateSet random_subset(Rng& rng, std::size_t n) {
  StateSet s(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (coin(rng)) s.set(x);
  }
  return s;
}

FiniteTopology random_topology(Rng& rng, std::size_t n, std::size_t subsets) {
  std::vector<StateSet> subbase;
  for (std::size_t i = 0; i < subsets; ++i) subbase.push_back(random_subset(rng, n));
  return generate(n, subbase);
}

TopologicalModel random_topological_model(Rng& rng, std::size_t max_states, const AtomSet& atoms) {
  switch (uniform(rng, 0, 4)) {
    case 0:
      return formula_topology(random_model(rng, 1, max_states, atoms));
    case 1: {
      KripkeModel m = random_model(rng, 1, max_states, atoms);
      FiniteTopology t = FiniteTopology::discrete(m.size());
      return {std::move(m), std::move(t)};
    }
    case 2:
      return coarsen(rng, formula_topology(random_model(rng, 1, max_states, atoms)));
    case 3: {
      for (int attempt = 0; attempt < 16; ++attempt) {
        const std::size_t n = uniform(rng, 1, max_states);
        TopologicalModel tm{tame_model(rng, n, atoms), random_topology(rng, n, uniform(rng, 1, 4))};
        if (check_topological_model(tm).pass()) return tm;
      }
      break;
    }
    default: {
      for (int attempt = 0; attempt < 32; ++attempt) {
        TopologicalModel tm = random_model_with_topology(rng, max_states, atoms);
        if (check_topological_model(tm).pass()) return tm;
      }
      break;
    }
  }
  return formula_topology(random_model(rng, 1, max_states, atoms));
}

TopologicalModel random_model_with_topology(Rng& rng, std::size_t max_states, const AtomSet& atoms) {
  KripkeModel m = random_model(rng, 1, max_states, atoms, coin(rng) ? 0.3 : 0.1);
  FiniteTopology t = random_topology(rng, m.size(), uniform(rng, 0, 4));
  return {std::move(m), std::move(t)};
}

StateSet random_substructure(Rng& rng, const KripkeModel& m) {
  StateSet u = random_subset(rng, m.size());
  if (coin(rng, 0.2)) u.reset();
  for (;;) {
    StateSet grown = u | image(m, u);
    if (grown == u) return u;
    u = std::move(grown);
  }
}

}  // namespace vkt
