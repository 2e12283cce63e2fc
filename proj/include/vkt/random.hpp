#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "vkt/formula.hpp"
#include "vkt/kripke.hpp"
#include "vkt/topology.hpp"

namespace vkt {

using Rng = std::mt19937_64;

/// Uniform state count in [min_states, max_states]; each edge present with
/// probability `edge_probability`; each atom true at a state with probability 1/2.
KripkeModel random_model(Rng& rng, std::size_t min_states, std::size_t max_states,
                         const AtomSet& atoms, double edge_probability = 0.3);

/// Random formula over `atoms` with modal depth ≤ max_depth and at most
/// `max_nodes` nodes. Closed (atom-free) when `atoms` is empty.
Formula random_formula(Rng& rng, const std::vector<std::string>& atoms, std::size_t max_depth,
                       std::size_t max_nodes = 16);

/// Topology generated by `subsets` random subsets of {0..n−1}.
FiniteTopology random_topology(Rng& rng, std::size_t n, std::size_t subsets = 3);

/// Random subset; each point kept with probability 1/2.
StateSet random_subset(Rng& rng, std::size_t n);

/// A model paired with a topology that passes check_topological_model. Drawn
/// from a mix of sources: the formula topology, discrete topologies, random
/// coarsenings of the formula topology, and rejection-sampled random
/// topologies on models built to admit them.
TopologicalModel random_topological_model(Rng& rng, std::size_t max_states, const AtomSet& atoms);

/// A model with an arbitrary random topology; usually not a topological model.
TopologicalModel random_model_with_topology(Rng& rng, std::size_t max_states, const AtomSet& atoms);

/// Random successor-closed subset: the successor closure of a random seed set.
StateSet random_substructure(Rng& rng, const KripkeModel& m);

}  // namespace vkt
