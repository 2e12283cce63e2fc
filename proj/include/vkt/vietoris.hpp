#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vkt/formula.hpp"
#include "vkt/kripke.hpp"
#include "vkt/report.hpp"
#include "vkt/topology.hpp"

namespace vkt {

/// Points of V(X) are subsets of the base carrier encoded as bit masks.
inline constexpr std::size_t kMaxVietorisCarrier = 12;
using HyperPoint = std::uint32_t;

HyperPoint to_point(const StateSet& k);
StateSet from_point(HyperPoint k, std::size_t n);

/// Compact Vietoris space over a finite base. Every subset of a finite space
/// is compact, so the points are all 2^n subsets. The subbase sets ⟨O⟩ and [O]
/// are materialized as point sets; the topology they generate is not.
class VietorisSpace {
 public:
  struct SubbaseEntry {
    StateSet open;
    /// ⟨O⟩ = {K | K ∩ O ≠ ∅}, indexed by point.
    std::vector<bool> meets;
    /// [O] = {K | K ⊆ O}, indexed by point.
    std::vector<bool> inside;
  };

  /// Throws LimitError when the base carrier exceeds kMaxVietorisCarrier.
  explicit VietorisSpace(FiniteTopology base);

  const FiniteTopology& base() const noexcept { return base_; }
  std::size_t point_count() const noexcept { return std::size_t{1} << base_.carrier_size(); }
  /// One entry per base open, in the base's open order.
  const std::vector<SubbaseEntry>& subbase() const noexcept { return subbase_; }
  const SubbaseEntry& entry_for(const StateSet& open) const;

 private:
  FiniteTopology base_;
  std::vector<SubbaseEntry> subbase_;
};

VietorisSpace vietoris_space(const FiniteTopology& t);

/// Preimages of opens are open.
bool is_continuous(const StateMap& f, const FiniteTopology& from, const FiniteTopology& to);
StateSet preimage(const StateMap& f, const StateSet& target, std::size_t source_size);

/// (Vf)(K) = f(K), as a table indexed by the points of `from`. Throws
/// InputError if f is not a continuous map between the base spaces.
std::vector<HyperPoint> vietoris_map(const StateMap& f, const VietorisSpace& from,
                                     const VietorisSpace& to);

/// Continuity of x ↦ (R(x), v(x)) into V(X) × P(Φ), decided on the subbase.
/// Clauses mirror check_topological_model:
///   compact-successors, diamond-open, box-open, valuation-clopen.
/// Throws LimitError for models above kMaxVietorisCarrier states.
Report structure_map_continuous(const TopologicalModel& tm);

/// Closure of a successor-closed subset is successor-closed.
Report closed_subcoalgebra_check(const TopologicalModel& tm, const StateSet& u);

/// Closure of S in the product of the two base topologies.
Relation product_closure(const FiniteTopology& a, const FiniteTopology& b, const Relation& s);

/// Closure of a bisimulation (in the product topology) is a bisimulation.
Report closed_bisimulation_check(const TopologicalModel& a, const TopologicalModel& b,
                                 const Relation& s);

/// Membership of a point u ∈ P(Φ) in the subbase set ↑p.
bool in_up_set(const AtomSet& u, const std::string& p);
/// An atom p with exactly one of u, w in ↑p, if u ≠ w (within `atoms`).
std::optional<std::string> separating_atom(const AtomSet& atoms, const AtomSet& u,
                                           const AtomSet& w);

}  // namespace vkt
