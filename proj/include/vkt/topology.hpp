#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "vkt/kripke.hpp"
#include "vkt/report.hpp"

namespace vkt {

/// Open-set families are materialized, so carriers are kept small.
inline constexpr std::size_t kMaxTopologyCarrier = 16;

class FiniteTopology;

/// Smallest topology containing every subbase member.
FiniteTopology generate(std::size_t n, std::span<const StateSet> subbase);

/// A topology on {0, …, n−1} stored as its explicit family of open sets.
class FiniteTopology {
 public:
  /// The unique topology on the empty carrier.
  FiniteTopology();

  /// Throws InputError unless `opens` contains ∅ and the carrier and is closed
  /// under pairwise union and intersection.
  static FiniteTopology from_opens(std::size_t n, std::vector<StateSet> opens);
  static FiniteTopology discrete(std::size_t n);
  static FiniteTopology indiscrete(std::size_t n);

  std::size_t carrier_size() const noexcept { return n_; }
  /// Opens ordered by cardinality, then by member list.
  const std::vector<StateSet>& opens() const noexcept { return opens_; }
  bool is_open(const StateSet& a) const { return index_.contains(a); }
  bool is_closed(const StateSet& a) const { return is_open(~a); }
  /// The least open set containing x.
  const StateSet& neighbourhood(std::size_t x) const { return neighbourhoods_.at(x); }

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

 private:
  friend FiniteTopology generate(std::size_t n, std::span<const StateSet> subbase);
  FiniteTopology(std::size_t n, std::vector<StateSet> opens);

  std::size_t n_ = 0;
  std::vector<StateSet> opens_;
  std::set<StateSet> index_;
  std::vector<StateSet> neighbourhoods_;
};

/// First pair of members whose union or intersection is missing from the
/// family, or a missing ∅/carrier (reported as a pair of that set with itself).
struct OpenFamilyViolation {
  std::size_t first;
  std::size_t second;
  bool union_missing;
  bool bound_missing;
};
std::optional<OpenFamilyViolation> find_open_family_violation(std::size_t n,
                                                              std::span<const StateSet> opens);

/// Intersection of all closed supersets of a.
StateSet closure(const FiniteTopology& t, const StateSet& a);
/// Union of all open subsets of a.
StateSet interior(const FiniteTopology& t, const StateSet& a);
bool is_clopen(const FiniteTopology& t, const StateSet& a);

struct TopologicalModel {
  KripkeModel model;
  FiniteTopology topology;
};

/// Topology generated by the blocks of the largest auto-bisimulation; on
/// finite models these are exactly the unions of sets ⟦φ⟧.
TopologicalModel formula_topology(const KripkeModel& m);

/// The four conditions for a topological model, in order:
///   compact-successors, diamond-open, box-open, valuation-clopen.
Report check_topological_model(const TopologicalModel& tm);

}  // namespace vkt
