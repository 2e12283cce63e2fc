#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vkt/formula.hpp"
#include "vkt/kripke.hpp"

namespace vkt {

/// The two infinite structures with empty valuation: the chain (s → s_i for
/// every i, s_{i+1} → s_i) and its extension by a point s_∞ with s → s_∞ and a
/// self-loop at s_∞.
enum class Ladder { Chain, Extended };

/// Exact truth of a closed formula on a ladder. Along s_0, s_1, … the truth
/// value is eventually constant, so it is a finite prefix followed by a
/// constant tail.
struct LadderValue {
  /// Truth at s_0 … s_{k−1}; minimal, so its last entry (if any) differs from
  /// `tail`.
  std::vector<bool> prefix;
  /// Truth at s_i for every i ≥ prefix.size().
  bool tail = false;
  bool at_root = false;
  /// Truth at s_∞; present only for the extended structure.
  std::optional<bool> at_inf;

  bool at(std::size_t i) const { return i < prefix.size() ? bool(prefix[i]) : tail; }

  friend bool operator==(const LadderValue&, const LadderValue&) = default;
};

/// Throws InputError if f contains an atom.
LadderValue ladder_eval(Ladder which, const Formula& f);

/// □^{i+1}⊥, the i-th member of the built-in parametric family.
Formula ladder_member(std::size_t i);

/// Finite truncation as a Kripke model: states s, s0 … s{n} (and sinf with its
/// self-loop for the extended structure), in that order, no atoms.
KripkeModel ladder_truncation(Ladder which, std::size_t n);

struct ChainWitness {
  /// Indices of the finite subfamily I₀ ⊆ {0..N}.
  std::vector<std::size_t> subfamily;
  /// Least m with s_m ⊭ ⋁_{i∈I₀} □^{i+1}⊥; m ≥ max(I₀)+1.
  std::size_t state;
};

struct NonsaturationReport {
  /// Every s_j satisfies □^{j+1}⊥, so s ⊩ □⋁_i □^{i+1}⊥ (checked for j ≤ N+1
  /// and, structurally, for the tail of each member).
  bool full_family_covers = false;
  /// One witness per subset I₀ of {0..N}, in mask order.
  std::vector<ChainWitness> witnesses;
  /// Some I₀ had no falsifying state at or beyond max(I₀)+1.
  bool all_subfamilies_fail = false;
  bool not_saturated() const { return full_family_covers && all_subfamilies_fail; }
};

/// Shows that no finite subfamily I₀ ⊆ {0..max_index} of □^{i+1}⊥ covers the
/// successors of s in the chain.
NonsaturationReport nonsaturation_witness_chain(std::size_t max_index = 8);

/// A member of the family passed to saturation_check_extended.
struct FamilyMember {
  bool parametric = false;
  /// Index into the explicit list, or i for □^{i+1}⊥.
  std::size_t index = 0;

  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

struct SaturationReport {
  /// s ⊩ □⋁ family in the extended structure.
  bool holds = false;
  /// When holds: a finite subfamily that already covers every successor of s.
  std::vector<FamilyMember> subfamily;
  /// When it fails: the uncovered successor, "sinf" or "s<i>".
  std::string witness;
};

/// Decides s ⊩ □⋁ family on the extended structure and extracts a finite
/// subfamily: one member true at s_∞ covers a tail, finitely many cover the
/// rest. With `with_parametric`, the members □^{i+1}⊥ for all i join the
/// family. Throws InputError for an empty family without the parametric part.
SaturationReport saturation_check_extended(const std::vector<Formula>& family,
                                           bool with_parametric);

/// True iff every successor of s satisfies some member of the subfamily.
bool covers_extended(const std::vector<Formula>& family, const std::vector<FamilyMember>& subfamily);

}  // namespace vkt
