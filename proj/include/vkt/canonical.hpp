#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vkt/formula.hpp"
#include "vkt/kripke.hpp"
#include "vkt/report.hpp"

namespace vkt {

using TypeId = std::uint32_t;

/// An element of the level Z_d of the final sequence for P(−) × P(Φ₀):
/// Z_0 = P(Φ₀), Z_{d+1} = P(Z_d) × P(Φ₀). Successor types live in the same
/// TypeStore and are kept sorted and duplicate-free.
struct BehaviorType {
  std::size_t depth = 0;
  AtomSet val;
  std::vector<TypeId> succs;

  friend bool operator==(const BehaviorType&, const BehaviorType&) = default;
};

/// Hash-consing table for behavior types over a fixed atom fragment Φ₀.
/// Two ids from the same store are equal iff the types are structurally equal.
/// Not thread-safe; use one store per thread.
class TypeStore {
 public:
  explicit TypeStore(AtomSet atoms = {}) : atoms_(std::move(atoms)) {}

  const AtomSet& atoms() const noexcept { return atoms_; }
  /// Throws InputError if val leaves Φ₀ or a successor has the wrong depth.
  TypeId intern(BehaviorType t);
  const BehaviorType& operator[](TypeId id) const { return types_.at(id); }
  std::size_t size() const noexcept { return types_.size(); }

 private:
  AtomSet atoms_;
  std::vector<BehaviorType> types_;
  std::map<std::tuple<std::size_t, AtomSet, std::vector<TypeId>>, TypeId> index_;
};

inline constexpr std::uint64_t kMaxLevelSize = std::uint64_t{1} << 16;

/// |Z_d| over `atom_count` atoms, or nullopt once it exceeds `cap`.
std::optional<std::uint64_t> level_size(std::size_t atom_count, std::size_t d,
                                        std::uint64_t cap = kMaxLevelSize);

/// All types of depth d over store.atoms(), in enumeration order. Throws
/// LimitError when |Z_d| > kMaxLevelSize.
std::vector<TypeId> final_level(TypeStore& store, std::size_t d);

/// beh_0(x) = v(x) ∩ Φ₀, beh_{d+1}(x) = (v(x) ∩ Φ₀, {beh_d(y) | x → y}).
std::vector<TypeId> behavior_map(const KripkeModel& m, std::size_t d, TypeStore& store);

/// Drops one level of successor detail: maps Z_{d+1} onto Z_d.
TypeId truncate(TypeStore& store, TypeId t);

/// Structural satisfaction on types. Throws InputError if f is deeper than
/// the type or uses an atom outside Φ₀.
bool type_satisfies(const TypeStore& store, TypeId t, const Formula& f);

/// χ_t: valuation literals, ◇χ_s for every successor type s, and □ of the
/// disjunction of the χ_s. Shared subformulas keep the result a small DAG.
Formula characteristic_formula(const TypeStore& store, TypeId t);

std::string type_to_string(const TypeStore& store, TypeId t);

/// Blocks of ker beh: states with equal types.
Partition behavior_kernel(const std::vector<TypeId>& beh);

struct StableKernel {
  std::size_t depth;
  Partition partition;
};

/// Iterates d = 0, 1, … until ker beh_d = ker beh_{d+1}.
StableKernel stabilized_kernel(const KripkeModel& m, TypeStore& store);

/// Clauses: homomorphism (one unfolding step commutes with beh), projection
/// (truncation is compatible across levels), separation (distinct realized
/// types at depth d are told apart by their characteristic formulas), and
/// characteristic (⟦χ_t⟧ = beh_d⁻¹(t) in m).
Report terminal_uniqueness_check(const KripkeModel& m, std::size_t d);

}  // namespace vkt
