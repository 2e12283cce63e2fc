#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "vkt/formula.hpp"

namespace vkt {

/// A subset of a model's states, indexed densely.
using StateSet = boost::dynamic_bitset<>;
/// A total map between state index spaces: map[x] is the image of x.
using StateMap = std::vector<std::size_t>;
using Edge = std::pair<std::size_t, std::size_t>;

std::vector<std::size_t> members(const StateSet& s);
StateSet make_set(std::size_t n, std::initializer_list<std::size_t> xs);

/// Finite Kripke model (X, R, v) over a declared atom fragment. States are
/// named externally and indexed internally in declaration order.
class KripkeModel {
 public:
  KripkeModel() = default;
  /// Throws InputError on duplicate state names, out-of-range edges, or a
  /// valuation mentioning an undeclared atom. `atom_order`, when given, must
  /// list exactly the declared atoms; it only affects serialization.
  KripkeModel(std::vector<std::string> states, AtomSet atoms, std::vector<Edge> edges,
              std::vector<AtomSet> val, std::vector<std::string> atom_order = {});

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t x) const { return names_.at(x); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  const AtomSet& atoms() const noexcept { return atoms_; }
  /// Declared atoms in declaration order.
  const std::vector<std::string>& atom_order() const noexcept { return atom_order_; }
  const AtomSet& val(std::size_t x) const { return val_.at(x); }
  const std::vector<AtomSet>& valuation() const noexcept { return val_; }
  /// Edges without duplicates, in first-occurrence order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// R(x).
  const StateSet& successors(std::size_t x) const { return succ_.at(x); }
  bool has_edge(std::size_t x, std::size_t y) const { return succ_.at(x).test(y); }

  StateSet empty_set() const { return StateSet(size()); }
  StateSet full_set() const { return ~StateSet(size()); }

 private:
  std::vector<std::string> names_;
  AtomSet atoms_;
  std::vector<std::string> atom_order_;
  std::vector<Edge> edges_;
  std::vector<AtomSet> val_;
  std::vector<StateSet> succ_;
};

/// States of the disjoint union: a's states first (named "a.<name>"), then
/// b's ("b.<name>"). Atoms are the union of both fragments.
KripkeModel disjoint_union(const KripkeModel& a, const KripkeModel& b);

// {{{ Semantics

/// ⟦f⟧. Throws InputError if f uses an atom outside m.atoms().
StateSet eval(const KripkeModel& m, const Formula& f);
bool satisfies(const KripkeModel& m, std::size_t x, const Formula& f);

/// ⟨R⟩U: states with some successor in U.
StateSet diamond_pre(const KripkeModel& m, const StateSet& u);
/// [R]U: states all of whose successors lie in U.
StateSet box_pre(const KripkeModel& m, const StateSet& u);
/// R(U): union of the successor sets of U.
StateSet image(const KripkeModel& m, const StateSet& u);
/// U is a Kripke substructure iff R(U) ⊆ U.
bool is_substructure(const KripkeModel& m, const StateSet& u);

// }}}

// {{{ Relations

/// A relation between the states of two (possibly identical) models, stored
/// as one row of right-hand states per left-hand state.
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t left_size, std::size_t right_size);
  Relation(std::size_t left_size, std::size_t right_size, const std::vector<Edge>& pairs);

  static Relation identity(std::size_t n);
  /// G(f) = {(x, f(x))}.
  static Relation graph(const StateMap& f, std::size_t right_size);

  std::size_t left_size() const noexcept { return rows_.size(); }
  std::size_t right_size() const noexcept { return right_size_; }
  bool contains(std::size_t x, std::size_t y) const { return rows_.at(x).test(y); }
  void insert(std::size_t x, std::size_t y);
  void erase(std::size_t x, std::size_t y) { rows_.at(x).reset(y); }
  const StateSet& row(std::size_t x) const { return rows_.at(x); }
  std::size_t pair_count() const;
  bool empty() const { return pair_count() == 0; }
  /// All pairs in lexicographic order.
  std::vector<Edge> pairs() const;

  bool is_subset_of(const Relation& other) const;
  bool is_equivalence() const;

  friend bool operator==(const Relation& a, const Relation& b) = default;

 private:
  std::size_t right_size_ = 0;
  std::vector<StateSet> rows_;
};

Relation converse(const Relation& r);
/// Diagrammatic composition: {(x,z) | ∃y. (x,y) ∈ r1 ∧ (y,z) ∈ r2}.
/// Throws InputError when r1.right_size() != r2.left_size().
Relation compose(const Relation& r1, const Relation& r2);
/// ker f = G(f)∘G(f)⁻¹.
Relation kernel(const StateMap& f, std::size_t right_size);

// }}}

// {{{ Bisimulation

struct BisimulationCheck {
  bool ok = true;
  /// 1: valuations differ; 2: forth (x→x' unmatched); 3: back (y→y' unmatched).
  int clause = 0;
  std::optional<Edge> pair;
  /// The unmatched successor, for clauses 2 and 3.
  std::optional<std::size_t> successor;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks the three bisimulation clauses at every pair, reporting the first
/// violation in lexicographic pair order.
BisimulationCheck check_bisimulation(const KripkeModel& a, const KripkeModel& b,
                                     const Relation& r);
bool is_bisimulation(const KripkeModel& a, const KripkeModel& b, const Relation& r);

/// Greatest fixpoint: start from equal-valuation pairs, delete pairs violating
/// the forth/back clauses until stable.
Relation largest_bisimulation(const KripkeModel& a, const KripkeModel& b);

/// A homomorphism is a map whose graph is a bisimulation. Throws InputError if
/// the map is not total into b.
BisimulationCheck check_homomorphism(const KripkeModel& a, const KripkeModel& b,
                                     const StateMap& f);
bool is_homomorphism(const KripkeModel& a, const KripkeModel& b, const StateMap& f);

// }}}

// {{{ Partitions and quotients

class Partition {
 public:
  Partition() = default;
  /// Blocks are sorted internally and ordered by least member.
  explicit Partition(std::vector<std::vector<std::size_t>> blocks);
  /// Blocks of an equivalence relation; throws InputError otherwise.
  static Partition of_equivalence(const Relation& r);
  /// Blocks of ker f.
  static Partition of_map(const StateMap& f);

  std::size_t size() const noexcept { return blocks_.size(); }
  std::size_t carrier_size() const noexcept { return block_of_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t x) const { return block_of_.at(x); }
  StateSet block_set(std::size_t b) const;
  Relation to_relation() const;

  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

struct Quotient {
  KripkeModel model;
  StateMap projection;
  Partition partition;
};

/// Quotient by the largest auto-bisimulation. Each block is named after its
/// least-index member.
Quotient quotient(const KripkeModel& m);

/// Finite models are image finite, hence saturated.
bool check_saturation_finite(const KripkeModel& m);

// }}}

}  // namespace vkt
