#pragma once

#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "vkt/error.hpp"

namespace vkt {

/// A finite set of atom identifiers, kept sorted and duplicate-free.
using AtomSet = std::set<std::string>;

enum class Op { Atom, Top, Bot, Not, And, Or, Box, Diamond };

/// Immutable modal formula. Copies share structure, so formulas built from
/// repeated subterms form a DAG rather than a tree.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula negation(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula box(Formula f);
  static Formula diamond(Formula f);

  Op op() const noexcept;
  /// Atom name; empty for every other node kind.
  const std::string& name() const noexcept;
  /// Only child of Not/Box/Diamond, left child of And/Or.
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Node identity, usable as a memo key. Structurally equal formulas built
  /// independently have different ids.
  const void* id() const noexcept { return node_.get(); }

  bool is_unary() const noexcept;
  bool is_binary() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool is_atom_name(std::string_view s);

/// Right-nested conjunction; the empty conjunction is `true`.
Formula conjunction(std::span<const Formula> fs);
/// Right-nested disjunction; the empty disjunction is `false`.
Formula disjunction(std::span<const Formula> fs);
/// n nested boxes around f.
Formula box_power(std::size_t n, Formula f);

/// Parses the ASCII syntax (`~ [] <> & | true false ( )`) and the Unicode
/// aliases ¬ □ ◇ ∧ ∨. Binary operators associate to the left.
Formula parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(to_string(f)) == f.
std::string to_string(const Formula& f);

Formula to_nnf(const Formula& f);
std::size_t modal_depth(const Formula& f);
AtomSet atoms_of(const Formula& f);
/// Number of nodes when the formula is unfolded to a tree.
std::size_t tree_size(const Formula& f);

}  // namespace vkt
