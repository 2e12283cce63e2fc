#include "vkt/kripke.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace vkt {

std::vector<std::size_t> members(const StateSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != StateSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

StateSet make_set(std::size_t n, std::initializer_list<std::size_t> xs) {
  StateSet s(n);
  for (std::size_t x : xs) s.set(x);
  return s;
}

KripkeModel::KripkeModel(std::vector<std::string> states, AtomSet atoms, std::vector<Edge> edges,
                         std::vector<AtomSet> val, std::vector<std::string> atom_order)
    : names_(std::move(states)),
      atoms_(std::move(atoms)),
      atom_order_(std::move(atom_order)),
      val_(std::move(val)) {
  const std::size_t n = names_.size();
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
    throw InputError("duplicate state name");
  }
  for (const auto& a : atoms_) {
    if (!is_atom_name(a)) throw InputError("invalid atom name '" + a + "'");
  }
  if (atom_order_.empty()) {
    atom_order_.assign(atoms_.begin(), atoms_.end());
  } else if (atom_order_.size() != atoms_.size() ||
             AtomSet(atom_order_.begin(), atom_order_.end()) != atoms_) {
    throw InputError("atom order does not list the declared atoms");
  }
  if (val_.empty()) val_.resize(n);
  if (val_.size() != n) throw InputError("valuation size does not match state count");
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& p : val_[x]) {
      if (!atoms_.contains(p)) {
        throw InputError("state '" + names_[x] + "' valuates undeclared atom '" + p + "'");
      }
    }
  }
  succ_.assign(n, StateSet(n));
  for (auto [x, y] : edges) {
    if (x >= n || y >= n) throw InputError("edge references an undeclared state");
    if (succ_[x].test(y)) continue;
    succ_[x].set(y);
    edges_.emplace_back(x, y);
  }
}

std::optional<std::size_t> KripkeModel::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

KripkeModel disjoint_union(const KripkeModel& a, const KripkeModel& b) {
  std::vector<std::string> names;
  for (const auto& s : a.names()) names.push_back("a." + s);
  for (const auto& s : b.names()) names.push_back("b." + s);
  AtomSet atoms = a.atoms();
  atoms.insert(b.atoms().begin(), b.atoms().end());
  std::vector<Edge> edges = a.edges();
  for (auto [x, y] : b.edges()) edges.emplace_back(x + a.size(), y + a.size());
  std::vector<AtomSet> val = a.valuation();
  val.insert(val.end(), b.valuation().begin(), b.valuation().end());
  return KripkeModel(std::move(names), std::move(atoms), std::move(edges), std::move(val));
}

// {{{ Semantics

StateSet diamond_pre(const KripkeModel& m, const StateSet& u) {
  StateSet out(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (m.successors(x).intersects(u)) out.set(x);
  }
  return out;
}

StateSet box_pre(const KripkeModel& m, const StateSet& u) {
  StateSet out(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (m.successors(x).is_subset_of(u)) out.set(x);
  }
  return out;
}

StateSet image(const KripkeModel& m, const StateSet& u) {
  StateSet out(m.size());
  for (std::size_t x : members(u)) out |= m.successors(x);
  return out;
}

bool is_substructure(const KripkeModel& m, const StateSet& u) {
  return image(m, u).is_subset_of(u);
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const KripkeModel& m) : m_(m) {}

  const StateSet& run(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    StateSet out = compute(f);
    return memo_.emplace(f.id(), std::move(out)).first->second;
  }

 private:
  StateSet compute(const Formula& f) {
    switch (f.op()) {
      case Op::Atom: {
        if (!m_.atoms().contains(f.name())) {
          throw InputError("formula uses undeclared atom '" + f.name() + "'");
        }
        StateSet out = m_.empty_set();
        for (std::size_t x = 0; x < m_.size(); ++x) {
          if (m_.val(x).contains(f.name())) out.set(x);
        }
        return out;
      }
      case Op::Top:
        return m_.full_set();
      case Op::Bot:
        return m_.empty_set();
      case Op::Not:
        return ~run(f.lhs());
      case Op::And: {
        StateSet l = run(f.lhs());
        return l & run(f.rhs());
      }
      case Op::Or: {
        StateSet l = run(f.lhs());
        return l | run(f.rhs());
      }
      case Op::Box:
        return box_pre(m_, run(f.lhs()));
      case Op::Diamond:
        return diamond_pre(m_, run(f.lhs()));
    }
    throw Error("unreachable formula kind");
  }

  const KripkeModel& m_;
  std::unordered_map<const void*, StateSet> memo_;
};

}  // namespace

StateSet eval(const KripkeModel& m, const Formula& f) { return Evaluator(m).run(f); }

bool satisfies(const KripkeModel& m, std::size_t x, const Formula& f) { return eval(m, f).test(x); }

// }}}

// {{{ Relations

Relation::Relation(std::size_t left_size, std::size_t right_size)
    : right_size_(right_size), rows_(left_size, StateSet(right_size)) {}

Relation::Relation(std::size_t left_size, std::size_t right_size, const std::vector<Edge>& pairs)
    : Relation(left_size, right_size) {
  for (auto [x, y] : pairs) insert(x, y);
}

Relation Relation::identity(std::size_t n) {
  Relation r(n, n);
  for (std::size_t x = 0; x < n; ++x) r.insert(x, x);
  return r;
}

Relation Relation::graph(const StateMap& f, std::size_t right_size) {
  Relation r(f.size(), right_size);
  for (std::size_t x = 0; x < f.size(); ++x) r.insert(x, f[x]);
  return r;
}

void Relation::insert(std::size_t x, std::size_t y) {
  if (x >= left_size() || y >= right_size_) throw InputError("relation pair out of range");
  rows_[x].set(y);
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.count();
  return n;
}

std::vector<Edge> Relation::pairs() const {
  std::vector<Edge> out;
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    for (std::size_t y : members(rows_[x])) out.emplace_back(x, y);
  }
  return out;
}

bool Relation::is_subset_of(const Relation& other) const {
  if (left_size() != other.left_size() || right_size_ != other.right_size_) return false;
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (!rows_[x].is_subset_of(other.rows_[x])) return false;
  }
  return true;
}

bool Relation::is_equivalence() const {
  if (left_size() != right_size_) return false;
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (!rows_[x].test(x)) return false;
    for (std::size_t y : members(rows_[x])) {
      if (!rows_[y].test(x) || !rows_[y].is_subset_of(rows_[x])) return false;
    }
  }
  return true;
}

Relation converse(const Relation& r) {
  Relation out(r.right_size(), r.left_size());
  for (auto [x, y] : r.pairs()) out.insert(y, x);
  return out;
}

Relation compose(const Relation& r1, const Relation& r2) {
  if (r1.right_size() != r2.left_size()) {
    throw InputError("cannot compose relations: endpoint sizes " +
                     std::to_string(r1.right_size()) + " and " +
                     std::to_string(r2.left_size()) + " differ");
  }
  Relation out(r1.left_size(), r2.right_size());
  for (std::size_t x = 0; x < r1.left_size(); ++x) {
    for (std::size_t y : members(r1.row(x))) {
      for (std::size_t z : members(r2.row(y))) out.insert(x, z);
    }
  }
  return out;
}

Relation kernel(const StateMap& f, std::size_t right_size) {
  Relation g = Relation::graph(f, right_size);
  return compose(g, converse(g));
}

// }}}

// {{{ Bisimulation

BisimulationCheck check_bisimulation(const KripkeModel& a, const KripkeModel& b,
                                     const Relation& r) {
  if (r.left_size() != a.size() || r.right_size() != b.size()) {
    throw InputError("relation endpoints do not match the models");
  }
  for (auto [x, y] : r.pairs()) {
    if (a.val(x) != b.val(y)) return {false, 1, Edge{x, y}, std::nullopt};
    for (std::size_t xs : members(a.successors(x))) {
      if (!r.row(xs).intersects(b.successors(y))) return {false, 2, Edge{x, y}, xs};
    }
    StateSet matched(b.size());
    for (std::size_t xs : members(a.successors(x))) matched |= r.row(xs);
    StateSet unmatched = b.successors(y) - matched;
    if (unmatched.any()) return {false, 3, Edge{x, y}, unmatched.find_first()};
  }
  return {};
}

bool is_bisimulation(const KripkeModel& a, const KripkeModel& b, const Relation& r) {
  return check_bisimulation(a, b, r).ok;
}

Relation largest_bisimulation(const KripkeModel& a, const KripkeModel& b) {
  Relation r(a.size(), b.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (a.val(x) == b.val(y)) r.insert(x, y);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < a.size(); ++x) {
      StateSet reach(b.size());
      for (std::size_t xs : members(a.successors(x))) reach |= r.row(xs);
      for (std::size_t y : members(r.row(x))) {
        bool forth = true;
        for (std::size_t xs : members(a.successors(x))) {
          if (!r.row(xs).intersects(b.successors(y))) {
            forth = false;
            break;
          }
        }
        const bool back = b.successors(y).is_subset_of(reach);
        if (!forth || !back) {
          r.erase(x, y);
          changed = true;
        }
      }
    }
  }
  return r;
}

BisimulationCheck check_homomorphism(const KripkeModel& a, const KripkeModel& b,
                                     const StateMap& f) {
  if (f.size() != a.size()) throw InputError("map is not total on the source model");
  for (std::size_t y : f) {
    if (y >= b.size()) throw InputError("map leaves the target model");
  }
  return check_bisimulation(a, b, Relation::graph(f, b.size()));
}

bool is_homomorphism(const KripkeModel& a, const KripkeModel& b, const StateMap& f) {
  return check_homomorphism(a, b, f).ok;
}

// }}}

// {{{ Partitions and quotients

Partition::Partition(std::vector<std::vector<std::size_t>> blocks) : blocks_(std::move(blocks)) {
  std::size_t n = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw InputError("partition block is empty");
    std::sort(block.begin(), block.end());
    n += block.size();
  }
  std::sort(blocks_.begin(), blocks_.end());
  block_of_.assign(n, n);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (std::size_t x : blocks_[b]) {
      if (x >= n || block_of_[x] != n) throw InputError("blocks do not partition the carrier");
      block_of_[x] = b;
    }
  }
}

Partition Partition::of_equivalence(const Relation& r) {
  if (!r.is_equivalence()) throw InputError("relation is not an equivalence");
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> placed(r.left_size(), false);
  for (std::size_t x = 0; x < r.left_size(); ++x) {
    if (placed[x]) continue;
    blocks.push_back(members(r.row(x)));
    for (std::size_t y : blocks.back()) placed[y] = true;
  }
  return Partition(std::move(blocks));
}

Partition Partition::of_map(const StateMap& f) {
  std::map<std::size_t, std::vector<std::size_t>> by_image;
  for (std::size_t x = 0; x < f.size(); ++x) by_image[f[x]].push_back(x);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [_, block] : by_image) blocks.push_back(std::move(block));
  return Partition(std::move(blocks));
}

StateSet Partition::block_set(std::size_t b) const {
  StateSet s(carrier_size());
  for (std::size_t x : blocks_.at(b)) s.set(x);
  return s;
}

Relation Partition::to_relation() const {
  Relation r(carrier_size(), carrier_size());
  for (const auto& block : blocks_) {
    for (std::size_t x : block) {
      for (std::size_t y : block) r.insert(x, y);
    }
  }
  return r;
}

Quotient quotient(const KripkeModel& m) {
  Partition p = Partition::of_equivalence(largest_bisimulation(m, m));
  std::vector<std::string> names;
  std::vector<AtomSet> val;
  for (const auto& block : p.blocks()) {
    names.push_back(m.name(block.front()));
    AtomSet v;
    for (std::size_t x : block) v.insert(m.val(x).begin(), m.val(x).end());
    val.push_back(std::move(v));
  }
  std::vector<Edge> edges;
  for (auto [x, y] : m.edges()) edges.emplace_back(p.block_of(x), p.block_of(y));
  StateMap projection(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) projection[x] = p.block_of(x);
  return {KripkeModel(std::move(names), m.atoms(), std::move(edges), std::move(val),
                      m.atom_order()),
          std::move(projection), std::move(p)};
}

bool check_saturation_finite(const KripkeModel& m) {
  // Every successor set is a finite bitset, so any cover of R(x) by a family
  // of formulas has a finite subcover: pick one member per successor.
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (m.successors(x).size() != m.size()) return false;
  }
  return true;
}

// }}}

}  // namespace vkt
