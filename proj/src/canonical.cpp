#include "vkt/canonical.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace vkt {

TypeId TypeStore::intern(BehaviorType t) {
  for (const auto& p : t.val) {
    if (!atoms_.contains(p)) throw InputError("type valuates atom '" + p + "' outside the fragment");
  }
  if (t.depth == 0 && !t.succs.empty()) throw InputError("depth-0 type with successors");
  std::sort(t.succs.begin(), t.succs.end());
  t.succs.erase(std::unique(t.succs.begin(), t.succs.end()), t.succs.end());
  for (TypeId s : t.succs) {
    if (s >= types_.size() || types_[s].depth + 1 != t.depth) {
      throw InputError("successor type has the wrong depth");
    }
  }
  auto key = std::make_tuple(t.depth, t.val, t.succs);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const auto id = static_cast<TypeId>(types_.size());
  types_.push_back(std::move(t));
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<std::uint64_t> level_size(std::size_t atom_count, std::size_t d, std::uint64_t cap) {
  if (atom_count >= 63) return std::nullopt;
  const std::uint64_t vals = std::uint64_t{1} << atom_count;
  std::uint64_t size = vals;
  if (size > cap) return std::nullopt;
  for (std::size_t k = 0; k < d; ++k) {
    // 2^size · vals
    if (size >= 63 - atom_count) return std::nullopt;
    size = (std::uint64_t{1} << size) * vals;
    if (size > cap) return std::nullopt;
  }
  return size;
}

namespace {

std::vector<AtomSet> all_valuations(const AtomSet& atoms) {
  std::vector<std::string> order(atoms.begin(), atoms.end());
  std::vector<AtomSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << order.size()); ++mask) {
    AtomSet v;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if ((mask >> i) & 1U) v.insert(order[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<TypeId> final_level(TypeStore& store, std::size_t d) {
  if (!level_size(store.atoms().size(), d)) {
    throw LimitError("level " + std::to_string(d) + " over " +
                     std::to_string(store.atoms().size()) + " atoms has more than " +
                     std::to_string(kMaxLevelSize) + " types");
  }
  const std::vector<AtomSet> vals = all_valuations(store.atoms());
  std::vector<TypeId> level;
  for (const auto& v : vals) level.push_back(store.intern({0, v, {}}));
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<TypeId> next;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << level.size()); ++mask) {
      std::vector<TypeId> succs;
      for (std::size_t i = 0; i < level.size(); ++i) {
        if ((mask >> i) & 1U) succs.push_back(level[i]);
      }
      for (const auto& v : vals) next.push_back(store.intern({k, v, succs}));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<TypeId> behavior_map(const KripkeModel& m, std::size_t d, TypeStore& store) {
  std::vector<AtomSet> local(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::set_intersection(m.val(x).begin(), m.val(x).end(), store.atoms().begin(),
                          store.atoms().end(), std::inserter(local[x], local[x].end()));
  }
  std::vector<TypeId> beh(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) beh[x] = store.intern({0, local[x], {}});
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<TypeId> next(m.size());
    for (std::size_t x = 0; x < m.size(); ++x) {
      std::vector<TypeId> succs;
      for (std::size_t y : members(m.successors(x))) succs.push_back(beh[y]);
      next[x] = store.intern({k, local[x], std::move(succs)});
    }
    beh = std::move(next);
  }
  return beh;
}

TypeId truncate(TypeStore& store, TypeId t) {
  const BehaviorType type = store[t];
  if (type.depth == 0) throw InputError("cannot truncate a depth-0 type");
  if (type.depth == 1) return store.intern({0, type.val, {}});
  std::vector<TypeId> succs;
  for (TypeId s : type.succs) succs.push_back(truncate(store, s));
  return store.intern({type.depth - 1, type.val, std::move(succs)});
}

namespace {

class TypeEvaluator {
 public:
  explicit TypeEvaluator(const TypeStore& store) : store_(store) {}

  bool run(TypeId t, const Formula& f) {
    auto key = std::make_pair(t, f.id());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool value = compute(t, f);
    memo_.emplace(key, value);
    return value;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<TypeId, const void*>& k) const noexcept {
      return std::hash<const void*>{}(k.second) * 31 + k.first;
    }
  };

  bool compute(TypeId t, const Formula& f) {
    const BehaviorType& type = store_[t];
    switch (f.op()) {
      case Op::Atom:
        if (!store_.atoms().contains(f.name())) {
          throw InputError("formula uses atom '" + f.name() + "' outside the fragment");
        }
        return type.val.contains(f.name());
      case Op::Top:
        return true;
      case Op::Bot:
        return false;
      case Op::Not:
        return !run(t, f.lhs());
      case Op::And:
        return run(t, f.lhs()) && run(t, f.rhs());
      case Op::Or:
        return run(t, f.lhs()) || run(t, f.rhs());
      case Op::Box:
      case Op::Diamond: {
        if (type.depth == 0) throw InputError("formula is deeper than the type");
        const bool box = f.op() == Op::Box;
        for (TypeId s : type.succs) {
          if (run(s, f.lhs()) != box) return !box;
        }
        return box;
      }
    }
    throw Error("unreachable formula kind");
  }

  const TypeStore& store_;
  std::unordered_map<std::pair<TypeId, const void*>, bool, KeyHash> memo_;
};

}  // namespace

bool type_satisfies(const TypeStore& store, TypeId t, const Formula& f) {
  if (modal_depth(f) > store[t].depth) {
    throw InputError("formula of depth " + std::to_string(modal_depth(f)) +
                     " exceeds type depth " + std::to_string(store[t].depth));
  }
  return TypeEvaluator(store).run(t, f);
}

namespace {

Formula characteristic(const TypeStore& store, TypeId t, std::unordered_map<TypeId, Formula>& memo) {
  if (auto it = memo.find(t); it != memo.end()) return it->second;
  const BehaviorType& type = store[t];
  std::vector<Formula> parts;
  for (const auto& p : store.atoms()) {
    Formula a = Formula::atom(p);
    parts.push_back(type.val.contains(p) ? a : Formula::negation(a));
  }
  if (type.depth > 0) {
    std::vector<Formula> succs;
    for (TypeId s : type.succs) succs.push_back(characteristic(store, s, memo));
    for (const auto& chi : succs) parts.push_back(Formula::diamond(chi));
    parts.push_back(Formula::box(disjunction(succs)));
  }
  Formula out = conjunction(parts);
  memo.emplace(t, out);
  return out;
}

}  // namespace

Formula characteristic_formula(const TypeStore& store, TypeId t) {
  std::unordered_map<TypeId, Formula> memo;
  return characteristic(store, t, memo);
}

std::string type_to_string(const TypeStore& store, TypeId t) {
  const BehaviorType& type = store[t];
  std::string val = "{";
  for (const auto& p : type.val) val += (val.size() > 1 ? "," : "") + p;
  val += "}";
  if (type.depth == 0) return val;
  std::vector<std::string> succs;
  for (TypeId s : type.succs) succs.push_back(type_to_string(store, s));
  std::sort(succs.begin(), succs.end());
  std::string out = "(" + val + "; {";
  for (std::size_t i = 0; i < succs.size(); ++i) out += (i ? ", " : "") + succs[i];
  return out + "})";
}

Partition behavior_kernel(const std::vector<TypeId>& beh) {
  return Partition::of_map(StateMap(beh.begin(), beh.end()));
}

StableKernel stabilized_kernel(const KripkeModel& m, TypeStore& store) {
  Partition prev = behavior_kernel(behavior_map(m, 0, store));
  for (std::size_t d = 0;; ++d) {
    Partition next = behavior_kernel(behavior_map(m, d + 1, store));
    if (next == prev) return {d, std::move(prev)};
    prev = std::move(next);
  }
}

Report terminal_uniqueness_check(const KripkeModel& m, std::size_t d) {
  TypeStore store(m.atoms());
  std::vector<std::vector<TypeId>> beh;
  for (std::size_t k = 0; k <= d; ++k) beh.push_back(behavior_map(m, k, store));

  Report report{"terminal-uniqueness", true, {}, {}};

  Clause hom{"homomorphism", true, std::nullopt};
  Clause projection{"projection", true, std::nullopt};
  for (std::size_t k = 0; k < d && hom.pass; ++k) {
    for (std::size_t x = 0; x < m.size(); ++x) {
      std::set<TypeId> image;
      for (std::size_t y : members(m.successors(x))) image.insert(beh[k][y]);
      const auto& succs = store[beh[k + 1][x]].succs;
      if (std::set<TypeId>(succs.begin(), succs.end()) != image) {
        hom = {hom.name, false,
               Witness{{}, {}, {}, {}, x,
                       "successor types at depth " + std::to_string(k + 1) +
                           " differ from the types of R(x)"}};
        break;
      }
    }
  }
  for (std::size_t k = 0; k < d && projection.pass; ++k) {
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (truncate(store, beh[k + 1][x]) != beh[k][x]) {
        projection = {projection.name, false,
                      Witness{{}, {}, {}, {}, x,
                              "truncating the depth-" + std::to_string(k + 1) +
                                  " type does not give the depth-" + std::to_string(k) + " type"}};
        break;
      }
    }
  }
  report.clauses.push_back(std::move(hom));
  report.clauses.push_back(std::move(projection));

  std::vector<std::size_t> reps;  // one state per realized type
  {
    std::set<TypeId> seen;
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (seen.insert(beh[d][x]).second) reps.push_back(x);
    }
  }
  Clause separation{"separation", true, std::nullopt};
  Clause characteristic_clause{"characteristic", true, std::nullopt};
  for (std::size_t x : reps) {
    const TypeId t = beh[d][x];
    const Formula chi = characteristic_formula(store, t);
    if (separation.pass) {
      for (std::size_t y : reps) {
        if (type_satisfies(store, beh[d][y], chi) != (y == x)) {
          separation = {separation.name, false,
                        Witness{{}, {}, {}, Edge{x, y}, {},
                                "characteristic formula of x does not separate x from y"}};
          break;
        }
      }
    }
    if (characteristic_clause.pass) {
      StateSet expected = m.empty_set();
      for (std::size_t y = 0; y < m.size(); ++y) {
        if (beh[d][y] == t) expected.set(y);
      }
      StateSet actual = eval(m, chi);
      if (actual != expected) {
        characteristic_clause = {characteristic_clause.name, false,
                                 Witness{expected, actual, {}, {}, x,
                                         "extent of the characteristic formula is not the type's "
                                         "preimage"}};
      }
    }
  }
  report.clauses.push_back(std::move(separation));
  report.clauses.push_back(std::move(characteristic_clause));
  return report;
}

}  // namespace vkt
