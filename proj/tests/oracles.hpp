#pragma once

// Slow, independent reference implementations used to cross-check the
// library. Everything here works on small bitmasks and recomputes from the
// definitions; nothing calls the library routine it is meant to check.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "vkt/formula.hpp"
#include "vkt/kripke.hpp"
#include "vkt/topology.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline Mask to_mask(const vkt::StateSet& s) {
  Mask m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.test(i)) m |= Mask{1} << i;
  }
  return m;
}

inline vkt::StateSet from_mask(Mask m, std::size_t n) {
  vkt::StateSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((m >> i) & 1U) s.set(i);
  }
  return s;
}

inline Mask successor_mask(const vkt::KripkeModel& m, std::size_t x) {
  Mask out = 0;
  for (const auto& [a, b] : m.edges()) {
    if (a == x) out |= Mask{1} << b;
  }
  return out;
}

// Plain recursive satisfaction, no memoization.
inline bool sat(const vkt::KripkeModel& m, std::size_t x, const vkt::Formula& f) {
  using vkt::Op;
  switch (f.op()) {
    case Op::Atom: return m.val(x).contains(f.name());
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Not: return !sat(m, x, f.lhs());
    case Op::And: return sat(m, x, f.lhs()) && sat(m, x, f.rhs());
    case Op::Or: return sat(m, x, f.lhs()) || sat(m, x, f.rhs());
    case Op::Box:
      for (const auto& [a, b] : m.edges()) {
        if (a == x && !sat(m, b, f.lhs())) return false;
      }
      return true;
    case Op::Diamond:
      for (const auto& [a, b] : m.edges()) {
        if (a == x && sat(m, b, f.lhs())) return true;
      }
      return false;
  }
  return false;
}

inline vkt::StateSet extent(const vkt::KripkeModel& m, const vkt::Formula& f) {
  vkt::StateSet s(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) s[x] = sat(m, x, f);
  return s;
}

// Union of every bisimulation between a and b, found by enumerating all
// relations inside the valuation-compatible pairs. Sizes up to 4 x 4.
inline vkt::Relation brute_force_bisimulation(const vkt::KripkeModel& a, const vkt::KripkeModel& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  std::vector<Mask> sa(n), sb(k);
  for (std::size_t x = 0; x < n; ++x) sa[x] = successor_mask(a, x);
  for (std::size_t y = 0; y < k; ++y) sb[y] = successor_mask(b, y);
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (a.val(x) == b.val(y)) candidates.emplace_back(x, y);
    }
  }
  std::vector<Mask> best(n, 0);
  std::vector<Mask> rows(n);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << candidates.size()); ++pick) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if ((pick >> i) & 1U) rows[candidates[i].first] |= Mask{1} << candidates[i].second;
    }
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < k && ok; ++y) {
        if (!((rows[x] >> y) & 1U)) continue;
        for (std::size_t x2 = 0; x2 < n && ok; ++x2) {
          if (((sa[x] >> x2) & 1U) && (rows[x2] & sb[y]) == 0) ok = false;
        }
        for (std::size_t y2 = 0; y2 < k && ok; ++y2) {
          if (!((sb[y] >> y2) & 1U)) continue;
          bool found = false;
          for (std::size_t x2 = 0; x2 < n; ++x2) {
            if (((sa[x] >> x2) & 1U) && ((rows[x2] >> y2) & 1U)) found = true;
          }
          ok = found;
        }
      }
    }
    if (ok) {
      for (std::size_t x = 0; x < n; ++x) best[x] |= rows[x];
    }
  }
  vkt::Relation out(n, k);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if ((best[x] >> y) & 1U) out.insert(x, y);
    }
  }
  return out;
}

// Calls fn on every model with n states over the given atoms.
inline void for_each_model(std::size_t n, const std::vector<std::string>& atoms,
                           const std::function<void(const vkt::KripkeModel&)>& fn) {
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) names.push_back("x" + std::to_string(x));
  const std::size_t edge_bits = n * n;
  const std::size_t val_bits = n * atoms.size();
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << edge_bits); ++e) {
    std::vector<vkt::Edge> edges;
    for (std::size_t i = 0; i < edge_bits; ++i) {
      if ((e >> i) & 1U) edges.emplace_back(i / n, i % n);
    }
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << val_bits); ++v) {
      std::vector<vkt::AtomSet> val(n);
      for (std::size_t i = 0; i < val_bits; ++i) {
        if ((v >> i) & 1U) val[i / atoms.size()].insert(atoms[i % atoms.size()]);
      }
      fn(vkt::KripkeModel(names, vkt::AtomSet(atoms.begin(), atoms.end()), edges, val));
    }
  }
}

// Smallest family containing the subbase, the empty set and the carrier,
// closed under pairwise union and intersection.
inline std::set<Mask> literal_generate(std::size_t n, const std::vector<Mask>& subbase) {
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::set<Mask> family(subbase.begin(), subbase.end());
  family.insert(0);
  family.insert(full);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> now(family.begin(), family.end());
    for (Mask u : now) {
      for (Mask v : now) {
        grew |= family.insert(u | v).second;
        grew |= family.insert(u & v).second;
      }
    }
  }
  return family;
}

inline std::set<Mask> open_masks(const vkt::FiniteTopology& t) {
  std::set<Mask> out;
  for (const auto& o : t.opens()) out.insert(to_mask(o));
  return out;
}

// x is in the closure of A iff every open set containing x meets A.
inline Mask closure(const std::set<Mask>& opens, std::size_t n, Mask a) {
  Mask out = 0;
  for (std::size_t x = 0; x < n; ++x) {
    bool adherent = true;
    for (Mask o : opens) {
      if (((o >> x) & 1U) && (o & a) == 0) adherent = false;
    }
    if (adherent) out |= Mask{1} << x;
  }
  return out;
}

// (x, y) is in the closure of S iff every open box O x P around it meets S.
inline vkt::Relation product_closure(const vkt::FiniteTopology& ta, const vkt::FiniteTopology& tb,
                                     const vkt::Relation& s) {
  vkt::Relation out(ta.carrier_size(), tb.carrier_size());
  const auto oa = open_masks(ta);
  const auto ob = open_masks(tb);
  for (std::size_t x = 0; x < ta.carrier_size(); ++x) {
    for (std::size_t y = 0; y < tb.carrier_size(); ++y) {
      bool adherent = true;
      for (Mask o : oa) {
        if (!((o >> x) & 1U)) continue;
        for (Mask p : ob) {
          if (!((p >> y) & 1U)) continue;
          bool meets = false;
          for (auto [u, w] : s.pairs()) {
            if (((o >> u) & 1U) && ((p >> w) & 1U)) meets = true;
          }
          if (!meets) adherent = false;
        }
      }
      if (adherent) out.insert(x, y);
    }
  }
  return out;
}

}  // namespace oracle
