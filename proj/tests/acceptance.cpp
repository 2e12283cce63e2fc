// Acceptance suite: one PASS/FAIL line per criterion, each with its instance
// count and wall time. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vkt/canonical.hpp"
#include "vkt/ladder.hpp"
#include "vkt/random.hpp"
#include "vkt/topology.hpp"
#include "vkt/vietoris.hpp"

using namespace vkt;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t instances = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int run(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && limit_seconds > 0 && seconds >= limit_seconds) {
    o.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  std::printf("%s %2d %-32s instances=%zu time=%.2fs%s%s\n", o.ok ? "PASS" : "FAIL", number, title,
              o.instances, seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
  return o.ok ? 0 : 1;
}

const std::vector<std::string> kAtoms{"p", "q"};

Outcome nnf_invariance() {
  Outcome o;
  Rng rng(101);
  for (int i = 0; i < 10000; ++i) {
    KripkeModel m = random_model(rng, 1, 8, {"p", "q"});
    Formula f = random_formula(rng, kAtoms, 6, 24);
    if (eval(m, f) != eval(m, to_nnf(f))) o.fail("extent changes for " + to_string(f));
    ++o.instances;
  }
  return o;
}

Outcome bisimulation_oracle() {
  Outcome o;
  auto compare = [&](const KripkeModel& a, const KripkeModel& b) {
    if (largest_bisimulation(a, b) != oracle::brute_force_bisimulation(a, b)) {
      o.fail("mismatch on models of size " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    ++o.instances;
  };
  for (const std::vector<std::string>& atoms : {std::vector<std::string>{}, std::vector<std::string>{"p"}}) {
    std::vector<KripkeModel> small;  // at most two states
    for (std::size_t n = 0; n <= 2; ++n) {
      oracle::for_each_model(n, atoms, [&](const KripkeModel& m) { small.push_back(m); });
    }
    for (const auto& a : small) {
      for (const auto& b : small) compare(a, b);
    }
    oracle::for_each_model(3, atoms, [&](const KripkeModel& m) {
      compare(m, m);
      for (const auto& b : small) {
        if (b.size() == 1) compare(m, b);
      }
    });
  }
  Rng rng(102);
  for (int i = 0; i < 1000; ++i) {
    compare(random_model(rng, 4, 4, {"p"}), random_model(rng, 4, 4, {"p"}));
  }
  return o;
}

Outcome hennessy_milner() {
  Outcome o;
  Rng rng(103);
  for (int i = 0; i < 1000; ++i) {
    KripkeModel a = random_model(rng, 1, 6, {"p"});
    KripkeModel b = random_model(rng, 1, 6, {"p"});
    KripkeModel u = disjoint_union(a, b);
    TypeStore store(u.atoms());
    StableKernel k = stabilized_kernel(u, store);
    Relation bisim = largest_bisimulation(a, b);
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        const bool same = k.partition.block_of(x) == k.partition.block_of(a.size() + y);
        if (same != bisim.contains(x, y)) o.fail("kernel and bisimilarity differ");
      }
    }
    ++o.instances;
  }
  return o;
}

Outcome topology_continuity() {
  Outcome o;
  Rng rng(104);
  std::size_t failing = 0;
  for (int i = 0; i < 1000; ++i) {
    TopologicalModel tm = i % 2 ? random_topological_model(rng, 6, {"p"})
                                : random_model_with_topology(rng, 6, {"p"});
    Report a = check_topological_model(tm);
    Report b = structure_map_continuous(tm);
    if (a.clauses.size() != b.clauses.size()) o.fail("clause lists differ");
    for (std::size_t c = 0; c < a.clauses.size() && c < b.clauses.size(); ++c) {
      if (a.clauses[c].name != b.clauses[c].name || a.clauses[c].pass != b.clauses[c].pass) {
        o.fail("clause " + a.clauses[c].name + " disagrees");
      }
    }
    failing += !a.pass();
    ++o.instances;
  }
  if (failing == 0 || failing == o.instances) o.fail("instances are not mixed");
  o.detail += o.ok ? "failing=" + std::to_string(failing) : "";
  return o;
}

Outcome characterization() {
  Outcome o;
  Rng rng(105);
  for (int i = 0; i < 1000; ++i) {
    KripkeModel m = random_model(rng, 1, 8, {"p", "q"});
    if (!check_topological_model(formula_topology(m)).pass()) o.fail("formula topology fails the checker");
    ++o.instances;
  }
  return o;
}

Outcome closure_theorems() {
  Outcome o;
  Rng rng(106);
  std::size_t subs = 0, bisims = 0;
  while (subs < 1000 || bisims < 1000) {
    TopologicalModel a = random_topological_model(rng, 7, {"p"});
    if (!check_topological_model(a).pass()) continue;
    StateSet u = random_substructure(rng, a.model);
    Report rs = closed_subcoalgebra_check(a, u);
    const StateSet cu = closure(a.topology, u);
    if (!rs.pass() || !is_substructure(a.model, cu) ||
        oracle::to_mask(cu) != oracle::closure(oracle::open_masks(a.topology), a.model.size(), oracle::to_mask(u))) {
      o.fail("closure of a substructure");
    }
    ++subs;

    TopologicalModel b = random_topological_model(rng, 5, {"p"});
    std::vector<Relation> relations{largest_bisimulation(a.model, b.model)};
    // Smaller bisimulations: the identity and the graph of the quotient map.
    Quotient q = quotient(a.model);
    TopologicalModel qa{q.model, formula_topology(q.model).topology};
    for (const Relation& s : relations) {
      Report rb = closed_bisimulation_check(a, b, s);
      Relation cs = oracle::product_closure(a.topology, b.topology, s);
      if (!rb.pass() || !is_bisimulation(a.model, b.model, cs)) o.fail("closure of a bisimulation");
      ++bisims;
    }
    Report ri = closed_bisimulation_check(a, a, Relation::identity(a.model.size()));
    Report rq = closed_bisimulation_check(a, qa, Relation::graph(q.projection, q.model.size()));
    if (!ri.pass() || !rq.pass()) o.fail("closure of a bisimulation");
    bisims += 2;
  }
  o.instances = subs + bisims;
  o.detail = o.ok ? "substructures=" + std::to_string(subs) + " bisimulations=" + std::to_string(bisims) : o.detail;
  return o;
}

Outcome truth_lemma() {
  Outcome o;
  Rng rng(107);
  while (o.instances < 10000) {
    KripkeModel m = random_model(rng, 1, 6, {"p", "q"});
    const std::size_t d = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    TypeStore store(m.atoms());
    auto beh = behavior_map(m, d, store);
    for (int k = 0; k < 4; ++k) {
      Formula f = random_formula(rng, kAtoms, d, 16);
      const StateSet ext = oracle::extent(m, f);
      for (std::size_t x = 0; x < m.size(); ++x) {
        if (type_satisfies(store, beh[x], f) != ext.test(x)) o.fail("truth lemma fails for " + to_string(f));
        ++o.instances;
      }
    }
  }
  return o;
}

Outcome final_levels() {
  Outcome o;
  auto expect = [&](const AtomSet& atoms, std::size_t d, std::size_t size) {
    TypeStore store(atoms);
    const std::size_t got = final_level(store, d).size();
    if (got != size) o.fail("|Z_" + std::to_string(d) + "| = " + std::to_string(got));
    ++o.instances;
  };
  expect({"p"}, 0, 2);
  expect({"p"}, 1, 8);
  expect({}, 1, 2);
  expect({}, 2, 4);
  // recurrence |Z_{d+1}| = 2^{|Z_d|} * 2^{|atoms|}, as far as it stays enumerable
  for (std::size_t atoms = 0; atoms <= 2; ++atoms) {
    std::uint64_t z = std::uint64_t{1} << atoms;
    for (std::size_t d = 0; z <= kMaxLevelSize; ++d) {
      AtomSet a;
      for (std::size_t i = 0; i < atoms; ++i) a.insert(std::string(1, char('p' + i)));
      expect(a, d, z);
      if (z >= 20) break;
      z = (std::uint64_t{1} << z) << atoms;
    }
  }
  return o;
}

Outcome example_one() {
  Outcome o;
  for (std::size_t j = 0; j <= 12; ++j) {
    LadderValue v = ladder_eval(Ladder::Chain, box_power(j, Formula::bot()));
    KripkeModel m = ladder_truncation(Ladder::Chain, 12);
    const StateSet ext = oracle::extent(m, box_power(j, Formula::bot()));
    for (std::size_t i = 0; i <= 10; ++i) {
      if (v.at(i) != (j >= i + 1) || ext.test(i + 1) != (j >= i + 1)) {
        o.fail("s" + std::to_string(i) + " and box^" + std::to_string(j) + " false");
      }
      ++o.instances;
    }
  }
  NonsaturationReport r = nonsaturation_witness_chain(8);
  if (!r.not_saturated() || !r.full_family_covers) o.fail("chain reported saturated");
  std::set<std::vector<std::size_t>> seen;
  KripkeModel m = ladder_truncation(Ladder::Chain, 10);
  for (const auto& w : r.witnesses) {
    std::vector<Formula> members;
    for (std::size_t i : w.subfamily) members.push_back(ladder_member(i));
    if (w.state > 10 || oracle::sat(m, w.state + 1, disjunction(members))) o.fail("witness does not falsify");
    seen.insert(w.subfamily);
    ++o.instances;
  }
  if (seen.size() != 512) o.fail("expected a witness for all 512 subfamilies");
  return o;
}

Outcome example_two() {
  Outcome o;
  Rng rng(110);
  for (int i = 0; i < 10000; ++i) {
    Formula f = random_formula(rng, {}, 8, 24);
    const bool at = *ladder_eval(Ladder::Extended, f).at_inf;
    if (*ladder_eval(Ladder::Extended, Formula::box(f)).at_inf != at ||
        *ladder_eval(Ladder::Extended, Formula::diamond(f)).at_inf != at) {
      o.fail("collapse fails for " + to_string(f));
    }
    ++o.instances;
  }
  std::size_t covering = 0;
  for (int i = 0; i < 2000; ++i) {
    std::vector<Formula> family;
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    for (std::size_t j = 0; j < k; ++j) family.push_back(random_formula(rng, {}, 5, 12));
    const bool parametric = i % 2 == 0;
    SaturationReport r = saturation_check_extended(family, parametric);

    std::size_t n = 2;
    for (const auto& f : family) n = std::max(n, ladder_eval(Ladder::Extended, f).prefix.size() + 2);
    KripkeModel m = ladder_truncation(Ladder::Extended, n);
    const Formula any = disjunction(family);
    bool covers = oracle::sat(m, n + 2, any);
    if (!parametric) {
      for (std::size_t s = 0; s <= n; ++s) covers = covers && oracle::sat(m, s + 1, any);
    }
    if (r.holds != covers) o.fail("wrong verdict");
    if (r.holds) {
      ++covering;
      std::vector<Formula> chosen;
      std::size_t deepest = 0;
      for (const auto& member : r.subfamily) {
        if (member.parametric) {
          chosen.push_back(ladder_member(member.index));
          deepest = std::max(deepest, member.index + 1);
        } else {
          chosen.push_back(family.at(member.index));
        }
      }
      KripkeModel wide = ladder_truncation(Ladder::Extended, std::max(n, deepest + 2));
      if (!oracle::sat(wide, 0, Formula::box(disjunction(chosen)))) o.fail("subfamily does not cover");
    }
    ++o.instances;
  }
  if (covering == 0) o.fail("no covering family was drawn");
  return o;
}

Outcome quotient_correctness() {
  Outcome o;
  Rng rng(111);
  for (int i = 0; i < 1000; ++i) {
    KripkeModel m = random_model(rng, 1, 8, {"p", "q"});
    Quotient q = quotient(m);
    if (!is_homomorphism(m, q.model, q.projection)) o.fail("projection is not a homomorphism");
    if (largest_bisimulation(q.model, q.model) != Relation::identity(q.model.size())) o.fail("quotient not simple");
    ++o.instances;
  }
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "nnf-semantic-invariance", 5, nnf_invariance);
  failures += run(2, "bisimulation-oracle", 30, bisimulation_oracle);
  failures += run(3, "hennessy-milner", 30, hennessy_milner);
  failures += run(4, "topological-model-continuity", 30, topology_continuity);
  failures += run(5, "formula-topology-characterization", 10, characterization);
  failures += run(6, "closure-theorems", 60, closure_theorems);
  failures += run(7, "bounded-truth-lemma", 30, truth_lemma);
  failures += run(8, "final-level-cardinalities", 0, final_levels);
  failures += run(9, "chain-example", 5, example_one);
  failures += run(10, "extended-example", 10, example_two);
  failures += run(11, "quotient-correctness", 10, quotient_correctness);
  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
