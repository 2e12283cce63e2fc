#include "vkt/selftest.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <thread>

#include "vkt/canonical.hpp"
#include "vkt/ladder.hpp"
#include "vkt/random.hpp"
#include "vkt/vietoris.hpp"

namespace vkt {

namespace {

const std::vector<std::string> kTwoAtoms{"p", "q"};
const AtomSet kTwoAtomSet{"p", "q"};

// Returns an empty string when the instance passes.
using Instance = std::function<std::string(Rng&)>;

std::string nnf_instance(Rng& rng) {
  KripkeModel m = random_model(rng, 1, 8, kTwoAtomSet);
  Formula f = random_formula(rng, kTwoAtoms, 6, 24);
  Formula g = to_nnf(f);
  if (eval(m, f) != eval(m, g)) return "nnf changes the extent of " + to_string(f);
  if (modal_depth(f) != modal_depth(g)) return "nnf changes the depth of " + to_string(f);
  if (!(parse(to_string(f)) == f)) return "print/parse round trip fails for " + to_string(f);
  return {};
}

std::string bisimulation_instance(Rng& rng) {
  KripkeModel m = random_model(rng, 1, 6, {"p"});
  Relation r = largest_bisimulation(m, m);
  if (!r.is_equivalence()) return "largest auto-bisimulation is not an equivalence";
  if (!is_bisimulation(m, m, converse(r))) return "converse of a bisimulation fails";
  if (!is_bisimulation(m, m, compose(r, r))) return "composite of bisimulations fails";
  Formula f = random_formula(rng, {"p"}, 6, 20);
  StateSet extent = eval(m, f);
  for (auto [x, y] : r.pairs()) {
    if (extent.test(x) != extent.test(y)) return "bisimilar states disagree on " + to_string(f);
  }
  return {};
}

std::string hennessy_milner_instance(Rng& rng) {
  KripkeModel a = random_model(rng, 1, 6, {"p"});
  KripkeModel b = random_model(rng, 1, 6, {"p"});
  Relation bisim = largest_bisimulation(a, b);
  TypeStore store({"p"});
  const std::size_t d = a.size() + b.size();
  auto ta = behavior_map(a, d, store);
  auto tb = behavior_map(b, d, store);
  Relation same(a.size(), b.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (ta[x] == tb[y]) same.insert(x, y);
    }
  }
  return bisim == same ? std::string{} : "bisimilarity differs from behavioral equivalence";
}

std::string quotient_instance(Rng& rng) {
  KripkeModel m = random_model(rng, 1, 8, {"p"});
  Quotient q = quotient(m);
  if (!is_homomorphism(m, q.model, q.projection)) return "projection is not a homomorphism";
  if (!(largest_bisimulation(q.model, q.model) == Relation::identity(q.model.size()))) {
    return "quotient is not simple";
  }
  if (!(kernel(q.projection, q.model.size()) == largest_bisimulation(m, m))) {
    return "kernel of the projection differs from bisimilarity";
  }
  return {};
}

std::string continuity_instance(Rng& rng) {
  TopologicalModel tm = std::bernoulli_distribution(0.5)(rng)
                            ? random_model_with_topology(rng, 6, {"p"})
                            : random_topological_model(rng, 6, {"p"});
  Report def = check_topological_model(tm);
  Report cont = structure_map_continuous(tm);
  for (std::size_t i = 0; i < def.clauses.size(); ++i) {
    if (def.clauses[i].pass != cont.clauses[i].pass) return "clause " + def.clauses[i].name + " disagrees";
  }
  return {};
}

std::string characterization_instance(Rng& rng) {
  KripkeModel m = random_model(rng, 1, 8, kTwoAtomSet);
  Report r = check_topological_model(formula_topology(m));
  return r.pass() ? std::string{} : "formula topology fails " + r.first_failure()->name;
}

std::string closure_sub_instance(Rng& rng) {
  TopologicalModel tm = random_topological_model(rng, 7, {"p"});
  StateSet u = random_substructure(rng, tm.model);
  Report r = closed_subcoalgebra_check(tm, u);
  return r.pass() ? std::string{} : "closure of a substructure is not successor closed";
}

std::string closure_bisim_instance(Rng& rng) {
  TopologicalModel a = random_topological_model(rng, 5, {"p"});
  TopologicalModel b = random_topological_model(rng, 5, {"p"});
  Relation s = largest_bisimulation(a.model, b.model);
  Report r = closed_bisimulation_check(a, b, s);
  return r.pass() ? std::string{} : "closure of a bisimulation is not a bisimulation";
}

std::string truth_lemma_instance(Rng& rng) {
  KripkeModel m = random_model(rng, 1, 6, kTwoAtomSet);
  const std::size_t d = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  Formula f = random_formula(rng, kTwoAtoms, d, 16);
  TypeStore store(kTwoAtomSet);
  auto beh = behavior_map(m, d, store);
  StateSet extent = eval(m, f);
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (extent.test(x) != type_satisfies(store, beh[x], f)) return "truth lemma fails for " + to_string(f);
  }
  return {};
}

std::string terminal_instance(Rng& rng) {
  KripkeModel m = random_model(rng, 1, 5, {"p"});
  const std::size_t d = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  Report r = terminal_uniqueness_check(m, d);
  return r.pass() ? std::string{} : "terminal check fails " + r.first_failure()->name;
}

std::string ladder_instance(Rng& rng) {
  Formula f = random_formula(rng, {}, 8, 24);
  LadderValue v = ladder_eval(Ladder::Extended, f);
  const bool inf = *v.at_inf;
  if (*ladder_eval(Ladder::Extended, Formula::box(f)).at_inf != inf ||
      *ladder_eval(Ladder::Extended, Formula::diamond(f)).at_inf != inf) {
    return "modal collapse at s_inf fails for " + to_string(f);
  }
  if (inf && !v.tail) return "true at s_inf but not eventually true: " + to_string(f);
  if (!(ladder_eval(Ladder::Chain, f).prefix == v.prefix)) return "chain and extension disagree";
  // Finite truncations agree at every s_i and at s_inf.
  const std::size_t n = v.prefix.size() + 2;
  KripkeModel m = ladder_truncation(Ladder::Extended, n);
  StateSet extent = eval(m, f);
  for (std::size_t i = 0; i <= n; ++i) {
    if (extent.test(i + 1) != v.at(i)) return "truncation disagrees at s" + std::to_string(i);
  }
  if (extent.test(n + 2) != inf) return "truncation disagrees at s_inf";
  return {};
}

std::string saturation_instance(Rng& rng) {
  std::vector<Formula> family;
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  for (std::size_t i = 0; i < k; ++i) family.push_back(random_formula(rng, {}, 5, 12));
  const bool parametric = std::bernoulli_distribution(0.5)(rng);
  SaturationReport r = saturation_check_extended(family, parametric);
  // Ground truth on a long truncation: every successor of s needs a member.
  const LadderValue any = ladder_eval(Ladder::Extended, disjunction(family));
  bool expected = *any.at_inf;
  if (!parametric) expected = expected && any.tail && std::all_of(any.prefix.begin(), any.prefix.end(), [](bool b) { return b; });
  if (r.holds != expected) return "saturation verdict is wrong";
  if (r.holds && !covers_extended(family, r.subfamily)) return "extracted subfamily does not cover";
  return {};
}

const std::vector<std::pair<std::string, Instance>>& suites() {
  static const std::vector<std::pair<std::string, Instance>> all{
      {"nnf", nnf_instance},
      {"bisimulation", bisimulation_instance},
      {"hennessy-milner", hennessy_milner_instance},
      {"quotient", quotient_instance},
      {"topology-continuity", continuity_instance},
      {"characterization", characterization_instance},
      {"closure-subcoalgebra", closure_sub_instance},
      {"closure-bisimulation", closure_bisim_instance},
      {"truth-lemma", truth_lemma_instance},
      {"terminal", terminal_instance},
      {"ladder", ladder_instance},
      {"saturation", saturation_instance},
  };
  return all;
}

}  // namespace

std::vector<std::string> selftest_suites() {
  std::vector<std::string> names;
  for (const auto& [name, _] : suites()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t count) {
  const auto& all = suites();
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& s) { return s.first == name; });
  if (it == all.end()) throw InputError("unknown selftest suite '" + name + "'");
  const auto position = static_cast<std::uint64_t>(it - all.begin());
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + position);
  SuiteResult result{name, 0, 0, {}};
  for (std::size_t i = 0; i < count; ++i) {
    std::string failure;
    try {
      failure = it->second(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++result.instances;
    if (!failure.empty()) {
      if (result.failures == 0) result.first_failure = "instance " + std::to_string(i) + ": " + failure;
      ++result.failures;
    }
  }
  return result;
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed, std::size_t count, unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const auto names = selftest_suites();
  std::vector<SuiteResult> results(names.size());
  for (std::size_t start = 0; start < names.size(); start += threads) {
    std::vector<std::future<SuiteResult>> batch;
    for (std::size_t i = start; i < std::min(names.size(), start + threads); ++i) {
      batch.push_back(std::async(std::launch::async, run_suite, names[i], seed, count));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }
  return results;
}

}  // namespace vkt
