#include <doctest.h>

#include "oracles.hpp"
#include "vkt/error.hpp"
#include "vkt/random.hpp"
#include "vkt/topology.hpp"

using namespace vkt;

namespace {

std::set<oracle::Mask> masks(const FiniteTopology& t) { return oracle::open_masks(t); }

}  // namespace

TEST_CASE("generate on the documented examples") {
  std::vector<StateSet> subbase{make_set(3, {0}), make_set(3, {0, 1})};
  FiniteTopology t = generate(3, subbase);
  CHECK(masks(t) == std::set<oracle::Mask>{0b000, 0b001, 0b011, 0b111});
  CHECK(generate(3, std::vector<StateSet>{}) == FiniteTopology::indiscrete(3));
  std::vector<StateSet> singles{make_set(3, {0}), make_set(3, {1}), make_set(3, {2})};
  CHECK(generate(3, singles) == FiniteTopology::discrete(3));
}

TEST_CASE("from_opens rejects families that are not topologies") {
  CHECK_THROWS_AS(FiniteTopology::from_opens(2, {make_set(2, {0}), make_set(2, {1})}), InputError);
  CHECK_NOTHROW(FiniteTopology::from_opens(2, {StateSet(2), make_set(2, {0, 1})}));
}

TEST_CASE("closure on the documented examples") {
  std::vector<StateSet> subbase{make_set(3, {0}), make_set(3, {0, 1})};
  FiniteTopology t = generate(3, subbase);
  CHECK(closure(t, make_set(3, {0})) == make_set(3, {0, 1, 2}));
  CHECK(closure(t, make_set(3, {2})) == make_set(3, {2}));
  CHECK(closure(t, StateSet(3)).none());
  FiniteTopology d = FiniteTopology::discrete(3);
  for (oracle::Mask a = 0; a < 8; ++a) CHECK(closure(d, oracle::from_mask(a, 3)) == oracle::from_mask(a, 3));
}

TEST_CASE("formula topology examples") {
  KripkeModel same({"a", "b"}, {}, {{0, 1}, {1, 0}}, {{}, {}});
  CHECK(formula_topology(same).topology == FiniteTopology::indiscrete(2));
  KripkeModel tree({"a", "b", "c"}, {"p"}, {{0, 1}, {0, 2}}, {{}, {"p"}, {}});
  CHECK(formula_topology(tree).topology == FiniteTopology::discrete(3));
}

TEST_CASE("topological model checker") {
  KripkeModel m({"a", "b"}, {"p"}, {{0, 1}}, {{}, {"p"}});
  CHECK(check_topological_model({m, FiniteTopology::discrete(2)}).pass());
  Report r = check_topological_model({m, FiniteTopology::indiscrete(2)});
  CHECK_FALSE(r.pass());
  const Clause* v = r.clause("valuation-clopen");
  REQUIRE(v != nullptr);
  CHECK_FALSE(v->pass);
  REQUIRE(v->witness);
  CHECK(v->witness->atom == std::optional<std::string>("p"));
  CHECK(v->witness->set == make_set(2, {1}));
}

TEST_CASE("property: generate and closure against literal oracles") {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    std::vector<StateSet> subbase;
    std::vector<oracle::Mask> subbase_masks;
    for (int k = 0; k < 3; ++k) {
      subbase.push_back(random_subset(rng, n));
      subbase_masks.push_back(oracle::to_mask(subbase.back()));
    }
    FiniteTopology t = generate(n, subbase);
    REQUIRE(masks(t) == oracle::literal_generate(n, subbase_masks));
    REQUIRE(generate(n, t.opens()) == t);
    StateSet a = random_subset(rng, n);
    StateSet b = random_subset(rng, n);
    const StateSet ca = closure(t, a);
    REQUIRE(oracle::to_mask(ca) == oracle::closure(masks(t), n, oracle::to_mask(a)));
    REQUIRE(a.is_subset_of(ca));
    REQUIRE(closure(t, ca) == ca);
    REQUIRE(closure(t, a | b) == (ca | closure(t, b)));
    REQUIRE(closure(t, a & b).is_subset_of(ca));
  }
}

TEST_CASE("property: checker-passing models keep closed sets closed and extents clopen") {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    TopologicalModel tm = random_topological_model(rng, 6, {"p"});
    REQUIRE(check_topological_model(tm).pass());
    const FiniteTopology& t = tm.topology;
    for (const auto& o : t.opens()) {
      const StateSet c = ~o;
      REQUIRE(t.is_closed(diamond_pre(tm.model, c)));
      REQUIRE(t.is_closed(box_pre(tm.model, c)));
    }
    Formula f = random_formula(rng, {"p"}, 4, 16);
    REQUIRE(is_clopen(t, eval(tm.model, f)));
  }
}

TEST_CASE("property: formula topology passes the checker") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    KripkeModel m = random_model(rng, 1, 8, {"p", "q"});
    REQUIRE(check_topological_model(formula_topology(m)).pass());
  }
}
