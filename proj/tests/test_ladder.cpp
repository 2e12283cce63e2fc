#include <doctest.h>

#include "oracles.hpp"
#include "vkt/error.hpp"
#include "vkt/ladder.hpp"
#include "vkt/random.hpp"

using namespace vkt;

TEST_CASE("ladder_eval on the documented examples") {
  LadderValue v = ladder_eval(Ladder::Extended, parse("[][][]false"));
  CHECK(v.prefix == std::vector<bool>{true, true, true});
  CHECK_FALSE(v.tail);
  CHECK_FALSE(v.at_root);
  CHECK(v.at_inf == std::optional<bool>(false));

  LadderValue t = ladder_eval(Ladder::Extended, Formula::top());
  CHECK(t.prefix.empty());
  CHECK(t.tail);
  CHECK(t.at_root);
  CHECK(t.at_inf == std::optional<bool>(true));

  LadderValue d = ladder_eval(Ladder::Extended, parse("<>true"));
  CHECK(d.prefix == std::vector<bool>{false});
  CHECK(d.tail);
  CHECK(d.at_root);
  CHECK(d.at_inf == std::optional<bool>(true));

  CHECK_FALSE(ladder_eval(Ladder::Chain, Formula::top()).at_inf.has_value());
  CHECK_THROWS_AS(ladder_eval(Ladder::Chain, parse("p")), InputError);
}

TEST_CASE("the chain satisfies exactly the expected boxes") {
  for (std::size_t i = 0; i <= 10; ++i) {
    for (std::size_t j = 0; j <= 12; ++j) {
      CHECK(ladder_eval(Ladder::Chain, box_power(j, Formula::bot())).at(i) == (j >= i + 1));
    }
  }
}

TEST_CASE("non-saturation witnesses on the chain") {
  NonsaturationReport r = nonsaturation_witness_chain(3);
  CHECK(r.not_saturated());
  CHECK(r.witnesses.size() == 16);
  CHECK(r.witnesses.front().subfamily.empty());
  CHECK(r.witnesses.front().state == 0);
  for (const auto& w : r.witnesses) {
    if (w.subfamily == std::vector<std::size_t>{0, 1, 2}) CHECK(w.state == 3);
  }
  CHECK_THROWS_AS(nonsaturation_witness_chain(20), LimitError);
}

TEST_CASE("saturation on the extension") {
  SaturationReport top = saturation_check_extended({Formula::top()}, false);
  CHECK(top.holds);
  CHECK(top.subfamily == std::vector<FamilyMember>{{false, 0}});

  std::vector<Formula> pair{parse("<>true"), parse("[]false")};
  SaturationReport r = saturation_check_extended(pair, false);
  CHECK(r.holds);
  CHECK(r.subfamily.size() == 2);
  CHECK(covers_extended(pair, r.subfamily));

  SaturationReport param = saturation_check_extended({}, true);
  CHECK_FALSE(param.holds);
  CHECK(param.witness == "sinf");
  CHECK_THROWS_AS(saturation_check_extended({}, false), InputError);
}

TEST_CASE("property: collapse, eventual constancy, box shift, truncations") {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    Formula f = random_formula(rng, {}, 8, 24);
    LadderValue v = ladder_eval(Ladder::Extended, f);
    const bool inf = *v.at_inf;
    REQUIRE(*ladder_eval(Ladder::Extended, Formula::box(f)).at_inf == inf);
    REQUIRE(*ladder_eval(Ladder::Extended, Formula::diamond(f)).at_inf == inf);
    REQUIRE(ladder_eval(Ladder::Chain, f).prefix == v.prefix);

    // once f holds from k on, []f holds from k + 1 on
    LadderValue b = ladder_eval(Ladder::Extended, Formula::box(f));
    if (v.tail) {
      for (std::size_t k = v.prefix.size() + 1; k < v.prefix.size() + 4; ++k) REQUIRE(b.at(k));
    }

    const std::size_t n = v.prefix.size() + 2;
    for (Ladder which : {Ladder::Chain, Ladder::Extended}) {
      KripkeModel m = ladder_truncation(which, n);
      const StateSet ext = oracle::extent(m, f);
      for (std::size_t s = 0; s <= n; ++s) REQUIRE(ext.test(s + 1) == v.at(s));
      if (which == Ladder::Extended) REQUIRE(ext.test(n + 2) == inf);
    }
  }
}
