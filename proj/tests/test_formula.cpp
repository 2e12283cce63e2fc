#include <doctest.h>

#include "oracles.hpp"
#include "vkt/error.hpp"
#include "vkt/formula.hpp"
#include "vkt/random.hpp"

using namespace vkt;

namespace {

const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
const Formula r = Formula::atom("r");

bool nots_only_on_atoms(const Formula& f) {
  if (f.op() == Op::Not) return f.lhs().op() == Op::Atom;
  if (f.is_unary()) return nots_only_on_atoms(f.lhs());
  if (f.is_binary()) return nots_only_on_atoms(f.lhs()) && nots_only_on_atoms(f.rhs());
  return true;
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(parse("[](p & ~q)") == Formula::box(Formula::conj(p, Formula::negation(q))));
  CHECK(parse("~[]p") == Formula::negation(Formula::box(p)));
  CHECK(parse("p & q | r") == Formula::disj(Formula::conj(p, q), r));
  CHECK(parse("p | q & r") == Formula::disj(p, Formula::conj(q, r)));
  CHECK(parse("p & q & r") == Formula::conj(Formula::conj(p, q), r));
  CHECK(parse("<>true") == Formula::diamond(Formula::top()));
  CHECK(parse("[][]false") == box_power(2, Formula::bot()));
  CHECK(parse("  ( p ) ") == p);
}

TEST_CASE("unicode aliases parse like their ascii forms") {
  CHECK(parse("□(p ∧ ¬q)") == parse("[](p & ~q)"));
  CHECK(parse("◇p ∨ q") == parse("<>p | q"));
}

TEST_CASE("parse errors carry a column") {
  auto column_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("p &") == 4);
  CHECK(column_of("(p") == 3);
  CHECK(column_of("p $ q") == 3);
  CHECK(column_of("") == 1);
  CHECK(column_of("p q") == 3);
  CHECK(column_of("□$") == 2);
}

TEST_CASE("to_nnf on the documented examples") {
  CHECK(to_nnf(parse("~[]p")) == parse("<>~p"));
  CHECK(to_nnf(p) == p);
  CHECK(to_nnf(parse("~~p")) == p);
  CHECK(to_nnf(parse("~true")) == Formula::bot());
  CHECK(to_nnf(parse("~false")) == Formula::top());
  CHECK(to_nnf(parse("~(p & <>q)")) == parse("~p | []~q"));
}

TEST_CASE("modal_depth and atoms_of") {
  CHECK(modal_depth(parse("[][]false")) == 2);
  CHECK(modal_depth(p) == 0);
  CHECK(modal_depth(parse("[]p & <>[]q")) == 2);
  CHECK(atoms_of(parse("p & ~q")) == AtomSet{"p", "q"});
  CHECK(atoms_of(Formula::bot()).empty());
  CHECK(atoms_of(parse("[]p")) == AtomSet{"p"});
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(to_string(parse("(p & q) | r")) == "p & q | r");
  CHECK(to_string(parse("p & (q | r)")) == "p & (q | r)");
  CHECK(to_string(parse("~(p & q)")) == "~(p & q)");
  CHECK(to_string(parse("p & (q & r)")) == "p & (q & r)");
  CHECK(to_string(parse("[]<>~p")) == "[]<>~p");
}

TEST_CASE("property: round trip, nnf shape, depth, semantics") {
  Rng rng(11);
  const std::vector<std::string> atoms{"p", "q"};
  for (int i = 0; i < 2000; ++i) {
    Formula f = random_formula(rng, atoms, 5, 24);
    Formula g = to_nnf(f);
    REQUIRE(parse(to_string(f)) == f);
    REQUIRE(nots_only_on_atoms(g));
    REQUIRE(modal_depth(g) == modal_depth(f));
    KripkeModel m = random_model(rng, 1, 5, {"p", "q"});
    REQUIRE(oracle::extent(m, f) == oracle::extent(m, g));
  }
}
