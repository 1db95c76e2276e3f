#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace test;

TEST_CASE("parse formulas") {
  CHECK(f("[]p -> p") == imp(box(v("p")), v("p")));
  CHECK(f("[](p->q) -> []p -> []q") ==
        imp(box(imp(v("p"), v("q"))), imp(box(v("p")), box(v("q")))));
  CHECK(f("p & q | r") == disj(conj(v("p"), v("q")), v("r")));
  CHECK(f("~p") == imp(v("p"), bot()));
  CHECK(f("T") == tt());
  CHECK(f("□(p → ⊥)") == box(imp(v("p"), bot())));
}

TEST_CASE("parse errors carry the offset") {
  try {
    f("p &");
    FAIL("no error");
  } catch (const uipc::ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(seq("p q => r"), uipc::ParseError);
  CHECK_THROWS_AS(f("(p"), uipc::ParseError);
}

TEST_CASE("parse sequents") {
  Sequent s = seq("p->q, p->q => ");
  CHECK(s.left.size() == 2);
  CHECK(s.left.count(imp(v("p"), v("q"))) == 2);
  CHECK(s.right.empty());
  Sequent t = seq(" => p");
  CHECK(t.left.empty());
  CHECK(t.right == FMultiset{v("p")});
}

TEST_CASE("print") {
  CHECK(uipc::print(imp(box(v("p")), v("p"))) == "[]p -> p");
  CHECK(uipc::print(imp(v("p"), bot()), uipc::PrintStyle::Resugared) == "~p");
  CHECK(uipc::print(disj(v("p"), disj(v("q"), bot()))) == "p | q | F");
  CHECK(uipc::print(seq("p, q => r")) == "p, q => r");
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    Formula x = uipc::random_formula(rng, pq(), 14, uipc::Dialect::Intuitionistic);
    CHECK(f(uipc::print(x).c_str()) == x);
  }
  for (int i = 0; i < 200; ++i) {
    Sequent s = random_classical(rng, 8, 3, 3);
    CHECK(seq(uipc::print(s).c_str()) == s);
  }
}

TEST_CASE("json encoding") {
  CHECK(uipc::to_json(box(v("p"))) == R"({"k":"box","a":{"k":"var","v":"p"}})");
  CHECK_THROWS_AS(uipc::formula_from_json(R"({"k":"diamond"})"), uipc::JsonDecodeError);
  CHECK_THROWS_AS(uipc::formula_from_json("not json"), uipc::JsonDecodeError);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Formula x = uipc::random_formula(rng, pq(), 14, uipc::Dialect::Intuitionistic);
    CHECK(uipc::formula_from_json(uipc::to_json(x)) == x);
  }
  Sequent s = seq("p->q, p->q => []q");
  CHECK(uipc::sequent_from_json(uipc::to_json(s)) == s);
}
