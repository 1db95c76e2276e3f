#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"

using namespace test;
using uipc::ClassicalCalculus;

namespace {

// Dershowitz–Manna by its existential definition: M < N iff N can be turned
// into M by removing a nonempty X and adding Y with every element of Y
// weight-below some element of X. Brute force over every sub-multiset X.
bool dm_less_brute(const std::vector<Formula>& m, const std::vector<Formula>& n) {
  const std::size_t k = n.size();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<Formula> x, kept;
    for (std::size_t i = 0; i < k; ++i) (mask >> i & 1 ? x : kept).push_back(n[i]);
    std::vector<Formula> y = m;
    bool contained = true;
    for (const Formula& f : kept) {
      auto it = std::find(y.begin(), y.end(), f);
      if (it == y.end()) {
        contained = false;
        break;
      }
      y.erase(it);
    }
    if (!contained) continue;
    bool dominated = std::all_of(y.begin(), y.end(), [&](const Formula& a) {
      return std::any_of(x.begin(), x.end(),
                         [&](const Formula& b) { return uipc::weight(a) < uipc::weight(b); });
    });
    if (dominated) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("unbox") {
  CHECK(uipc::unbox(FMultiset{box(v("p")), v("q")}) == FMultiset{v("p"), v("q")});
  CHECK(uipc::unbox(FMultiset{}).empty());
  CHECK(uipc::unbox(FMultiset{box(v("p")), v("p")}) == FMultiset{v("p"), v("p")});
}

TEST_CASE("contract") {
  CHECK(uipc::contract(seq("p->q, p->q =>")) == seq("p->q =>"));
  Sequent s = seq("p, q => r");
  CHECK(uipc::contract(s) == s);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    Sequent t = random_classical(rng, 5, 4, 4);
    CHECK(uipc::contract(uipc::contract(t)) == uipc::contract(t));
  }
}

TEST_CASE("criticality") {
  CHECK(uipc::is_critical(seq("p => q")));
  CHECK_FALSE(uipc::is_critical(seq("p -> q =>")));
  CHECK(uipc::is_critical(seq("[](p -> q) =>")));
}

TEST_CASE("initial sequents") {
  CHECK(uipc::is_initial(seq("F, p =>"), ClassicalCalculus::KS));
  CHECK(uipc::is_initial(seq("[]p => []p"), ClassicalCalculus::GLS));
  CHECK_FALSE(uipc::is_initial(seq("[]p => []p"), ClassicalCalculus::KS));
  CHECK_FALSE(uipc::is_initial(seq("p => q"), ClassicalCalculus::KS));
  CHECK_FALSE(uipc::is_initial(seq("p => q"), ClassicalCalculus::GLS));
  CHECK_THROWS_AS(uipc::is_initial(seq("p -> q =>"), ClassicalCalculus::KS), uipc::ContractError);
}

TEST_CASE("theta") {
  CHECK(uipc::theta(seq("[]p => []p")) == uipc::Theta{0, 0});
  CHECK(uipc::theta(seq("=> []p")) == uipc::Theta{0, 1});
  CHECK(uipc::theta(seq("p -> q => [][]r")) == uipc::Theta{1, 2});
  CHECK(uipc::theta_less(uipc::Theta{1, 0}, uipc::Theta{0, 1}));
  CHECK_FALSE(uipc::theta_less(uipc::Theta{0, 1}, uipc::Theta{1, 0}));
}

TEST_CASE("multiset and sequent orders") {
  CHECK_FALSE(uipc::weight_ms_less(FMultiset{box(bot()), bot()}, FMultiset{box(bot())}));
  Sequent smaller = uipc::isequent(FMultiset{box(bot())}, bot());
  Sequent larger = uipc::isequent(FMultiset{}, box(bot()));
  CHECK(uipc::isl_seq_less(smaller, larger));
  CHECK_FALSE(uipc::isl_seq_less(larger, smaller));
}

TEST_CASE("weight_ms_less matches the brute-force definition") {
  std::vector<Formula> pool = uipc::enumerate_formulas({"p"}, 4, uipc::Dialect::Intuitionistic);
  std::mt19937_64 rng(7);
  int smaller = 0;
  for (int i = 0; i < 4000; ++i) {
    std::vector<Formula> m, n;
    const std::size_t a = rng() % 5, b = rng() % 5;
    // Small pools make shared elements common.
    const std::size_t span = 3 + rng() % pool.size();
    for (std::size_t k = 0; k < a; ++k) m.push_back(pool[rng() % std::min(span, pool.size())]);
    for (std::size_t k = 0; k < b; ++k) n.push_back(pool[rng() % std::min(span, pool.size())]);
    INFO(uipc::print(Sequent{FMultiset(m), FMultiset(n)}));
    const bool expected = dm_less_brute(m, n);
    smaller += expected;
    CHECK(uipc::weight_ms_less(FMultiset(m), FMultiset(n)) == expected);
  }
  CHECK(smaller > 400);
  CHECK(smaller < 3600);
}

TEST_CASE("multiset equality ignores input order") {
  CHECK(FMultiset{v("q"), v("p"), v("q")} == FMultiset{v("q"), v("q"), v("p")});
  CHECK(FMultiset{v("p")} != FMultiset{v("p"), v("p")});
}
