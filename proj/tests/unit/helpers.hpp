#pragma once

#include <random>
#include <string>
#include <vector>

#include "uipc/errors.hpp"
#include "uipc/formula.hpp"
#include "uipc/oracle.hpp"
#include "uipc/sequent.hpp"
#include "uipc/syntax.hpp"

namespace test {

using uipc::Formula;
using uipc::FMultiset;
using uipc::Sequent;

inline Formula v(const char* name) { return Formula::var(name); }
inline Formula bot() { return Formula::bot(); }
inline Formula imp(Formula a, Formula b) { return Formula::imp(std::move(a), std::move(b)); }
inline Formula conj(Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); }
inline Formula disj(Formula a, Formula b) { return Formula::disj(std::move(a), std::move(b)); }
inline Formula box(Formula a) { return Formula::box(std::move(a)); }
inline Formula tt() { return imp(bot(), bot()); }

inline Formula f(const char* text) { return uipc::parse_formula(text); }
inline Sequent seq(const char* text) { return uipc::parse_sequent(text); }

inline Sequent desugar(const Sequent& s) {
  std::vector<Formula> l, r;
  for (const Formula& x : s.left) l.push_back(uipc::desugar_classical(x));
  for (const Formula& x : s.right) r.push_back(uipc::desugar_classical(x));
  return Sequent{FMultiset(std::move(l)), FMultiset(std::move(r))};
}

inline const std::vector<std::string>& pq() {
  static const std::vector<std::string> names{"p", "q"};
  return names;
}

inline Sequent random_classical(std::mt19937_64& rng, unsigned weight, std::size_t max_left,
                                std::size_t max_right) {
  std::vector<Formula> l, r;
  const std::size_t nl = rng() % (max_left + 1), nr = rng() % (max_right + 1);
  for (std::size_t i = 0; i < nl; ++i)
    l.push_back(uipc::random_formula(rng, pq(), weight, uipc::Dialect::Classical));
  for (std::size_t i = 0; i < nr; ++i)
    r.push_back(uipc::random_formula(rng, pq(), weight, uipc::Dialect::Classical));
  return Sequent{FMultiset(std::move(l)), FMultiset(std::move(r))};
}

}  // namespace test
