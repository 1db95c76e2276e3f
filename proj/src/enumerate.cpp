#include <algorithm>

#include "uipc/errors.hpp"
#include "uipc/oracle.hpp"

namespace uipc {

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& vars,
                                        unsigned max_weight, Dialect dialect) {
  const bool full = dialect == Dialect::Intuitionistic;
  // by_weight[w]: every formula of weight exactly w.
  std::vector<std::vector<Formula>> by_weight(max_weight + 1);
  for (unsigned w = 1; w <= max_weight; ++w) {
    std::vector<Formula>& level = by_weight[w];
    if (w == 1) {
      level.push_back(Formula::bot());
      for (const std::string& v : vars) level.push_back(Formula::var(v));
    } else {
      for (const Formula& a : by_weight[w - 1]) level.push_back(Formula::box(a));
      auto binary = [&](unsigned cost, auto make) {
        if (w < cost + 2) return;
        for (unsigned lw = 1; lw + cost < w; ++lw) {
          unsigned rw = w - cost - lw;
          for (const Formula& l : by_weight[lw])
            for (const Formula& r : by_weight[rw]) level.push_back(make(l, r));
        }
      };
      binary(1, [](const Formula& l, const Formula& r) { return Formula::imp(l, r); });
      if (full) {
        binary(2, [](const Formula& l, const Formula& r) { return Formula::conj(l, r); });
        binary(3, [](const Formula& l, const Formula& r) { return Formula::disj(l, r); });
      }
    }
  }
  std::vector<Formula> out;
  for (auto& level : by_weight) out.insert(out.end(), level.begin(), level.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void left_multisets(const std::vector<Formula>& pool, std::size_t start,
                    std::size_t remaining, std::vector<Formula>& cur,
                    std::vector<FMultiset>& out) {
  out.push_back(FMultiset(cur));
  if (remaining == 0) return;
  for (std::size_t i = start; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    left_multisets(pool, i, remaining - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<FMultiset> multisets_up_to(const std::vector<Formula>& pool,
                                       std::size_t max_size) {
  std::vector<FMultiset> out;
  std::vector<Formula> cur;
  left_multisets(pool, 0, max_size, cur, out);
  return out;
}

}  // namespace

std::vector<Sequent> enumerate_sequents(const std::vector<Formula>& pool,
                                        std::size_t max_left,
                                        std::size_t min_right,
                                        std::size_t max_right) {
  std::vector<FMultiset> lefts = multisets_up_to(pool, max_left);
  std::vector<FMultiset> rights;
  for (FMultiset& m : multisets_up_to(pool, max_right))
    if (m.size() >= min_right) rights.push_back(std::move(m));
  std::vector<Sequent> out;
  out.reserve(lefts.size() * rights.size());
  for (const FMultiset& l : lefts)
    for (const FMultiset& r : rights) out.push_back(Sequent{l, r});
  return out;
}

namespace {

Formula random_of_weight(std::mt19937_64& rng, const std::vector<std::string>& vars,
                         unsigned w, bool full) {
  auto pick = [&](unsigned n) {
    return static_cast<unsigned>(std::uniform_int_distribution<unsigned>(0, n - 1)(rng));
  };
  if (w <= 1) {
    unsigned i = pick(static_cast<unsigned>(vars.size()) + 1);
    return i == 0 ? Formula::bot() : Formula::var(vars[i - 1]);
  }
  // Constructors that fit the remaining weight.
  std::vector<int> options{0};  // box
  if (w >= 3) options.push_back(1);           // imp
  if (full && w >= 4) options.push_back(2);   // and
  if (full && w >= 5) options.push_back(3);   // or
  int choice = options[pick(static_cast<unsigned>(options.size()))];
  if (choice == 0) return Formula::box(random_of_weight(rng, vars, w - 1, full));
  // The choice index doubles as the connective's weight.
  unsigned budget = w - static_cast<unsigned>(choice);
  unsigned lw = 1 + pick(budget - 1);
  Formula l = random_of_weight(rng, vars, lw, full);
  Formula r = random_of_weight(rng, vars, budget - lw, full);
  if (choice == 1) return Formula::imp(l, r);
  if (choice == 2) return Formula::conj(l, r);
  return Formula::disj(l, r);
}

}  // namespace

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars,
                       unsigned max_weight, Dialect dialect) {
  if (max_weight == 0) throw ContractError("max_weight must be positive");
  unsigned w = std::uniform_int_distribution<unsigned>(1, max_weight)(rng);
  return random_of_weight(rng, vars, w, dialect == Dialect::Intuitionistic);
}

Sequent random_isequent(std::mt19937_64& rng, const std::vector<std::string>& vars,
                        unsigned max_weight, std::size_t max_left) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_left)(rng);
  std::vector<Formula> left;
  for (std::size_t i = 0; i < n; ++i)
    left.push_back(random_formula(rng, vars, max_weight, Dialect::Intuitionistic));
  return isequent(FMultiset(std::move(left)),
                  random_formula(rng, vars, max_weight, Dialect::Intuitionistic));
}

}  // namespace uipc
