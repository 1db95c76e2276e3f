#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uipc/formula.hpp"
#include "uipc/interpolation.hpp"
#include "uipc/sequent.hpp"

namespace uipc {

// All formulas over `vars` with weight ≤ max_weight, in canonical order.
// The classical dialect uses only ⊥, variables, → and □.
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& vars,
                                        unsigned max_weight, Dialect dialect);

// Sequents whose left side is a multiset of at most max_left formulas from
// `pool` and whose right side has between min_right and max_right.
std::vector<Sequent> enumerate_sequents(const std::vector<Formula>& pool,
                                        std::size_t max_left,
                                        std::size_t min_right,
                                        std::size_t max_right);

// Uniformly shaped random formula of weight at most max_weight (at least 1).
Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars,
                       unsigned max_weight, Dialect dialect);
// Random intuitionistic sequent: up to max_left antecedents, one succedent.
Sequent random_isequent(std::mt19937_64& rng, const std::vector<std::string>& vars,
                        unsigned max_weight, std::size_t max_left);

// Finite rooted tree; node 0 is the root. Valuation bit i means vars[i] is
// true at the node.
struct KripkeTree {
  std::vector<std::string> vars;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<std::uint32_t> valuation;
};

enum class Frames { K, GL };

// Truth at a node: □ ranges over children (K) or strict descendants (GL).
bool holds(const KripkeTree& t, Frames frames, int node, const Formula& f);

struct Countermodel {
  KripkeTree tree;
  int node = 0;
};

// Searches every tree with depth ≤ depth and at most `branching` children
// per node, under every valuation of vars(s), for a root forcing all of the
// left side and none of the right side. Needs desugared input.
std::optional<Countermodel> semantic_check(Frames frames, const Sequent& s,
                                           unsigned depth, unsigned branching);

std::string describe(const KripkeTree& t);

// Decides ⊢ lhs ⇒ rhs in the calculus of `logic`, desugaring classically.
class EntailmentOracle {
 public:
  explicit EntailmentOracle(Logic logic);
  bool provable(const Sequent& s);
  bool entails(const Formula& lhs, const Formula& rhs);
  bool equivalent(const Formula& a, const Formula& b) {
    return entails(a, b) && entails(b, a);
  }
  Logic logic() const { return logic_; }

 private:
  Logic logic_;
  Prover prover_;
};

struct UniformityViolation {
  std::string property;  // "exists-uniformity", "forall-implication", ...
  Formula phi;
  std::optional<Formula> psi;
  Formula interpolant;
};

struct UniformityReport {
  Logic logic = Logic::K;
  std::string var;
  std::size_t formulas = 0;
  std::size_t p_free_formulas = 0;
  std::size_t pairs_checked = 0;
  std::size_t premises_holding = 0;
  std::vector<UniformityViolation> violations;

  bool ok() const { return violations.empty(); }
  // One JSON object per violation, then a summary object.
  std::string to_json_lines() const;
};

// Formula-level check: for every φ in the budget, φ → ∃pφ and ∀pφ → φ; for
// every pair with p-free ψ, ⊢ φ → ψ implies ⊢ ∃pφ → ψ and ⊢ ψ → φ implies
// ⊢ ψ → ∀pφ. IL uses the box-free part of the budget.
UniformityReport uniformity_harness(Logic logic, const std::string& p,
                                    const std::vector<std::string>& vars,
                                    unsigned max_weight);

}  // namespace uipc
