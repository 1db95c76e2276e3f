#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uipc/calculus.hpp"
#include "uipc/sequent.hpp"

namespace uipc {

enum class Calculus { KS, GLS, G4iP, G4iSLt };

std::string_view calculus_name(Calculus c);

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

// Proof tree; subtrees may be shared between derivations.
struct Derivation {
  Rule rule;
  Sequent conclusion;
  std::vector<DerivationPtr> premises;
};

struct Decision {
  // Null when the sequent is refuted.
  DerivationPtr derivation;
  bool provable() const { return derivation != nullptr; }
};

// Backward proof search for one calculus. Holds a memo table keyed by
// sequent, so one instance must not be used from several threads at once;
// separate instances are independent.
//
// KS/GLS: close the sequent by an axiom if one applies (IdB counts for GLS),
// otherwise saturate with (→L)/(→R), otherwise try each (KR)/(GLR) premise. G4iP/G4iSLt: try rule instances in
// the order of for_each_isl_application; a failed invertible instance
// refutes the sequent without trying the rest.
class Prover {
 public:
  using EdgeObserver =
      std::function<void(const Sequent& from, const Sequent& to, Rule rule)>;

  explicit Prover(Calculus calc);

  Calculus calculus() const { return calc_; }

  // Throws ContractError for ∧/∨ in classical input or a non-singleton
  // succedent in intuitionistic input.
  Decision decide(const Sequent& s);
  bool provable(const Sequent& s) { return decide(s).provable(); }

  // Called for every backward step the search explores. Only sequents not
  // already in the memo table are expanded.
  void set_edge_observer(EdgeObserver observer) { observer_ = std::move(observer); }

  // Disables the invertible-rule cut-off (intuitionistic calculi only).
  void set_exhaustive(bool on) { exhaustive_ = on; }

  // When off, provable sequents get a shared placeholder leaf instead of a
  // derivation; decide() is then only good for its verdict. Searches
  // without an edge observer then run invertible rules depth-first (single
  // premise rules first) with contraction, and memoize only the sequents on
  // which a non-invertible rule is tried.
  void set_record_derivations(bool on);

  // The memo table is flushed once it holds this many sequents.
  void set_cache_limit(std::size_t entries) { cache_limit_ = entries; }

  void clear_cache() {
    memo_.clear();
    verdicts_.clear();
  }
  std::size_t cache_size() const { return memo_.size() + verdicts_.size(); }

 private:
  DerivationPtr search(const Sequent& s);
  DerivationPtr search_classical(const Sequent& s);
  DerivationPtr search_intuitionistic(const Sequent& s);
  struct Frontier;
  bool classical_verdict(const Sequent& s);
  bool saturate(Frontier f);
  bool intuitionistic_verdict(const Sequent& s);
  bool reduce_invertible(const Sequent& s);
  bool boxes_as_top_tautology(const Sequent& s);
  std::uint64_t truth_table(const Formula& f);
  DerivationPtr node(Rule r, const Sequent& s, std::vector<DerivationPtr> premises = {}) const;
  void check_input(const Sequent& s) const;

  Calculus calc_;
  bool exhaustive_ = false;
  bool record_ = true;
  std::size_t cache_limit_ = 1u << 21;
  EdgeObserver observer_;
  std::unordered_map<Sequent, DerivationPtr, SequentHash> memo_;
  std::unordered_map<Sequent, bool, SequentHash> verdicts_;
  std::unordered_map<Formula, std::uint64_t, FormulaHash> tables_;
  std::vector<std::string> table_vars_;
  bool table_overflow_ = false;
};

// Runs a fresh Prover.
Decision decide(Calculus calc, const Sequent& s);

// True iff every node instantiates a rule of the calculus with exactly the
// premises the schema prescribes (IdB is accepted for GLS).
bool validate(Calculus calc, const Derivation& d);

// Indented dump, one sequent per line with its rule tag.
std::string render_derivation(const Derivation& d);

}  // namespace uipc
