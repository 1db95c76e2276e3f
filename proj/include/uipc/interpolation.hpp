#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uipc/formula.hpp"
#include "uipc/provers.hpp"
#include "uipc/sequent.hpp"

namespace uipc {

enum class Logic { K, GL, IL, iSL };

std::string_view logic_name(Logic l);
// Accepts "K", "GL", "IL", "iSL" (case-insensitive).
std::optional<Logic> parse_logic(std::string_view text);
Calculus calculus_for(Logic l);
Dialect dialect_of(Logic l);
bool is_classical(Logic l);

// Which left context feeds the ◇ disjunct of the GL interpolant:
// the (GLR) residue Γ′, □Γ′ ⇒ (default), or the full Γ, □Γ′ ⇒.
enum class GlDiamondContext { GlrResidue, FullContext };

// A_p for K and GL. Inputs must be desugared (no ∧/∨); results are cached
// per instance (by sequent for K, by contracted sequent for GL).
class ClassicalInterpolator {
 public:
  ClassicalInterpolator(Logic logic, std::string var);

  Logic logic() const { return logic_; }
  const std::string& var() const { return var_; }
  void set_diamond_context(GlDiamondContext c);

  Formula a(const Sequent& s);
  // ¬A_p(Γ ⇒).
  Formula e(const FMultiset& gamma);
  // GL only; t must be critical.
  Formula n(const Sequent& s, const Sequent& t);

 private:
  Formula a_k(const Sequent& s);
  Formula a_gl(const Sequent& s);
  Formula n_gl(const Sequent& s, const Sequent& t);
  void check_input(const Sequent& s) const;

  Logic logic_;
  std::string var_;
  GlDiamondContext diamond_context_ = GlDiamondContext::GlrResidue;
  std::unordered_map<Sequent, Formula, SequentHash> memo_;
};

// E_p and A_p for IL and iSL, built from the pattern table: every row is
// matched against every occurrence, contributions are collected (sorted,
// duplicates removed) and combined with big_and / big_or.
class IntuitionisticInterpolator {
 public:
  IntuitionisticInterpolator(Logic logic, std::string var);

  Logic logic() const { return logic_; }
  const std::string& var() const { return var_; }

  Formula e(const FMultiset& gamma);
  Formula a(const Sequent& s);

  std::vector<Formula> e_contributions(const FMultiset& gamma);
  std::vector<Formula> a_contributions(const Sequent& s);

 private:
  Formula e_rec(const FMultiset& gamma);
  Formula a_rec(const Sequent& s);
  std::vector<Formula> e_rows(const FMultiset& gamma);
  std::vector<Formula> a_rows(const Sequent& s);
  void check_formulas(const FMultiset& m) const;

  Logic logic_;
  std::string var_;
  std::unordered_map<FMultiset, Formula, FMultisetHash> e_memo_;
  std::unordered_map<Sequent, Formula, SequentHash> a_memo_;
};

// One-shot helpers (fresh cache per call).
Formula a_k(std::string_view p, const Sequent& s);
Formula a_gl(std::string_view p, const Sequent& s);
Formula n_gl(std::string_view p, const Sequent& s, const Sequent& t);
Formula e_classical(Logic logic, std::string_view p, const FMultiset& gamma);
Formula e_isl(Logic logic, std::string_view p, const FMultiset& gamma);
Formula a_isl(Logic logic, std::string_view p, const Sequent& s);

// Runtime checks that every recursive E/A call in the intuitionistic
// construction is strictly smaller (E on Γ measured as Γ, A on Γ ⇒ φ as
// Γ,φ,φ, compared by weight_ms_less). Off unless enabled here or through
// UIPCALC_DEBUG_ASSERTS=1. A failed check throws MeasureViolation.
void set_measure_checks(bool on);
bool measure_checks_enabled();
// Number of recursive calls checked so far in this process.
std::uint64_t measure_checks_performed();

enum class Quantifier { Forall, Exists };

// Facade over both constructions for one logic and variable. Classical
// inputs are desugared on entry; intuitionistic inputs must be box-free for
// IL. Results are raw (unsimplified).
class Interpolator {
 public:
  Interpolator(Logic logic, std::string var);
  ~Interpolator();
  Interpolator(Interpolator&&) noexcept;
  Interpolator& operator=(Interpolator&&) noexcept;

  Logic logic() const { return logic_; }
  const std::string& var() const { return var_; }

  // A_p(Γ ⇒ Δ); intuitionistic sequents need exactly one succedent.
  Formula A(const Sequent& s);
  // E_p(Γ); classically ¬A_p(Γ ⇒).
  Formula E(const FMultiset& gamma);
  // ∀pφ = A_p(⇒ φ); ∃pφ = ¬∀p¬φ classically, E_p({φ}) intuitionistically.
  Formula quantify(Quantifier q, const Formula& phi);
  // Sequent-level ∀: A_p(s) classically, E_p(Γ) → A_p(Γ ⇒ φ) otherwise.
  Formula forall_sequent(const Sequent& s);

  ClassicalInterpolator* classical() { return classical_.get(); }
  IntuitionisticInterpolator* intuitionistic() { return intuitionistic_.get(); }

 private:
  Sequent prepare(const Sequent& s) const;
  FMultiset prepare(const FMultiset& m) const;

  Logic logic_;
  std::string var_;
  std::unique_ptr<ClassicalInterpolator> classical_;
  std::unique_ptr<IntuitionisticInterpolator> intuitionistic_;
};

Formula quantify(Logic logic, Quantifier q, std::string_view p, const Formula& phi);

// Intuitionistically valid rewrites applied bottom-up to a fixed point:
// ⊤/⊥ unit and annihilator laws for ∧ and ∨, φ → ⊤ ↦ ⊤, ⊥ → φ ↦ ⊤, and
// idempotence of ∧ and ∨. Never increases weight.
Formula simplify(const Formula& f);

}  // namespace uipc
