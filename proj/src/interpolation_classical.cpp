#include <algorithm>
#include <cctype>

#include "uipc/calculus.hpp"
#include "uipc/errors.hpp"
#include "uipc/interpolation.hpp"

namespace uipc {

std::string_view logic_name(Logic l) {
  switch (l) {
    case Logic::K: return "K";
    case Logic::GL: return "GL";
    case Logic::IL: return "IL";
    case Logic::iSL: return "iSL";
  }
  return "?";
}

std::optional<Logic> parse_logic(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "k") return Logic::K;
  if (lower == "gl") return Logic::GL;
  if (lower == "il") return Logic::IL;
  if (lower == "isl") return Logic::iSL;
  return std::nullopt;
}

Calculus calculus_for(Logic l) {
  switch (l) {
    case Logic::K: return Calculus::KS;
    case Logic::GL: return Calculus::GLS;
    case Logic::IL: return Calculus::G4iP;
    case Logic::iSL: return Calculus::G4iSLt;
  }
  return Calculus::KS;
}

bool is_classical(Logic l) { return l == Logic::K || l == Logic::GL; }

Dialect dialect_of(Logic l) {
  return is_classical(l) ? Dialect::Classical : Dialect::Intuitionistic;
}

namespace {

// Top-level variables of a multiset other than p, each once.
std::vector<Formula> free_atoms(const FMultiset& m, const std::string& p) {
  std::vector<Formula> out;
  for (const Formula& f : m.distinct())
    if (f.is(Kind::Var) && f.name() != p) out.push_back(f);
  return out;
}

// The first two disjuncts shared by the K, GL and N constructions:
// ⋁ q over the succedent atoms and ⋁ ¬r over the antecedent atoms.
std::vector<Formula> literal_disjuncts(const Sequent& s, const std::string& p) {
  std::vector<Formula> negs;
  for (const Formula& r : free_atoms(s.left, p)) negs.push_back(neg(r));
  return {big_or(free_atoms(s.right, p)), big_or(negs)};
}

Sequent boxed_residue(const Sequent& s, bool keep_boxes) {
  std::vector<Formula> left;
  for (const Formula& f : s.left) {
    if (!f.is(Kind::Box)) continue;
    left.push_back(f.arg());
    if (keep_boxes) left.push_back(f);
  }
  return Sequent{FMultiset(std::move(left)), {}};
}

// Γ, □Γ′ ⇒ with the box-free antecedent part kept.
Sequent full_antecedent(const Sequent& s) { return Sequent{s.left, {}}; }

}  // namespace

ClassicalInterpolator::ClassicalInterpolator(Logic logic, std::string var)
    : logic_(logic), var_(std::move(var)) {
  if (!is_classical(logic_)) throw ContractError("classical interpolator needs K or GL");
  if (!is_identifier(var_)) throw ContractError("not a variable name: " + var_);
}

void ClassicalInterpolator::set_diamond_context(GlDiamondContext c) {
  if (c != diamond_context_) memo_.clear();
  diamond_context_ = c;
}

void ClassicalInterpolator::check_input(const Sequent& s) const {
  auto core = [](const Formula& f) { return is_classical_core(f); };
  if (!std::all_of(s.left.begin(), s.left.end(), core) ||
      !std::all_of(s.right.begin(), s.right.end(), core))
    throw ContractError("classical interpolants need desugared input (no & or |)");
}

Formula ClassicalInterpolator::a(const Sequent& s) {
  check_input(s);
  return logic_ == Logic::K ? a_k(s) : a_gl(s);
}

Formula ClassicalInterpolator::e(const FMultiset& gamma) {
  return neg(a(Sequent{gamma, {}}));
}

Formula ClassicalInterpolator::n(const Sequent& s, const Sequent& t) {
  if (logic_ != Logic::GL) throw ContractError("N is only defined for GL");
  check_input(s);
  check_input(t);
  if (!is_critical(t)) throw ContractError("N needs a critical second argument");
  return n_gl(s, t);
}

Formula ClassicalInterpolator::a_k(const Sequent& s) {
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  Formula result;
  if (s.empty()) {
    result = Formula::bot();
  } else if (!is_critical(s)) {
    std::vector<Formula> parts;
    for (const Sequent& leaf : canopy(s)) parts.push_back(a_k(leaf));
    result = big_and(parts);
  } else if (is_initial(s, ClassicalCalculus::KS)) {
    result = top();
  } else {
    std::vector<Formula> parts = literal_disjuncts(s, var_);
    std::vector<Formula> boxed;
    for (const Sequent& prem : kr_premises(s)) boxed.push_back(Formula::box(a_k(prem)));
    parts.push_back(big_or(boxed));
    parts.push_back(dia(a_k(boxed_residue(s, false))));
    result = big_or(parts);
  }
  memo_.emplace(s, result);
  return result;
}

Formula ClassicalInterpolator::a_gl(const Sequent& s) {
  const Sequent sc = contract(s);
  if (auto it = memo_.find(sc); it != memo_.end()) return it->second;
  Formula result;
  if (sc.empty()) {
    result = Formula::bot();
  } else if (!is_critical(sc)) {
    std::vector<Formula> parts;
    for (const Sequent& leaf : canopy(sc)) parts.push_back(a_gl(leaf));
    result = big_and(parts);
  } else if (is_initial(sc, ClassicalCalculus::GLS)) {
    result = top();
  } else {
    std::vector<Formula> parts = literal_disjuncts(sc, var_);
    std::vector<Formula> boxed;
    for (const Sequent& prem : glr_premises(sc)) boxed.push_back(Formula::box(a_gl(prem)));
    parts.push_back(big_or(boxed));
    const Sequent rest = diamond_context_ == GlDiamondContext::GlrResidue
                             ? boxed_residue(sc, true)
                             : full_antecedent(sc);
    std::vector<Formula> conj;
    for (const Sequent& t : canopy(contract(rest))) conj.push_back(n_gl(sc, t));
    parts.push_back(dia(big_and(conj)));
    result = big_or(parts);
  }
  memo_.emplace(sc, result);
  return result;
}

Formula ClassicalInterpolator::n_gl(const Sequent& s, const Sequent& t) {
  if (is_initial(t, ClassicalCalculus::GLS)) return top();
  if (usable_boxes(t) < usable_boxes(s)) return a_gl(t);
  const Sequent tc = contract(t);
  std::vector<Formula> parts = literal_disjuncts(tc, var_);
  std::vector<Formula> boxed;
  for (const Sequent& prem : glr_premises(tc)) boxed.push_back(Formula::box(a_gl(prem)));
  parts.push_back(big_or(boxed));
  return big_or(parts);
}

Formula a_k(std::string_view p, const Sequent& s) {
  return ClassicalInterpolator(Logic::K, std::string(p)).a(s);
}

Formula a_gl(std::string_view p, const Sequent& s) {
  return ClassicalInterpolator(Logic::GL, std::string(p)).a(s);
}

Formula n_gl(std::string_view p, const Sequent& s, const Sequent& t) {
  return ClassicalInterpolator(Logic::GL, std::string(p)).n(s, t);
}

Formula e_classical(Logic logic, std::string_view p, const FMultiset& gamma) {
  return ClassicalInterpolator(logic, std::string(p)).e(gamma);
}

}  // namespace uipc
