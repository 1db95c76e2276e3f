#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "uipc/sequent.hpp"

namespace uipc {

// Rule tags of KS, GLS (with the admissible IdB) and G4iSLt.
enum class Rule {
  IdP,
  BotL,
  ImpR,
  ImpL,
  KR,
  GLR,
  IdB,
  AndL,
  AndR,
  OrL,
  OrR1,
  OrR2,
  AndImpL,
  OrImpL,
  AtomImpL,
  ImpImpL,
  BoxR,
  BoxImpL,
};

std::string_view rule_name(Rule r);

// G4iP omits BoxR and BoxImpL.
enum class IntCalculus { G4iP, G4iSLt };

// Multiset of sequents, kept sorted in canonical order.
using SequentBag = std::vector<Sequent>;

struct RuleApp {
  Rule rule;
  // The principal formula occurrence(s) the rule acts on.
  std::vector<Formula> principal;
  std::vector<Sequent> premises;
};

// One deterministic (→R)/(→L) step on a non-critical classical sequent: the
// canonically least top-level implication, succedent side first. Empty for
// critical sequents.
std::optional<RuleApp> saturation_step(const Sequent& s);

// The critical leaves of maximal (→L)/(→R) saturation.
SequentBag canopy(const Sequent& s);

// (KR) premises: Γ′ ⇒ ψ for each occurrence of □ψ on the right, where □Γ′ is
// every boxed formula on the left.
SequentBag kr_premises(const Sequent& s);
// (GLR) premises: Γ′, □Γ′, □ψ ⇒ ψ per occurrence of □ψ on the right.
SequentBag glr_premises(const Sequent& s);

// Every backward instance of every KS or GLS rule (IdB for GLS), used by the
// derivation validator. Implication rules are listed for every principal
// occurrence, not only the one the strategy picks.
std::vector<RuleApp> classical_applications(const Sequent& s,
                                            ClassicalCalculus calc);

// Rules that are invertible in G4iSLt and G4iP: if the conclusion is
// derivable, so is every premise of any instance.
bool is_invertible(Rule r);

// Enumerates backward G4iSLt (or G4iP) rule instances in deterministic order:
// rule rank (axioms, then invertible rules, then the rest), then canonical
// order of the principal formula. The callback returns true to stop early.
// Throws ContractError unless the sequent has exactly one succedent formula.
void for_each_isl_application(const Sequent& s, IntCalculus calc,
                              const std::function<bool(RuleApp&&)>& visit);
std::vector<RuleApp> isl_applications(const Sequent& s,
                                      IntCalculus calc = IntCalculus::G4iSLt);

}  // namespace uipc
