#include <algorithm>
#include <unordered_set>

#include "uipc/provers.hpp"

namespace uipc {

namespace {

bool rule_allowed(Calculus calc, Rule r) {
  switch (calc) {
    case Calculus::KS:
      return r == Rule::IdP || r == Rule::BotL || r == Rule::ImpR ||
             r == Rule::ImpL || r == Rule::KR;
    case Calculus::GLS:
      return r == Rule::IdP || r == Rule::BotL || r == Rule::ImpR ||
             r == Rule::ImpL || r == Rule::GLR || r == Rule::IdB;
    case Calculus::G4iP:
      return r != Rule::KR && r != Rule::GLR && r != Rule::IdB &&
             r != Rule::ImpL && r != Rule::BoxR && r != Rule::BoxImpL;
    case Calculus::G4iSLt:
      return r != Rule::KR && r != Rule::GLR && r != Rule::IdB && r != Rule::ImpL;
  }
  return false;
}

bool node_matches(Calculus calc, const Derivation& d) {
  std::vector<Sequent> children;
  for (const DerivationPtr& p : d.premises) {
    if (!p) return false;
    children.push_back(p->conclusion);
  }
  std::vector<RuleApp> apps;
  if (calc == Calculus::KS || calc == Calculus::GLS) {
    apps = classical_applications(
        d.conclusion,
        calc == Calculus::KS ? ClassicalCalculus::KS : ClassicalCalculus::GLS);
  } else {
    if (!d.conclusion.is_singleton()) return false;
    apps = isl_applications(d.conclusion, calc == Calculus::G4iP
                                              ? IntCalculus::G4iP
                                              : IntCalculus::G4iSLt);
  }
  return std::any_of(apps.begin(), apps.end(), [&](const RuleApp& a) {
    return a.rule == d.rule && a.premises == children;
  });
}

// Memoised subtrees are shared, so each node is checked once.
bool validate_dag(Calculus calc, const Derivation& d,
                  std::unordered_set<const Derivation*>& seen) {
  if (!seen.insert(&d).second) return true;
  if (!rule_allowed(calc, d.rule) || !node_matches(calc, d)) return false;
  return std::all_of(d.premises.begin(), d.premises.end(),
                     [&](const DerivationPtr& p) {
                       return validate_dag(calc, *p, seen);
                     });
}

}  // namespace

bool validate(Calculus calc, const Derivation& d) {
  std::unordered_set<const Derivation*> seen;
  return validate_dag(calc, d, seen);
}

}  // namespace uipc
