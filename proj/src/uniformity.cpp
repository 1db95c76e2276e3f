#include <json.hpp>

#include "uipc/oracle.hpp"
#include "uipc/syntax.hpp"

namespace uipc {

EntailmentOracle::EntailmentOracle(Logic logic)
    : logic_(logic), prover_(calculus_for(logic)) {
  prover_.set_record_derivations(false);
}

bool EntailmentOracle::provable(const Sequent& s) {
  if (!is_classical(logic_)) return prover_.provable(s);
  std::vector<Formula> l, r;
  for (const Formula& f : s.left) l.push_back(desugar_classical(f));
  for (const Formula& f : s.right) r.push_back(desugar_classical(f));
  return prover_.provable(Sequent{FMultiset(std::move(l)), FMultiset(std::move(r))});
}

bool EntailmentOracle::entails(const Formula& lhs, const Formula& rhs) {
  return provable(Sequent{FMultiset{lhs}, FMultiset{rhs}});
}

std::string UniformityReport::to_json_lines() const {
  using Json = nlohmann::ordered_json;
  std::string out;
  for (const UniformityViolation& v : violations) {
    Json j{{"property", v.property},
           {"logic", std::string(logic_name(logic))},
           {"var", var},
           {"phi", print(v.phi, PrintStyle::Resugared)}};
    if (v.psi) j["psi"] = print(*v.psi, PrintStyle::Resugared);
    j["interpolant"] = print(v.interpolant, PrintStyle::Resugared);
    out += j.dump() + "\n";
  }
  Json summary{{"summary", true},
               {"logic", std::string(logic_name(logic))},
               {"var", var},
               {"formulas", formulas},
               {"p_free_formulas", p_free_formulas},
               {"pairs_checked", pairs_checked},
               {"premises_holding", premises_holding},
               {"violations", violations.size()}};
  out += summary.dump() + "\n";
  return out;
}

UniformityReport uniformity_harness(Logic logic, const std::string& p,
                                    const std::vector<std::string>& var_names,
                                    unsigned max_weight) {
  UniformityReport report;
  report.logic = logic;
  report.var = p;
  if (max_weight == 0) return report;

  std::vector<Formula> phis;
  for (const Formula& f : enumerate_formulas(var_names, max_weight, dialect_of(logic)))
    if (logic != Logic::IL || !contains_box(f)) phis.push_back(f);
  std::vector<Formula> psis;
  for (const Formula& f : phis)
    if (!vars(f).count(p)) psis.push_back(f);
  report.formulas = phis.size();
  report.p_free_formulas = psis.size();

  Interpolator interp(logic, p);
  EntailmentOracle oracle(logic);
  auto violation = [&](std::string property, const Formula& phi,
                       std::optional<Formula> psi, const Formula& q) {
    report.violations.push_back({std::move(property), phi, std::move(psi), q});
  };

  for (const Formula& phi : phis) {
    const Formula ex = interp.quantify(Quantifier::Exists, phi);
    const Formula fa = interp.quantify(Quantifier::Forall, phi);
    if (vars(ex).count(p)) violation("exists-p-freeness", phi, std::nullopt, ex);
    if (vars(fa).count(p)) violation("forall-p-freeness", phi, std::nullopt, fa);
    if (!oracle.entails(phi, ex)) violation("exists-implication", phi, std::nullopt, ex);
    if (!oracle.entails(fa, phi)) violation("forall-implication", phi, std::nullopt, fa);
    for (const Formula& psi : psis) {
      ++report.pairs_checked;
      if (oracle.entails(phi, psi)) {
        ++report.premises_holding;
        if (!oracle.entails(ex, psi)) violation("exists-uniformity", phi, psi, ex);
      }
      if (oracle.entails(psi, phi)) {
        ++report.premises_holding;
        if (!oracle.entails(psi, fa)) violation("forall-uniformity", phi, psi, fa);
      }
    }
  }
  return report;
}

}  // namespace uipc
