#include "uipc/provers.hpp"

#include <algorithm>

#include "uipc/errors.hpp"
#include "uipc/syntax.hpp"

namespace uipc {

std::string_view calculus_name(Calculus c) {
  switch (c) {
    case Calculus::KS: return "KS";
    case Calculus::GLS: return "GLS";
    case Calculus::G4iP: return "G4iP";
    case Calculus::G4iSLt: return "G4iSLt";
  }
  return "?";
}

namespace {

bool is_classical(Calculus c) { return c == Calculus::KS || c == Calculus::GLS; }

const DerivationPtr& placeholder() {
  static const DerivationPtr leaf =
      std::make_shared<const Derivation>(Derivation{Rule::IdP, Sequent{}, {}});
  return leaf;
}

}  // namespace

Prover::Prover(Calculus calc) : calc_(calc) {}

void Prover::set_record_derivations(bool on) {
  if (on != record_) clear_cache();
  record_ = on;
}

DerivationPtr Prover::node(Rule r, const Sequent& s,
                           std::vector<DerivationPtr> premises) const {
  if (!record_) return placeholder();
  return std::make_shared<const Derivation>(Derivation{r, s, std::move(premises)});
}

void Prover::check_input(const Sequent& s) const {
  if (is_classical(calc_)) {
    auto core = [](const Formula& f) { return is_classical_core(f); };
    if (!std::all_of(s.left.begin(), s.left.end(), core) ||
        !std::all_of(s.right.begin(), s.right.end(), core))
      throw ContractError("classical calculi need desugared input (no & or |)");
  } else if (!s.is_singleton()) {
    throw ContractError("intuitionistic sequent needs exactly one succedent");
  }
}

Decision Prover::decide(const Sequent& s) {
  check_input(s);
  if (!record_ && !observer_) {
    const bool ok = is_classical(calc_) ? classical_verdict(s) : intuitionistic_verdict(s);
    return Decision{ok ? placeholder() : nullptr};
  }
  return Decision{search(s)};
}

// Formulas still to be decomposed, plus the atoms and boxes already placed.
// Duplicates are dropped on placement.
struct Prover::Frontier {
  std::vector<Formula> left, right;
  std::vector<Formula> left_imps, right_imps;
  bool closed = false;
  bool gls = false;

  static bool has(const std::vector<Formula>& v, const Formula& f) {
    return std::find(v.begin(), v.end(), f) != v.end();
  }
  void put_left(const Formula& f) {
    if (closed) return;
    if (f.is(Kind::Imp)) {
      if (!has(left_imps, f)) left_imps.push_back(f);
      return;
    }
    if (f.is(Kind::Bot) || ((f.is(Kind::Var) || (gls && f.is(Kind::Box))) && has(right, f))) {
      closed = true;
      return;
    }
    if (!has(left, f)) left.push_back(f);
  }
  void put_right(const Formula& f) {
    if (closed) return;
    if (f.is(Kind::Imp)) {
      if (!has(right_imps, f)) right_imps.push_back(f);
      return;
    }
    if ((f.is(Kind::Var) || (gls && f.is(Kind::Box))) && has(left, f)) {
      closed = true;
      return;
    }
    if (!has(right, f)) right.push_back(f);
  }
};

bool Prover::classical_verdict(const Sequent& s) {
  const Sequent key = contract(s);
  if (auto it = verdicts_.find(key); it != verdicts_.end()) return it->second;
  Frontier f;
  f.gls = calc_ == Calculus::GLS;
  for (const Formula& a : key.left) f.put_left(a);
  for (const Formula& a : key.right) f.put_right(a);
  const bool result = saturate(std::move(f));
  if (verdicts_.size() >= cache_limit_) verdicts_.clear();
  verdicts_.emplace(key, result);
  return result;
}

bool Prover::saturate(Frontier f) {
  while (!f.closed) {
    if (!f.right_imps.empty()) {
      const Formula g = f.right_imps.back();
      f.right_imps.pop_back();
      f.put_left(g.left());
      f.put_right(g.right());
      continue;
    }
    if (f.left_imps.empty()) break;
    const Formula g = f.left_imps.back();
    f.left_imps.pop_back();
    Frontier other = f;
    other.put_left(g.right());
    f.put_right(g.left());
    if (!saturate(std::move(f))) return false;
    return saturate(std::move(other));
  }
  if (f.closed) return true;

  Sequent leaf{FMultiset(f.left), FMultiset(f.right)};
  if (auto it = verdicts_.find(leaf); it != verdicts_.end()) return it->second;
  bool result = false;
  SequentBag premises = f.gls ? glr_premises(leaf) : kr_premises(leaf);
  for (const Sequent& p : premises) {
    if (classical_verdict(p)) {
      result = true;
      break;
    }
  }
  if (verdicts_.size() >= cache_limit_) verdicts_.clear();
  verdicts_.emplace(std::move(leaf), result);
  return result;
}

DerivationPtr Prover::search(const Sequent& s) {
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  DerivationPtr d =
      is_classical(calc_) ? search_classical(s) : search_intuitionistic(s);
  if (memo_.size() >= cache_limit_) memo_.clear();
  memo_.emplace(s, d);
  return d;
}

DerivationPtr Prover::search_classical(const Sequent& s) {
  // Axioms hold in any context, so they are tried before saturating.
  const bool gls = calc_ == Calculus::GLS;
  for (const Formula& f : s.left) {
    if (f.is(Kind::Bot)) return node(Rule::BotL, s);
  }
  for (const Formula& f : s.left) {
    if (f.is(Kind::Var) && s.right.contains(f)) return node(Rule::IdP, s);
    if (gls && f.is(Kind::Box) && s.right.contains(f)) return node(Rule::IdB, s);
  }

  if (auto step = saturation_step(s)) {
    std::vector<DerivationPtr> premises;
    for (const Sequent& p : step->premises) {
      if (observer_) observer_(s, p, step->rule);
      DerivationPtr d = search(p);
      if (!d) return nullptr;
      premises.push_back(std::move(d));
    }
    return node(step->rule, s, std::move(premises));
  }

  const Rule modal = gls ? Rule::GLR : Rule::KR;
  SequentBag premises = gls ? glr_premises(s) : kr_premises(s);
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (i > 0 && premises[i] == premises[i - 1]) continue;
    if (observer_) observer_(s, premises[i], modal);
    if (DerivationPtr d = search(premises[i])) return node(modal, s, {d});
  }
  return nullptr;
}

// Truth table over up to six variables with every box read as true. Bit i
// is the value under the valuation whose j-th variable is bit j of i.
std::uint64_t Prover::truth_table(const Formula& f) {
  if (auto it = tables_.find(f); it != tables_.end()) return it->second;
  static constexpr std::uint64_t kVarMasks[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  std::uint64_t t = 0;
  switch (f.kind()) {
    case Kind::Bot: t = 0; break;
    case Kind::Box: t = ~0ULL; break;
    case Kind::Var: {
      auto it = std::find(table_vars_.begin(), table_vars_.end(), f.name());
      if (it == table_vars_.end()) {
        if (table_vars_.size() == 6) {
          table_overflow_ = true;
          return 0;
        }
        table_vars_.push_back(f.name());
        it = table_vars_.end() - 1;
      }
      t = kVarMasks[it - table_vars_.begin()];
      break;
    }
    case Kind::And: t = truth_table(f.left()) & truth_table(f.right()); break;
    case Kind::Or: t = truth_table(f.left()) | truth_table(f.right()); break;
    case Kind::Imp: t = ~truth_table(f.left()) | truth_table(f.right()); break;
  }
  if (tables_.size() >= cache_limit_) tables_.clear();
  tables_.emplace(f, t);
  return t;
}

// Every iSL theorem stays a classical tautology when boxes are replaced by
// true, so a sequent failing this test is refuted without search. Returns
// true when the test cannot refute (including when too many variables occur).
bool Prover::boxes_as_top_tautology(const Sequent& s) {
  std::uint64_t t = ~0ULL;
  for (const Formula& f : s.left) t &= truth_table(f);
  t = ~t | truth_table(s.succedent());
  return table_overflow_ || t == ~0ULL;
}

bool Prover::intuitionistic_verdict(const Sequent& s) {
  const Sequent key = contract(s);
  if (auto it = verdicts_.find(key); it != verdicts_.end()) return it->second;
  const bool result = boxes_as_top_tautology(key) && reduce_invertible(key);
  if (verdicts_.size() >= cache_limit_) verdicts_.clear();
  verdicts_.emplace(key, result);
  return result;
}

bool Prover::reduce_invertible(const Sequent& s) {
  const IntCalculus calc =
      calc_ == Calculus::G4iP ? IntCalculus::G4iP : IntCalculus::G4iSLt;
  std::optional<RuleApp> single, branching;
  bool axiom = false;
  for_each_isl_application(s, calc, [&](RuleApp&& app) {
    if (app.premises.empty()) {
      axiom = true;
      return true;
    }
    if (!is_invertible(app.rule)) return true;
    if (app.premises.size() == 1) {
      single = std::move(app);
      return true;
    }
    if (!branching) branching = std::move(app);
    return false;
  });
  if (axiom) return true;
  if (single) return reduce_invertible(contract(single->premises.front()));
  if (branching) {
    for (const Sequent& p : branching->premises)
      if (!reduce_invertible(contract(p))) return false;
    return true;
  }

  if (auto it = verdicts_.find(s); it != verdicts_.end()) return it->second;
  bool result = false;
  for_each_isl_application(s, calc, [&](RuleApp&& app) {
    for (const Sequent& p : app.premises)
      if (!intuitionistic_verdict(p)) return false;
    result = true;
    return true;
  });
  if (verdicts_.size() >= cache_limit_) verdicts_.clear();
  verdicts_.emplace(s, result);
  return result;
}

DerivationPtr Prover::search_intuitionistic(const Sequent& s) {
  const IntCalculus calc =
      calc_ == Calculus::G4iP ? IntCalculus::G4iP : IntCalculus::G4iSLt;
  DerivationPtr result;
  for_each_isl_application(s, calc, [&](RuleApp&& app) {
    std::vector<DerivationPtr> premises;
    bool all = true;
    for (const Sequent& p : app.premises) {
      if (observer_) observer_(s, p, app.rule);
      DerivationPtr d = search(p);
      if (!d) {
        all = false;
        break;
      }
      premises.push_back(std::move(d));
    }
    if (all) {
      result = node(app.rule, s, std::move(premises));
      return true;
    }
    // A failed invertible rule means the conclusion is underivable.
    return !exhaustive_ && is_invertible(app.rule);
  });
  return result;
}

Decision decide(Calculus calc, const Sequent& s) {
  Prover prover(calc);
  return prover.decide(s);
}

namespace {

void render(const Derivation& d, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += print(d.conclusion, PrintStyle::Resugared);
  out += "   [";
  out += rule_name(d.rule);
  out += "]\n";
  for (const DerivationPtr& p : d.premises) render(*p, depth + 1, out);
}

}  // namespace

std::string render_derivation(const Derivation& d) {
  std::string out;
  render(d, 0, out);
  return out;
}

}  // namespace uipc
