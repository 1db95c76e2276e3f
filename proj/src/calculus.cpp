#include "uipc/calculus.hpp"

#include <algorithm>

#include "uipc/errors.hpp"

namespace uipc {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::IdP: return "IdP";
    case Rule::BotL: return "BotL";
    case Rule::ImpR: return "ImpR";
    case Rule::ImpL: return "ImpL";
    case Rule::KR: return "KR";
    case Rule::GLR: return "GLR";
    case Rule::IdB: return "IdB";
    case Rule::AndL: return "AndL";
    case Rule::AndR: return "AndR";
    case Rule::OrL: return "OrL";
    case Rule::OrR1: return "OrR1";
    case Rule::OrR2: return "OrR2";
    case Rule::AndImpL: return "AndImpL";
    case Rule::OrImpL: return "OrImpL";
    case Rule::AtomImpL: return "AtomImpL";
    case Rule::ImpImpL: return "ImpImpL";
    case Rule::BoxR: return "BoxR";
    case Rule::BoxImpL: return "BoxImpL";
  }
  return "?";
}

namespace {

RuleApp imp_right(const Sequent& s, const Formula& f) {
  Sequent prem{s.left.with(f.left()), s.right.without(f).with(f.right())};
  return RuleApp{Rule::ImpR, {f}, {std::move(prem)}};
}

RuleApp imp_left(const Sequent& s, const Formula& f) {
  FMultiset rest = s.left.without(f);
  Sequent first{rest, s.right.with(f.left())};
  Sequent second{rest.with(f.right()), s.right};
  return RuleApp{Rule::ImpL, {f}, {std::move(first), std::move(second)}};
}

void saturate(const Sequent& s, SequentBag& out) {
  auto step = saturation_step(s);
  if (!step) {
    out.push_back(s);
    return;
  }
  for (const Sequent& p : step->premises) saturate(p, out);
}

// The multiset Γ′ such that □Γ′ is the boxed part of the left side.
FMultiset boxed_left_contents(const Sequent& s) {
  std::vector<Formula> out;
  for (const Formula& f : s.left)
    if (f.is(Kind::Box)) out.push_back(f.arg());
  return FMultiset(std::move(out));
}

FMultiset boxed_left(const Sequent& s) {
  std::vector<Formula> out;
  for (const Formula& f : s.left)
    if (f.is(Kind::Box)) out.push_back(f);
  return FMultiset(std::move(out));
}

}  // namespace

std::optional<RuleApp> saturation_step(const Sequent& s) {
  for (const Formula& f : s.right)
    if (f.is(Kind::Imp)) return imp_right(s, f);
  for (const Formula& f : s.left)
    if (f.is(Kind::Imp)) return imp_left(s, f);
  return std::nullopt;
}

SequentBag canopy(const Sequent& s) {
  SequentBag out;
  saturate(s, out);
  std::sort(out.begin(), out.end());
  return out;
}

SequentBag kr_premises(const Sequent& s) {
  FMultiset gamma = boxed_left_contents(s);
  SequentBag out;
  for (const Formula& f : s.right)
    if (f.is(Kind::Box)) out.push_back(Sequent{gamma, FMultiset{f.arg()}});
  std::sort(out.begin(), out.end());
  return out;
}

SequentBag glr_premises(const Sequent& s) {
  FMultiset context = boxed_left_contents(s) + boxed_left(s);
  SequentBag out;
  for (const Formula& f : s.right)
    if (f.is(Kind::Box))
      out.push_back(Sequent{context.with(f), FMultiset{f.arg()}});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RuleApp> classical_applications(const Sequent& s,
                                            ClassicalCalculus calc) {
  std::vector<RuleApp> out;
  for (const Formula& f : s.left.distinct()) {
    if (f.is(Kind::Bot)) out.push_back({Rule::BotL, {f}, {}});
    if (f.is(Kind::Var) && s.right.contains(f)) out.push_back({Rule::IdP, {f}, {}});
    if (calc == ClassicalCalculus::GLS && f.is(Kind::Box) && s.right.contains(f))
      out.push_back({Rule::IdB, {f}, {}});
  }
  for (const Formula& f : s.right.distinct())
    if (f.is(Kind::Imp)) out.push_back(imp_right(s, f));
  for (const Formula& f : s.left.distinct())
    if (f.is(Kind::Imp)) out.push_back(imp_left(s, f));
  SequentBag modal =
      calc == ClassicalCalculus::KS ? kr_premises(s) : glr_premises(s);
  for (Sequent& p : modal) {
    Formula diagonal = Formula::box(p.right.items().front());
    out.push_back({calc == ClassicalCalculus::KS ? Rule::KR : Rule::GLR,
                   {diagonal},
                   {std::move(p)}});
  }
  return out;
}

bool is_invertible(Rule r) {
  switch (r) {
    case Rule::AndL:
    case Rule::OrL:
    case Rule::ImpR:
    case Rule::AndR:
    case Rule::AndImpL:
    case Rule::OrImpL:
    case Rule::AtomImpL:
      return true;
    default:
      return false;
  }
}

void for_each_isl_application(const Sequent& s, IntCalculus calc,
                              const std::function<bool(RuleApp&&)>& visit) {
  const Formula& goal = s.succedent();
  const FMultiset& gamma = s.left;
  auto emit = [&](Rule r, std::vector<Formula> principal,
                  std::vector<Sequent> premises) {
    return visit(RuleApp{r, std::move(principal), std::move(premises)});
  };
  auto goal_seq = [](FMultiset left, Formula right) {
    return isequent(std::move(left), std::move(right));
  };

  // Axioms.
  if (gamma.contains(Formula::bot()) && emit(Rule::BotL, {Formula::bot()}, {}))
    return;
  if (goal.is(Kind::Var) && gamma.contains(goal) && emit(Rule::IdP, {goal}, {}))
    return;

  // Invertible rules.
  for (const Formula& f : gamma) {
    if (!f.is(Kind::And)) continue;
    if (emit(Rule::AndL, {f},
             {goal_seq(gamma.without(f).with({f.left(), f.right()}), goal)}))
      return;
  }
  for (const Formula& f : gamma) {
    if (!f.is(Kind::Or)) continue;
    FMultiset rest = gamma.without(f);
    if (emit(Rule::OrL, {f},
             {goal_seq(rest.with(f.left()), goal),
              goal_seq(rest.with(f.right()), goal)}))
      return;
  }
  if (goal.is(Kind::Imp) &&
      emit(Rule::ImpR, {goal}, {goal_seq(gamma.with(goal.left()), goal.right())}))
    return;
  if (goal.is(Kind::And) &&
      emit(Rule::AndR, {goal},
           {goal_seq(gamma, goal.left()), goal_seq(gamma, goal.right())}))
    return;
  for (const Formula& f : gamma) {
    if (!f.is(Kind::Imp) || !f.left().is(Kind::And)) continue;
    const Formula& a = f.left().left();
    const Formula& b = f.left().right();
    Formula curried = Formula::imp(a, Formula::imp(b, f.right()));
    if (emit(Rule::AndImpL, {f}, {goal_seq(gamma.without(f).with(curried), goal)}))
      return;
  }
  for (const Formula& f : gamma) {
    if (!f.is(Kind::Imp) || !f.left().is(Kind::Or)) continue;
    Formula first = Formula::imp(f.left().left(), f.right());
    Formula second = Formula::imp(f.left().right(), f.right());
    if (emit(Rule::OrImpL, {f},
             {goal_seq(gamma.without(f).with({first, second}), goal)}))
      return;
  }
  for (const Formula& f : gamma) {
    if (!f.is(Kind::Imp) || !f.left().is(Kind::Var)) continue;
    if (!gamma.contains(f.left())) continue;
    if (emit(Rule::AtomImpL, {f.left(), f},
             {goal_seq(gamma.without(f).with(f.right()), goal)}))
      return;
  }

  // Non-invertible rules.
  if (goal.is(Kind::Or)) {
    if (emit(Rule::OrR1, {goal}, {goal_seq(gamma, goal.left())})) return;
    if (emit(Rule::OrR2, {goal}, {goal_seq(gamma, goal.right())})) return;
  }
  for (const Formula& f : gamma) {
    if (!f.is(Kind::Imp) || !f.left().is(Kind::Imp)) continue;
    const Formula& b = f.left().right();
    const Formula& c = f.right();
    FMultiset rest = gamma.without(f);
    if (emit(Rule::ImpImpL, {f},
             {goal_seq(rest.with(Formula::imp(b, c)), f.left()),
              goal_seq(rest.with(c), goal)}))
      return;
  }
  if (calc == IntCalculus::G4iP) return;
  if (goal.is(Kind::Box) &&
      emit(Rule::BoxR, {goal},
           {goal_seq(unbox(gamma).with(goal), goal.arg())}))
    return;
  for (const Formula& f : gamma) {
    if (!f.is(Kind::Imp) || !f.left().is(Kind::Box)) continue;
    const Formula& boxed = f.left();
    FMultiset rest = gamma.without(f);
    if (emit(Rule::BoxImpL, {f},
             {goal_seq(unbox(rest).with({boxed, f.right()}), boxed.arg()),
              goal_seq(rest.with(f.right()), goal)}))
      return;
  }
}

std::vector<RuleApp> isl_applications(const Sequent& s, IntCalculus calc) {
  std::vector<RuleApp> out;
  for_each_isl_application(s, calc, [&](RuleApp&& app) {
    out.push_back(std::move(app));
    return false;
  });
  return out;
}

}  // namespace uipc
