#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>

#include "uipc/errors.hpp"
#include "uipc/interpolation.hpp"
#include "uipc/syntax.hpp"

namespace uipc {

namespace {

bool env_checks() {
  const char* v = std::getenv("UIPCALC_DEBUG_ASSERTS");
  return v != nullptr && std::strcmp(v, "1") == 0;
}

std::atomic<bool> g_checks{env_checks()};
std::atomic<std::uint64_t> g_checked{0};

// Measures of the E/A calls currently on this thread's stack.
thread_local std::vector<FMultiset> t_measures;

class MeasureFrame {
 public:
  explicit MeasureFrame(FMultiset m) : active_(g_checks.load(std::memory_order_relaxed)) {
    if (!active_) return;
    if (!t_measures.empty()) {
      g_checked.fetch_add(1, std::memory_order_relaxed);
      if (!weight_ms_less(m, t_measures.back()))
        throw MeasureViolation("interpolant recursion does not decrease the measure");
    }
    t_measures.push_back(std::move(m));
  }
  ~MeasureFrame() {
    if (active_) t_measures.pop_back();
  }
  MeasureFrame(const MeasureFrame&) = delete;
  MeasureFrame& operator=(const MeasureFrame&) = delete;

 private:
  bool active_;
};

std::vector<Formula> sorted_unique(std::vector<Formula> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

void set_measure_checks(bool on) { g_checks.store(on); }
bool measure_checks_enabled() { return g_checks.load(); }
std::uint64_t measure_checks_performed() { return g_checked.load(); }

IntuitionisticInterpolator::IntuitionisticInterpolator(Logic logic, std::string var)
    : logic_(logic), var_(std::move(var)) {
  if (is_classical(logic_)) throw ContractError("intuitionistic interpolator needs IL or iSL");
  if (!is_identifier(var_)) throw ContractError("not a variable name: " + var_);
}

void IntuitionisticInterpolator::check_formulas(const FMultiset& m) const {
  if (logic_ != Logic::IL) return;
  for (const Formula& f : m)
    if (contains_box(f)) throw ContractError("IL formulas cannot contain boxes: " + print(f));
}

Formula IntuitionisticInterpolator::e(const FMultiset& gamma) {
  check_formulas(gamma);
  return e_rec(gamma);
}

Formula IntuitionisticInterpolator::a(const Sequent& s) {
  if (!s.is_singleton()) throw ContractError("intuitionistic sequent needs exactly one succedent");
  check_formulas(s.left);
  check_formulas(s.right);
  return a_rec(s);
}

std::vector<Formula> IntuitionisticInterpolator::e_contributions(const FMultiset& gamma) {
  check_formulas(gamma);
  MeasureFrame frame(gamma);
  return e_rows(gamma);
}

std::vector<Formula> IntuitionisticInterpolator::a_contributions(const Sequent& s) {
  if (!s.is_singleton()) throw ContractError("intuitionistic sequent needs exactly one succedent");
  check_formulas(s.left);
  check_formulas(s.right);
  MeasureFrame frame(isl_measure(s));
  return a_rows(s);
}

Formula IntuitionisticInterpolator::e_rec(const FMultiset& gamma) {
  MeasureFrame frame(gamma);
  if (auto it = e_memo_.find(gamma); it != e_memo_.end()) return it->second;
  Formula result = big_and(e_rows(gamma));
  e_memo_.emplace(gamma, result);
  return result;
}

Formula IntuitionisticInterpolator::a_rec(const Sequent& s) {
  MeasureFrame frame(isl_measure(s));
  if (auto it = a_memo_.find(s); it != a_memo_.end()) return it->second;
  Formula result = big_or(a_rows(s));
  a_memo_.emplace(s, result);
  return result;
}

std::vector<Formula> IntuitionisticInterpolator::e_rows(const FMultiset& gamma) {
  const bool isl = logic_ == Logic::iSL;
  const Formula p = Formula::var(var_);
  auto atom = [&](const Formula& f) { return f.is(Kind::Var) && f.name() != var_; };
  auto E = [&](const FMultiset& m) { return e_rec(m); };
  auto A = [&](const FMultiset& m, const Formula& goal) { return a_rec(isequent(m, goal)); };

  std::vector<Formula> out;
  for (const Formula& f : gamma.distinct()) {
    const FMultiset rest = gamma.without(f);
    switch (f.kind()) {
      case Kind::Bot:
        out.push_back(Formula::bot());
        break;
      case Kind::Var:
        if (atom(f)) out.push_back(Formula::conj(E(rest), f));
        break;
      case Kind::And:
        out.push_back(E(rest.with({f.left(), f.right()})));
        break;
      case Kind::Or:
        out.push_back(Formula::disj(E(rest.with(f.left())), E(rest.with(f.right()))));
        break;
      case Kind::Box:
        if (isl) out.push_back(Formula::box(E(unbox(rest).with(f.arg()))));
        break;
      case Kind::Imp: {
        const Formula& ante = f.left();
        const Formula& cons = f.right();
        switch (ante.kind()) {
          case Kind::Var:
            if (atom(ante)) {
              out.push_back(Formula::imp(ante, E(rest.with(cons))));
            } else if (rest.contains(p)) {
              out.push_back(E(rest.with(cons)));
            }
            break;
          case Kind::And: {
            Formula curried =
                Formula::imp(ante.left(), Formula::imp(ante.right(), cons));
            out.push_back(E(rest.with(curried)));
            break;
          }
          case Kind::Or:
            out.push_back(E(rest.with({Formula::imp(ante.left(), cons),
                                       Formula::imp(ante.right(), cons)})));
            break;
          case Kind::Imp: {
            const FMultiset ctx = rest.with(Formula::imp(ante.right(), cons));
            Formula guard = Formula::imp(E(ctx), A(ctx, ante));
            out.push_back(Formula::imp(guard, E(rest.with(cons))));
            break;
          }
          case Kind::Box:
            if (isl) {
              const FMultiset ctx = unbox(rest).with({cons, ante});
              Formula guard = Formula::box(Formula::imp(E(ctx), A(ctx, ante.arg())));
              out.push_back(Formula::imp(guard, E(rest.with(cons))));
            }
            break;
          case Kind::Bot:
            break;
        }
        break;
      }
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<Formula> IntuitionisticInterpolator::a_rows(const Sequent& s) {
  const bool isl = logic_ == Logic::iSL;
  const Formula p = Formula::var(var_);
  const Formula& goal = s.succedent();
  const FMultiset& gamma = s.left;
  auto atom = [&](const Formula& f) { return f.is(Kind::Var) && f.name() != var_; };
  auto E = [&](const FMultiset& m) { return e_rec(m); };
  auto A = [&](const FMultiset& m, const Formula& g) { return a_rec(isequent(m, g)); };

  std::vector<Formula> out;
  for (const Formula& f : gamma.distinct()) {
    const FMultiset rest = gamma.without(f);
    switch (f.kind()) {
      case Kind::Var:
        if (atom(f)) out.push_back(A(rest, goal));
        break;
      case Kind::And:
        out.push_back(A(rest.with({f.left(), f.right()}), goal));
        break;
      case Kind::Or: {
        const FMultiset l = rest.with(f.left());
        const FMultiset r = rest.with(f.right());
        out.push_back(Formula::conj(Formula::imp(E(l), A(l, goal)),
                                    Formula::imp(E(r), A(r, goal))));
        break;
      }
      case Kind::Imp: {
        const Formula& ante = f.left();
        const Formula& cons = f.right();
        switch (ante.kind()) {
          case Kind::Var:
            if (atom(ante)) {
              out.push_back(Formula::conj(ante, A(rest.with(cons), goal)));
            } else if (rest.contains(p)) {
              out.push_back(A(rest.with(cons), goal));
            }
            break;
          case Kind::And: {
            Formula curried =
                Formula::imp(ante.left(), Formula::imp(ante.right(), cons));
            out.push_back(A(rest.with(curried), goal));
            break;
          }
          case Kind::Or:
            out.push_back(A(rest.with({Formula::imp(ante.left(), cons),
                                       Formula::imp(ante.right(), cons)}),
                            goal));
            break;
          case Kind::Imp: {
            const FMultiset ctx = rest.with(Formula::imp(ante.right(), cons));
            Formula guard = Formula::imp(E(ctx), A(ctx, ante));
            out.push_back(Formula::conj(guard, A(rest.with(cons), goal)));
            break;
          }
          case Kind::Box:
            if (isl) {
              const FMultiset ctx = unbox(rest).with({cons, ante});
              Formula guard = Formula::box(Formula::imp(E(ctx), A(ctx, ante.arg())));
              out.push_back(Formula::conj(guard, A(rest.with(cons), goal)));
            }
            break;
          case Kind::Bot:
            break;
        }
        break;
      }
      case Kind::Bot:
      case Kind::Box:
        break;
    }
  }

  switch (goal.kind()) {
    case Kind::Var:
      if (atom(goal)) {
        out.push_back(goal);
      } else if (gamma.contains(p)) {
        out.push_back(top());
      }
      break;
    case Kind::And:
      out.push_back(Formula::conj(A(gamma, goal.left()), A(gamma, goal.right())));
      break;
    case Kind::Or:
      out.push_back(Formula::disj(A(gamma, goal.left()), A(gamma, goal.right())));
      break;
    case Kind::Imp: {
      const FMultiset ctx = gamma.with(goal.left());
      out.push_back(Formula::imp(E(ctx), A(ctx, goal.right())));
      break;
    }
    case Kind::Box:
      if (isl) {
        const FMultiset ctx = unbox(gamma).with(goal);
        out.push_back(Formula::box(Formula::imp(E(ctx), A(ctx, goal.arg()))));
      }
      break;
    case Kind::Bot:
      break;
  }
  return sorted_unique(std::move(out));
}

Formula e_isl(Logic logic, std::string_view p, const FMultiset& gamma) {
  return IntuitionisticInterpolator(logic, std::string(p)).e(gamma);
}

Formula a_isl(Logic logic, std::string_view p, const Sequent& s) {
  return IntuitionisticInterpolator(logic, std::string(p)).a(s);
}

}  // namespace uipc
