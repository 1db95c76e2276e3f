// Acceptance suite: one PASS/FAIL line per criterion. Every budget and
// tolerance is a named constant below.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "uipc/calculus.hpp"
#include "uipc/errors.hpp"
#include "uipc/interpolation.hpp"
#include "uipc/oracle.hpp"
#include "uipc/provers.hpp"
#include "uipc/syntax.hpp"

using namespace uipc;

namespace {

// Budgets.
const std::vector<std::string> kVars{"p", "q"};
const std::string kP = "p";
constexpr unsigned kStrongnessWeight = 5;
constexpr unsigned kSequentPoolWeight = 4;   // criteria 2, 3, 5a, 7, 8
constexpr std::size_t kMaxLeft = 2;
constexpr unsigned kUniformityWeightClassical = 3;
constexpr unsigned kUniformityWeightIntuitionistic = 4;
constexpr unsigned kIslPoolWeight = 3;       // criterion 6
constexpr std::size_t kRandomSequents = 10000;
constexpr unsigned kRandomWeight = 6;
constexpr std::size_t kRandomMaxLeft = 3;
constexpr std::uint64_t kSeed = 0x5eed2024;
constexpr unsigned kOracleDepth = 1;
constexpr unsigned kOracleBranching = 2;
constexpr unsigned kSoundnessDepth = 2;
constexpr unsigned kSoundnessBranching = 2;
constexpr std::size_t kSoundnessStride = 97;  // every n-th provable sequent
constexpr std::size_t kGoldenRuns = 2;

// Tolerances: every criterion demands zero failures.
constexpr std::size_t kAllowedFailures = 0;

std::size_t g_measure_violations = 0;

struct Outcome {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string note;
  std::vector<std::string> samples;

  void fail(const std::string& what) {
    ++failures;
    if (samples.size() < 3) samples.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) fail(what);
  }
};

bool box_free(const Sequent& s) {
  for (const Formula& f : s.left)
    if (contains_box(f)) return false;
  for (const Formula& f : s.right)
    if (contains_box(f)) return false;
  return true;
}

std::vector<Formula> pool(Logic logic, unsigned weight) {
  std::vector<Formula> out;
  for (const Formula& f : enumerate_formulas(kVars, weight, dialect_of(logic)))
    if (logic != Logic::IL || !contains_box(f)) out.push_back(f);
  return out;
}

std::vector<Sequent> budget_sequents(Logic logic) {
  if (is_classical(logic)) return enumerate_sequents(pool(logic, kSequentPoolWeight), kMaxLeft, 0, 1);
  return enumerate_sequents(pool(logic, kSequentPoolWeight), kMaxLeft, 1, 1);
}

const std::array<Logic, 4> kLogics{Logic::K, Logic::GL, Logic::IL, Logic::iSL};

// Runs `body`, turning escaped exceptions into a failure.
void guarded(Outcome& o, const std::string& label, const std::function<void()>& body) {
  try {
    body();
  } catch (const MeasureViolation& e) {
    ++g_measure_violations;
    o.fail(label + ": measure violation: " + e.what());
  } catch (const std::exception& e) {
    o.fail(label + ": exception: " + e.what());
  }
}

Outcome criterion1() {
  Outcome o;
  auto check = [&](Calculus c, const char* text, bool expected) {
    bool got = decide(c, parse_sequent(text)).provable();
    o.expect(got == expected, std::string(calculus_name(c)) + " " + text);
  };
  const char* k = "=> [](p->q) -> []p -> []q";
  const char* gl = "=> []([]p->p) -> []p";
  const char* sl = "=> ([]p->p) -> p";
  check(Calculus::KS, k, true);
  check(Calculus::GLS, k, true);
  check(Calculus::GLS, gl, true);
  check(Calculus::KS, gl, false);
  check(Calculus::G4iSLt, sl, true);
  check(Calculus::G4iP, sl, false);
  Prover prover(Calculus::G4iSLt);
  std::size_t strongness = 0;
  for (const Formula& f : enumerate_formulas(kVars, kStrongnessWeight, Dialect::Intuitionistic)) {
    ++strongness;
    o.expect(prover.provable(isequent(FMultiset{f}, Formula::box(f))),
             "strongness " + print(f));
  }
  o.note = "6 axiom checks, " + std::to_string(strongness) + " strongness instances";
  return o;
}

// Criteria 2 and 3 share their inputs.
struct InterpolantSweep {
  Outcome freeness;
  Outcome implication;
};

InterpolantSweep criteria2and3() {
  InterpolantSweep r;
  for (Logic logic : kLogics) {
    Interpolator interp(logic, kP);
    EntailmentOracle oracle(logic);
    for (const Formula& phi : pool(logic, kSequentPoolWeight)) {
      guarded(r.freeness, print(phi), [&] {
        for (Quantifier q : {Quantifier::Forall, Quantifier::Exists}) {
          Formula out = interp.quantify(q, phi);
          r.freeness.expect(!vars(out).count(kP),
                            std::string(logic_name(logic)) + " quantifier " + print(phi));
        }
      });
    }
    for (const Sequent& s : budget_sequents(logic)) {
      const std::string label = std::string(logic_name(logic)) + " " + print(s);
      guarded(r.freeness, label, [&] {
        const Formula a = interp.A(s);
        const Formula e = interp.E(s.left);
        r.freeness.expect(!vars(a).count(kP), label + " A");
        r.freeness.expect(!vars(e).count(kP), label + " E");
        r.implication.expect(oracle.provable(Sequent{s.left.with(a), s.right}), label + " A-implication");
        r.implication.expect(oracle.provable(Sequent{s.left, FMultiset{e}}), label + " E-implication");
      });
    }
  }
  return r;
}

Outcome criterion4() {
  Outcome o;
  std::ostringstream note;
  for (Logic logic : kLogics) {
    unsigned w = is_classical(logic) ? kUniformityWeightClassical : kUniformityWeightIntuitionistic;
    guarded(o, std::string(logic_name(logic)), [&] {
      UniformityReport rep = uniformity_harness(logic, kP, kVars, w);
      o.checked += rep.pairs_checked;
      for (const UniformityViolation& v : rep.violations)
        o.fail(std::string(logic_name(logic)) + " " + v.property + " " + print(v.phi));
      note << logic_name(logic) << ":" << rep.pairs_checked << " pairs ";
    });
  }
  o.note = note.str();
  return o;
}

Sequent glr_residue(const Sequent& s) {
  std::vector<Formula> left;
  for (const Formula& f : s.left)
    if (f.is(Kind::Box)) {
      left.push_back(f.arg());
      left.push_back(f);
    }
  return Sequent{FMultiset(std::move(left)), {}};
}

Outcome criterion5() {
  Outcome o;
  ClassicalInterpolator gl(Logic::GL, kP);
  EntailmentOracle oracle(Logic::GL);
  std::size_t critical = 0;
  for (const Sequent& s : budget_sequents(Logic::K)) {
    if (!is_critical(s)) continue;
    ++critical;
    guarded(o, print(s), [&] {
      const Sequent rest = glr_residue(s);
      std::vector<Formula> ns;
      for (const Sequent& t : canopy(contract(rest))) ns.push_back(gl.n(s, t));
      Formula lhs = dia(big_and(ns));
      Formula rhs = dia(gl.a(rest));
      o.expect(oracle.equivalent(lhs, rhs), "equivalence (1) at " + print(s));
    });
  }
  const std::vector<Formula> atoms{parse_formula("p"), parse_formula("q"),
                                   parse_formula("F"), parse_formula("[]p")};
  std::vector<std::vector<Formula>> alphas;
  for (const Formula& a : atoms) alphas.push_back({a});
  for (const Formula& a : atoms)
    for (const Formula& b : atoms) alphas.push_back({a, b});
  std::size_t fixed_points = 0;
  for (const auto& alpha : alphas) {
    for (const Formula& beta : atoms) {
      ++fixed_points;
      Formula core = Formula::conj(big_and(alpha), beta);
      std::vector<Formula> weakened;
      for (const Formula& a : alpha) weakened.push_back(Formula::disj(a, dia(core)));
      Formula lhs = dia(Formula::conj(big_and(weakened), beta));
      Formula rhs = dia(core);
      o.expect(oracle.equivalent(lhs, rhs), "fixed point " + print(lhs, PrintStyle::Resugared));
    }
  }
  const Sequent single = parse_sequent("p->q =>");
  const Sequent doubled = parse_sequent("p->q, p->q =>");
  const Sequent witness = parse_sequent("q => p");
  auto has = [&](const SequentBag& bag) {
    return std::find(bag.begin(), bag.end(), witness) != bag.end();
  };
  o.expect(!has(canopy(single)), "canopy of p->q => contains q => p");
  o.expect(has(canopy(doubled)), "canopy of p->q, p->q => lacks q => p");
  o.expect(oracle.equivalent(gl.a(single), gl.a(doubled)), "GL interpolants of the contraction pair");
  o.note = std::to_string(critical) + " critical sequents, " + std::to_string(fixed_points) +
           " fixed-point instances, contraction pair";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::vector<Formula> small = enumerate_formulas(kVars, kIslPoolWeight, Dialect::Intuitionistic);
  IntuitionisticInterpolator isl(Logic::iSL, kP);
  Prover prover(Calculus::G4iSLt);
  std::size_t box_lift = 0, unbox_closure = 0, box_free_inputs = 0;
  for (const Sequent& s : enumerate_sequents(small, kMaxLeft, 0, 0)) {
    ++box_lift;
    guarded(o, print(s), [&] {
      Formula lhs = isl.e(s.left);
      Formula rhs = Formula::box(isl.e(unbox(s.left)));
      o.expect(prover.provable(isequent(FMultiset{lhs}, rhs)), "E not lifted under a box at " + print(s));
    });
  }
  for (const Sequent& s : enumerate_sequents(small, kMaxLeft, 1, 1)) {
    if (!prover.provable(s)) continue;
    for (const Formula& f : s.left.distinct()) {
      if (!f.is(Kind::Box)) continue;
      ++unbox_closure;
      Sequent weaker{s.left.without(f).with(f.arg()), s.right};
      o.expect(prover.provable(weaker), "unboxing an antecedent lost provability at " + print(s));
    }
  }
  IntuitionisticInterpolator il(Logic::IL, kP);
  IntuitionisticInterpolator isl2(Logic::iSL, kP);
  for (const Sequent& s : budget_sequents(Logic::IL)) {
    if (!box_free(s)) continue;
    ++box_free_inputs;
    guarded(o, print(s), [&] {
      o.expect(il.a(s) == isl2.a(s), "IL and iSL A differ at " + print(s));
      o.expect(il.e(s.left) == isl2.e(s.left), "IL and iSL E differ at " + print(s));
    });
  }
  o.note = std::to_string(box_lift) + " box-lift, " + std::to_string(unbox_closure) + " unbox-closure, " +
           std::to_string(box_free_inputs) + " box-free comparisons";
  return o;
}

Outcome criterion7(std::uint64_t checks_before) {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::size_t premises = 0;
  for (std::size_t i = 0; i < kRandomSequents; ++i) {
    Sequent s = random_isequent(rng, kVars, kRandomWeight, kRandomMaxLeft);
    for (const RuleApp& app : isl_applications(s, IntCalculus::G4iSLt))
      for (const Sequent& prem : app.premises) {
        ++premises;
        o.expect(isl_seq_less(prem, s), "premise order at " + print(s));
      }
  }
  std::size_t edges = 0;
  Prover gls(Calculus::GLS);
  gls.set_edge_observer([&](const Sequent& from, const Sequent& to, Rule rule) {
    ++edges;
    o.expect(theta_less(theta(to), theta(from)),
             std::string(rule_name(rule)) + " edge " + print(from) + " to " + print(to));
  });
  for (const Sequent& s : budget_sequents(Logic::K)) gls.decide(s);
  o.expect(g_measure_violations == 0, "measure assertions fired");
  o.expect(checks_before > 0, "measure assertions were not exercised");
  o.note = std::to_string(premises) + " premises, " + std::to_string(edges) + " GLS edges, " +
           std::to_string(checks_before) + " measure checks, " +
           std::to_string(g_measure_violations) + " measure violations";
  return o;
}

Outcome criterion8() {
  Outcome o;
  Prover ks(Calculus::KS), gls(Calculus::GLS);
  std::size_t considered = 0, k_seen = 0, gl_seen = 0, sound_checks = 0;
  for (const Sequent& s : budget_sequents(Logic::K)) {
    unsigned depth = 0;
    for (const Formula& f : s.left) depth = std::max(depth, modal_depth(f));
    for (const Formula& f : s.right) depth = std::max(depth, modal_depth(f));
    const bool k_provable = ks.provable(s);
    if (depth <= 1) {
      ++considered;
      bool no_model = !semantic_check(Frames::K, s, kOracleDepth, kOracleBranching).has_value();
      o.expect(k_provable == no_model, "K agreement at " + print(s));
    }
    if (k_provable && k_seen++ % kSoundnessStride == 0) {
      ++sound_checks;
      o.expect(!semantic_check(Frames::K, s, kSoundnessDepth, kSoundnessBranching),
               "K soundness at " + print(s));
    }
    if (gls.provable(s) && gl_seen++ % kSoundnessStride == 0) {
      ++sound_checks;
      o.expect(!semantic_check(Frames::GL, s, kSoundnessDepth, kSoundnessBranching),
               "GL soundness at " + print(s));
    }
  }
  o.note = std::to_string(considered) + " depth-1 sequents, " + std::to_string(sound_checks) +
           " depth-2 soundness checks";
  return o;
}

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(UIPCALC_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return out + "#status=" + std::to_string(status);
}

Outcome criterion9() {
  Outcome o;
  const std::vector<std::string> corpus{
      "--logic K --var p --A --sequent 'p => q'",
      "--logic K --var p --A --sequent 'p => p'",
      "--logic K --var p --A --sequent '=>'",
      "--logic K --var p --E --sequent 'p =>'",
      "--logic K --var p --exists --formula 'p'",
      "--logic K --var p --forall --formula '[]p -> q'",
      "--logic K --var q --A --sequent '[](p->q), []p => []q'",
      "--logic GL --var p --A --sequent '[]q => []q'",
      "--logic GL --var p --A --sequent 'p->q, p->q =>'",
      "--logic GL --var p --forall --formula '[]([]p->p) -> []p'",
      "--logic GL --var q --exists --formula '<>q & []p'",
      "--logic IL --var p --exists --formula 'p & q'",
      "--logic IL --var p --forall --formula 'p | ~p'",
      "--logic IL --var p --A --sequent 'p->q, p => q'",
      "--logic iSL --var p --exists --formula 'p'",
      "--logic iSL --var p --forall --formula 'p'",
      "--logic iSL --var p --A --sequent '=> []p'",
      "--logic iSL --var p --E --sequent '[]p, q->p =>'",
      "--logic iSL --var p --forall --sequent '[]p -> q => q' --json",
      "--logic K --var p --A --sequent 'p => q' --simplify",
  };
  std::vector<std::vector<std::string>> runs(kGoldenRuns);
  for (std::size_t r = 0; r < kGoldenRuns; ++r)
    for (const std::string& req : corpus) runs[r].push_back(run_cli("compute " + req));
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t r = 1; r < kGoldenRuns; ++r)
      o.expect(runs[r][i] == runs[0][i], "nondeterministic output for " + corpus[i]);
  o.expect(runs[0][0] == "q | F | F | <>F\n#status=0", "golden K (p => q): got " + runs[0][0]);
  o.note = std::to_string(corpus.size()) + " requests x " + std::to_string(kGoldenRuns) + " runs";
  return o;
}

bool report(int id, const std::string& title, const Outcome& o, double seconds) {
  const bool pass = o.failures <= kAllowedFailures && o.checked > 0;
  std::printf("[%s] criterion %d %s: %zu checks, %zu failures (%s) %.1fs\n",
              pass ? "PASS" : "FAIL", id, title.c_str(), o.checked, o.failures,
              o.note.c_str(), seconds);
  for (const std::string& s : o.samples) std::printf("       e.g. %s\n", s.c_str());
  std::fflush(stdout);
  return pass;
}

template <class F>
auto timed(F&& f, double& seconds) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

int main() {
  set_measure_checks(true);
  bool all = true;
  double t = 0;

  Outcome c1 = timed(criterion1, t);
  all &= report(1, "axiom suite", c1, t);

  InterpolantSweep sweep = timed(criteria2and3, t);
  all &= report(2, "p-freeness", sweep.freeness, t);
  all &= report(3, "implication", sweep.implication, 0);

  Outcome c4 = timed(criterion4, t);
  all &= report(4, "uniformity", c4, t);
  Outcome c5 = timed(criterion5, t);
  all &= report(5, "GL specifics", c5, t);
  Outcome c6 = timed(criterion6, t);
  all &= report(6, "iSL specifics", c6, t);

  const std::uint64_t checks = measure_checks_performed();
  set_measure_checks(false);
  Outcome c7 = timed([&] { return criterion7(checks); }, t);
  all &= report(7, "ordering and termination", c7, t);
  Outcome c8 = timed(criterion8, t);
  all &= report(8, "oracle agreement", c8, t);
  Outcome c9 = timed(criterion9, t);
  all &= report(9, "determinism and golden output", c9, t);

  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
