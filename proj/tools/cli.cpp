#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <random>
#include <sstream>

#include "uipc/calculus.hpp"
#include "uipc/errors.hpp"
#include "uipc/interpolation.hpp"
#include "uipc/oracle.hpp"
#include "uipc/provers.hpp"
#include "uipc/syntax.hpp"

namespace uipc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Logic logic_option(const std::string& text) {
  if (auto l = parse_logic(text)) return *l;
  throw UsageError("unknown logic '" + text + "' (expected K, GL, IL or iSL)");
}

Sequent desugar_if(Logic logic, const Sequent& s) {
  if (!is_classical(logic)) return s;
  std::vector<Formula> l, r;
  for (const Formula& f : s.left) l.push_back(desugar_classical(f));
  for (const Formula& f : s.right) r.push_back(desugar_classical(f));
  return Sequent{FMultiset(std::move(l)), FMultiset(std::move(r))};
}

struct ComputeArgs {
  std::string logic, var, formula, sequent;
  bool forall = false, exists = false, a = false, e = false;
  bool simplify = false, json = false;
  bool has_formula = false;
};

int compute(const ComputeArgs& args, std::ostream& out) {
  const Logic logic = logic_option(args.logic);
  if (!is_identifier(args.var)) throw UsageError("--var needs a variable name");
  Interpolator interp(logic, args.var);
  Formula result;
  if (args.has_formula) {
    const Formula phi = parse_formula(args.formula);
    if (args.forall) result = interp.quantify(Quantifier::Forall, phi);
    else if (args.exists) result = interp.quantify(Quantifier::Exists, phi);
    else if (args.a) result = interp.A(Sequent{{}, FMultiset{phi}});
    else result = interp.E(FMultiset{phi});
  } else {
    const Sequent s = parse_sequent(args.sequent);
    if (args.e || args.exists) {
      if (!s.right.empty())
        throw UsageError("--E and --exists take an antecedent only (\"G =>\")");
      result = interp.E(s.left);
    } else if (args.forall) {
      result = interp.forall_sequent(s);
    } else {
      result = interp.A(s);
    }
  }
  if (args.simplify) result = simplify(result);
  out << (args.json ? to_json(result) : print(result, PrintStyle::Resugared)) << "\n";
  return kOk;
}

int prove(const std::string& logic_text, const std::string& sequent, bool tree,
          std::ostream& out) {
  const Logic logic = logic_option(logic_text);
  const Sequent s = desugar_if(logic, parse_sequent(sequent));
  Prover prover(calculus_for(logic));
  Decision d = prover.decide(s);
  out << (d.provable() ? "provable" : "refuted") << "\n";
  if (tree && d.derivation) out << render_derivation(*d.derivation);
  return d.provable() ? kOk : kNegative;
}

int show_canopy(const std::string& sequent, std::ostream& out) {
  const Sequent s = desugar_if(Logic::K, parse_sequent(sequent));
  for (const Sequent& leaf : canopy(s)) out << print(leaf, PrintStyle::Resugared) << "\n";
  return kOk;
}

struct SelftestArgs {
  unsigned vars = 2;
  unsigned max_weight = 3;
  std::string logics = "K,GL,IL,iSL";
  std::uint64_t seed = 0;
  unsigned samples = 200;
};

std::vector<Logic> logic_list(const std::string& text) {
  std::vector<Logic> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(logic_option(item));
  }
  if (out.empty()) throw UsageError("--logics is empty");
  return out;
}

// Seeded sample of sequents checked for p-freeness, the implication
// obligations, and valid derivations; G4iSLt premises are also checked to be
// smaller than their conclusions.
std::size_t sampled_invariants(Logic logic, const std::vector<std::string>& names,
                               const SelftestArgs& args, std::ostream& out) {
  using Json = nlohmann::ordered_json;
  std::mt19937_64 rng(args.seed);
  const std::string p = names.front();
  Interpolator interp(logic, p);
  EntailmentOracle oracle(logic);
  const Calculus calc = calculus_for(logic);
  std::size_t violations = 0;
  auto report = [&](const std::string& property, const Sequent& s) {
    ++violations;
    out << Json{{"property", property},
                {"logic", std::string(logic_name(logic))},
                {"sequent", print(s, PrintStyle::Resugared)}}
               .dump()
        << "\n";
  };
  const unsigned w = std::max(1U, args.max_weight);
  for (unsigned i = 0; i < args.samples; ++i) {
    Sequent s;
    if (is_classical(logic)) {
      std::vector<Formula> l, r;
      std::size_t nl = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
      std::size_t nr = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
      for (std::size_t k = 0; k < nl; ++k) l.push_back(random_formula(rng, names, w, Dialect::Classical));
      for (std::size_t k = 0; k < nr; ++k) r.push_back(random_formula(rng, names, w, Dialect::Classical));
      s = Sequent{FMultiset(std::move(l)), FMultiset(std::move(r))};
    } else {
      do {
        s = random_isequent(rng, names, w + 1, 2);
      } while (logic == Logic::IL &&
               (std::any_of(s.left.begin(), s.left.end(), contains_box) ||
                contains_box(s.succedent())));
    }
    const Formula a = interp.A(s);
    const Formula e = interp.E(s.left);
    if (vars(a).count(p) || vars(e).count(p)) report("p-freeness", s);
    if (!oracle.provable(Sequent{s.left.with(a), s.right})) report("A-implication", s);
    if (!oracle.provable(Sequent{s.left, FMultiset{e}})) report("E-implication", s);
    Prover prover(calc);
    Decision d = prover.decide(desugar_if(logic, s));
    if (d.derivation && !validate(calc, *d.derivation)) report("derivation-validity", s);
    if (!is_classical(logic)) {
      for (const RuleApp& app : isl_applications(s, calc == Calculus::G4iP ? IntCalculus::G4iP
                                                                           : IntCalculus::G4iSLt))
        for (const Sequent& prem : app.premises)
          if (!isl_seq_less(prem, s)) report("premise-order", s);
    }
  }
  return violations;
}

int selftest(const SelftestArgs& args, std::ostream& out) {
  if (args.vars == 0 || args.vars > 6) throw UsageError("--vars must be between 1 and 6");
  static const char* kNames[] = {"p", "q", "r", "s", "t", "u"};
  std::vector<std::string> names(kNames, kNames + args.vars);
  std::size_t violations = 0;
  for (Logic logic : logic_list(args.logics)) {
    violations += sampled_invariants(logic, names, args, out);
    UniformityReport report = uniformity_harness(logic, names.front(), names, args.max_weight);
    out << report.to_json_lines();
    violations += report.violations.size();
  }
  nlohmann::ordered_json summary{{"selftest", "done"},
                                 {"seed", args.seed},
                                 {"violations", violations}};
  out << summary.dump() << "\n";
  return violations == 0 ? kOk : kNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform interpolants for K, GL, IL and iSL", "uipcalc"};
  app.require_subcommand(1);

  ComputeArgs c;
  CLI::App* cmd_compute = app.add_subcommand("compute", "Compute a uniform interpolant");
  cmd_compute->add_option("--logic", c.logic, "K, GL, IL or iSL")->required();
  cmd_compute->add_option("--var", c.var, "Variable to eliminate")->required();
  auto* o_forall = cmd_compute->add_flag("--forall", c.forall, "Universal quantifier");
  auto* o_exists = cmd_compute->add_flag("--exists", c.exists, "Existential quantifier");
  auto* o_a = cmd_compute->add_flag("--A", c.a, "Sequent interpolant A_p");
  auto* o_e = cmd_compute->add_flag("--E", c.e, "Antecedent interpolant E_p");
  auto* quant = cmd_compute->add_option_group("quantifier");
  quant->add_options(o_forall, o_exists, o_a, o_e);
  quant->require_option(1);
  auto* o_formula = cmd_compute->add_option("--formula", c.formula, "Input formula");
  auto* o_sequent = cmd_compute->add_option("--sequent", c.sequent, "Input sequent");
  auto* input = cmd_compute->add_option_group("input");
  input->add_options(o_formula, o_sequent);
  input->require_option(1);
  cmd_compute->add_flag("--simplify", c.simplify, "Apply the conservative simplifier");
  cmd_compute->add_flag("--json", c.json, "Print the JSON syntax tree");

  std::string prove_logic, prove_sequent;
  bool prove_tree = false;
  CLI::App* cmd_prove = app.add_subcommand("prove", "Decide a sequent");
  cmd_prove->add_option("--logic", prove_logic, "K, GL, IL or iSL")->required();
  cmd_prove->add_option("--sequent", prove_sequent, "Sequent \"G => D\"")->required();
  cmd_prove->add_flag("--tree", prove_tree, "Print the derivation");

  std::string canopy_sequent;
  CLI::App* cmd_canopy = app.add_subcommand("canopy", "Print the canopy of a sequent");
  cmd_canopy->add_option("--sequent", canopy_sequent, "Sequent \"G => D\"")->required();

  SelftestArgs st;
  CLI::App* cmd_selftest = app.add_subcommand("selftest", "Run the invariant suites");
  cmd_selftest->add_option("--vars", st.vars, "Number of variables (p, q, ...)");
  cmd_selftest->add_option("--max-weight", st.max_weight, "Formula weight bound");
  cmd_selftest->add_option("--logics", st.logics, "Comma-separated logics");
  cmd_selftest->add_option("--seed", st.seed, "Seed for the sampled suites");
  cmd_selftest->add_option("--samples", st.samples, "Sampled sequents per logic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  c.has_formula = o_formula->count() > 0;
  try {
    if (*cmd_compute) return compute(c, out);
    if (*cmd_prove) return prove(prove_logic, prove_sequent, prove_tree, out);
    if (*cmd_canopy) return show_canopy(canopy_sequent, out);
    if (*cmd_selftest) return selftest(st, out);
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.position() << ": " << e.detail() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const ContractError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"uipcalc"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace uipc::cli
