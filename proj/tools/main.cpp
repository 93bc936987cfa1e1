#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycperm/autgroups.hpp"
#include "cycperm/cyclotomic.hpp"
#include "cycperm/equivalence.hpp"
#include "cycperm/error.hpp"
#include "cycperm/field.hpp"
#include "cycperm/json_io.hpp"
#include "cycperm/quasicyclic.hpp"
#include "cycperm/verification.hpp"

using namespace cycperm;

namespace {

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kMismatch = 3 };

struct RunConfig {
  std::string verb;
  std::vector<std::string> inputs;
  std::optional<std::uint32_t> q;
  std::optional<std::uint32_t> n;
  std::vector<std::uint32_t> defining_set;
  std::size_t l = 0;
  std::string strategy = "hp";
  std::uint64_t enumeration_bound = kDefaultEnumerationBound;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t distance_budget = kDefaultDistanceBudget;
  std::string out;
  std::string csv;
  std::uint64_t seed = 0;
  std::string scope = "fast";

  Json to_json() const {
    Json j{{"verb", verb},
           {"inputs", inputs},
           {"q", q ? Json(*q) : Json()},
           {"n", n ? Json(*n) : Json()},
           {"defining_set", defining_set},
           {"strategy", strategy},
           {"budgets",
            Json{{"enumeration_bound", enumeration_bound}, {"nodes", node_budget}, {"distance", distance_budget}}},
           {"out", out},
           {"seed", seed}};
    if (verb == "qc") j["l"] = l;
    if (verb == "verify-paper") j["scope"] = scope;
    return j;
  }

  EquivalenceOptions equivalence() const {
    EquivalenceOptions o;
    o.node_budget = node_budget;
    o.distance_budget = distance_budget;
    o.enumeration_bound = enumeration_bound;
    return o;
  }
};

void emit(const RunConfig& cfg, Json report) {
  Json doc{{"config", cfg.to_json()}};
  for (auto& [k, v] : report.items()) doc[k] = std::move(v);
  const std::string text = doc.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error("cannot write " + cfg.out);
  f << text;
}

// A code from a spec file when one is given, else from --q, --n and --defining-set.
CodeInput code_input(const RunConfig& cfg, std::size_t index = 0) {
  if (cfg.inputs.size() > index) return load_code_spec(cfg.inputs[index]);
  if (!cfg.q || !cfg.n) throw Error("need a code spec file or --q and --n");
  CodeInput in;
  in.field = make_field_of_order(*cfg.q);
  in.n = *cfg.n;
  in.defining_set = cfg.defining_set;
  return in;
}

int cmd_enumerate(const RunConfig& cfg) {
  if (!cfg.q || !cfg.n) throw Error("enumerate needs --q and --n");
  const FieldPtr f = make_field_of_order(*cfg.q);
  Json report;
  report["count"] = to_json(count_cyclic_codes(*cfg.n, *cfg.q));
  bool exhausted = false;
  try {
    Json codes = Json::array();
    for (auto& spec : enumerate_cyclic_codes(f, *cfg.n)) {
      CyclicCode code{spec, to_linear_code(spec)};
      const DistanceResult d = min_distance(code.code, cfg.distance_budget);
      exhausted = exhausted || !d.exact;
      codes.push_back(code_summary(code, d));
    }
    report["codes"] = std::move(codes);
  } catch (const Error& e) {
    report["codes"] = nullptr;
    report["overflow"] = e.what();
  }
  report["distance_budget_exhausted"] = exhausted;
  emit(cfg, std::move(report));
  return kOk;
}

int cmd_analyze(const RunConfig& cfg) {
  const CyclicCode code = as_cyclic(code_input(cfg));
  AnalyzeOptions opt;
  opt.node_budget = cfg.node_budget;
  opt.distance_budget = cfg.distance_budget;
  opt.enumeration_bound = cfg.enumeration_bound;
  opt.seed = cfg.seed;
  const AutoReport r = analyze(code, opt);
  Json report{{"code", to_json(code.spec)}, {"report", to_json(r)}};
  const bool partial = r.backtrack_budget_exhausted || !r.distance.exact;
  report["partial"] = partial;
  emit(cfg, std::move(report));
  return partial ? kBudget : kOk;
}

int cmd_equiv(const RunConfig& cfg) {
  if (cfg.inputs.size() != 2) throw Error("equiv needs two code spec files");
  const CodeInput a = load_code_spec(cfg.inputs[0]);
  const CodeInput b = load_code_spec(cfg.inputs[1]);
  const Strategy strategy = parse_strategy(cfg.strategy);
  Verdict v;
  if (a.defining_set && b.defining_set) {
    v = decide_equivalence(as_cyclic(a), as_cyclic(b), strategy, cfg.equivalence());
  } else {
    if (strategy != Strategy::Brute) throw Error("non-cyclic input supports only --strategy brute");
    const LinearCode c = as_linear(a), c2 = as_linear(b);
    v.strategy = Strategy::Brute;
    v.complete = true;
    if (auto why = separating_invariant(c, c2, cfg.distance_budget)) {
      v.status = VerdictStatus::Inequivalent;
      v.evidence = *why;
    } else if (auto w = brute_witness(c, c2)) {
      v.status = VerdictStatus::Equivalent;
      v.witness = *w;
      v.evidence = "exhaustive scan of S_n";
    } else {
      v.status = VerdictStatus::Inequivalent;
      v.evidence = "exhaustive scan of S_n found no witness";
    }
  }
  emit(cfg, Json{{"verdict", to_json(v)}});
  return kOk;
}

int cmd_qc(const RunConfig& cfg) {
  if (cfg.l == 0) throw Error("qc needs --l");
  const QuasiCyclicCode code = quasi_cyclic_code(as_linear(code_input(cfg)), cfg.l);
  emit(cfg, Json{{"report", to_json(imprimitivity_report(code, cfg.equivalence()))}});
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  VerificationOptions opt;
  opt.budgets = cfg.equivalence();
  opt.seed = cfg.seed;
  const auto rows = run_verification(parse_scopes(cfg.scope), opt);
  Json list = Json::array();
  bool mismatch = false;
  for (const auto& r : rows) {
    list.push_back(to_json(r));
    mismatch = mismatch || r.status == RowStatus::Mismatch;
  }
  emit(cfg, Json{{"rows", list}, {"all_match", !mismatch}});
  if (!cfg.csv.empty()) {
    std::ofstream f(cfg.csv);
    if (!f) throw Error("cannot write " + cfg.csv);
    f << to_csv(rows);
  }
  return mismatch ? kMismatch : kOk;
}

int cmd_factor(const RunConfig& cfg) {
  if (!cfg.q || !cfg.n) throw Error("factor needs --q and --n");
  const CyclotomicContext ctx(make_field_of_order(*cfg.q), *cfg.n);
  Json factors = Json::array();
  for (std::size_t i = 0; i < ctx.cosets().size(); ++i) {
    factors.push_back(Json{{"coset", ctx.cosets()[i]},
                           {"minimal_polynomial", ctx.minimal_polynomial(i).coefficients()}});
  }
  emit(cfg, Json{{"factors", factors}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Cyclic codes: automorphism groups and permutation equivalence"};
  app.require_subcommand(1);

  auto budgets = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", cfg.node_budget, "Backtrack node budget")->check(CLI::PositiveNumber);
    sub->add_option("--budget-dist", cfg.distance_budget, "Minimum-distance work budget")->check(CLI::PositiveNumber);
    sub->add_option("--budget-enum", cfg.enumeration_bound, "Group enumeration bound")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_option("--seed", cfg.seed, "Seed for randomized audits");
  };
  auto code_flags = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "Field order");
    sub->add_option("--n", cfg.n, "Code length");
    sub->add_option("--defining-set", cfg.defining_set, "Defining set, comma separated")->delimiter(',');
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "List all cyclic codes of length n over GF(q)");
  code_flags(enumerate);
  budgets(enumerate);
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Automorphism report for a cyclic code");
  analyze_cmd->add_option("spec", cfg.inputs, "Code spec file");
  code_flags(analyze_cmd);
  budgets(analyze_cmd);
  CLI::App* equiv = app.add_subcommand("equiv", "Decide permutation equivalence of two codes");
  equiv->add_option("specs", cfg.inputs, "Two code spec files")->expected(2)->required();
  equiv->add_option("--strategy", cfg.strategy, "multiplier, hp or brute")
      ->check(CLI::IsMember({"multiplier", "hp", "brute"}));
  budgets(equiv);
  CLI::App* qc = app.add_subcommand("qc", "H'(P) imprimitivity report for a quasi-cyclic code");
  qc->add_option("spec", cfg.inputs, "Code spec file");
  qc->add_option("--l", cfg.l, "Index l")->required()->check(CLI::PositiveNumber);
  code_flags(qc);
  budgets(qc);
  CLI::App* verify = app.add_subcommand("verify-paper", "Run the verification battery");
  verify->add_option("--scope", cfg.scope, "tables, lemmas, qc, slow, fast or all (comma separated)");
  verify->add_option("--csv", cfg.csv, "Also write the rows as CSV");
  budgets(verify);
  CLI::App* factor = app.add_subcommand("factor", "Factor x^n - 1 over GF(q) by cyclotomic cosets");
  code_flags(factor);
  budgets(factor);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  cfg.verb = app.get_subcommands().front()->get_name();

  try {
    if (cfg.verb == "enumerate") return cmd_enumerate(cfg);
    if (cfg.verb == "analyze") return cmd_analyze(cfg);
    if (cfg.verb == "equiv") return cmd_equiv(cfg);
    if (cfg.verb == "qc") return cmd_qc(cfg);
    if (cfg.verb == "verify-paper") return cmd_verify(cfg);
    if (cfg.verb == "factor") return cmd_factor(cfg);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
