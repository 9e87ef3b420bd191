// armleg: command-line checks for the (arm, leg) / (arm, left) multiset
// identity and the generating functions behind it.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage error.

#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "armleg/anatomy.hpp"
#include "armleg/explorer.hpp"
#include "armleg/io.hpp"
#include "armleg/qseries.hpp"
#include "armleg/statistics.hpp"

namespace {

using namespace armleg;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::text},
    {"json", OutputFormat::json},
    {"csv", OutputFormat::csv}};

const std::map<std::string, PairFilling> kFillings{
    {"arm-leg", PairFilling::arm_leg}, {"arm-left", PairFilling::arm_left}};

struct Globals {
  OutputFormat format = OutputFormat::text;
  unsigned jobs = default_workers();
  std::string out;
};

using Action = std::function<int(std::ostream&, const Globals&)>;

int exit_for(const std::vector<VerifyReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return kExitFail;
  }
  return kExitPass;
}

int emit(std::ostream& os, const Globals& g,
         const std::vector<VerifyReport>& reports) {
  write_reports(os, reports, g.format);
  return exit_for(reports);
}

CLI::Option* add_count(CLI::App* app, const std::string& name, int& target,
                       const std::string& help, bool required = true) {
  auto* opt = app->add_option(name, target, help)->check(CLI::NonNegativeNumber);
  if (required) opt->required();
  return opt;
}

struct FactArgs {
  int id = 0;
  int a = 0, k = 0, trunc = 0, m = 0, n = 0;
  std::map<std::string, CLI::Option*> options;
};

// Each fact takes its own flag set; anything else is a usage error.
int run_fact(const FactArgs& args, std::ostream& os, const Globals& g) {
  static const std::map<int, std::vector<std::string>> wanted{
      {1, {"a", "k", "trunc"}},
      {2, {"k", "trunc"}},
      {3, {"m", "n"}},
      {4, {"m", "trunc"}}};
  const auto& need = wanted.at(args.id);
  for (const auto& [name, opt] : args.options) {
    const bool used = std::find(need.begin(), need.end(), name) != need.end();
    if (used && opt->count() == 0) {
      throw usage_error("fact " + std::to_string(args.id) + " requires --" +
                        name);
    }
    if (!used && opt->count() > 0) {
      throw usage_error("--" + name + " does not apply to fact " +
                        std::to_string(args.id));
    }
  }
  const auto trunc = static_cast<std::size_t>(args.trunc);
  switch (args.id) {
    case 1:
      return emit(os, g,
                  {verify_fact1(static_cast<std::size_t>(args.a),
                                static_cast<std::size_t>(args.k), trunc)});
    case 2:
      return emit(os, g, {verify_fact2(static_cast<std::size_t>(args.k), trunc)});
    case 3:
      return emit(os, g, {verify_fact3(args.m, args.n)});
    default:
      return emit(os, g, {verify_fact4(args.m, trunc)});
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks the (arm, leg) / (arm, left) multiset identity for "
               "integer partitions"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals globals;
  app.add_option("--format", globals.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  app.add_option("--jobs", globals.jobs, "Worker threads")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--out", globals.out, "Write results to PATH instead of stdout");

  Action action;

  // verify ...
  auto* verify = app.add_subcommand("verify", "Run an identity check");
  verify->require_subcommand(1);

  int n_max = 0, c = 0, d = 0, trunc = 0;

  auto* theorem1 = verify->add_subcommand(
      "theorem1", "A1(n) = A2(n) for every n <= n-max");
  add_count(theorem1, "--n-max", n_max, "Largest weight");
  theorem1->callback([&] {
    action = [&](std::ostream& os, const Globals& g) {
      return emit(os, g, {verify_theorem1_upto(n_max, g.jobs)});
    };
  });

  auto* identity1 = verify->add_subcommand(
      "identity1", "Hook polynomial = part polynomial for every n <= n-max");
  add_count(identity1, "--n-max", n_max, "Largest weight");
  identity1->callback([&] {
    action = [&](std::ostream& os, const Globals& g) {
      return emit(os, g, {verify_identity1_upto(n_max, g.jobs)});
    };
  });

  std::optional<PairFilling> lemma_stat;
  auto* lemma = verify->add_subcommand(
      "lemma", "Pair counts against q^{c+d+1}/((1-q^{c+d+1})(q)_inf)");
  lemma->add_option("--stat", lemma_stat, "arm-leg or arm-left (default: both)")
      ->transform(CLI::CheckedTransformer(kFillings));
  add_count(lemma, "--c", c, "Arm length");
  add_count(lemma, "--d", d, "Leg or left length");
  add_count(lemma, "--n-max", n_max, "Largest weight");
  add_count(lemma, "--trunc", trunc, "Truncation order");
  lemma->callback([&] {
    action = [&](std::ostream& os, const Globals& g) {
      std::vector<PairFilling> fillings;
      if (lemma_stat) {
        fillings.push_back(*lemma_stat);
      } else {
        fillings = {PairFilling::arm_leg, PairFilling::arm_left};
      }
      if (n_max > trunc) {
        throw usage_error("--n-max " + std::to_string(n_max) +
                          " exceeds --trunc " + std::to_string(trunc));
      }
      std::vector<VerifyReport> reports;
      for (auto f : fillings) {
        reports.push_back(verify_lemma(c, d, f, n_max,
                                       static_cast<std::size_t>(trunc), g.jobs));
      }
      return emit(os, g, reports);
    };
  });

  FactArgs fact;
  auto* fact_cmd = verify->add_subcommand("fact", "Check one of the q-series facts");
  fact_cmd->add_option("--id", fact.id, "1: q-binomial theorem, 2: its a=inf "
                                        "limit, 3: box, 4: bounded parts")
      ->required()
      ->check(CLI::IsMember({1, 2, 3, 4}));
  fact.options["a"] = add_count(fact_cmd, "--a", fact.a, "Fact 1: a", false);
  fact.options["k"] = fact_cmd->add_option("--k", fact.k, "Facts 1-2: z = q^k")
                          ->check(CLI::PositiveNumber);
  fact.options["trunc"] =
      add_count(fact_cmd, "--trunc", fact.trunc, "Truncation order", false);
  fact.options["m"] = add_count(fact_cmd, "--m", fact.m, "Facts 3-4: m", false);
  fact.options["n"] = add_count(fact_cmd, "--n", fact.n, "Fact 3: n", false);
  fact_cmd->callback([&] {
    action = [&](std::ostream& os, const Globals& g) {
      return run_fact(fact, os, g);
    };
  });

  auto* anatomy = verify->add_subcommand(
      "anatomy", "Seven-part corner decomposition against brute counts");
  add_count(anatomy, "--c", c, "Arm length");
  add_count(anatomy, "--d", d, "Leg length");
  add_count(anatomy, "--n-max", n_max, "Largest weight");
  add_count(anatomy, "--trunc", trunc, "Truncation order");
  anatomy->callback([&] {
    action = [&](std::ostream& os, const Globals& g) {
      return emit(os, g,
                  {verify_anatomy(c, d, n_max, static_cast<std::size_t>(trunc),
                                  g.jobs)});
    };
  });

  auto* chain = verify->add_subcommand(
      "chain", "Every stage of the series simplification agrees");
  add_count(chain, "--c", c, "Arm length");
  add_count(chain, "--d", d, "Leg length");
  add_count(chain, "--trunc", trunc, "Truncation order");
  chain->callback([&] {
    action = [&](std::ostream& os, const Globals& g) {
      return emit(os, g, {proof_chain(c, d, static_cast<std::size_t>(trunc))});
    };
  });

  // series ...
  auto* series = app.add_subcommand("series", "Print series coefficients");
  series->require_subcommand(1);

  auto* euler = series->add_subcommand("euler-inv", "1/(q)_inf");
  add_count(euler, "--trunc", trunc, "Truncation order");
  euler->callback([&] {
    action = [&](std::ostream& os, const Globals& g) {
      write_series(os, euler_inv(static_cast<std::size_t>(trunc)), "euler-inv",
                   g.format);
      return kExitPass;
    };
  });

  int box_m = 0, box_n = 0;
  auto* gauss = series->add_subcommand("gauss", "Gaussian binomial for an m x n box");
  add_count(gauss, "--m", box_m, "Rows");
  add_count(gauss, "--n", box_n, "Columns");
  auto* gauss_trunc =
      add_count(gauss, "--trunc", trunc, "Truncation order (default m*n)", false);
  gauss->callback([&] {
    action = [&, gauss_trunc](std::ostream& os, const Globals& g) {
      const auto m = static_cast<std::size_t>(box_m);
      const auto n = static_cast<std::size_t>(box_n);
      const auto order =
          gauss_trunc->count() ? static_cast<std::size_t>(trunc) : m * n;
      write_series(os, gauss_binomial(m, n, order), "gauss", g.format);
      return kExitPass;
    };
  });

  auto* rhs = series->add_subcommand("lemma-rhs", "q^{c+d+1}/((1-q^{c+d+1})(q)_inf)");
  add_count(rhs, "--c", c, "Arm length");
  add_count(rhs, "--d", d, "Leg or left length");
  add_count(rhs, "--trunc", trunc, "Truncation order");
  rhs->callback([&] {
    action = [&](std::ostream& os, const Globals& g) {
      write_series(os,
                   lemma_rhs(static_cast<std::size_t>(c),
                             static_cast<std::size_t>(d),
                             static_cast<std::size_t>(trunc)),
                   "lemma-rhs", g.format);
      return kExitPass;
    };
  });

  // multiset / match
  int weight = 0;
  PairFilling filling = PairFilling::arm_leg;
  auto* multiset = app.add_subcommand("multiset", "Print (c,d,count) rows of A1(n) or A2(n)");
  add_count(multiset, "--n", weight, "Weight");
  multiset->add_option("--stat", filling, "arm-leg or arm-left")
      ->required()
      ->transform(CLI::CheckedTransformer(kFillings));
  multiset->callback([&] {
    action = [&](std::ostream& os, const Globals& g) {
      write_multiset(os, weight, filling, build_pair_multiset(weight, filling),
                     g.format);
      return kExitPass;
    };
  });

  auto* match = app.add_subcommand("match", "Print the canonical cell matching");
  add_count(match, "--n", weight, "Weight");
  match->callback([&] {
    action = [&](std::ostream& os, const Globals& g) {
      write_matching(os, canonical_matching(weight, g.jobs), g.format);
      return kExitPass;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (globals.out.empty()) return action(std::cout, globals);
    std::ofstream file(globals.out);
    if (!file) {
      std::cerr << "armleg: cannot open " << globals.out << " for writing\n";
      return kExitUsage;
    }
    return action(file, globals);
  } catch (const usage_error& e) {
    std::cerr << "armleg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "armleg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "armleg: " << e.what()
              << " (parameters too large for 64-bit coefficients)\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "armleg: identity violated: " << e.what() << '\n';
    return kExitFail;
  }
}
