#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "jconf/json_io.hpp"
#include "jconf/models.hpp"
#include "jconf/verify.hpp"

using namespace jconf;

namespace {

// Input problems that should map to the usage exit code.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Usage("cannot open output file: " + out);
  f << text;
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t cli_value) {
  if (opt->count()) return cli_value;
  if (const char* env = std::getenv("JCONF_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw Usage("JCONF_SEED: expected an unsigned integer, got \"" +
                  std::string(env) + "\"");
    return v;
  }
  return kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact catalog of split simple Jordan algebras, their conformal "
      "algebras, minimal-representation checks and parameter lifts"};
  app.require_subcommand(1);

  std::string model, out, level = "full", what = "algebra", param;
  bool all = false;
  std::uint64_t seed = kDefaultSeed;
  int degree = 3, points = 20, workers = 0;
  long max_k = 12;

  // exit code of the selected action (0 pass, 1 verification failure)
  std::function<int()> action;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "write the JSON document here (default: stdout)");
  };

  CLI::App* build = app.add_subcommand("build", "construct a model and emit it as JSON");
  build->add_option("--model", model, "model id, e.g. Sym3R or SpinR(5,3)")->required();
  add_out(build);
  build->callback([&] {
    action = [&] {
      emit(doc_algebra(make_model(model)), out);
      return 0;
    };
  });

  CLI::App* verify = app.add_subcommand("verify", "run the check battery and emit a report");
  verify->add_option("--model", model, "model id to verify");
  verify->add_flag("--all", all, "verify the whole catalog");
  verify->add_option("--level", level, "quick|full (default full)")
      ->check(CLI::IsMember({"quick", "full"}));
  CLI::Option* vseed = verify->add_option("--seed", seed, "seed for sampled checks");
  verify->add_option("--workers", workers, "worker pool size for --all (default: hardware)");
  add_out(verify);
  verify->callback([&] {
    action = [&] {
      std::uint64_t s = resolve_seed(vseed, seed);
      VerifyLevel lv = level_from_string(level);
      if (all != model.empty())
        throw Usage("verify needs exactly one of --model or --all");
      if (all) {
        auto reps = run_verify_all(lv, s, workers);
        bool ok = true;
        for (const auto& r : reps) {
          ok = ok && r.overall;
          std::cerr << r.model << ": " << (r.overall ? "pass" : "FAIL") << " ("
                    << r.checks.size() << " checks)\n";
        }
        emit(reports_to_json(reps, lv, s), out);
        return ok ? 0 : 1;
      }
      VerificationReport rep = run_verify(model, lv, s);
      std::cerr << rep.model << ": " << (rep.overall ? "pass" : "FAIL") << " ("
                << rep.checks.size() << " checks)\n";
      emit(report_to_json(rep), out);
      return rep.overall ? 0 : 1;
    };
  });

  CLI::App* peirce = app.add_subcommand("peirce", "emit the Peirce block decomposition");
  peirce->add_option("--model", model)->required();
  add_out(peirce);
  peirce->callback([&] {
    action = [&] {
      emit(doc_peirce(make_model(model)), out);
      return 0;
    };
  });

  auto rootdata_action = [&] {
    ConformalAlgebra C(make_model(model));
    emit(doc_rootdata(C), out);
    return 0;
  };
  CLI::App* roots = app.add_subcommand("roots", "emit restricted root multiplicities and rho");
  roots->add_option("--model", model)->required();
  add_out(roots);
  roots->callback([&] { action = rootdata_action; });

  CLI::App* dualpair = app.add_subcommand("dualpair", "emit the dual-pair report");
  dualpair->add_option("--model", model)->required();
  add_out(dualpair);
  dualpair->callback([&] { action = rootdata_action; });

  CLI::App* keylemma = app.add_subcommand("keylemma", "check the base-point operator identities");
  keylemma->add_option("--model", model)->required();
  keylemma->add_option("--degree", degree, "monomial degree bound (default 3)");
  keylemma->add_option("--points", points, "number of seeded cone points (default 20)");
  CLI::Option* kseed = keylemma->add_option("--seed", seed);
  add_out(keylemma);
  keylemma->callback([&] {
    action = [&] {
      bool all_pass = false;
      std::string text = doc_keylemma(make_model(model), degree, points,
                                      resolve_seed(kseed, seed), all_pass);
      emit(text, out);
      return all_pass ? 0 : 1;
    };
  });

  CLI::App* theta = app.add_subcommand("theta", "lift a parameter through the correspondence");
  theta->add_option("--model", model)->required();
  theta->add_option("--param", param, "parameter JSON, e.g. {\"variant\":\"EuclideanHW\",\"k\":0}")
      ->required();
  add_out(theta);
  theta->callback([&] {
    action = [&] {
      emit(doc_theta(model_constants(model), gparam_from_json(param)), out);
      return 0;
    };
  });

  CLI::App* plancherel = app.add_subcommand("plancherel", "describe the support of the decomposition");
  plancherel->add_option("--model", model)->required();
  plancherel->add_option("--max-k", max_k, "largest discrete parameter to list (default 12)");
  add_out(plancherel);
  plancherel->callback([&] {
    action = [&] {
      emit(doc_plancherel(model_constants(model), max_k), out);
      return 0;
    };
  });

  CLI::App* exp = app.add_subcommand("export", "export an algebra, bracket table, or report");
  exp->add_option("--model", model)->required();
  exp->add_option("--what", what, "algebra|lie|report")
      ->check(CLI::IsMember({"algebra", "lie", "report"}));
  exp->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  CLI::Option* eseed = exp->add_option("--seed", seed);
  add_out(exp);
  exp->callback([&] {
    action = [&] {
      if (what == "algebra") {
        emit(algebra_to_json(make_model(model)), out);
        return 0;
      }
      if (what == "lie") {
        ConformalAlgebra C(make_model(model));
        emit(doc_lie(C), out);
        return 0;
      }
      VerificationReport rep =
          run_verify(model, level_from_string(level), resolve_seed(eseed, seed));
      emit(report_to_json(rep), out);
      return rep.overall ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
