// torusjet: command-line front end.
//
// Exit codes: 0 ok, 1 invariant failure, 2 bad input, 3 degenerate input.
// Reports go to standard output, diagnostics to standard error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "torusjet/error.hpp"
#include "torusjet/extend.hpp"
#include "torusjet/json_io.hpp"
#include "torusjet/verify.hpp"
#include "torusjet/whitney.hpp"

namespace {

using namespace torusjet;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;
constexpr int kDegenerate = 3;

void emit(const json& j, const std::string& out_path, int indent = -1) {
  if (out_path.empty()) {
    std::cout << j.dump(indent) << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InvalidInput("cannot write " + out_path);
  out << j.dump(indent) << '\n';
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  return out;
}

LatticePoint parse_point(const std::vector<long>& coords, const LatticeSpec& spec) {
  if (coords.size() != spec.dim()) throw InvalidInput("--x must have one coordinate per axis");
  return LatticePoint{coords};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-difference calculus and Whitney jets for lattice functions on the torus"};
  app.require_subcommand(1);

  // gen
  std::vector<int> m;
  std::uint64_t seed = 1;
  double amplitude = 1.0;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a random lattice function");
  gen->add_option("--m", m, "Resolutions, comma separated")->required()->delimiter(',');
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--amplitude", amplitude, "Values uniform in [-a, a]");
  gen->add_option("--out", out_path, "Output path (default: standard output)");

  // shared by the analysis commands
  std::string in_path;
  int k = 1, r = 1, top = 0, N = 4, s = 0;
  std::vector<long> x;
  std::string csv_path;
  bool closed_form = false;

  auto* norms = app.add_subcommand("norms", "Seminorm of order k over all sites");
  norms->add_option("input", in_path, "Lattice function JSON")->required();
  norms->add_option("--k", k, "Order")->check(CLI::NonNegativeNumber);

  auto* jet = app.add_subcommand("jet", "Jet of degree K at site x");
  jet->add_option("input", in_path, "Lattice function JSON")->required();
  jet->add_option("--x", x, "Site, comma separated lattice coordinates")->required()->delimiter(',');
  jet->add_option("--K", top, "Top degree")->check(CLI::NonNegativeNumber);
  jet->add_flag("--closed-form", closed_form, "Assemble directly from Θ^m f(x)");

  auto* whitney = app.add_subcommand("whitney", "Whitney condition constants of order r");
  whitney->add_option("input", in_path, "Lattice function JSON")->required();
  whitney->add_option("--r", r, "Order (jets of degree r-1)")->check(CLI::PositiveNumber);
  whitney->add_option("--csv", csv_path, "Write one row per quotient");
  whitney->add_flag("--closed-form", closed_form, "Use closed-form jets");

  auto* extend = app.add_subcommand("extend", "Extension and fine-grid Lipschitz estimate");
  extend->add_option("input", in_path, "Lattice function JSON")->required();
  extend->add_option("--k", k, "Order")->check(CLI::PositiveNumber);
  extend->add_option("--N", N, "Fine-grid samples per cell per axis")->check(CLI::Range(2, 64));
  extend->add_option("--s", s, "Bump smoothness (0: K+1)")->check(CLI::NonNegativeNumber);
  extend->add_option("--csv", csv_path, "Write one row per fine-grid candidate");

  SuiteOptions suite;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("--seed", suite.seed, "Suite seed");
  verify->add_option("--trials", suite.trials, "Random instances per check")->check(CLI::PositiveNumber);
  verify->add_option("--max-d", suite.max_d, "Largest dimension")->check(CLI::Range(1, 3));
  verify->add_option("--max-k", suite.max_k, "Largest order")->check(CLI::Range(1, 3));
  verify->add_option("--only", suite.only, "Run only the named checks")->delimiter(',');
  verify->add_option("--group", suite.criteria, "Run only these check groups")->delimiter(',');
  verify->add_option("--out", out_path, "Output path (default: standard output)");
  verify->add_flag("--timing", timing, "Include per-check runtimes (not reproducible)");
  verify->add_flag("--inject-fault", suite.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*gen) {
      const auto f = random_function(LatticeSpec(m), seed, amplitude);
      if (out_path.empty())
        std::cout << to_json(f).dump() << '\n';
      else
        write_function(f, out_path);
      return kOk;
    }
    if (*verify) {
      const auto report = run_suite(suite);
      emit(to_json(report, timing), out_path, 2);
      for (const auto& c : report.checks)
        if (!c.pass) std::cerr << "FAIL " << c.name << ": " << c.failure << "\n  repro: " << c.repro << '\n';
      return report.all_pass() ? kOk : kFailed;
    }

    const auto f = read_function(in_path);
    if (*norms) {
      emit(to_json(seminorm(f, k)), "");
    } else if (*jet) {
      const auto p = parse_point(x, f.spec());
      if (closed_form) {
        emit(json{{"jet", to_json(closed_form_jet(f, p, top))}}, "");
      } else {
        const auto balls = default_balls(p, f.spec());
        emit(to_json(build_jet(f, p, top, balls)), "");
      }
    } else if (*whitney) {
      std::vector<WhitneyRow> rows;
      const auto builder = closed_form ? JetBuilder::closed_form : JetBuilder::recursive;
      const auto report = whitney_check(f, r, builder, csv_path.empty() ? nullptr : &rows);
      if (!csv_path.empty()) {
        auto out = open_csv(csv_path);
        write_whitney_csv(out, rows);
      }
      if (!report.ratio) throw DegenerateInput("f is a polynomial lattice sample; ratio undefined");
      emit(to_json(report), "");
    } else if (*extend) {
      std::vector<FineGridRow> rows;
      const auto report = theorem_a_report(f, k, ExtensionConfig{s, N}, csv_path.empty() ? nullptr : &rows);
      if (!csv_path.empty()) {
        auto out = open_csv(csv_path);
        write_fine_grid_csv(out, rows);
      }
      emit(to_json(report), "");
    }
    return kOk;
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
