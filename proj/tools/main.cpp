// windcount: root counting and isolation for complex polynomials driven by
// sampled winding numbers. Subcommands: count, isolate, graeffe, oracle,
// bench. Exit codes: 0 success, 1 input error, 2 the algorithm ran but
// assumption violations were detected.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "windcount/graeffe.hpp"
#include "windcount/oracle.hpp"
#include "windcount/subdivision.hpp"
#include "windcount/winding.hpp"

using namespace windcount;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitViolations = 2;

json outcome_to_json(const WindingOutcome& out) {
  json j;
  j["omega"] = out.winding;
  j["certified"] = out.certified;
  j["n"] = out.plan_size;
  j["samples_used"] = out.samples_used;
  j["r"] = out.r_used;
  j["path"] = out.used_fft ? "fft" : "horner";
  j["refinements"] = out.refinements;
  j["boundary_proximal"] = out.boundary_proximal.size();
  j["violations"] = json::array();
  for (const Violation& v : out.violations) {
    j["violations"].push_back(
        {{"index", v.index}, {"kind", violation_kind_name(v.kind)}});
  }
  return j;
}

void print_outcome_human(const WindingOutcome& out) {
  std::printf("omega=%d certified=%s n=%zu samples=%zu violations=%zu "
              "path=%s r=%.17g\n",
              out.winding, out.certified ? "true" : "false", out.plan_size,
              out.samples_used, out.violations.size(),
              out.used_fft ? "fft" : "horner", out.r_used);
  for (const Violation& v : out.violations) {
    std::printf("violation index=%zu kind=%s\n", v.index,
                violation_kind_name(v.kind));
  }
}

struct CountArgs {
  std::string poly;
  std::string region;
  double r = 0.0;
  bool r_given = false;
  bool adaptive = false;
  int max_doublings = 20;
  bool json_output = false;
  bool force_fft = false;
  bool force_horner = false;
};

int run_count(const CountArgs& args) {
  if (args.r_given == args.adaptive) {
    std::cerr << "error: count needs exactly one of --r or --adaptive\n";
    return kExitInputError;
  }
  const Polynomial p = load_polynomial(args.poly);
  const Contour contour = parse_region_json(args.region);

  CountOptions options;
  if (args.force_fft) options.path = EvalPath::kFft;
  if (args.force_horner) options.path = EvalPath::kHorner;

  WindingOutcome out;
  if (args.adaptive) {
    const auto guess = estimate_min_modulus(p, contour, 64, 4);
    const double start = guess.value > 0.0 ? guess.value : 1.0;
    out = count_roots_adaptive(p, contour, start, args.max_doublings, options);
  } else {
    if (!(args.r > 0.0)) {
      std::cerr << "error: --r must be positive\n";
      return kExitInputError;
    }
    out = count_roots(p, contour, IsolationSpec{args.r, true}, options);
  }

  if (args.json_output) {
    std::cout << outcome_to_json(out).dump(2) << "\n";
  } else {
    print_outcome_human(out);
  }
  return out.violations.empty() ? kExitOk : kExitViolations;
}

struct IsolateArgs {
  std::string poly;
  std::string region;
  double target_width = 0.01;
  int max_depth = 24;
};

int run_isolate(const IsolateArgs& args) {
  const Polynomial p = load_polynomial(args.poly);
  const Contour contour = parse_region_json(args.region);
  if (contour.shape() != Contour::Shape::kRectangle) {
    std::cerr << "error: isolate needs a box region\n";
    return kExitInputError;
  }
  const auto& v = contour.vertices();
  const double width = v[1].real() - v[0].real();
  const double height = v[2].imag() - v[1].imag();
  if (std::abs(width - height) > 1e-12 * std::max(width, height)) {
    std::cerr << "error: region.box must be a square for isolate\n";
    return kExitInputError;
  }
  const Square initial{(v[0] + v[2]) / 2.0, width / 2.0};
  const IsolationReport report =
      isolate_roots(p, initial, args.target_width, args.max_depth);
  std::cout << report_to_json(report) << "\n";
  return report.suspect.empty() ? kExitOk : kExitViolations;
}

struct GraeffeArgs {
  std::string poly;
  std::string region;
  int iters = 1;
  bool json_output = false;
};

int run_graeffe(const GraeffeArgs& args) {
  const Polynomial p = load_polynomial(args.poly);
  Complex center(0.0, 0.0);
  double radius = 1.0;
  if (!args.region.empty()) {
    const Contour contour = parse_region_json(args.region);
    if (!contour.is_circle()) {
      std::cerr << "error: graeffe works on disc regions only\n";
      return kExitInputError;
    }
    center = contour.circle_center();
    radius = contour.circle_radius();
  }
  const AmplifyResult amp = amplify_isolation(p, center, radius, args.iters);
  if (args.json_output) {
    json j;
    j["coefficients"] = json::array();
    for (const Complex& c : amp.q.coeffs()) {
      j["coefficients"].push_back({c.real(), c.imag()});
    }
    j["steps_applied"] = amp.steps_applied;
    j["truncated"] = amp.truncated;
    j["disc"] = {{"center", {amp.disc_center.real(), amp.disc_center.imag()}},
                 {"radius", amp.disc_radius}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_polynomial_text(amp.q);
    if (amp.truncated) {
      std::cerr << "note: stopped after " << amp.steps_applied
                << " steps (coefficient growth guard)\n";
    }
  }
  return kExitOk;
}

struct OracleArgs {
  std::string poly;
  std::string region;
  double r = 0.0;
  bool r_given = false;
};

int run_oracle(const OracleArgs& args) {
  const Polynomial p = load_polynomial(args.poly);
  const Contour contour = parse_region_json(args.region);

  json j;
  j["roots"] = json::array();
  j["residuals"] = json::array();
  double max_residual = 0.0;
  if (p.degree() >= 1) {
    const RootSet roots = find_all_roots(p);
    j["converged"] = roots.converged;
    j["iterations"] = roots.iterations;
    for (const Complex& z : roots.roots) {
      j["roots"].push_back({z.real(), z.imag()});
    }
    for (double res : roots.residuals) {
      j["residuals"].push_back(res);
      max_residual = std::max(max_residual, res);
    }
  } else {
    j["converged"] = true;
    j["iterations"] = 0;
  }
  j["max_residual"] = max_residual;
  j["quadrature"] = quadrature_winding(p, contour);
  const auto est = estimate_min_modulus(p, contour, 4096, 32);
  j["min_modulus_estimate"] = est.value;
  if (args.r_given) {
    const IsolationCheck check = check_isolation(p, contour, args.r);
    json c;
    c["ok"] = check.ok;
    c["indeterminate"] = check.indeterminate;
    c["min_root_distance"] = check.min_root_distance;
    c["min_modulus"] = check.min_modulus;
    if (check.witness_root) {
      c["witness_root"] = {check.witness_root->real(),
                           check.witness_root->imag()};
    }
    if (check.witness_param) c["witness_param"] = *check.witness_param;
    j["isolation"] = c;
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

struct BenchArgs {
  unsigned long long seed = 1;
  bool json_output = false;
};

int run_bench(const BenchArgs& args) {
  const std::vector<int> degrees{4, 8, 16, 32, 64};
  std::mt19937_64 rng(args.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Contour circle = Contour::circle(Complex(0, 0), 1.0);

  json rows = json::array();
  if (!args.json_output) {
    std::printf("%8s %10s %12s %12s %12s %12s %7s\n", "degree", "n",
                "horner_ms", "fft_ms", "evals_h", "evals_fft", "omega");
  }
  for (int degree : degrees) {
    std::vector<Complex> roots;
    for (int k = 0; k < degree; ++k) {
      // Moduli kept off the annulus [0.9, 1.1] so the circle isolates.
      const bool inside = unit(rng) < 0.5;
      const double modulus =
          inside ? 0.25 + 0.6 * unit(rng) : 1.2 + 1.0 * unit(rng);
      const double ang = 6.283185307179586 * unit(rng);
      roots.emplace_back(modulus * std::cos(ang), modulus * std::sin(ang));
    }
    const Polynomial p = Polynomial::from_roots(roots);
    const double r = 0.9 * estimate_min_modulus(p, circle, 2048, 24).value;

    const auto timed = [&](EvalPath path) {
      CountOptions options;
      options.path = path;
      const auto begin = std::chrono::steady_clock::now();
      const WindingOutcome out =
          count_roots(p, circle, IsolationSpec{r, true}, options);
      const auto end = std::chrono::steady_clock::now();
      return std::pair<double, WindingOutcome>(
          std::chrono::duration<double, std::milli>(end - begin).count(), out);
    };
    const auto [horner_ms, horner_out] = timed(EvalPath::kHorner);
    const auto [fft_ms, fft_out] = timed(EvalPath::kFft);

    if (args.json_output) {
      rows.push_back({{"degree", degree},
                      {"n", horner_out.plan_size},
                      {"horner_ms", horner_ms},
                      {"fft_ms", fft_ms},
                      {"evals_horner", horner_out.samples_used},
                      {"evals_fft", fft_out.samples_used},
                      {"omega", fft_out.winding},
                      {"r", r}});
    } else {
      std::printf("%8d %10zu %12.3f %12.3f %12zu %12zu %7d\n", degree,
                  horner_out.plan_size, horner_ms, fft_ms,
                  horner_out.samples_used, fft_out.samples_used,
                  fft_out.winding);
    }
  }
  if (args.json_output) std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial root counting via sampled winding numbers"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count roots inside a region");
  count->add_option("--poly", count_args.poly,
                    "Polynomial file or inline JSON coefficient array")
      ->required();
  count->add_option("--region", count_args.region, "Region JSON")->required();
  auto* r_opt = count->add_option("--r", count_args.r,
                                  "Certified lower bound on min |p on boundary|");
  count->add_flag("--adaptive", count_args.adaptive,
                  "Estimate r and refine on violations (non-certified)");
  count->add_option("--max-doublings", count_args.max_doublings,
                    "Adaptive refinement budget");
  count->add_flag("--json", count_args.json_output, "JSON output");
  auto* fft_flag = count->add_flag("--force-fft", count_args.force_fft,
                                   "Force the FFT evaluation path");
  count->add_flag("--force-horner", count_args.force_horner,
                  "Force the Horner evaluation path")
      ->excludes(fft_flag);

  IsolateArgs isolate_args;
  auto* isolate = app.add_subcommand("isolate", "Isolate all roots in a box");
  isolate->add_option("--poly", isolate_args.poly, "Polynomial file or inline JSON")
      ->required();
  isolate->add_option("--region", isolate_args.region, "Square box region JSON")
      ->required();
  isolate->add_option("--target-width", isolate_args.target_width,
                      "Stop splitting at this box width");
  isolate->add_option("--max-depth", isolate_args.max_depth,
                      "Maximum subdivision depth");

  GraeffeArgs graeffe_args;
  auto* graeffe = app.add_subcommand("graeffe",
                                     "Root-squaring preprocessing for a disc");
  graeffe->add_option("--poly", graeffe_args.poly, "Polynomial file or inline JSON")
      ->required();
  graeffe->add_option("--iters", graeffe_args.iters, "Squaring iterations");
  graeffe->add_option("--region", graeffe_args.region,
                      "Disc region JSON (default: unit disc)");
  graeffe->add_flag("--json", graeffe_args.json_output, "JSON output");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand(
      "oracle", "Dump roots, quadrature winding and isolation check");
  oracle->add_option("--poly", oracle_args.poly, "Polynomial file or inline JSON")
      ->required();
  oracle->add_option("--region", oracle_args.region, "Region JSON")->required();
  auto* oracle_r = oracle->add_option("--r", oracle_args.r,
                                      "Isolation radius to check");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Timing table on seeded inputs");
  bench->add_option("--seed", bench_args.seed, "RNG seed");
  bench->add_flag("--json", bench_args.json_output, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  count_args.r_given = r_opt->count() > 0;
  oracle_args.r_given = oracle_r->count() > 0;

  try {
    if (count->parsed()) return run_count(count_args);
    if (isolate->parsed()) return run_isolate(isolate_args);
    if (graeffe->parsed()) return run_graeffe(graeffe_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
