#include "windcount/winding.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "windcount/oracle.hpp"

namespace windcount {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryProximal = 1e-12;
constexpr std::size_t kMaxAdaptivePlan = std::size_t{1} << 24;
constexpr std::size_t kAdaptiveStartPlan = std::size_t{1} << 13;

std::size_t minimum_sample_count(int degree, double L, double r) {
  const double q = 12.0 * degree * L / (kPi * r);
  if (q > double(std::size_t{1} << 26)) {
    throw std::length_error("sampling plan would exceed 2^26 points");
  }
  return static_cast<std::size_t>(std::max(1.0, std::ceil(q)));
}

}  // namespace

int quadrant_label(Complex v) {
  const double re = v.real();
  const double im = v.imag();
  if (re == 0.0 && im == 0.0) return kNoLabel;
  if (re > 0.0 && im >= 0.0) return 0;
  if (re <= 0.0 && im > 0.0) return 1;
  if (re < 0.0 && im <= 0.0) return 2;
  return 3;  // re >= 0, im < 0
}

std::optional<int> lift_step(int prev_label, int next_label) {
  const int diff = ((next_label - prev_label) % 4 + 4) % 4;
  switch (diff) {
    case 0: return 0;
    case 1: return 1;
    case 3: return -1;
    default: return std::nullopt;  // cyclic difference 2: quadrant skip
  }
}

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kQuadrantSkip: return "quadrant_skip";
    case ViolationKind::kZeroValue: return "zero_value";
    case ViolationKind::kDivisibilityFailure: return "divisibility_failure";
  }
  return "unknown";
}

namespace {

WindingOutcome assemble_outcome(const std::vector<Complex>& values,
                                const IsolationSpec& spec,
                                std::size_t plan_size,
                                std::size_t samples_used, bool used_fft) {
  WindingOutcome out;
  out.plan_size = plan_size;
  out.samples_used = samples_used;
  out.used_fft = used_fft;
  out.r_used = spec.r;

  const std::size_t count = values.size();  // N+1 sample values
  out.labels.reserve(count + 1);
  out.lift.reserve(count + 1);

  for (std::size_t i = 0; i < count; ++i) {
    const Complex v = values[i];
    out.labels.push_back(quadrant_label(v));
    const double mag = std::abs(v);
    if (mag > 0.0 && (std::abs(v.real()) < kBoundaryProximal * mag ||
                      std::abs(v.imag()) < kBoundaryProximal * mag)) {
      out.boundary_proximal.push_back(i);
    }
  }
  // Closing wrap back to t_0; gamma closes, so the value is values[0] again.
  out.labels.push_back(out.labels[0]);

  // Lift. Unlabeled samples (exact zeros) are carried over from the previous
  // label, quadrant skips advance by +2; both are recorded as violations and
  // make the winding value diagnostic only.
  int prev = out.labels[0];
  if (prev == kNoLabel) {
    out.violations.push_back({0, ViolationKind::kZeroValue});
    prev = 0;
  }
  out.lift.push_back(prev);
  for (std::size_t i = 1; i < out.labels.size(); ++i) {
    int label = out.labels[i];
    if (label == kNoLabel) {
      out.violations.push_back({i, ViolationKind::kZeroValue});
      label = prev;
    }
    const auto step = lift_step(prev, label);
    int delta;
    if (step) {
      delta = *step;
    } else {
      out.violations.push_back({i, ViolationKind::kQuadrantSkip});
      delta = 2;
    }
    out.lift.push_back(out.lift.back() + delta);
    prev = label;
  }

  const int total = out.lift.back() - out.lift.front();
  if (total % 4 != 0) {
    out.violations.push_back({out.lift.size() - 1,
                              ViolationKind::kDivisibilityFailure});
    out.winding = (total >= 0 ? total + 2 : total - 2) / 4;
  } else {
    out.winding = total / 4;
  }
  out.certified = spec.certified && out.violations.empty();
  return out;
}

}  // namespace

WindingOutcome count_roots(const Evaluator& p, const Contour& contour,
                           const IsolationSpec& spec,
                           const CountOptions& options) {
  if (!(spec.r > 0.0)) {
    throw std::invalid_argument("isolation radius must be positive");
  }
  const int degree = std::max(p.degree(), 1);
  const Polynomial* coeffs = p.coefficients();
  const bool fft_eligible = contour.is_circle() && coeffs != nullptr;

  if (options.path == EvalPath::kFft && !fft_eligible) {
    throw std::invalid_argument(
        "FFT path needs a disc region and coefficient input");
  }

  if (fft_eligible) {
    // Power-of-two sample grid shared by both evaluation routes.
    const double L = contour.derivative_bound();
    const std::size_t min_count = minimum_sample_count(degree, L, spec.r);
    std::size_t target = std::max(min_count + 1,
                                  static_cast<std::size_t>(degree) + 1);
    target = std::max<std::size_t>(target, 4);
    const std::size_t grid = std::bit_ceil(target);
    if (grid > (std::size_t{1} << 26)) {
      throw std::length_error("sampling plan would exceed 2^26 points");
    }
    const int h = std::countr_zero(grid);

    // kAuto takes the transform unless the power-of-two rounding
    // oversamples by more than 2x (possible when the degree bound, not the
    // spacing rule, set the grid size).
    const bool use_fft = options.path == EvalPath::kFft ||
                         (options.path == EvalPath::kAuto &&
                          grid <= 2 * min_count);

    std::vector<Complex> values;
    if (use_fft) {
      const Polynomial shifted = affine_substitute(
          *coeffs, contour.circle_center(), contour.circle_radius());
      values = fft_eval_unit_circle(shifted, h);
    } else {
      values.resize(grid);
      for (std::size_t k = 0; k < grid; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(grid);
        values[k] = p.eval(contour.parametrize(t).point);
      }
    }
    return assemble_outcome(values, spec, grid - 1, grid, use_fft);
  }

  const SamplingPlan plan = build_sampling_plan(contour, degree, spec);
  std::vector<Complex> values(plan.params.size());
  for (std::size_t i = 0; i < plan.params.size(); ++i) {
    values[i] = p.eval(contour.parametrize(plan.params[i]).point);
  }
  return assemble_outcome(values, spec, plan.n, plan.params.size(), false);
}

WindingOutcome count_roots_adaptive(const Evaluator& p, const Contour& contour,
                                    double initial_r_guess, int max_doublings,
                                    const CountOptions& options) {
  if (!(initial_r_guess > 0.0)) {
    throw std::invalid_argument("initial r guess must be positive");
  }
  if (max_doublings < 0) {
    throw std::invalid_argument("max_doublings must be non-negative");
  }

  // A guess above the sampled modulus floor cannot be right; pull it down
  // before the violation-driven refinement starts.
  double r = initial_r_guess;
  const auto floor_estimate = estimate_min_modulus(p, contour, 64, 2);
  if (floor_estimate.value > 0.0 && floor_estimate.value < r) {
    r = floor_estimate.value;
  }

  const int degree = std::max(p.degree(), 1);
  const double L = contour.derivative_bound();

  // Clamp the starting density into a workable window: enough samples to
  // resolve a degree-d image curve (the winding can reach d, so gaps must
  // stay well under a quadrant), yet bounded even when the modulus
  // estimate is minuscule (clustered roots). Violations then pull the
  // density up only where it is actually needed.
  const auto r_at = [&](std::size_t n) {
    return 12.0 * degree * L / (kPi * double(n));
  };
  const std::size_t start_min =
      std::min(kMaxAdaptivePlan, std::max<std::size_t>(512, 64 * std::size_t(degree)));
  const std::size_t start_max = std::max(start_min, kAdaptiveStartPlan);
  r = std::min(r, r_at(start_min));
  r = std::max(r, r_at(start_max));

  WindingOutcome out;
  int halvings = 0;
  for (;;) {
    out = count_roots(p, contour, IsolationSpec{r, false}, options);
    out.refinements = halvings;
    if (out.violations.empty() || halvings >= max_doublings) break;
    const double next_r = r / 2.0;
    if (minimum_sample_count(degree, L, next_r) > kMaxAdaptivePlan) break;
    r = next_r;
    ++halvings;
  }
  return out;
}

}  // namespace windcount
