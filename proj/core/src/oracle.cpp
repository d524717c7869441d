#include "windcount/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace windcount {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Value, derivative value and the magnitude sum Sum |p_k||z|^k in one pass;
// the magnitude sum is the roundoff floor for |p(z)|.
struct HornerTriple {
  Complex value;
  Complex dvalue;
  double magnitude_sum;
};

HornerTriple horner_triple(const std::vector<Complex>& c, Complex z) {
  Complex b = c.back();
  Complex db(0.0, 0.0);
  double s = std::abs(c.back());
  const double az = std::abs(z);
  for (std::size_t k = c.size() - 1; k > 0; --k) {
    db = db * z + b;
    b = b * z + c[k - 1];
    s = s * az + std::abs(c[k - 1]);
  }
  return {b, db, s};
}

}  // namespace

RootSet find_all_roots(const Polynomial& p, int max_iters, double tol) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no root set");
  RootSet result;
  if (p.degree() == 0) {
    result.converged = true;
    return result;
  }

  // Factor out exact roots at the origin.
  std::vector<Complex> c = p.coeffs();
  std::size_t zeros_at_origin = 0;
  while (zeros_at_origin < c.size() - 1 && c[zeros_at_origin] == Complex(0.0, 0.0)) {
    ++zeros_at_origin;
  }
  c.erase(c.begin(), c.begin() + zeros_at_origin);
  const std::size_t m = c.size() - 1;

  result.roots.assign(zeros_at_origin, Complex(0.0, 0.0));
  result.residuals.assign(zeros_at_origin, 0.0);
  if (m == 0) {
    result.converged = true;
    return result;
  }

  // Perturbed-circle initialization inside the Cauchy bound.
  double coeff_bound = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    coeff_bound = std::max(coeff_bound, std::abs(c[k] / c.back()));
  }
  const double radius = 0.8 * (1.0 + coeff_bound);
  std::mt19937_64 rng(0x9E3779B97F4A7C15ULL);
  std::uniform_real_distribution<double> jitter(0.0, 0.25 / double(m));

  std::vector<Complex> z(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double ang = 2.0 * kPi * (double(j) / double(m) + jitter(rng)) + 0.3763;
    z[j] = radius * Complex(std::cos(ang), std::sin(ang));
  }

  std::vector<bool> frozen(m, false);
  bool all_small = false;
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    double max_rel_step = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (frozen[i]) continue;
      const HornerTriple h = horner_triple(c, z[i]);
      if (std::abs(h.value) <= 4.0 * kEps * h.magnitude_sum) {
        frozen[i] = true;  // at the roundoff floor, no better in doubles
        continue;
      }
      if (h.dvalue == Complex(0.0, 0.0)) {
        z[i] += Complex(1e-8, 1e-8) * (1.0 + std::abs(z[i]));
        max_rel_step = std::max(max_rel_step, 1.0);
        continue;
      }
      const Complex newton = h.value / h.dvalue;
      Complex repulsion(0.0, 0.0);
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        Complex diff = z[i] - z[j];
        if (diff == Complex(0.0, 0.0)) diff = Complex(1e-14, 1e-14);
        repulsion += 1.0 / diff;
      }
      const Complex denom = 1.0 - newton * repulsion;
      const Complex step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
      z[i] -= step;
      max_rel_step = std::max(max_rel_step, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (max_rel_step < tol) {
      all_small = true;
      break;
    }
  }
  result.iterations = iter;

  double max_residual = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double res = std::abs(horner_triple(c, z[i]).value);
    result.roots.push_back(z[i]);
    result.residuals.push_back(res);
    max_residual = std::max(max_residual, res);
  }
  result.converged = all_small && max_residual <= 1e-8 * p.max_coeff_magnitude();
  return result;
}

double quadrature_winding(const Polynomial& p, const Contour& contour,
                          int panels) {
  if (panels < 1) throw std::invalid_argument("panels must be positive");
  const Polynomial dp = derivative(p);

  std::vector<std::pair<double, double>> pieces;
  const auto& T = contour.breakpoints();
  if (T.empty()) {
    pieces.emplace_back(0.0, 1.0);
  } else {
    for (std::size_t i = 0; i < T.size(); ++i) {
      pieces.emplace_back(T[i], i + 1 < T.size() ? T[i + 1] : 1.0);
    }
  }

  Complex total(0.0, 0.0);
  for (const auto& [a, b] : pieces) {
    const double h = (b - a) / panels;
    Complex piece_sum(0.0, 0.0);
    for (int k = 0; k < panels; ++k) {
      const double t = a + (k + 0.5) * h;
      const auto sample = contour.parametrize(t);
      piece_sum += dp.eval(sample.point) * sample.velocity / p.eval(sample.point);
    }
    total += piece_sum * h;
  }
  return total.imag() / (2.0 * kPi);
}

MinModulusEstimate estimate_min_modulus(const Evaluator& p,
                                        const Contour& contour,
                                        int initial_samples,
                                        int refinement_rounds) {
  if (initial_samples < 8) {
    throw std::invalid_argument("initial_samples must be at least 8");
  }
  if (refinement_rounds < 0) {
    throw std::invalid_argument("refinement_rounds must be non-negative");
  }

  const auto modulus_at = [&](double t) {
    t -= std::floor(t);  // wrap into [0, 1)
    return std::abs(p.eval(contour.parametrize(t).point));
  };

  const int n = initial_samples;
  double best_val = std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  int best_index = 0;
  for (int k = 0; k < n; ++k) {
    const double t = double(k) / n;
    const double v = modulus_at(t);
    if (v == 0.0) return {0.0, t};
    if (v < best_val) {
      best_val = v;
      best_t = t;
      best_index = k;
    }
  }

  // Golden-section shrink around the best sample, bracketed by neighbours.
  double lo = double(best_index - 1) / n;
  double hi = double(best_index + 1) / n;
  constexpr double kInvPhi = 0.6180339887498949;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = modulus_at(c);
  double fd = modulus_at(d);
  for (int round = 0; round < refinement_rounds; ++round) {
    if (fc == 0.0) return {0.0, c};
    if (fd == 0.0) return {0.0, d};
    if (fc < best_val) { best_val = fc; best_t = c; }
    if (fd < best_val) { best_val = fd; best_t = d; }
    if (fc < fd) {
      hi = d; d = c; fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = modulus_at(c);
    } else {
      lo = c; c = d; fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = modulus_at(d);
    }
  }
  best_t -= std::floor(best_t);
  return {best_val, best_t};
}

IsolationCheck check_isolation(const Polynomial& p, const Contour& contour,
                               double r) {
  if (!(r > 0.0)) throw std::invalid_argument("r must be positive");
  IsolationCheck check;
  check.min_root_distance = std::numeric_limits<double>::infinity();

  if (p.degree() >= 1) {
    const RootSet roots = find_all_roots(p);
    if (!roots.converged) {
      check.indeterminate = true;
      return check;
    }
    for (const Complex& root : roots.roots) {
      const double dist = contour.distance_to(root);
      if (dist < check.min_root_distance) {
        check.min_root_distance = dist;
        if (dist < (2.0 / 3.0) * r) check.witness_root = root;
      }
    }
  }

  const int samples = std::max(4096, 64 * (p.degree() + 1));
  const auto estimate = estimate_min_modulus(p, contour, samples, 32);
  check.min_modulus = estimate.value;
  // One-ulp slack: |p(gamma(t))| carries rounding noise even when the true
  // modulus equals r exactly (p = z on the unit circle).
  if (estimate.value < r * (1.0 - 1e-12)) check.witness_param = estimate.param;

  check.ok = !check.witness_root.has_value() && !check.witness_param.has_value();
  return check;
}

}  // namespace windcount
