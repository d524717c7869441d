#include "windcount/graeffe.hpp"

#include <cmath>
#include <stdexcept>

namespace windcount {

namespace {

constexpr double kGrowthGuard = 1e120;
constexpr double kRescaleHigh = 1e60;
constexpr double kRescaleLow = 1e-60;

std::vector<Complex> convolve(const std::vector<Complex>& a,
                              const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

bool growth_guard_tripped(const Polynomial& p) {
  const double lead = std::abs(p.leading_coefficient());
  return !(lead > 0.0) || p.max_coeff_magnitude() / lead > kGrowthGuard;
}

Polynomial rescaled_if_extreme(Polynomial p) {
  const double m = p.max_coeff_magnitude();
  if (m > kRescaleHigh || (m > 0.0 && m < kRescaleLow)) {
    std::vector<Complex> c = p.coeffs();
    for (Complex& x : c) x /= m;
    return Polynomial(std::move(c));
  }
  return p;
}

}  // namespace

Polynomial graeffe_step(const Polynomial& p) {
  const int d = p.degree();
  if (d < 1) throw std::invalid_argument("graeffe step needs degree >= 1");

  std::vector<Complex> even((d / 2) + 1, Complex(0.0, 0.0));
  std::vector<Complex> odd(((d + 1) / 2), Complex(0.0, 0.0));
  if (odd.empty()) odd.push_back(Complex(0.0, 0.0));
  for (int k = 0; k <= d; ++k) {
    if (k % 2 == 0) {
      even[k / 2] = p.coeffs()[k];
    } else {
      odd[k / 2] = p.coeffs()[k];
    }
  }

  const std::vector<Complex> e2 = convolve(even, even);
  const std::vector<Complex> o2 = convolve(odd, odd);

  std::vector<Complex> out(static_cast<std::size_t>(d) + 1, Complex(0.0, 0.0));
  const double sign = (d % 2 == 0) ? 1.0 : -1.0;
  for (std::size_t i = 0; i < e2.size() && i < out.size(); ++i) {
    out[i] += sign * e2[i];
  }
  for (std::size_t i = 0; i < o2.size() && i + 1 < out.size(); ++i) {
    out[i + 1] -= sign * o2[i];
  }
  return Polynomial(std::move(out));
}

GraeffeSequence graeffe_sequence(const Polynomial& p, int steps) {
  if (steps < 0) throw std::invalid_argument("steps must be non-negative");
  if (p.degree() < 1) throw std::invalid_argument("graeffe needs degree >= 1");

  GraeffeSequence seq;
  seq.requested = steps;
  seq.iterates.push_back(p);
  for (int s = 0; s < steps; ++s) {
    if (growth_guard_tripped(seq.iterates.back())) {
      seq.truncated = true;
      break;
    }
    seq.iterates.push_back(rescaled_if_extreme(graeffe_step(seq.iterates.back())));
  }
  return seq;
}

AmplifyResult amplify_isolation(const Polynomial& p, Complex disc_center,
                                double disc_radius, int steps) {
  if (steps < 0) throw std::invalid_argument("steps must be non-negative");
  if (!(disc_radius > 0.0)) {
    throw std::invalid_argument("disc radius must be positive");
  }

  AmplifyResult result;
  result.disc_center = disc_center;
  result.disc_radius = disc_radius;

  Polynomial shifted = affine_substitute(p, disc_center, disc_radius);
  if (shifted.degree() < 1 || steps == 0) {
    result.q = std::move(shifted);
    return result;
  }
  const GraeffeSequence seq = graeffe_sequence(shifted, steps);
  result.q = seq.iterates.back();
  result.steps_applied = static_cast<int>(seq.iterates.size()) - 1;
  result.truncated = seq.truncated;
  return result;
}

}  // namespace windcount
