#pragma once

// Shared generators and comparison helpers for the test suites. Everything
// here is seeded and deterministic.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "windcount/contour.hpp"
#include "windcount/polynomial.hpp"

namespace testsupport {

using windcount::Complex;

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline Complex random_in_disc(std::mt19937_64& rng, double radius,
                              Complex center = Complex(0.0, 0.0)) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double a = 2.0 * 3.14159265358979323846 * unit(rng);
  return center + Complex(r * std::cos(a), r * std::sin(a));
}

inline Complex random_unit_normalish(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return Complex(n(rng), n(rng));
}

inline std::vector<Complex> random_roots_in_disc(std::mt19937_64& rng, int count,
                                                 double radius) {
  std::vector<Complex> roots(count);
  for (auto& z : roots) z = random_in_disc(rng, radius);
  return roots;
}

// Greedy bijective matching: true iff every entry of `expected` can be
// paired with a distinct entry of `actual` within `tol`.
inline bool roots_match(std::vector<Complex> expected, std::vector<Complex> actual,
                        double tol) {
  if (expected.size() != actual.size()) return false;
  std::vector<bool> used(actual.size(), false);
  for (const Complex& e : expected) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = actual.size();
    for (std::size_t j = 0; j < actual.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(e - actual[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best_j == actual.size() || best > tol) return false;
    used[best_j] = true;
  }
  return true;
}

inline int count_inside_circle(const std::vector<Complex>& roots, Complex center,
                               double radius) {
  int n = 0;
  for (const Complex& z : roots) {
    if (std::abs(z - center) < radius) ++n;
  }
  return n;
}

inline double min_distance_to_contour(const std::vector<Complex>& roots,
                                      const windcount::Contour& contour) {
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& z : roots) best = std::min(best, contour.distance_to(z));
  return best;
}

// Independent spacing/size checker for sampling plans (used by both the
// contour tests and the acceptance suite). Tolerates 4 ulps on the spacing
// comparison; everything else is exact.
inline bool plan_obeys_contract(const windcount::SamplingPlan& plan,
                                const windcount::Contour& contour, int degree,
                                double r) {
  const double L = contour.derivative_bound();
  const double bound = 3.14159265358979323846 * r / (12.0 * degree * L);
  // Parameters live in [0,1], so consecutive differences carry a couple of
  // ulps of absolute rounding noise.
  const double slack = bound + 4.0 * std::numeric_limits<double>::epsilon();

  const auto& t = plan.params;
  if (t.empty() || t.front() != 0.0) return false;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) return false;
    if (t[i] - t[i - 1] > slack) return false;
  }
  if (t.back() > 1.0) return false;
  if ((1.0 - t.back()) + t.front() > slack) return false;

  for (double b : contour.breakpoints()) {
    if (!std::binary_search(t.begin(), t.end(), b)) return false;
  }

  const double formula = std::ceil(12.0 * degree * L / (3.14159265358979323846 * r));
  const auto min_n = static_cast<std::size_t>(formula) + contour.breakpoints().size();
  return plan.n == t.size() - 1 && plan.n >= min_n;
}

}  // namespace testsupport
