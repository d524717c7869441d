#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "windcount/polynomial.hpp"

using namespace windcount;
using testsupport::make_rng;
using testsupport::random_unit_normalish;

namespace {

// Independent evaluation route: term-by-term sum with powers computed by
// repeated squaring, plus the magnitude sum for the error bound.
Complex power(Complex z, int e) {
  Complex acc(1.0, 0.0);
  Complex base = z;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Complex term_sum(const Polynomial& p, Complex z, double* magnitude_sum = nullptr) {
  Complex total(0.0, 0.0);
  double mags = 0.0;
  for (int k = 0; k <= p.degree(); ++k) {
    total += p.coeffs()[k] * power(z, k);
    mags += std::abs(p.coeffs()[k]) * std::pow(std::abs(z), k);
  }
  if (magnitude_sum) *magnitude_sum = mags;
  return total;
}

Polynomial random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Complex> c(degree + 1);
  for (auto& x : c) x = random_unit_normalish(rng);
  if (c.back() == Complex(0.0, 0.0)) c.back() = Complex(1.0, 0.0);
  return Polynomial(c);
}

}  // namespace

TEST_CASE("evaluate matches direct arithmetic") {
  const Polynomial p({Complex(-1, 0), Complex(0, 0), Complex(1, 0)});  // z^2 - 1
  CHECK(p.eval(Complex(2, 0)) == Complex(3, 0));

  const Polynomial c = Polynomial::constant(Complex(7, 0));
  CHECK(c.eval(Complex(123, -4)) == Complex(7, 0));
  CHECK(c.degree() == 0);

  // z^3 - 2z + 1 at 1+i, cross-checked against the term-by-term route.
  const Polynomial q({Complex(1, 0), Complex(-2, 0), Complex(0, 0), Complex(1, 0)});
  const Complex z(1, 1);
  const Complex direct = term_sum(q, z);
  CHECK(std::abs(q.eval(z) - direct) <= 1e-12 * std::abs(direct));
}

TEST_CASE("evaluate agrees with repeated-squaring term sums") {
  auto rng = make_rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = 1 + int(rng() % 12);
    const Polynomial p = random_poly(rng, degree);
    const Complex z = 3.0 * random_unit_normalish(rng);
    double mags = 0.0;
    const Complex expected = term_sum(p, z, &mags);
    CHECK(std::abs(p.eval(z) - expected) <= 1e-10 * mags);
  }
}

TEST_CASE("normalization strips trailing zeros") {
  const Polynomial p({Complex(1, 0), Complex(2, 0), Complex(0, 0), Complex(0, 0)});
  CHECK(p.degree() == 1);
  CHECK(p.leading_coefficient() == Complex(2, 0));

  const Polynomial z({Complex(0, 0), Complex(0, 0)});
  CHECK(z.is_zero());
  CHECK(z.degree() == 0);
}

TEST_CASE("derivative") {
  const Polynomial p({Complex(-1, 0), Complex(0, 0), Complex(1, 0)});  // z^2 - 1
  CHECK(derivative(p).coeffs() == std::vector<Complex>{Complex(0, 0), Complex(2, 0)});

  const Polynomial q({Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(1, 0)});  // z^3 + z
  CHECK(derivative(q).coeffs() ==
        std::vector<Complex>{Complex(1, 0), Complex(0, 0), Complex(3, 0)});

  CHECK(derivative(Polynomial::constant(Complex(5, 2))).is_zero());
}

TEST_CASE("derivative matches central differences") {
  auto rng = make_rng(202);
  const Polynomial p = random_poly(rng, 6);
  const Polynomial dp = derivative(p);
  const double h = 1e-6;
  for (int trial = 0; trial < 25; ++trial) {
    const Complex z = random_unit_normalish(rng);
    const Complex fd = (p.eval(z + Complex(h, 0)) - p.eval(z - Complex(h, 0))) / (2 * h);
    const Complex exact = dp.eval(z);
    CHECK(std::abs(fd - exact) <= 1e-5 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("affine substitution") {
  const Polynomial p({Complex(0, 0), Complex(1, 0)});  // z
  const Polynomial q = affine_substitute(p, Complex(1, 0), 2.0);
  CHECK(q.coeffs() == std::vector<Complex>{Complex(1, 0), Complex(2, 0)});

  auto rng = make_rng(303);
  const Polynomial r = random_poly(rng, 5);
  const Polynomial same = affine_substitute(r, Complex(0, 0), 1.0);
  REQUIRE(same.degree() == r.degree());
  for (int k = 0; k <= r.degree(); ++k) {
    CHECK(std::abs(same.coeffs()[k] - r.coeffs()[k]) <= 1e-15);
  }

  const Complex center(0.3, -0.1);
  const double scale = 0.5;
  const Polynomial shifted = affine_substitute(r, center, scale);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex w = random_unit_normalish(rng);
    const Complex expected = r.eval(center + scale * w);
    CHECK(std::abs(shifted.eval(w) - expected) <=
          1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("affine substitution round-trips") {
  auto rng = make_rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const int degree = 1 + int(rng() % 8);
    const Polynomial p = random_poly(rng, degree);
    const Complex c = random_unit_normalish(rng);
    const double rho = 0.25 + std::abs(random_unit_normalish(rng));
    const Polynomial back =
        affine_substitute(affine_substitute(p, c, rho), -c / rho, 1.0 / rho);
    REQUIRE(back.degree() == p.degree());
    for (int k = 0; k <= p.degree(); ++k) {
      CHECK(std::abs(back.coeffs()[k] - p.coeffs()[k]) <=
            1e-9 * std::max(1.0, std::abs(p.coeffs()[k])));
    }
  }
}

TEST_CASE("fft evaluation at roots of unity") {
  const Polynomial identity({Complex(0, 0), Complex(1, 0)});  // z
  const auto vals = fft_eval_unit_circle(identity, 2);
  REQUIRE(vals.size() == 4);
  CHECK(std::abs(vals[0] - Complex(1, 0)) <= 1e-15);
  CHECK(std::abs(vals[1] - Complex(0, 1)) <= 1e-15);
  CHECK(std::abs(vals[2] - Complex(-1, 0)) <= 1e-15);
  CHECK(std::abs(vals[3] - Complex(0, -1)) <= 1e-15);

  const auto ones = fft_eval_unit_circle(Polynomial::constant(Complex(1, 0)), 3);
  REQUIRE(ones.size() == 8);
  for (const Complex& v : ones) CHECK(std::abs(v - Complex(1, 0)) <= 1e-15);
}

TEST_CASE("fft matches Horner at every sample point") {
  auto rng = make_rng(505);
  const Polynomial p = random_poly(rng, 7);
  const auto vals = fft_eval_unit_circle(p, 4);
  REQUIRE(vals.size() == 16);
  for (int k = 0; k < 16; ++k) {
    const double ang = 2.0 * std::numbers::pi * k / 16.0;
    const Complex expected = p.eval(Complex(std::cos(ang), std::sin(ang)));
    CHECK(std::abs(vals[k] - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("fft stays accurate at degree 1024") {
  auto rng = make_rng(606);
  const Polynomial p = random_poly(rng, 1024);
  const int h = 11;  // 2048 points
  const auto vals = fft_eval_unit_circle(p, h);
  for (int k = 0; k < (1 << h); k += 97) {
    const double ang = 2.0 * std::numbers::pi * k / double(1 << h);
    const Complex expected = p.eval(Complex(std::cos(ang), std::sin(ang)));
    CHECK(std::abs(vals[k] - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("fft rejects undersized transforms") {
  auto rng = make_rng(707);
  const Polynomial p = random_poly(rng, 9);
  CHECK_THROWS_AS(fft_eval_unit_circle(p, 3), std::length_error);
  CHECK_THROWS_AS(fft_eval_unit_circle(p, 0), std::invalid_argument);
}

TEST_CASE("black box evaluator") {
  const BlackBoxEvaluator box([](Complex z) { return z * z - 1.0; }, 2);
  CHECK(box.eval(Complex(2, 0)) == Complex(3, 0));
  CHECK(box.degree() == 2);
  CHECK(box.coefficients() == nullptr);
}

TEST_CASE("polynomial text parsing") {
  const std::string text =
      "# constant first\n"
      "-1 0\n"
      "0 0   # middle\n"
      "1 0\n";
  const Polynomial p = parse_polynomial_text(text);
  CHECK(p.degree() == 2);
  CHECK(p.coeffs()[0] == Complex(-1, 0));

  CHECK_THROWS_AS(parse_polynomial_text("1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial_text("# nothing\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial_text("1 2 3\n"), std::invalid_argument);
}

TEST_CASE("polynomial json parsing") {
  const Polynomial p = parse_polynomial_json("[[-1, 0], [0, 0], [1, 0]]");
  CHECK(p.degree() == 2);
  CHECK_THROWS_AS(parse_polynomial_json("[[1]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial_json("[[1, 0"), std::invalid_argument);
}

TEST_CASE("format round-trips through the text parser") {
  auto rng = make_rng(808);
  const Polynomial p = random_poly(rng, 6);
  const Polynomial back = parse_polynomial_text(format_polynomial_text(p));
  REQUIRE(back.degree() == p.degree());
  for (int k = 0; k <= p.degree(); ++k) {
    CHECK(back.coeffs()[k] == p.coeffs()[k]);
  }
}
