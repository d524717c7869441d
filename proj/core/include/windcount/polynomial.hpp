#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace windcount {

using Complex = std::complex<double>;

class Polynomial;

// Evaluation interface shared by coefficient polynomials and black boxes,
// so that counting code never touches coefficients directly.
class Evaluator {
 public:
  virtual ~Evaluator() = default;

  virtual Complex eval(Complex z) const = 0;

  // Degree, or an upper bound for black boxes. Drives the sample count.
  virtual int degree() const = 0;

  // Non-null when a coefficient representation is available; this is what
  // enables the FFT fast path on discs.
  virtual const Polynomial* coefficients() const { return nullptr; }
};

// Dense univariate polynomial over the complex numbers, coefficients
// stored low degree first. Trailing zero coefficients are stripped on
// construction; the zero polynomial is kept as a single zero coefficient
// (it only arises as the derivative of a constant).
class Polynomial final : public Evaluator {
 public:
  Polynomial();
  explicit Polynomial(std::vector<Complex> coefficients);

  static Polynomial constant(Complex value);
  static Polynomial from_roots(const std::vector<Complex>& roots,
                               Complex leading = Complex(1.0, 0.0));

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  int degree() const override { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const;
  Complex leading_coefficient() const { return coeffs_.back(); }
  double max_coeff_magnitude() const;

  Complex eval(Complex z) const override;  // Horner
  const Polynomial* coefficients() const override { return this; }

 private:
  std::vector<Complex> coeffs_;
};

class BlackBoxEvaluator final : public Evaluator {
 public:
  BlackBoxEvaluator(std::function<Complex(Complex)> fn, int degree);

  Complex eval(Complex z) const override { return fn_(z); }
  int degree() const override { return degree_; }

 private:
  std::function<Complex(Complex)> fn_;
  int degree_;
};

// Coefficient-wise derivative. The derivative of a constant is the zero
// polynomial (degenerate by construction, is_zero() reports it).
Polynomial derivative(const Polynomial& p);

// q(z) = p(center + scale * z); maps questions about the disc
// D(center, scale) to the unit disc. scale must be positive.
Polynomial affine_substitute(const Polynomial& p, Complex center, double scale);

// Values of p at the 2^h-th roots of unity, entry k = p(exp(2*pi*i*k/2^h)),
// via an iterative radix-2 transform of the zero-padded coefficients.
// Requires 1 <= h <= 26 and 2^h >= degree + 1.
std::vector<Complex> fft_eval_unit_circle(const Polynomial& p, int h);

// Coefficient file format: one "re im" pair per line, low degree first,
// '#' starts a comment. A JSON array of [re, im] pairs is also accepted.
Polynomial parse_polynomial_text(const std::string& text);
Polynomial parse_polynomial_json(const std::string& text);

// Reads a polynomial from a file path, or parses it inline when the
// argument itself starts with '[' (a JSON coefficient array).
Polynomial load_polynomial(const std::string& path_or_inline_json);

std::string format_polynomial_text(const Polynomial& p);

}  // namespace windcount
