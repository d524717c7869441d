#include "windcount/polynomial.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace windcount {

namespace {

std::vector<Complex> normalized(std::vector<Complex> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == Complex(0.0, 0.0)) {
    coeffs.pop_back();
  }
  if (coeffs.empty()) {
    coeffs.push_back(Complex(0.0, 0.0));
  }
  return coeffs;
}

}  // namespace

Polynomial::Polynomial() : coeffs_{Complex(0.0, 0.0)} {}

Polynomial::Polynomial(std::vector<Complex> coefficients)
    : coeffs_(normalized(std::move(coefficients))) {}

Polynomial Polynomial::constant(Complex value) {
  return Polynomial(std::vector<Complex>{value});
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots,
                                  Complex leading) {
  std::vector<Complex> c{leading};
  c.reserve(roots.size() + 1);
  for (const Complex& root : roots) {
    c.push_back(Complex(0.0, 0.0));
    for (std::size_t k = c.size() - 1; k > 0; --k) {
      c[k] = c[k - 1] - root * c[k];
    }
    c[0] = -root * c[0];
  }
  return Polynomial(std::move(c));
}

bool Polynomial::is_zero() const {
  return coeffs_.size() == 1 && coeffs_[0] == Complex(0.0, 0.0);
}

double Polynomial::max_coeff_magnitude() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::eval(Complex z) const {
  Complex acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k > 0; --k) {
    acc = acc * z + coeffs_[k - 1];
  }
  return acc;
}

BlackBoxEvaluator::BlackBoxEvaluator(std::function<Complex(Complex)> fn,
                                     int degree)
    : fn_(std::move(fn)), degree_(degree) {
  if (!fn_) throw std::invalid_argument("black box evaluator needs a function");
  if (degree_ < 0) throw std::invalid_argument("degree must be non-negative");
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() == 0) return Polynomial();
  std::vector<Complex> c(p.degree());
  for (int k = 1; k <= p.degree(); ++k) {
    c[k - 1] = static_cast<double>(k) * p.coeffs()[k];
  }
  return Polynomial(std::move(c));
}

Polynomial affine_substitute(const Polynomial& p, Complex center,
                             double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  // Horner in the linear substitution: result <- result*(center + scale*z) + p_k.
  std::vector<Complex> acc{p.coeffs().back()};
  for (int k = p.degree() - 1; k >= 0; --k) {
    std::vector<Complex> next(acc.size() + 1, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j] * center;
      next[j + 1] += acc[j] * scale;
    }
    next[0] += p.coeffs()[k];
    acc = std::move(next);
  }
  return Polynomial(std::move(acc));
}

std::vector<Complex> fft_eval_unit_circle(const Polynomial& p, int h) {
  if (h < 1 || h > 26) throw std::invalid_argument("h must be in [1, 26]");
  const std::size_t n = std::size_t{1} << h;
  if (n < p.coeffs().size()) {
    throw std::length_error("2^h must be at least degree + 1");
  }

  std::vector<Complex> a(n, Complex(0.0, 0.0));
  std::copy(p.coeffs().begin(), p.coeffs().end(), a.begin());

  // Bit-reversal permutation, then butterflies with twiddle sign +1 so
  // that entry k comes out as p evaluated at exp(+2*pi*i*k/n).
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / static_cast<double>(len);
    const Complex wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Complex u = a[i + j];
        const Complex v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  return a;
}

namespace {

Polynomial polynomial_from_json_value(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("polynomial JSON must be a non-empty array");
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      throw std::invalid_argument(
          "polynomial JSON entries must be [re, im] number pairs");
    }
    coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial parse_polynomial_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
  }
  return polynomial_from_json_value(j);
}

Polynomial parse_polynomial_text(const std::string& text) {
  std::vector<Complex> coeffs;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double re = 0.0, im = 0.0;
    if (!(fields >> re)) continue;  // blank or comment-only line
    if (!(fields >> im)) {
      throw std::invalid_argument("polynomial line " + std::to_string(line_no) +
                                  ": expected \"re im\"");
    }
    std::string extra;
    if (fields >> extra) {
      throw std::invalid_argument("polynomial line " + std::to_string(line_no) +
                                  ": trailing token '" + extra + "'");
    }
    coeffs.emplace_back(re, im);
  }
  if (coeffs.empty()) {
    throw std::invalid_argument("polynomial file has no coefficients");
  }
  return Polynomial(std::move(coeffs));
}

Polynomial load_polynomial(const std::string& path_or_inline_json) {
  const std::size_t first =
      path_or_inline_json.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && path_or_inline_json[first] == '[') {
    return parse_polynomial_json(path_or_inline_json);
  }
  std::ifstream file(path_or_inline_json);
  if (!file) {
    throw std::invalid_argument("cannot open polynomial file '" +
                                path_or_inline_json + "'");
  }
  std::ostringstream content;
  content << file.rdbuf();
  const std::string text = content.str();
  const std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '[') {
    return parse_polynomial_json(text);
  }
  return parse_polynomial_text(text);
}

std::string format_polynomial_text(const Polynomial& p) {
  std::ostringstream out;
  out.precision(17);
  for (const Complex& c : p.coeffs()) {
    out << c.real() << ' ' << c.imag() << '\n';
  }
  return out.str();
}

}  // namespace windcount
