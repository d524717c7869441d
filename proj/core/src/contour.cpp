#include "windcount/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace windcount {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(Complex a, Complex b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

double point_segment_distance(Complex z, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double s = ((z.real() - a.real()) * ab.real() +
              (z.imag() - a.imag()) * ab.imag()) / len2;
  s = std::clamp(s, 0.0, 1.0);
  return std::abs(z - (a + s * ab));
}

}  // namespace

Contour Contour::circle(Complex center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("circle radius must be positive");
  Contour c;
  c.shape_ = Shape::kCircle;
  c.center_ = center;
  c.radius_ = radius;
  c.perimeter_ = 2.0 * kPi * radius;
  c.derivative_bound_ = 2.0 * kPi * radius;
  return c;
}

Contour Contour::rectangle(Complex corner_min, Complex corner_max) {
  if (!(corner_min.real() < corner_max.real()) ||
      !(corner_min.imag() < corner_max.imag())) {
    throw std::invalid_argument("rectangle corners must satisfy min < max per axis");
  }
  std::vector<Complex> v{
      corner_min,
      Complex(corner_max.real(), corner_min.imag()),
      corner_max,
      Complex(corner_min.real(), corner_max.imag()),
  };
  Contour c = convex_polygon(std::move(v));
  c.shape_ = Shape::kRectangle;
  return c;
}

Contour Contour::convex_polygon(std::vector<Complex> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = vertices[i];
    const Complex b = vertices[(i + 1) % n];
    const Complex c = vertices[(i + 2) % n];
    if (cross(b - a, c - b) <= 0.0) {
      throw std::invalid_argument(
          "polygon vertices must be strictly convex and counterclockwise");
    }
  }

  Contour c;
  c.shape_ = Shape::kPolygon;
  c.vertices_ = std::move(vertices);

  double perimeter = 0.0;
  std::vector<double> lengths(n);
  for (std::size_t i = 0; i < n; ++i) {
    lengths[i] = std::abs(c.vertices_[(i + 1) % n] - c.vertices_[i]);
    if (!(lengths[i] > 0.0)) throw std::invalid_argument("polygon has a zero-length edge");
    perimeter += lengths[i];
  }
  c.perimeter_ = perimeter;
  c.derivative_bound_ = perimeter;

  c.edge_param_start_.resize(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c.edge_param_start_[i] = acc;
    acc += lengths[i] / perimeter;
  }
  c.breakpoints_ = c.edge_param_start_;
  return c;
}

double Contour::perimeter() const { return perimeter_; }

Contour::Sample Contour::parametrize(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("parameter must lie in [0, 1]");
  }
  if (shape_ == Shape::kCircle) {
    const double ang = 2.0 * kPi * t;
    const Complex dir(std::cos(ang), std::sin(ang));
    return Sample{center_ + radius_ * dir,
                  2.0 * kPi * radius_ * Complex(-dir.imag(), dir.real()),
                  false};
  }

  const std::size_t n = vertices_.size();
  std::size_t edge;
  if (t >= 1.0) {
    edge = n - 1;
  } else {
    edge = static_cast<std::size_t>(
        std::upper_bound(edge_param_start_.begin(), edge_param_start_.end(), t) -
        edge_param_start_.begin()) - 1;
  }
  const Complex a = vertices_[edge];
  const Complex b = vertices_[(edge + 1) % n];
  const double start = edge_param_start_[edge];
  const double span = (edge + 1 < n ? edge_param_start_[edge + 1] : 1.0) - start;
  const double s = (t - start) / span;
  const Complex velocity = (b - a) / span;  // magnitude = perimeter

  const bool at_vertex = (s == 0.0) || (t >= 1.0);
  Complex point;
  if (t >= 1.0) {
    point = vertices_[0];
  } else if (s == 0.0) {
    point = a;  // exact vertex hit
  } else {
    point = a + s * (b - a);
  }
  return Sample{point, velocity, at_vertex};
}

Complex Contour::circle_center() const {
  if (shape_ != Shape::kCircle) throw std::logic_error("not a circle");
  return center_;
}

double Contour::circle_radius() const {
  if (shape_ != Shape::kCircle) throw std::logic_error("not a circle");
  return radius_;
}

const std::vector<Complex>& Contour::vertices() const {
  if (shape_ == Shape::kCircle) throw std::logic_error("circle has no vertices");
  return vertices_;
}

double Contour::distance_to(Complex z) const {
  if (shape_ == Shape::kCircle) {
    return std::abs(std::abs(z - center_) - radius_);
  }
  const std::size_t n = vertices_.size();
  double best = point_segment_distance(z, vertices_[n - 1], vertices_[0]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    best = std::min(best, point_segment_distance(z, vertices_[i], vertices_[i + 1]));
  }
  return best;
}

SamplingPlan build_sampling_plan(const Contour& contour, int degree,
                                 const IsolationSpec& spec) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  if (!(spec.r > 0.0)) throw std::invalid_argument("isolation radius must be positive");

  const double L = contour.derivative_bound();
  const double step = kPi * spec.r / (12.0 * degree * L);

  // Smooth pieces between consecutive breakpoints (one full turn for
  // circles). Each piece is subdivided uniformly; pieces get one interval
  // beyond ceil(len/step) when breakpoints exist so that the total N meets
  // ceil(12dL/(pi r)) + |T| even when piece lengths divide evenly.
  const std::vector<double>& T = contour.breakpoints();
  std::vector<std::pair<double, double>> pieces;
  if (T.empty()) {
    pieces.emplace_back(0.0, 1.0);
  } else {
    for (std::size_t i = 0; i < T.size(); ++i) {
      const double a = T[i];
      const double b = (i + 1 < T.size()) ? T[i + 1] : 1.0;
      pieces.emplace_back(a, b);
    }
  }

  const double formula = std::ceil(12.0 * degree * L / (kPi * spec.r));
  if (formula > double(std::size_t{1} << 26)) {
    throw std::length_error("sampling plan would exceed 2^26 points");
  }
  const std::size_t min_total = static_cast<std::size_t>(formula) + T.size();

  const double extra = T.empty() ? 0.0 : 1.0;
  std::vector<std::size_t> counts;
  counts.reserve(pieces.size());
  std::size_t total = 0;
  std::size_t longest = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& [a, b] = pieces[i];
    const double want = std::ceil((b - a) / step) + extra;
    if (want > double(std::size_t{1} << 26)) {
      throw std::length_error("sampling plan would exceed 2^26 points");
    }
    counts.push_back(static_cast<std::size_t>(std::max(1.0, want)));
    total += counts.back();
    if (b - a > pieces[longest].second - pieces[longest].first) longest = i;
  }
  // Rounding of 1/step versus the formula ratio can differ by one; top up
  // the longest piece so N never falls below the formula minimum.
  if (total < min_total) {
    counts[longest] += min_total - total;
    total = min_total;
  }
  if (total > (std::size_t{1} << 26)) {
    throw std::length_error("sampling plan would exceed 2^26 points");
  }

  SamplingPlan plan;
  plan.step_bound = step;
  plan.params.reserve(total + 1);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& [a, b] = pieces[i];
    const std::size_t count = counts[i];
    for (std::size_t k = 0; k < count; ++k) {
      plan.params.push_back(a + (b - a) * (static_cast<double>(k) / count));
    }
  }
  plan.params.push_back(1.0);
  plan.n = plan.params.size() - 1;
  return plan;
}

namespace {

Complex json_point(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument(std::string(what) + " must be an [x, y] number pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

Contour parse_region_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("region JSON: ") + e.what());
  }
  if (!j.is_object() || j.size() != 1) {
    throw std::invalid_argument(
        "region must be an object with exactly one of: disc, box, polygon");
  }
  if (j.contains("disc")) {
    const auto& d = j["disc"];
    if (!d.is_object() || !d.contains("center") || !d.contains("radius")) {
      throw std::invalid_argument("region.disc needs center and radius");
    }
    if (!d["radius"].is_number() || !(d["radius"].get<double>() > 0.0)) {
      throw std::invalid_argument("region.disc.radius must be a positive number");
    }
    return Contour::circle(json_point(d["center"], "region.disc.center"),
                           d["radius"].get<double>());
  }
  if (j.contains("box")) {
    const auto& b = j["box"];
    if (!b.is_object() || !b.contains("min") || !b.contains("max")) {
      throw std::invalid_argument("region.box needs min and max");
    }
    return Contour::rectangle(json_point(b["min"], "region.box.min"),
                              json_point(b["max"], "region.box.max"));
  }
  if (j.contains("polygon")) {
    const auto& poly = j["polygon"];
    if (!poly.is_array() || poly.size() < 3) {
      throw std::invalid_argument("region.polygon needs at least 3 vertices");
    }
    std::vector<Complex> vertices;
    vertices.reserve(poly.size());
    for (const auto& v : poly) vertices.push_back(json_point(v, "region.polygon vertex"));
    return Contour::convex_polygon(std::move(vertices));
  }
  throw std::invalid_argument("region must contain one of: disc, box, polygon");
}

}  // namespace windcount
