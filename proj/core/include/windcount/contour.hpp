#pragma once

#include <string>
#include <vector>

#include "windcount/polynomial.hpp"

namespace windcount {

// Closed convex boundary gamma: [0,1] -> C, traversed counterclockwise at
// constant speed: circles at |gamma'| = 2*pi*radius everywhere, polygon
// edges arc-length proportionally so |gamma'| equals the perimeter off the
// vertex set T. This keeps the derivative bound L exact and minimal.
class Contour {
 public:
  enum class Shape { kCircle, kRectangle, kPolygon };

  static Contour circle(Complex center, double radius);
  static Contour rectangle(Complex corner_min, Complex corner_max);
  // Vertices must be in strictly counterclockwise convex position;
  // collinear triples are rejected.
  static Contour convex_polygon(std::vector<Complex> vertices);

  Shape shape() const { return shape_; }
  bool is_circle() const { return shape_ == Shape::kCircle; }

  // L = max |gamma'(t)| over t outside the breakpoint set; exact under the
  // constant-speed parametrization (2*pi*radius, or the perimeter).
  double derivative_bound() const { return derivative_bound_; }

  // Parameters of the non-smooth points, sorted, in [0,1). Empty for circles.
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  double perimeter() const;

  struct Sample {
    Complex point;
    Complex velocity;     // forward edge velocity when at_breakpoint
    bool at_breakpoint;   // velocity is undefined there
  };
  Sample parametrize(double t) const;  // t in [0, 1], gamma(1) = gamma(0)

  Complex circle_center() const;
  double circle_radius() const;
  const std::vector<Complex>& vertices() const;  // rectangle / polygon

  // Euclidean distance from z to the curve (not the enclosed region).
  double distance_to(Complex z) const;

 private:
  Contour() = default;

  Shape shape_ = Shape::kCircle;
  Complex center_{};
  double radius_ = 0.0;
  std::vector<Complex> vertices_;
  std::vector<double> edge_param_start_;  // cumulative arc-length fractions
  std::vector<double> breakpoints_;
  double perimeter_ = 0.0;
  double derivative_bound_ = 0.0;
};

// Lower bound r on min_t |p(gamma(t))|; `certified` records whether r was
// supplied by the caller (true) or merely estimated (false). Only certified
// violation-free runs carry the counting guarantee.
struct IsolationSpec {
  double r = 0.0;
  bool certified = false;
};

// Sample parameters t_0 = 0 < t_1 < ... < t_N <= 1 with every breakpoint
// included, consecutive gaps (and the wraparound gap back to t_0) at most
// step_bound = pi*r/(12*d*L), and N >= ceil(12*d*L/(pi*r)) + |T|.
struct SamplingPlan {
  std::vector<double> params;
  double step_bound = 0.0;
  std::size_t n = 0;  // N = params.size() - 1
};

SamplingPlan build_sampling_plan(const Contour& contour, int degree,
                                 const IsolationSpec& spec);

// Region JSON: {"disc": {"center": [re, im], "radius": rho}}
//            | {"box": {"min": [x0, y0], "max": [x1, y1]}}
//            | {"polygon": [[x, y], ...]}
Contour parse_region_json(const std::string& text);

}  // namespace windcount
