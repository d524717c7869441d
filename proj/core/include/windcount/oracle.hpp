#pragma once

#include <optional>
#include <vector>

#include "windcount/contour.hpp"

namespace windcount {

// Ground-truth machinery for tests and non-certified workflows. Nothing in
// here feeds the certified counting path; it exists to validate it.

struct RootSet {
  std::vector<Complex> roots;      // degree entries, multiplicity as clusters
  std::vector<double> residuals;   // |p(root)|
  bool converged = false;
  int iterations = 0;
};

// Aberth-Ehrlich simultaneous iteration from perturbed-circle starting
// points (fixed seed, deterministic). Roots at the origin are factored out
// exactly before iterating. Robust at desk scale, degree <= 32 or so.
RootSet find_all_roots(const Polynomial& p, int max_iters = 600,
                       double tol = 1e-12);

// Winding number of p∘gamma by composite midpoint quadrature of the
// argument-principle integral, `panels` panels per smooth piece. The
// midpoint rule never lands on a breakpoint, where gamma' is undefined.
// Callers should treat results farther than 0.25 from an integer as
// under-resolved and increase `panels`.
double quadrature_winding(const Polynomial& p, const Contour& contour,
                          int panels = 4096);

struct MinModulusEstimate {
  double value = 0.0;  // smallest |p(gamma(t))| found; 0 on an exact hit
  double param = 0.0;  // parameter of the minimizer
};

// Dense scan of |p∘gamma| followed by golden-section shrinking around the
// best sample. The result is an upper bound on the true minimum, never a
// certificate. initial_samples must be at least 8.
MinModulusEstimate estimate_min_modulus(const Evaluator& p,
                                        const Contour& contour,
                                        int initial_samples,
                                        int refinement_rounds);

struct IsolationCheck {
  bool ok = false;
  bool indeterminate = false;  // root finder failed to converge
  double min_root_distance = 0.0;
  double min_modulus = 0.0;
  std::optional<Complex> witness_root;   // set when the distance test fails
  std::optional<double> witness_param;   // set when the modulus test fails
};

// Verifies the isolation assumption for a claimed r: every root at
// distance >= (2/3) r from the contour and sampled min |p∘gamma| >= r.
IsolationCheck check_isolation(const Polynomial& p, const Contour& contour,
                               double r);

}  // namespace windcount
