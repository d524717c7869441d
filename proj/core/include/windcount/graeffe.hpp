#pragma once

#include <vector>

#include "windcount/polynomial.hpp"

namespace windcount {

// Dandelin/Graeffe root squaring. One step maps p to a polynomial of the
// same degree whose root multiset is the squares of p's roots, computed
// through the even/odd coefficient split: with p(z) = E(z^2) + z*O(z^2),
// the step returns (-1)^d (E(z)^2 - z*O(z)^2).
//
// This is the one piece of the toolkit that inherently needs coefficients;
// it is unavailable for black-box inputs.
Polynomial graeffe_step(const Polynomial& p);

struct GraeffeSequence {
  std::vector<Polynomial> iterates;  // iterates[0] = p, one entry per step after it
  int requested = 0;
  bool truncated = false;  // stopped early by the coefficient growth guard
};

// p and up to `steps` squaring iterates. Iteration stops early when the
// ratio max_k |p_k| / |p_d| exceeds 1e120 (squaring would overflow well
// before doubles run out of exponent otherwise); iterates whose magnitudes
// leave [1e-60, 1e60] are rescaled by their largest coefficient, which
// moves no roots.
GraeffeSequence graeffe_sequence(const Polynomial& p, int steps);

struct AmplifyResult {
  Polynomial q;              // final iterate of the disc-shifted polynomial
  Complex disc_center{};
  double disc_radius = 1.0;
  int steps_applied = 0;
  bool truncated = false;
};

// Shifts/scales the disc D(center, radius) to the unit disc and applies
// `steps` squaring iterations. Root counts in the closed unit disc are
// preserved as long as no iterate has a root on the unit circle (|w| = 1
// is a fixed point of squaring), and a theta-isolated unit circle becomes
// theta^(2^steps)-isolated.
AmplifyResult amplify_isolation(const Polynomial& p, Complex disc_center,
                                double disc_radius, int steps);

}  // namespace windcount
