#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "windcount/contour.hpp"

namespace windcount {

// Quadrant labels over the half-open partition
//   0: Re > 0,  Im >= 0      1: Re <= 0, Im > 0
//   2: Re < 0,  Im <= 0      3: Re >= 0, Im < 0
// so every nonzero value gets exactly one label and multiplying by i
// advances the label by one. Exact zero has no quadrant; quadrant_label
// returns kNoLabel and the counting loop records a zero_value violation.
inline constexpr int kNoLabel = -1;

int quadrant_label(Complex v);

// Balanced residue of (next - prev) mod 4: residues 0, 1, 3 map to
// 0, +1, -1. A cyclic difference of 2 cannot occur under a valid sampling
// plan, so it is surfaced as nullopt (a quadrant skip) instead of a value.
std::optional<int> lift_step(int prev_label, int next_label);

enum class ViolationKind { kQuadrantSkip, kZeroValue, kDivisibilityFailure };
const char* violation_kind_name(ViolationKind kind);

struct Violation {
  std::size_t index;  // position in the label sequence
  ViolationKind kind;
};

struct WindingOutcome {
  int winding = 0;
  bool certified = false;  // caller-supplied r and no violations
  std::vector<int> labels;  // N+2 entries: t_0..t_N plus the closing wrap
  std::vector<int> lift;    // lifted sequence, same length as labels
  std::vector<Violation> violations;
  // Samples whose value sits within 1e-12 relative of a quadrant boundary;
  // recorded because label decisions there hinge on the last bits.
  std::vector<std::size_t> boundary_proximal;
  std::size_t samples_used = 0;  // evaluator calls (transform size on the FFT path)
  std::size_t plan_size = 0;     // N
  double r_used = 0.0;
  bool used_fft = false;
  int refinements = 0;  // halvings performed by the adaptive driver
};

enum class EvalPath { kAuto, kHorner, kFft };

struct CountOptions {
  EvalPath path = EvalPath::kAuto;
};

// Counts the roots of p enclosed by the contour (with multiplicity) as the
// winding number of p∘gamma, from quadrant labels sampled along a plan
// built for spec.r. The result equals the root count whenever the contour
// genuinely (2/3)r-isolates the roots and min |p∘gamma| >= r; violations
// flag sampled evidence that this failed.
//
// On discs with coefficient input the samples are placed at 2^h-th roots
// of unity (h minimal with 2^h > ceil(12dL/(pi r)) and 2^h > degree) so
// the FFT and Horner paths share one sample set; options.path selects the
// evaluation route, kAuto preferring the transform.
WindingOutcome count_roots(const Evaluator& p, const Contour& contour,
                           const IsolationSpec& spec,
                           const CountOptions& options = {});

// Non-certified driver for when r is unknown: clamps the guess to a coarse
// modulus estimate, then halves r (doubling sample density) on violations,
// up to max_doublings times. The outcome always reports certified = false.
WindingOutcome count_roots_adaptive(const Evaluator& p, const Contour& contour,
                                    double initial_r_guess, int max_doublings,
                                    const CountOptions& options = {});

}  // namespace windcount
