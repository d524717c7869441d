#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "windcount/winding.hpp"

namespace windcount {

struct Square {
  Complex center{};
  double half_width = 0.0;
};

enum class BoxStatus { kExcluded, kIsolated, kUndecided, kSuspect };

struct IsolationBox {
  Complex center{};
  double half_width = 0.0;  // max half-extent (boxes can turn slightly
                            // rectangular after an offset cut)
  int count = 0;
  BoxStatus status = BoxStatus::kUndecided;
};

struct SplitRecord {
  Complex parent_center{};
  double parent_half_width = 0.0;
  int parent_count = 0;
  std::array<int, 4> child_counts{};
  bool offset_cut = false;  // cut was displaced off a root on the grid line
};

struct IsolationReport {
  std::vector<IsolationBox> isolated;
  std::vector<IsolationBox> suspect;   // counting failed or max depth hit
  std::vector<SplitRecord> splits;
  int initial_count = 0;               // count certified at the initial box
  std::size_t evaluations_used = 0;    // total evaluator calls
  int max_depth_reached = 0;
};

// Breadth-first Weyl subdivision of an axis-aligned square driven by the
// winding-number counter: zero-count boxes are excluded, boxes at the
// target width are isolated (count >= 2 means a multiple root or cluster,
// reported with its multiplicity), everything else splits in four.
//
// When a child cannot be counted because a root sits (numerically) on the
// cut, the split is redone once with the cut displaced by width/32, which
// keeps the children an exact tiling of the parent; if that also fails the
// parent is surfaced as suspect. An initial box that cannot be counted is
// retried once inflated by width/32 per side.
//
// Counts come from the adaptive (non-certified) driver; violations are
// always detected, so per-box counts are trustworthy exactly when the box
// is not suspect.
IsolationReport isolate_roots(const Evaluator& p, Square initial_box,
                              double target_width, int max_depth);

// True iff every recorded split conserves counts exactly, isolated and
// suspect counts add up to the initial count, and the initial count does
// not exceed the degree.
bool count_conservation_audit(const IsolationReport& report, int degree);

// {"evaluations": n,
//  "isolated": [{"center": [x, y], "count": c, "half_width": w}, ...],
//  "suspect":  [...]}
std::string report_to_json(const IsolationReport& report);

}  // namespace windcount
