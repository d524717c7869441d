#include "windcount/subdivision.hpp"

#include <cmath>
#include <deque>
#include <optional>
#include <stdexcept>

#include "json.hpp"

#include "windcount/oracle.hpp"

namespace windcount {

namespace {

// Counting budget per box. A root sitting on a box boundary keeps
// violating at every density, so a tight budget fails fast and lets the
// displaced-cut fallback take over.
constexpr int kMaxDoublings = 7;

struct Rect {
  double x0, y0, x1, y1;

  Complex center() const { return Complex((x0 + x1) / 2, (y0 + y1) / 2); }
  double half_x() const { return (x1 - x0) / 2; }
  double half_y() const { return (y1 - y0) / 2; }
  double max_half() const { return std::max(half_x(), half_y()); }
  double width() const { return 2.0 * max_half(); }
};

class CountingEvaluator final : public Evaluator {
 public:
  CountingEvaluator(const Evaluator& inner, std::size_t& counter)
      : inner_(inner), counter_(counter) {}

  Complex eval(Complex z) const override {
    ++counter_;
    return inner_.eval(z);
  }
  int degree() const override { return inner_.degree(); }
  const Polynomial* coefficients() const override {
    return inner_.coefficients();
  }

 private:
  const Evaluator& inner_;
  std::size_t& counter_;
};

// Adaptive boundary count; nullopt when violations persist (a root is too
// close to, or on, the box boundary).
std::optional<int> count_box(const Evaluator& p, const Rect& r) {
  const Contour boundary =
      Contour::rectangle(Complex(r.x0, r.y0), Complex(r.x1, r.y1));
  const auto guess = estimate_min_modulus(p, boundary, 64, 4);
  if (guess.value == 0.0) return std::nullopt;
  const WindingOutcome out =
      count_roots_adaptive(p, boundary, guess.value, kMaxDoublings);
  if (!out.violations.empty() || out.winding < 0) return std::nullopt;
  return out.winding;
}

std::array<Rect, 4> cut(const Rect& r, double ox, double oy) {
  const double cx = (r.x0 + r.x1) / 2 + ox;
  const double cy = (r.y0 + r.y1) / 2 + oy;
  return {Rect{r.x0, r.y0, cx, cy}, Rect{cx, r.y0, r.x1, cy},
          Rect{cx, cy, r.x1, r.y1}, Rect{r.x0, cy, cx, r.y1}};
}

IsolationBox make_box(const Rect& r, int count, BoxStatus status) {
  return IsolationBox{r.center(), r.max_half(), count, status};
}

}  // namespace

IsolationReport isolate_roots(const Evaluator& p, Square initial_box,
                              double target_width, int max_depth) {
  if (!(target_width > 0.0)) {
    throw std::invalid_argument("target width must be positive");
  }
  if (!(initial_box.half_width > 0.0)) {
    throw std::invalid_argument("initial box must be non-degenerate");
  }
  if (max_depth < 0) throw std::invalid_argument("max depth must be non-negative");

  IsolationReport report;
  CountingEvaluator counted(p, report.evaluations_used);

  Rect root{initial_box.center.real() - initial_box.half_width,
            initial_box.center.imag() - initial_box.half_width,
            initial_box.center.real() + initial_box.half_width,
            initial_box.center.imag() + initial_box.half_width};

  std::optional<int> root_count = count_box(counted, root);
  if (!root_count) {
    // Inflate by width/32 per side and retry once.
    const double margin = root.width() / 32.0;
    root = Rect{root.x0 - margin, root.y0 - margin, root.x1 + margin,
                root.y1 + margin};
    root_count = count_box(counted, root);
  }
  if (!root_count) {
    report.suspect.push_back(make_box(root, 0, BoxStatus::kSuspect));
    return report;
  }
  report.initial_count = *root_count;
  if (*root_count == 0) return report;

  struct WorkItem {
    Rect rect;
    int count;
    int depth;
  };
  std::deque<WorkItem> queue;
  queue.push_back({root, *root_count, 0});

  while (!queue.empty()) {
    const WorkItem item = queue.front();
    queue.pop_front();
    report.max_depth_reached = std::max(report.max_depth_reached, item.depth);

    if (item.count == 0) continue;  // excluded
    if (item.rect.width() <= target_width) {
      report.isolated.push_back(
          make_box(item.rect, item.count, BoxStatus::kIsolated));
      continue;
    }
    if (item.depth >= max_depth) {
      report.suspect.push_back(
          make_box(item.rect, item.count, BoxStatus::kSuspect));
      continue;
    }

    // Split in four; if any child count fails or the counts do not add up,
    // redo the split once with the cut displaced by width/32.
    const double offset = item.rect.width() / 32.0;
    bool placed = false;
    bool offset_used = false;
    std::array<Rect, 4> children{};
    std::array<int, 4> counts{};
    for (const double shift : {0.0, offset}) {
      children = cut(item.rect, shift, shift);
      int sum = 0;
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i) {
        const auto c = count_box(counted, children[i]);
        if (!c) {
          ok = false;
        } else {
          counts[i] = *c;
          sum += *c;
        }
      }
      if (ok && sum == item.count) {
        placed = true;
        offset_used = (shift != 0.0);
        break;
      }
    }

    if (!placed) {
      report.suspect.push_back(
          make_box(item.rect, item.count, BoxStatus::kSuspect));
      continue;
    }

    report.splits.push_back(SplitRecord{item.rect.center(),
                                        item.rect.max_half(), item.count,
                                        counts, offset_used});
    for (int i = 0; i < 4; ++i) {
      if (counts[i] > 0) {
        queue.push_back({children[i], counts[i], item.depth + 1});
      }
    }
  }
  return report;
}

bool count_conservation_audit(const IsolationReport& report, int degree) {
  if (report.initial_count < 0 || report.initial_count > degree) return false;
  for (const SplitRecord& split : report.splits) {
    int sum = 0;
    for (int c : split.child_counts) sum += c;
    if (sum != split.parent_count) return false;
  }
  int leaves = 0;
  for (const IsolationBox& box : report.isolated) leaves += box.count;
  for (const IsolationBox& box : report.suspect) leaves += box.count;
  return leaves == report.initial_count;
}

std::string report_to_json(const IsolationReport& report) {
  nlohmann::json j;
  const auto box_json = [](const IsolationBox& box) {
    nlohmann::json b;
    b["center"] = {box.center.real(), box.center.imag()};
    b["half_width"] = box.half_width;
    b["count"] = box.count;
    return b;
  };
  j["evaluations"] = report.evaluations_used;
  j["isolated"] = nlohmann::json::array();
  for (const IsolationBox& box : report.isolated) {
    j["isolated"].push_back(box_json(box));
  }
  j["suspect"] = nlohmann::json::array();
  for (const IsolationBox& box : report.suspect) {
    j["suspect"].push_back(box_json(box));
  }
  return j.dump(2);
}

}  // namespace windcount
