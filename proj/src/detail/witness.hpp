#pragma once

#include "mnconvex/convexity.hpp"

namespace mnconvex::detail {

// Witness priority by weight: the midpoint first, then the endpoints, then
// everything else. Within the first non-empty class the largest relative
// violation wins; offers must arrive in lexicographic (u, v, lambda) order so
// that ties keep the smallest point.
inline int weight_stage(double lambda) {
  if (lambda == 0.5) return 0;
  if (lambda == 0.0 || lambda == 1.0) return 1;
  return 2;
}

class WitnessTracker {
 public:
  void offer(double violation, const Witness& w) {
    const int stage = weight_stage(w.lambda);
    if (!found_ || stage < stage_ || (stage == stage_ && violation > violation_)) {
      found_ = true;
      stage_ = stage;
      violation_ = violation;
      witness_ = w;
    }
  }

  bool found() const noexcept { return found_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  bool found_ = false;
  int stage_ = 3;
  double violation_ = 0.0;
  Witness witness_{};
};

}  // namespace mnconvex::detail
