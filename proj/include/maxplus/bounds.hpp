#pragma once

namespace maxplus {

/// (n-1)^2 + 1, and 0 for n = 1.
int wielandt_bound(int n);

/// g(n-2) + n, for 1 <= g <= n.
int dm_bound(int g, int n);

enum class SmallerBound { kDulmageMendelsohn, kWielandt, kEqual };

struct BoundComparison {
  int wi = 0;
  int dm = 0;
  SmallerBound smaller = SmallerBound::kEqual;
  /// The Wielandt bound is reachable only when g is n-1 or n.
  bool wielandt_attainable = false;
};

/// Requires n >= 2 and 1 <= g <= n.
BoundComparison compare_bounds(int g, int n);

}  // namespace maxplus
