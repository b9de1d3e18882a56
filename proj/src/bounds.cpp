#include "maxplus/bounds.hpp"

#include <stdexcept>
#include <string>

namespace maxplus {

int wielandt_bound(int n) {
  if (n < 1) throw std::invalid_argument("wielandt_bound: n must be >= 1, got " + std::to_string(n));
  return n == 1 ? 0 : (n - 1) * (n - 1) + 1;
}

int dm_bound(int g, int n) {
  if (n < 1 || g < 1 || g > n)
    throw std::invalid_argument("dm_bound: need 1 <= g <= n, got g=" + std::to_string(g) + ", n=" + std::to_string(n));
  return g * (n - 2) + n;
}

BoundComparison compare_bounds(int g, int n) {
  if (n < 2) throw std::invalid_argument("compare_bounds: n must be >= 2");
  BoundComparison c;
  c.wi = wielandt_bound(n);
  c.dm = dm_bound(g, n);
  if (c.dm < c.wi)
    c.smaller = SmallerBound::kDulmageMendelsohn;
  else if (c.wi < c.dm)
    c.smaller = SmallerBound::kWielandt;
  c.wielandt_attainable = g >= n - 1;
  return c;
}

}  // namespace maxplus
