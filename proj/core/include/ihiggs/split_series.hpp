#ifndef IHIGGS_SPLIT_SERIES_HPP
#define IHIGGS_SPLIT_SERIES_HPP

#include "ihiggs/polynomial.hpp"

namespace ihiggs {

// Betti numbers of a Z2-space split into the invariant (plus) and
// anti-invariant (minus) parts.  Both parts have nonnegative coefficients.
struct SplitSeries {
  Polynomial plus;
  Polynomial minus;

  // Full Poincare polynomial of the underlying space.
  Polynomial total() const { return plus + minus; }

  friend bool operator==(const SplitSeries&, const SplitSeries&) = default;
};

}  // namespace ihiggs

#endif  // IHIGGS_SPLIT_SERIES_HPP
