#pragma once

#include <vector>

#include "entgeo/dist.hpp"

namespace entgeo {

// Shannon entropy, the quantitative half of the library. This is the only
// floating-point surface; comparisons use relative tolerance 1e-12.

struct EntropyValue {
  double value;
  double base;
};

inline constexpr double kEntropyTol = 1e-12;

// base > 1; pass base e via shannon(x, std::numbers::e). With normalized set,
// the result is divided by log(n) so it lands in [0,1] regardless of base.
EntropyValue shannon(const Dist& x, double base = 2.0, bool normalized = false);

Dist mix(const Dist& x, const Dist& y, const Rat& p);  // (1-p)x + py

// Vacuously true when x and y are not comparable; otherwise entropy must not
// increase along the order.
bool check_antitone(const Dist& x, const Dist& y);

// Requires leq(x, y). Checks x ⊑ (1-p)x+py ⊑ y in exact arithmetic.
bool mixing_law_check(const Dist& x, const Dist& y, const Rat& p);

// The chain is expected in increasing order; entropy must strictly decrease
// along it.
bool strictly_increasing_on_axis(const std::vector<Dist>& axis_chain);

}  // namespace entgeo
