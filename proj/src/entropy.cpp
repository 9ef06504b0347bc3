#include "entgeo/entropy.hpp"

#include <cmath>

#include "entgeo/errors.hpp"
#include "entgeo/order.hpp"

namespace entgeo {

EntropyValue shannon(const Dist& x, double base, bool normalized) {
  if (!(base > 1.0)) throw PreconditionError("logarithm base must be > 1");
  double sum = 0.0;
  for (const Rat& e : x.entries()) {
    if (e == 0) continue;  // 0 log 0 = 0
    const double v = rat_double(e);
    sum -= v * std::log(v);
  }
  double value = sum / std::log(base);
  if (normalized) {
    const double full = std::log(static_cast<double>(x.size())) /
                        std::log(base);
    value /= full;
  }
  return EntropyValue{value, base};
}

Dist mix(const Dist& x, const Dist& y, const Rat& p) {
  if (x.size() != y.size())
    throw DimensionError("distributions have different dimensions");
  if (p < 0 || p > 1) throw PreconditionError("mixing weight outside [0,1]");
  std::vector<Rat> entries(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    entries[i] = (Rat(1) - p) * x[i] + p * y[i];
  return Dist(std::move(entries));
}

bool check_antitone(const Dist& x, const Dist& y) {
  if (!leq(x, y)) return true;
  const double mx = shannon(x).value;
  const double my = shannon(y).value;
  return mx >= my - kEntropyTol * std::max(1.0, std::abs(my));
}

bool mixing_law_check(const Dist& x, const Dist& y, const Rat& p) {
  if (!leq(x, y)) throw PreconditionError("mixing law requires x ⊑ y");
  const Dist m = mix(x, y, p);
  return leq(x, m) && leq(m, y);
}

bool strictly_increasing_on_axis(const std::vector<Dist>& axis_chain) {
  for (std::size_t i = 0; i + 1 < axis_chain.size(); ++i)
    if (!leq(axis_chain[i], axis_chain[i + 1]))
      throw NotAChainError("elements " + std::to_string(i + 1) + " and " +
                           std::to_string(i + 2) + " are not increasing");
  for (std::size_t i = 0; i + 1 < axis_chain.size(); ++i) {
    const double hi = shannon(axis_chain[i]).value;
    const double lo = shannon(axis_chain[i + 1]).value;
    if (!(hi > lo + kEntropyTol * std::max(1.0, std::abs(hi)))) return false;
  }
  return true;
}

}  // namespace entgeo
