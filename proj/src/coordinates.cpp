#include "entgeo/coordinates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "entgeo/entropy.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/order.hpp"
#include "entgeo/poset.hpp"

namespace entgeo {

namespace {

Dist two_level_dist(std::size_t n, IndexSet upper, const Rat& hi,
                    const Rat& lo) {
  std::vector<Rat> entries(n);
  for (std::size_t i = 0; i < n; ++i)
    entries[i] = (upper & (IndexSet{1} << i)) ? hi : lo;
  return Dist(std::move(entries));
}

// Upper and lower spectrum value of a coordinate; lower is 0 for the
// irreducible on a full upper block complement.
std::pair<Rat, Rat> coord_values(const Coordinate& c) {
  const SpectralRep rep = spectral_rep(c.dist);
  return {rep.spectrum.front(), rep.spectrum.back()};
}

}  // namespace

CoordSet coordinates_of(const Dist& x) {
  const SpectralRep rep = spectral_rep(x);
  const std::size_t k = rep.num_values();
  CoordSet coords;
  if (k == 1) return coords;  // the bottom decomposes into nothing
  const std::size_t n = x.size();
  IndexSet upper = 0;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    upper |= rep.blocks[j];
    const std::size_t s = static_cast<std::size_t>(std::popcount(upper));
    // Ratio equation c1/c2 = spec_j/spec_{j+1} plus normalization
    // s*c1 + (n-s)*c2 = 1; spec_{j+1} = 0 lands on the axis irreducible.
    const Rat denom =
        Rat(s) * rep.spectrum[j] + Rat(n - s) * rep.spectrum[j + 1];
    const Rat c1 = rep.spectrum[j] / denom;
    const Rat c2 = rep.spectrum[j + 1] / denom;
    coords.push_back(Coordinate{two_level_dist(n, upper, c1, c2), upper});
  }
  return coords;
}

bool is_valid_coord_set(std::size_t n, const CoordSet& coords) {
  if (coords.size() > n - 1) return false;
  const IndexSet full = (IndexSet{1} << n) - 1;
  IndexSet prev = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const Coordinate& c = coords[j];
    if (c.dist.size() != n) return false;
    const SpectralRep rep = spectral_rep(c.dist);
    if (rep.num_values() != 2) return false;
    if (rep.blocks[0] != c.axis) return false;
    if (c.axis == 0 || c.axis == full) return false;
    // strict nesting of upper blocks realizes the axis chain
    if ((prev & ~c.axis) != 0 || prev == c.axis) return false;
    prev = c.axis;
    // only the last coordinate may coincide with its axis irreducible
    if (rep.spectrum[1] == 0 && j + 1 != coords.size()) return false;
  }
  return true;
}

Dist sup_coordinates(std::size_t n, const CoordSet& coords) {
  if (!is_valid_coord_set(n, coords))
    throw InvalidCoordSet("not a valid coordinate set");
  if (coords.empty()) return bottom(n);

  const std::size_t m = coords.size();
  // Unnormalized level values, built from the ratio constraints upward.
  std::vector<Rat> level(m + 1);
  auto [am, bm] = coord_values(coords[m - 1]);
  if (bm == 0) {
    level[m] = 0;
    level[m - 1] = 1;
  } else {
    level[m] = 1;
    level[m - 1] = am / bm;
  }
  for (std::size_t j = m - 1; j-- > 0;) {
    auto [a, b] = coord_values(coords[j]);
    level[j] = level[j + 1] * a / b;
  }

  std::vector<IndexSet> blocks(m + 1);
  IndexSet prev = 0;
  for (std::size_t j = 0; j < m; ++j) {
    blocks[j] = coords[j].axis & ~prev;
    prev = coords[j].axis;
  }
  blocks[m] = ((IndexSet{1} << n) - 1) & ~prev;

  Rat total = 0;
  for (std::size_t j = 0; j <= m; ++j)
    total += Rat(std::popcount(blocks[j])) * level[j];

  std::vector<Rat> entries(n);
  for (std::size_t j = 0; j <= m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (blocks[j] & (IndexSet{1} << i)) entries[i] = level[j] / total;
  return Dist(std::move(entries));
}

std::vector<Coordinate> irreducibles(std::size_t n) {
  if (n < 2) throw DimensionError("irreducibles need dimension >= 2");
  std::vector<Coordinate> out;
  const IndexSet full = (IndexSet{1} << n) - 1;
  for (IndexSet s = 1; s < full; ++s) {
    const Rat hi(1, Int(std::popcount(s)));
    out.push_back(Coordinate{two_level_dist(n, s, hi, Rat(0)), s});
  }
  return out;
}

bool downset_is_chain(const Dist& x, const std::vector<Dist>& grid) {
  std::vector<const Dist*> below;
  for (const Dist& g : grid)
    if (leq(g, x)) below.push_back(&g);
  for (std::size_t i = 0; i < below.size(); ++i)
    for (std::size_t j = i + 1; j < below.size(); ++j)
      if (!leq(*below[i], *below[j]) && !leq(*below[j], *below[i]))
        return false;
  return true;
}

namespace {

void validate_gauge(std::size_t n, const AxisGauge& g) {
  const std::size_t s = static_cast<std::size_t>(std::popcount(g.axis));
  if (g.axis == 0 || s >= n)
    throw GaugeDomainError("gauge axis is not a proper nonempty subset");
  const Rat lo(1, Int(n));   // excluded: the bottom
  const Rat hi(1, Int(s));   // the axis irreducible
  Rat prev_key, prev_val;
  bool first = true;
  for (const auto& [key, val] : g.values) {
    if (key <= lo || key > hi || val <= lo || val > hi)
      throw GaugeDomainError("gauge value outside the open axis segment");
    if (key == hi && val != hi)
      throw GaugeDomainError("gauge must fix the axis irreducible");
    if (val == hi && key != hi)
      throw GaugeDomainError("gauge must fix the axis irreducible");
    if (!first && !(val > prev_val))
      throw GaugeDomainError("gauge is not order-preserving");
    prev_key = key;
    prev_val = val;
    first = false;
  }
}

}  // namespace

std::function<Dist(const Dist&)> build_automorphism(
    const Perm& sigma, const std::vector<AxisGauge>& gauges) {
  const std::size_t n = sigma.size();
  std::map<IndexSet, std::map<Rat, Rat>> by_axis;
  for (const AxisGauge& g : gauges) {
    validate_gauge(n, g);
    if (!by_axis.emplace(g.axis, g.values).second)
      throw GaugeDomainError("duplicate gauge for one axis");
  }
  return [n, sigma, by_axis](const Dist& y) {
    if (y.size() != n) throw DimensionError("dimension mismatch");
    CoordSet mapped;
    for (const Coordinate& c : coordinates_of(y)) {
      auto [a, b] = coord_values(c);
      if (auto it = by_axis.find(c.axis); it != by_axis.end())
        if (auto jt = it->second.find(a); jt != it->second.end()) a = jt->second;
      const std::size_t s = static_cast<std::size_t>(std::popcount(c.axis));
      const Rat bb = (Rat(1) - Rat(s) * a) / Rat(n - s);
      IndexSet axis = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (c.axis & (IndexSet{1} << sigma(i))) axis |= IndexSet{1} << i;
      mapped.push_back(Coordinate{two_level_dist(n, axis, a, bb), axis});
    }
    std::sort(mapped.begin(), mapped.end(),
              [](const Coordinate& u, const Coordinate& v) {
                return std::popcount(u.axis) < std::popcount(v.axis);
              });
    return sup_coordinates(n, mapped);
  };
}

bool entropy_rigidity_check(std::size_t n, const std::vector<Dist>& grid) {
  std::vector<std::string> names;
  names.reserve(grid.size());
  for (const Dist& g : grid) names.push_back(g.str());
  std::vector<std::pair<std::string, std::string>> relation;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid.size(); ++j)
      if (i != j && leq(grid[i], grid[j]))
        relation.emplace_back(names[i], names[j]);
  const FinitePoset poset = FinitePoset::from_covers(names, relation);

  std::vector<double> mu(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) mu[i] = shannon(grid[i]).value;
  std::vector<bool> pure(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) pure[i] = is_maximal(grid[i]);

  std::size_t surviving = 0;
  for (const auto& img : automorphisms(poset)) {
    bool keeps = true;
    for (std::size_t i = 0; i < grid.size() && keeps; ++i) {
      if (pure[i] && img[i] != i) keeps = false;
      if (std::abs(mu[img[i]] - mu[i]) > kEntropyTol) keeps = false;
    }
    if (keeps) ++surviving;
  }
  return surviving == 1;
}

}  // namespace entgeo
