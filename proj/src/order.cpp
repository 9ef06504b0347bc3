#include "entgeo/order.hpp"

#include <algorithm>
#include <numeric>

#include "entgeo/errors.hpp"

namespace entgeo {

namespace {

void check_dims(const Dist& x, const Dist& y) {
  if (x.size() != y.size())
    throw DimensionError("distributions have different dimensions");
}

}  // namespace

std::optional<Perm> joint_monotonization(const Dist& x, const Dist& y) {
  check_dims(x, y);
  // Sort by x descending, break ties by y descending, then by index. The
  // result monotonizes x by construction; if it fails to monotonize y no
  // permutation does, since y can only be reordered within x-blocks.
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] != x[b]) return x[a] > x[b];
    return y[a] > y[b];
  });
  Perm sigma{std::move(idx)};
  if (!monotonizes(y, sigma)) return std::nullopt;
  return sigma;
}

bool leq(const Dist& x, const Dist& y) {
  auto sigma = joint_monotonization(x, y);
  if (!sigma) return false;
  const Dist xs = apply(x, *sigma);
  const Dist ys = apply(y, *sigma);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (xs[i] * ys[i + 1] > xs[i + 1] * ys[i]) return false;
  return true;
}

bool leq_inductive(const Dist& x, const Dist& y) {
  check_dims(x, y);
  if (x.size() == 2)
    return (y[0] <= x[0] && x[0] <= Rat(1, 2)) ||
           (Rat(1, 2) <= x[0] && x[0] <= y[0]);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1 && y[i] < 1 &&
        !leq_inductive(bayesian_projection(x, i), bayesian_projection(y, i)))
      return false;
  }
  return true;
}

bool is_maximal(const Dist& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && x[i] != 1) return false;
  return true;
}

Dist bottom(std::size_t n) {
  if (n < 2) throw DimensionError("bottom needs dimension >= 2");
  return Dist(std::vector<Rat>(n, Rat(1, Int(n))));
}

bool degeneration_necessary(const Dist& x, const Dist& y) {
  check_dims(x, y);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == 0 && y[i] != 0) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (y[i] == y[j] && y[i] > 0 && x[i] != x[j]) return false;
  const SpectralRep rx = spectral_rep(x);
  const SpectralRep ry = spectral_rep(y);
  if ((rx.I0() & ~ry.I0()) != 0) return false;
  for (std::size_t i = 0; i < ry.n0(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < rx.n0() && !contained; ++j)
      contained = (ry.blocks[i] & ~rx.blocks[j]) == 0;
    if (!contained) return false;
  }
  return true;
}

}  // namespace entgeo
