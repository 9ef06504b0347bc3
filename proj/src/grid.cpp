#include "entgeo/grid.hpp"

#include "entgeo/errors.hpp"

namespace entgeo {

namespace {

void compositions(std::size_t parts, unsigned remaining, unsigned denom,
                  std::vector<Rat>& prefix, std::vector<Dist>& out) {
  if (parts == 1) {
    prefix.emplace_back(Int(remaining), Int(denom));
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    prefix.emplace_back(Int(v), Int(denom));
    compositions(parts - 1, remaining - v, denom, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Dist> simplex_grid(std::size_t n, unsigned denom) {
  if (n < 2) throw DimensionError("grid needs dimension >= 2");
  if (denom == 0) throw PreconditionError("grid denominator must be positive");
  std::vector<Dist> out;
  std::vector<Rat> prefix;
  compositions(n, denom, denom, prefix, out);
  return out;
}

}  // namespace entgeo
