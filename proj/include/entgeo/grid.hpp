#pragma once

#include <vector>

#include "entgeo/dist.hpp"

namespace entgeo {

// All points of the simplex with entries that are integer multiples of
// 1/denom, in lexicographic order. Closed under permutation; contains the
// bottom whenever n divides denom.
std::vector<Dist> simplex_grid(std::size_t n, unsigned denom);

}  // namespace entgeo
