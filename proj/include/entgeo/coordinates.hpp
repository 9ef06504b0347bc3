#pragma once

#include <functional>
#include <map>
#include <vector>

#include "entgeo/dist.hpp"

namespace entgeo {

// A state with an at most binary spectrum, tagged with its axis: the upper
// level set I_1. For the bottom there is no axis and the tag is empty.
struct Coordinate {
  Dist dist;
  IndexSet axis;

  friend bool operator==(const Coordinate& a, const Coordinate& b) {
    return a.dist == b.dist;
  }
};

// The coordinates of x, ordered along the implicit axis chain: upper blocks
// strictly nested, smallest first.
using CoordSet = std::vector<Coordinate>;

CoordSet coordinates_of(const Dist& x);

// Inverse of coordinates_of: the unique state with the given coordinates.
// n is needed to resolve the empty set to the bottom.
Dist sup_coordinates(std::size_t n, const CoordSet& coords);

bool is_valid_coord_set(std::size_t n, const CoordSet& coords);

// All 2^n - 2 uniform distributions on proper nonempty subsets, ordered by
// subset mask.
std::vector<Coordinate> irreducibles(std::size_t n);

// True iff all grid points below x are pairwise comparable.
bool downset_is_chain(const Dist& x, const std::vector<Dist>& grid);

// A gauge reorders nothing: it is a strictly increasing bijection between two
// finite sets of upper-block values on one axis, fixing the irreducible value
// when present. Values absent from the map pass through unchanged.
struct AxisGauge {
  IndexSet axis;
  std::map<Rat, Rat> values;
};

// Decompose, gauge each coordinate on its axis, relabel by sigma, recompose.
// With identity gauges this is an order-automorphism of any
// permutation-closed grid.
std::function<Dist(const Dist&)> build_automorphism(
    const Perm& sigma, const std::vector<AxisGauge>& gauges);

// True iff the only order-automorphism of the grid fixing every pure state
// and preserving Shannon entropy pointwise is the identity.
bool entropy_rigidity_check(std::size_t n, const std::vector<Dist>& grid);

}  // namespace entgeo
