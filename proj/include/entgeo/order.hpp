#pragma once

#include <optional>

#include "entgeo/dist.hpp"

namespace entgeo {

// The Bayesian order x ⊑ y: a joint monotonization exists and the
// cross-product inequalities hold on the jointly monotonized lists.

// Some sigma with x.sigma and y.sigma both non-increasing, if one exists.
// Deterministic: x's blocks are refined by y's values with stable ordering.
std::optional<Perm> joint_monotonization(const Dist& x, const Dist& y);

bool leq(const Dist& x, const Dist& y);

// Recursion over Bayesian projections bottoming out at the two-point base
// case. Verification oracle only: cost is factorial in the dimension.
bool leq_inductive(const Dist& x, const Dist& y);

bool is_maximal(const Dist& x);

Dist bottom(std::size_t n);

// Necessary conditions for x ⊑ y: zeros propagate upward and degeneration
// propagates downward, in both the entrywise and the partition form.
bool degeneration_necessary(const Dist& x, const Dist& y);

}  // namespace entgeo
