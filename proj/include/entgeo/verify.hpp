#pragma once

#include <string>
#include <vector>

#include "entgeo/dist.hpp"

namespace entgeo {

struct PropertyResult {
  std::string name;
  std::size_t instances = 0;
  bool pass = false;
  bool advisory = false;  // reported, never failing
  std::string detail;     // first counterexample or a note
};

// Property sweeps behind the `verify` CLI command and the acceptance suite.
// Grid-quantified spec properties, exhaustive at the given resolution.
namespace verify {

std::vector<PropertyResult> order_axioms(std::size_t n, unsigned denom);
std::vector<PropertyResult> equivalence(std::size_t n, unsigned denom);
std::vector<PropertyResult> entropy(std::size_t n, unsigned denom);
std::vector<PropertyResult> degeneration(std::size_t n, unsigned denom);
std::vector<PropertyResult> decomposition(std::size_t n, unsigned denom);
std::vector<PropertyResult> construction();
std::vector<PropertyResult> isomorphisms();

// suite in {order-axioms, equivalence, entropy, degeneration, decomposition,
// construction, isomorphisms, all}.
std::vector<PropertyResult> run_suite(const std::string& suite, std::size_t n,
                                      unsigned denom);

}  // namespace verify

}  // namespace entgeo
