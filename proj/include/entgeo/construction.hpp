#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entgeo/dist.hpp"
#include "entgeo/poset.hpp"

namespace entgeo {

// A bounded chain of abstract levels 0 (void) < 1 < ... < k (truth), the
// interior levels carrying exact rational gauge values in (0,1).
struct GammaChain {
  std::vector<Rat> interior;  // strictly increasing, size k-1

  static GammaChain uniform(std::size_t interior_count);
  static GammaChain from_values(std::vector<Rat> values);

  std::size_t top_level() const { return interior.size() + 1; }
  std::size_t num_levels() const { return interior.size() + 2; }
  bool is_interior(std::size_t level) const {
    return level > 0 && level < top_level();
  }
  const Rat& value(std::size_t level) const;  // interior levels only
};

// Level indices into a GammaChain.
using GammaTuple = std::vector<std::size_t>;

// All truth-closed tuples of length n-1: once a level hits top, every later
// level is top. Deterministic lexicographic order.
std::vector<GammaTuple> cl_top_tuples(const GammaChain& gamma, std::size_t n);

struct TupleIndices {
  std::vector<std::size_t> interior;        // positions with interior levels
  std::optional<std::size_t> first_top;     // least position at top, if any
};

TupleIndices tuple_indices(const GammaChain& gamma, const GammaTuple& t);

// An equivalence class of labeled maximal chains: the tuple plus the chain
// elements at the positions that matter.
struct EquivClass {
  GammaTuple tuple;
  std::vector<std::pair<std::size_t, std::size_t>> constrained;  // (pos, elem)
};

struct ConstructedPoset {
  FinitePoset core;                              // stripped, reversed input
  std::vector<std::vector<std::size_t>> chains;  // maximal chains, top-down
  GammaChain gamma;
  std::vector<EquivClass> classes;
  std::vector<std::vector<bool>> order;
  std::size_t bottom_index = 0;
  bool empty_core = false;

  std::string class_str(std::size_t i) const;
};

// The full procedure: strip and reverse, enumerate chains, label them with
// truth-closed tuples, quotient, and induce the order via common
// representatives. Requires all maximal chains of the core to have equal
// length; a two-element input collapses to the one-class poset.
ConstructedPoset build(const FinitePoset& a, const GammaChain& gamma);

bool induced_leq(const ConstructedPoset& p, std::size_t c1, std::size_t c2);

// Classical gauge xi(t) = 1/(1-t) maps interior levels to coordinate
// ratios; top pins the lower coordinate value to zero. Returns the image
// state of each class of build(powerset_lattice(n), gamma), class-aligned.
std::vector<Dist> classical_states(const ConstructedPoset& p, std::size_t n);

std::vector<Dist> classical_grid(std::size_t n, const GammaChain& gamma);

struct IsoCertificate {
  bool ok = false;
  std::vector<std::pair<std::string, std::string>> pairing;  // class -> state
  std::string failure;
};

// Certifies that the constructed poset on the powerset is order-isomorphic
// to its classical-state image, both directions.
IsoCertificate check_classical_iso(std::size_t n, const GammaChain& gamma);

// Variable-length representation: void entries dropped, so each class is a
// chain fragment paired with interior levels and a final non-void level.
struct AltForm {
  std::vector<std::size_t> chain;  // core element per kept position
  GammaTuple tuple;
};

std::vector<AltForm> alt_form(const FinitePoset& a, const GammaChain& gamma);

// build(chain_poset(m), gamma) must be isomorphic to the pointwise-ordered
// truth-closed tuples, and its classical image must be monotone.
bool check_monotone_states(std::size_t m, const GammaChain& gamma);

// The constructed poset as a FinitePoset (for DOT and automorphism search).
FinitePoset to_poset(const ConstructedPoset& p);

}  // namespace entgeo
