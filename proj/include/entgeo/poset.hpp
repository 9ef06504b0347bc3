#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entgeo/rational.hpp"

namespace entgeo {

// Finite poset given by generating pairs; the reflexive-transitive closure is
// materialized as an order matrix, the cover relation as its transitive
// reduction. Immutable after construction.
class FinitePoset {
 public:
  static FinitePoset from_covers(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& covers);
  static FinitePoset from_json(const std::string& text);
  std::string to_json() const;

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index(const std::string& name) const;

  bool leq(std::size_t a, std::size_t b) const { return order_[a][b]; }
  // Hasse edges (lower, upper), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    return covers_;
  }

  std::vector<std::size_t> maximal_elements() const;
  std::vector<std::size_t> minimal_elements() const;
  std::optional<std::size_t> top() const;
  std::optional<std::size_t> bottom() const;

  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> order_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

// A_{0,1}^*: drop the bounds, reverse the order. Element names survive.
FinitePoset strip_and_reverse(const FinitePoset& a);

// All maximal chains, each listed top-down, in lexicographic element-index
// order. Chains need not have equal length.
std::vector<std::vector<std::size_t>> maximal_chains(const FinitePoset& p);

FinitePoset powerset_lattice(std::size_t n);  // subsets named "{1,3}"
FinitePoset chain_poset(std::size_t m);       // elements c0 < ... < c{m-1}

// All order-automorphisms, as image vectors, found by backtracking with
// up/down degree and level pruning.
std::vector<std::vector<std::size_t>> automorphisms(const FinitePoset& p);

struct OrthoStructure {
  std::vector<std::size_t> complement;  // element index -> complement index
};

// Checks omega(a v b) = omega(a) + omega(b) on all orthogonal pairs
// (a orthogonal b iff a <= b'). Validates that L is a lattice and that the
// complement is an orthocomplementation first.
bool is_orthoadditive_measure(const FinitePoset& lattice,
                              const OrthoStructure& ortho,
                              const std::vector<Rat>& omega);

std::string to_dot(const FinitePoset& p);

}  // namespace entgeo
