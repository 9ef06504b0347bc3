#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "entgeo/rational.hpp"

namespace entgeo {

// Index sets over {0,...,n-1} are stored as bitmasks; n is capped well below
// the mask width by the size guard in Dist.
using IndexSet = std::uint32_t;

constexpr std::size_t kMaxDim = 24;

std::string index_set_str(IndexSet s, std::size_t n);  // "{1,3}" (1-based)

// A point of the probability simplex: exact-rational entries summing to 1.
// Immutable after construction.
class Dist {
 public:
  explicit Dist(std::vector<Rat> entries);
  static Dist parse(const std::string& text);  // "1/2,1/3,1/6"

  std::size_t size() const { return entries_.size(); }
  const Rat& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rat>& entries() const { return entries_; }
  std::string str() const;

  friend bool operator==(const Dist& a, const Dist& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Dist& a, const Dist& b) { return !(a == b); }
  friend bool operator<(const Dist& a, const Dist& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<Rat> entries_;
};

// A permutation of {0,...,n-1}, acting on distributions by
// (x.sigma)_i = x_{sigma(i)}.
class Perm {
 public:
  explicit Perm(std::vector<std::size_t> images);
  static Perm identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  Perm inverse() const;
  std::string str() const;  // 1-based, "[2,3,1]"

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<std::size_t> images_;
};

Dist apply(const Dist& x, const Perm& sigma);

std::vector<Perm> all_perms(std::size_t n);

// The faithful pair: ordered partition of {0,...,n-1} into level sets
// I_1 > ... > I_k together with the strictly decreasing spectrum.
struct SpectralRep {
  std::vector<IndexSet> blocks;  // blocks[j] holds the indices at spectrum[j]
  std::vector<Rat> spectrum;
  std::size_t dim = 0;

  std::size_t num_values() const { return spectrum.size(); }
  std::size_t multiplicity(std::size_t j) const;  // n_j, j 0-based
  std::size_t cumulative(std::size_t j) const;    // nbar_j = n_1+...+n_j
  bool zero_block_present() const;

  // Zero-block bookkeeping: n0 counts the nonzero levels, I0 is the zero
  // block (empty when 0 is not in the spectrum).
  std::size_t n0() const;
  std::size_t nbar0() const;
  IndexSet I0() const;
};

// Non-increasing rearrangement together with its stable witness.
struct MonoDist {
  std::vector<Rat> entries;
  Perm witness;
};

MonoDist monotonize(const Dist& x);
SpectralRep spectral_rep(const Dist& x);
Dist from_spectral_rep(const SpectralRep& rep);
Dist bayesian_projection(const Dist& x, std::size_t i);  // i 0-based, x_i < 1
bool monotonizes(const Dist& x, const Perm& sigma);

}  // namespace entgeo
