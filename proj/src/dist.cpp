#include "entgeo/dist.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "entgeo/errors.hpp"

namespace entgeo {

std::string index_set_str(IndexSet s, std::size_t n) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (s & (IndexSet{1} << i)) {
      if (!first) out << ',';
      out << (i + 1);
      first = false;
    }
  }
  out << '}';
  return out.str();
}

Dist::Dist(std::vector<Rat> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2)
    throw DimensionError("a distribution needs at least 2 entries");
  if (entries_.size() > kMaxDim)
    throw DimensionError("dimension exceeds the supported limit");
  Rat sum = 0;
  for (const Rat& e : entries_) {
    if (e < 0 || e > 1)
      throw NormalizationError("entry " + rat_str(e) + " outside [0,1]");
    sum += e;
  }
  if (sum != 1)
    throw NormalizationError("entries sum to " + rat_str(sum) + ", not 1");
}

Dist Dist::parse(const std::string& text) {
  std::vector<Rat> entries;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) entries.push_back(parse_rat(token));
  if (!text.empty() && text.back() == ',')
    throw ParseError("trailing comma in distribution");
  return Dist(std::move(entries));
}

std::string Dist::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << rat_str(entries_[i]);
  }
  return out.str();
}

Perm::Perm(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw PreconditionError("not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::size_t> im(n);
  std::iota(im.begin(), im.end(), std::size_t{0});
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<std::size_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = i;
  return Perm(std::move(im));
}

std::string Perm::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ',';
    out << (images_[i] + 1);
  }
  out << ']';
  return out.str();
}

Dist apply(const Dist& x, const Perm& sigma) {
  if (x.size() != sigma.size())
    throw DimensionError("permutation/distribution dimension mismatch");
  std::vector<Rat> entries(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) entries[i] = x[sigma(i)];
  return Dist(std::move(entries));
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<std::size_t> im(n);
  std::iota(im.begin(), im.end(), std::size_t{0});
  std::vector<Perm> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::size_t SpectralRep::multiplicity(std::size_t j) const {
  return static_cast<std::size_t>(std::popcount(blocks[j]));
}

std::size_t SpectralRep::cumulative(std::size_t j) const {
  std::size_t total = 0;
  for (std::size_t i = 0; i <= j; ++i) total += multiplicity(i);
  return total;
}

bool SpectralRep::zero_block_present() const {
  return !spectrum.empty() && spectrum.back() == 0;
}

std::size_t SpectralRep::n0() const {
  return zero_block_present() ? num_values() - 1 : num_values();
}

std::size_t SpectralRep::nbar0() const {
  return n0() == 0 ? 0 : cumulative(n0() - 1);
}

IndexSet SpectralRep::I0() const {
  return zero_block_present() ? blocks.back() : IndexSet{0};
}

MonoDist monotonize(const Dist& x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  Perm sigma{std::move(idx)};
  return MonoDist{apply(x, sigma).entries(), std::move(sigma)};
}

SpectralRep spectral_rep(const Dist& x) {
  SpectralRep rep;
  rep.dim = x.size();
  std::vector<Rat> values(x.entries());
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  rep.spectrum = std::move(values);
  rep.blocks.resize(rep.spectrum.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto it = std::find(rep.spectrum.begin(), rep.spectrum.end(), x[i]);
    rep.blocks[static_cast<std::size_t>(it - rep.spectrum.begin())] |=
        IndexSet{1} << i;
  }
  return rep;
}

Dist from_spectral_rep(const SpectralRep& rep) {
  if (rep.blocks.size() != rep.spectrum.size() || rep.spectrum.empty())
    throw PartitionError("blocks and spectrum sizes differ");
  IndexSet seen = 0;
  for (IndexSet b : rep.blocks) {
    if (b == 0) throw PartitionError("empty block");
    if (b & seen) throw PartitionError("blocks overlap");
    seen |= b;
  }
  if (rep.dim < 2 || rep.dim > kMaxDim || seen != (IndexSet{1} << rep.dim) - 1)
    throw PartitionError("blocks do not partition the index set");
  Rat sum = 0;
  for (std::size_t j = 0; j < rep.spectrum.size(); ++j) {
    const Rat& v = rep.spectrum[j];
    if (v < 0 || v > 1)
      throw SpectrumError("spectrum value " + rat_str(v) + " outside [0,1]");
    if (j + 1 < rep.spectrum.size() && !(v > rep.spectrum[j + 1]))
      throw SpectrumError("spectrum not strictly decreasing");
    sum += Rat(rep.multiplicity(j)) * v;
  }
  if (sum != 1)
    throw NormalizationError("weighted spectrum sums to " + rat_str(sum));
  std::vector<Rat> entries(rep.dim);
  for (std::size_t j = 0; j < rep.blocks.size(); ++j)
    for (std::size_t i = 0; i < rep.dim; ++i)
      if (rep.blocks[j] & (IndexSet{1} << i)) entries[i] = rep.spectrum[j];
  return Dist(std::move(entries));
}

Dist bayesian_projection(const Dist& x, std::size_t i) {
  if (i >= x.size()) throw DimensionError("projection index out of range");
  if (x.size() == 2)
    throw DimensionError("cannot project below dimension 2");
  if (x[i] == 1) throw ProjectionUndefined("entry " + std::to_string(i + 1) +
                                           " equals 1");
  const Rat scale = Rat(1) / (Rat(1) - x[i]);
  std::vector<Rat> entries;
  entries.reserve(x.size() - 1);
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != i) entries.push_back(x[j] * scale);
  return Dist(std::move(entries));
}

bool monotonizes(const Dist& x, const Perm& sigma) {
  if (x.size() != sigma.size())
    throw DimensionError("permutation/distribution dimension mismatch");
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[sigma(i)] < x[sigma(i + 1)]) return false;
  return true;
}

}  // namespace entgeo
