#include "entgeo/construction.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "entgeo/coordinates.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/order.hpp"

namespace entgeo {

GammaChain GammaChain::uniform(std::size_t interior_count) {
  std::vector<Rat> values;
  values.reserve(interior_count);
  for (std::size_t i = 1; i <= interior_count; ++i)
    values.emplace_back(Int(i), Int(interior_count + 1));
  return from_values(std::move(values));
}

GammaChain GammaChain::from_values(std::vector<Rat> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0 || values[i] >= 1)
      throw PreconditionError("interior level value outside (0,1)");
    if (i > 0 && !(values[i] > values[i - 1]))
      throw PreconditionError("interior level values must strictly increase");
  }
  GammaChain g;
  g.interior = std::move(values);
  return g;
}

const Rat& GammaChain::value(std::size_t level) const {
  if (!is_interior(level))
    throw PreconditionError("only interior levels carry gauge values");
  return interior[level - 1];
}

namespace {

void enumerate_tuples(const GammaChain& gamma, std::size_t length,
                      GammaTuple& prefix, std::vector<GammaTuple>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  const std::size_t top = gamma.top_level();
  const bool forced_top = !prefix.empty() && prefix.back() == top;
  for (std::size_t level = forced_top ? top : 0; level <= top; ++level) {
    prefix.push_back(level);
    enumerate_tuples(gamma, length, prefix, out);
    prefix.pop_back();
  }
}

std::string level_str(const GammaChain& gamma, std::size_t level) {
  if (level == 0) return ".";
  if (level == gamma.top_level()) return "T";
  return rat_str(gamma.value(level));
}

}  // namespace

std::vector<GammaTuple> cl_top_tuples(const GammaChain& gamma, std::size_t n) {
  if (n < 2) throw DimensionError("tuples need n >= 2");
  std::vector<GammaTuple> out;
  GammaTuple prefix;
  enumerate_tuples(gamma, n - 1, prefix, out);
  return out;
}

TupleIndices tuple_indices(const GammaChain& gamma, const GammaTuple& t) {
  TupleIndices idx;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (gamma.is_interior(t[i])) idx.interior.push_back(i);
    if (t[i] == gamma.top_level() && !idx.first_top) idx.first_top = i;
  }
  return idx;
}

std::string ConstructedPoset::class_str(std::size_t i) const {
  const EquivClass& cls = classes[i];
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < cls.tuple.size(); ++j) {
    if (j) out << ',';
    out << level_str(gamma, cls.tuple[j]);
  }
  out << ')';
  if (!cls.constrained.empty()) {
    out << '[';
    for (std::size_t j = 0; j < cls.constrained.size(); ++j) {
      if (j) out << ' ';
      out << (cls.constrained[j].first + 1) << ':'
          << core.name(cls.constrained[j].second);
    }
    out << ']';
  }
  return out.str();
}

ConstructedPoset build(const FinitePoset& a, const GammaChain& gamma) {
  ConstructedPoset p;
  p.core = strip_and_reverse(a);
  p.gamma = gamma;

  if (p.core.size() == 0) {
    // Two-element input: the core is empty and the construction collapses
    // to the single void class.
    p.empty_core = true;
    p.chains = {{}};
    p.classes = {EquivClass{GammaTuple{}, {}}};
    p.order = {{true}};
    p.bottom_index = 0;
    return p;
  }

  p.chains = maximal_chains(p.core);
  const std::size_t length = p.chains.front().size();
  for (const auto& chain : p.chains)
    if (chain.size() != length)
      throw NotGradedError("maximal chains have unequal lengths");

  // Quotient: a class is a tuple plus the chain elements at the positions
  // with interior levels or the first truth level.
  std::map<std::pair<GammaTuple, std::vector<std::pair<std::size_t, std::size_t>>>,
           std::size_t>
      seen;
  for (const GammaTuple& tuple : cl_top_tuples(gamma, length + 1)) {
    const TupleIndices idx = tuple_indices(gamma, tuple);
    std::vector<std::size_t> positions = idx.interior;
    if (idx.first_top) positions.push_back(*idx.first_top);
    std::sort(positions.begin(), positions.end());
    for (const auto& chain : p.chains) {
      std::vector<std::pair<std::size_t, std::size_t>> constrained;
      constrained.reserve(positions.size());
      for (std::size_t pos : positions)
        constrained.emplace_back(pos, chain[pos]);
      auto key = std::make_pair(tuple, constrained);
      if (seen.emplace(key, p.classes.size()).second)
        p.classes.push_back(EquivClass{tuple, std::move(constrained)});
    }
  }

  const std::size_t count = p.classes.size();
  p.order.assign(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      const EquivClass& ci = p.classes[i];
      const EquivClass& cj = p.classes[j];
      bool pointwise = true;
      for (std::size_t pos = 0; pos < length && pointwise; ++pos)
        pointwise = ci.tuple[pos] <= cj.tuple[pos];
      if (!pointwise) continue;
      // A common representative must respect both constraint maps.
      std::map<std::size_t, std::size_t> merged(ci.constrained.begin(),
                                                ci.constrained.end());
      bool consistent = true;
      for (const auto& [pos, elem] : cj.constrained) {
        auto [it, inserted] = merged.emplace(pos, elem);
        if (!inserted && it->second != elem) consistent = false;
      }
      if (!consistent) continue;
      for (const auto& chain : p.chains) {
        bool fits = true;
        for (const auto& [pos, elem] : merged)
          if (chain[pos] != elem) {
            fits = false;
            break;
          }
        if (fits) {
          p.order[i][j] = true;
          break;
        }
      }
    }

  // The all-void tuple imposes no constraints: the unique bottom.
  bool bottom_found = false;
  for (std::size_t i = 0; i < count; ++i) {
    bool is_bottom = true;
    for (std::size_t j = 0; j < count && is_bottom; ++j)
      is_bottom = p.order[i][j];
    if (is_bottom) {
      if (bottom_found) throw Error("constructed poset has two bottoms");
      p.bottom_index = i;
      bottom_found = true;
    }
  }
  if (!bottom_found) throw Error("constructed poset has no bottom");

  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && p.order[i][j] && p.order[j][i])
        throw Error("constructed relation is not antisymmetric");
      if (!p.order[i][j]) continue;
      for (std::size_t k = 0; k < count; ++k)
        if (p.order[j][k] && !p.order[i][k])
          throw Error("constructed relation is not transitive");
    }
  return p;
}

bool induced_leq(const ConstructedPoset& p, std::size_t c1, std::size_t c2) {
  return p.order[c1][c2];
}

namespace {

IndexSet parse_subset_name(const std::string& name, std::size_t n) {
  if (name.size() < 2 || name.front() != '{' || name.back() != '}')
    throw ParseError("not a subset name: " + name);
  IndexSet mask = 0;
  std::istringstream in(name.substr(1, name.size() - 2));
  std::string token;
  while (std::getline(in, token, ',')) {
    const std::size_t v = std::stoul(token);
    if (v < 1 || v > n) throw ParseError("subset member out of range: " + name);
    mask |= IndexSet{1} << (v - 1);
  }
  return mask;
}

// Coordinate on the given upper block from one labeled chain position.
Coordinate gauge_coordinate(std::size_t n, IndexSet upper,
                            const GammaChain& gamma, std::size_t level) {
  const std::size_t s = static_cast<std::size_t>(std::popcount(upper));
  Rat c1, c2;
  if (level == gamma.top_level()) {
    c1 = Rat(1, Int(s));
    c2 = 0;
  } else {
    // xi(t) = 1/(1-t): ratio of the upper to the lower coordinate value
    const Rat ratio = Rat(1) / (Rat(1) - gamma.value(level));
    c2 = Rat(1) / (Rat(s) * ratio + Rat(n - s));
    c1 = ratio * c2;
  }
  std::vector<Rat> entries(n);
  for (std::size_t i = 0; i < n; ++i)
    entries[i] = (upper & (IndexSet{1} << i)) ? c1 : c2;
  return Coordinate{Dist(std::move(entries)), upper};
}

Dist class_state(const ConstructedPoset& p, std::size_t n,
                 const EquivClass& cls,
                 const std::vector<IndexSet>& element_masks) {
  CoordSet coords;
  for (const auto& [pos, elem] : cls.constrained)
    coords.push_back(
        gauge_coordinate(n, element_masks[elem], p.gamma, cls.tuple[pos]));
  std::sort(coords.begin(), coords.end(),
            [](const Coordinate& a, const Coordinate& b) {
              return std::popcount(a.axis) < std::popcount(b.axis);
            });
  return sup_coordinates(n, coords);
}

}  // namespace

std::vector<Dist> classical_states(const ConstructedPoset& p, std::size_t n) {
  std::vector<IndexSet> masks(p.core.size());
  if (p.chains.size() == 1) {
    // chain core (monotone states): position i carries the prefix block
    const auto& chain = p.chains.front();
    for (std::size_t pos = 0; pos < chain.size(); ++pos)
      masks[chain[pos]] = (IndexSet{1} << (pos + 1)) - 1;
  } else {
    for (std::size_t i = 0; i < p.core.size(); ++i)
      masks[i] = parse_subset_name(p.core.name(i), n);
  }
  std::vector<Dist> out;
  out.reserve(p.classes.size());
  for (const EquivClass& cls : p.classes)
    out.push_back(class_state(p, n, cls, masks));
  return out;
}

std::vector<Dist> classical_grid(std::size_t n, const GammaChain& gamma) {
  if (n < 2) throw DimensionError("classical_grid needs n >= 2");
  const ConstructedPoset p = build(powerset_lattice(n), gamma);
  return classical_states(p, n);
}

IsoCertificate check_classical_iso(std::size_t n, const GammaChain& gamma) {
  if (n < 2 || n > 4 || gamma.interior.size() > 2)
    throw SizeLimitError("check_classical_iso supports n <= 4 and at most "
                         "two interior levels");
  const ConstructedPoset p = build(powerset_lattice(n), gamma);
  const std::vector<Dist> states = classical_states(p, n);

  IsoCertificate cert;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j)
      if (states[i] == states[j]) {
        cert.failure = "classes " + p.class_str(i) + " and " + p.class_str(j) +
                       " map to the same state " + states[i].str();
        return cert;
      }
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = 0; j < states.size(); ++j) {
      const bool lhs = induced_leq(p, i, j);
      const bool rhs = leq(states[i], states[j]);
      if (lhs != rhs) {
        cert.failure = "order mismatch at " + p.class_str(i) + " vs " +
                       p.class_str(j) + ": constructed " +
                       (lhs ? "<=" : "||") + ", simplex " +
                       (rhs ? "<=" : "||");
        return cert;
      }
    }
  cert.ok = true;
  cert.pairing.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    cert.pairing.emplace_back(p.class_str(i), states[i].str());
  return cert;
}

std::vector<AltForm> alt_form(const FinitePoset& a, const GammaChain& gamma) {
  const ConstructedPoset p = build(a, gamma);
  std::vector<AltForm> out;
  out.reserve(p.classes.size());
  for (const EquivClass& cls : p.classes) {
    AltForm alt;
    for (const auto& [pos, elem] : cls.constrained) {
      alt.chain.push_back(elem);
      alt.tuple.push_back(cls.tuple[pos]);
    }
    out.push_back(std::move(alt));
  }
  return out;
}

bool check_monotone_states(std::size_t m, const GammaChain& gamma) {
  if (m < 3) throw DimensionError("check_monotone_states needs m >= 3");
  const ConstructedPoset p = build(chain_poset(m), gamma);
  const std::size_t n = m - 1;
  const std::vector<GammaTuple> tuples = cl_top_tuples(gamma, n);
  if (p.classes.size() != tuples.size()) return false;

  // Single maximal chain: classes are exactly the tuples, ordered pointwise.
  std::map<GammaTuple, std::size_t> by_tuple;
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    if (!by_tuple.emplace(p.classes[i].tuple, i).second) return false;
  for (const GammaTuple& t : tuples)
    if (!by_tuple.count(t)) return false;
  for (const GammaTuple& s : tuples)
    for (const GammaTuple& t : tuples) {
      bool pointwise = true;
      for (std::size_t i = 0; i < s.size() && pointwise; ++i)
        pointwise = s[i] <= t[i];
      if (induced_leq(p, by_tuple[s], by_tuple[t]) != pointwise) return false;
    }

  // The classical image of a chain must land in the monotone states.
  std::vector<IndexSet> masks(p.core.size());
  const auto& chain = p.chains.front();
  for (std::size_t pos = 0; pos < chain.size(); ++pos)
    masks[chain[pos]] = (IndexSet{1} << (pos + 1)) - 1;
  for (const EquivClass& cls : p.classes) {
    const Dist d = [&] {
      CoordSet coords;
      for (const auto& [pos, elem] : cls.constrained)
        coords.push_back(
            gauge_coordinate(n, masks[elem], gamma, cls.tuple[pos]));
      return sup_coordinates(n, coords);
    }();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] < d[i + 1]) return false;
  }
  return true;
}

FinitePoset to_poset(const ConstructedPoset& p) {
  std::vector<std::string> names;
  names.reserve(p.classes.size());
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    names.push_back(p.class_str(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    for (std::size_t j = 0; j < p.classes.size(); ++j)
      if (i != j && p.order[i][j]) pairs.emplace_back(names[i], names[j]);
  return FinitePoset::from_covers(std::move(names), pairs);
}

}  // namespace entgeo
