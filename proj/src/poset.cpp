#include "entgeo/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "entgeo/dist.hpp"
#include "entgeo/errors.hpp"

namespace entgeo {

namespace {

constexpr std::size_t kAutomorphismSizeLimit = 10000;

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    const std::vector<std::vector<bool>>& order) {
  const std::size_t n = order.size();
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !order[a][b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c)
        if (c != a && c != b && order[a][c] && order[c][b]) direct = false;
      if (direct) covers.emplace_back(a, b);
    }
  return covers;
}

}  // namespace

FinitePoset FinitePoset::from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  FinitePoset p;
  p.names_ = std::move(elements);
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < p.names_.size(); ++i)
    if (!idx.emplace(p.names_[i], i).second)
      throw DuplicateCoverError("duplicate element name: " + p.names_[i]);

  const std::size_t n = p.names_.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [lo, hi] : covers) {
    auto li = idx.find(lo);
    auto hi_it = idx.find(hi);
    if (li == idx.end()) throw UnknownElementError("unknown element: " + lo);
    if (hi_it == idx.end()) throw UnknownElementError("unknown element: " + hi);
    if (!seen.emplace(li->second, hi_it->second).second)
      throw DuplicateCoverError("duplicate cover: " + lo + " < " + hi);
    adj[li->second][hi_it->second] = true;
  }

  // Warshall closure; a diagonal hit afterwards means a cycle.
  p.order_ = adj;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (p.order_[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (p.order_[k][b]) p.order_[a][b] = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (p.order_[a][a])
      throw CycleError("cover relation has a cycle through " + p.names_[a]);
    p.order_[a][a] = true;
  }
  p.covers_ = transitive_reduction(p.order_);
  return p;
}

FinitePoset FinitePoset::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad poset JSON: ") + e.what());
  }
  if (!j.contains("elements") || !j.contains("covers"))
    throw ParseError("poset JSON needs 'elements' and 'covers'");
  std::vector<std::string> elements =
      j["elements"].get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& pair : j["covers"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("each cover must be a [lower, upper] pair");
    covers.emplace_back(pair[0].get<std::string>(),
                        pair[1].get<std::string>());
  }
  return from_covers(std::move(elements), covers);
}

std::string FinitePoset::to_json() const {
  nlohmann::json j;
  j["elements"] = names_;
  auto& cov = j["covers"] = nlohmann::json::array();
  for (const auto& [lo, hi] : covers_)
    cov.push_back({names_[lo], names_[hi]});
  return j.dump(2);
}

std::size_t FinitePoset::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw UnknownElementError("unknown element: " + name);
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < size() && maximal; ++b)
      if (b != a && order_[a][b]) maximal = false;
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < size() && minimal; ++b)
      if (b != a && order_[b][a]) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

std::optional<std::size_t> FinitePoset::top() const {
  auto maxes = maximal_elements();
  if (maxes.size() != 1) return std::nullopt;
  for (std::size_t a = 0; a < size(); ++a)
    if (!order_[a][maxes[0]]) return std::nullopt;
  return maxes[0];
}

std::optional<std::size_t> FinitePoset::bottom() const {
  auto mins = minimal_elements();
  if (mins.size() != 1) return std::nullopt;
  for (std::size_t a = 0; a < size(); ++a)
    if (!order_[mins[0]][a]) return std::nullopt;
  return mins[0];
}

std::optional<std::size_t> FinitePoset::meet(std::size_t a,
                                             std::size_t b) const {
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < size(); ++c) {
    if (!order_[c][a] || !order_[c][b]) continue;
    if (!best || order_[*best][c]) best = c;
  }
  if (!best) return std::nullopt;
  for (std::size_t c = 0; c < size(); ++c)
    if (order_[c][a] && order_[c][b] && !order_[c][*best])
      return std::nullopt;  // lower bounds with no greatest one
  return best;
}

std::optional<std::size_t> FinitePoset::join(std::size_t a,
                                             std::size_t b) const {
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < size(); ++c) {
    if (!order_[a][c] || !order_[b][c]) continue;
    if (!best || order_[c][*best]) best = c;
  }
  if (!best) return std::nullopt;
  for (std::size_t c = 0; c < size(); ++c)
    if (order_[a][c] && order_[b][c] && !order_[*best][c])
      return std::nullopt;
  return best;
}

FinitePoset strip_and_reverse(const FinitePoset& a) {
  auto top = a.top();
  auto bot = a.bottom();
  if (!top || !bot)
    throw NotBoundedError("poset has no unique top or bottom");
  std::vector<std::string> elements;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != *top && i != *bot) {
      keep.push_back(i);
      elements.push_back(a.name(i));
    }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t x : keep)
    for (std::size_t y : keep)
      if (x != y && a.leq(x, y))
        pairs.emplace_back(a.name(y), a.name(x));  // reversed
  return FinitePoset::from_covers(std::move(elements), pairs);
}

namespace {

void extend_chain(const FinitePoset& p,
                  const std::vector<std::vector<std::size_t>>& down,
                  std::vector<std::size_t>& chain,
                  std::vector<std::vector<std::size_t>>& out) {
  const std::size_t last = chain.back();
  if (down[last].empty()) {
    out.push_back(chain);
    return;
  }
  for (std::size_t next : down[last]) {
    chain.push_back(next);
    extend_chain(p, down, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_chains(const FinitePoset& p) {
  // Saturated descents along cover edges from maximal to minimal elements.
  std::vector<std::vector<std::size_t>> down(p.size());
  for (const auto& [lo, hi] : p.covers()) down[hi].push_back(lo);
  for (auto& d : down) std::sort(d.begin(), d.end());
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t root : p.maximal_elements()) {
    std::vector<std::size_t> chain{root};
    extend_chain(p, down, chain, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FinitePoset powerset_lattice(std::size_t n) {
  if (n < 1 || n > 20) throw DimensionError("powerset_lattice needs 1 <= n <= 20");
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::string> elements(count);
  for (std::size_t mask = 0; mask < count; ++mask)
    elements[mask] = index_set_str(static_cast<IndexSet>(mask), n);
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t mask = 0; mask < count; ++mask)
    for (std::size_t i = 0; i < n; ++i)
      if (!(mask & (std::size_t{1} << i)))
        covers.emplace_back(elements[mask],
                            elements[mask | (std::size_t{1} << i)]);
  return FinitePoset::from_covers(std::move(elements), covers);
}

FinitePoset chain_poset(std::size_t m) {
  if (m < 2) throw DimensionError("chain_poset needs m >= 2");
  std::vector<std::string> elements(m);
  for (std::size_t i = 0; i < m; ++i) elements[i] = "c" + std::to_string(i);
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i + 1 < m; ++i)
    covers.emplace_back(elements[i], elements[i + 1]);
  return FinitePoset::from_covers(std::move(elements), covers);
}

namespace {

struct AutoSearch {
  const FinitePoset& p;
  std::vector<std::size_t> signature;  // invariant class per element
  std::vector<std::size_t> image;
  std::vector<bool> used;
  std::vector<std::vector<std::size_t>> found;

  explicit AutoSearch(const FinitePoset& poset) : p(poset) {
    const std::size_t n = p.size();
    // (down-set size, up-set size, degree) partition refinement seed
    signature.resize(n);
    std::vector<std::size_t> downs(n, 0), ups(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (p.leq(b, a)) ++downs[a];
        if (p.leq(a, b)) ++ups[a];
      }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> classes;
    for (std::size_t a = 0; a < n; ++a) {
      auto key = std::make_pair(downs[a], ups[a]);
      auto [it, _] = classes.emplace(key, classes.size());
      signature[a] = it->second;
    }
    image.assign(n, n);
    used.assign(n, false);
  }

  bool compatible(std::size_t a, std::size_t target) const {
    if (signature[a] != signature[target]) return false;
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (image[b] == p.size()) continue;
      if (p.leq(a, b) != p.leq(target, image[b])) return false;
      if (p.leq(b, a) != p.leq(image[b], target)) return false;
    }
    return true;
  }

  void search(std::size_t a) {
    if (a == p.size()) {
      found.push_back(image);
      return;
    }
    for (std::size_t target = 0; target < p.size(); ++target) {
      if (used[target] || !compatible(a, target)) continue;
      image[a] = target;
      used[target] = true;
      search(a + 1);
      used[target] = false;
      image[a] = p.size();
    }
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> automorphisms(const FinitePoset& p) {
  if (p.size() > kAutomorphismSizeLimit)
    throw SizeLimitError("poset too large for automorphism search");
  AutoSearch s(p);
  s.search(0);
  return s.found;
}

bool is_orthoadditive_measure(const FinitePoset& lattice,
                              const OrthoStructure& ortho,
                              const std::vector<Rat>& omega) {
  const std::size_t n = lattice.size();
  if (ortho.complement.size() != n || omega.size() != n)
    throw DimensionError("complement/measure size mismatch");
  auto top = lattice.top();
  auto bot = lattice.bottom();
  if (!top || !bot) throw NotALatticeError("lattice must be bounded");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!lattice.meet(a, b) || !lattice.join(a, b))
        throw NotALatticeError("meet or join missing for " + lattice.name(a) +
                               ", " + lattice.name(b));
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t c = ortho.complement[a];
    if (c >= n || ortho.complement[c] != a)
      throw NotOrthocomplementationError("complement is not an involution");
    if (*lattice.meet(a, c) != *bot || *lattice.join(a, c) != *top)
      throw NotOrthocomplementationError("complement laws fail at " +
                                         lattice.name(a));
    for (std::size_t b = 0; b < n; ++b)
      if (lattice.leq(a, b) &&
          !lattice.leq(ortho.complement[b], c))
        throw NotOrthocomplementationError("complement is not antitone");
  }
  for (const Rat& v : omega)
    if (v < 0 || v > 1) return false;
  if (omega[*top] != 1) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!lattice.leq(a, ortho.complement[b])) continue;  // a not orth b
      if (omega[*lattice.join(a, b)] != omega[a] + omega[b]) return false;
    }
  return true;
}

std::string to_dot(const FinitePoset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out << "  n" << i << " [label=\"" << p.name(i) << "\"];\n";
  for (const auto& [lo, hi] : p.covers())
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace entgeo
