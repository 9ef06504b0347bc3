#include "entgeo/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "entgeo/construction.hpp"
#include "entgeo/coordinates.hpp"
#include "entgeo/entropy.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/grid.hpp"
#include "entgeo/order.hpp"
#include "entgeo/poset.hpp"

namespace entgeo::verify {

namespace {

PropertyResult ok(std::string name, std::size_t instances) {
  return PropertyResult{std::move(name), instances, true, false, ""};
}

PropertyResult fail(std::string name, std::size_t instances,
                    std::string detail) {
  return PropertyResult{std::move(name), instances, false, false,
                        std::move(detail)};
}

std::string pair_str(const Dist& x, const Dist& y) {
  return "x=(" + x.str() + "), y=(" + y.str() + ")";
}

}  // namespace

std::vector<PropertyResult> order_axioms(std::size_t n, unsigned denom) {
  std::vector<PropertyResult> out;
  const std::vector<Dist> grid = simplex_grid(n, denom);
  const std::size_t g = grid.size();

  {
    std::size_t bad = g;
    for (std::size_t i = 0; i < g; ++i)
      if (!leq(grid[i], grid[i])) {
        bad = i;
        break;
      }
    out.push_back(bad == g
                      ? ok("reflexivity", g)
                      : fail("reflexivity", g, "(" + grid[bad].str() + ")"));
  }
  {
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < g && pass; ++i)
      for (std::size_t j = 0; j < g && pass; ++j) {
        ++checked;
        if (i != j && leq(grid[i], grid[j]) && leq(grid[j], grid[i])) {
          pass = false;
          detail = pair_str(grid[i], grid[j]);
        }
      }
    out.push_back(pass ? ok("antisymmetry", checked)
                       : fail("antisymmetry", checked, detail));
  }
  {
    // exhaustive triple loop over the precomputed relation
    std::vector<std::vector<bool>> rel(g, std::vector<bool>(g));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) rel[i][j] = leq(grid[i], grid[j]);
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < g && pass; ++i)
      for (std::size_t j = 0; j < g && pass; ++j)
        for (std::size_t k = 0; k < g && pass; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) {
            pass = false;
            detail = pair_str(grid[i], grid[j]) + ", z=(" + grid[k].str() + ")";
          }
    out.push_back(pass ? ok("transitivity", g * g * g)
                       : fail("transitivity", g * g * g, detail));
  }
  {
    const Dist bot = bottom(n);
    bool pass = true;
    std::string detail;
    for (const Dist& x : grid)
      if (!leq(bot, x)) {
        pass = false;
        detail = "(" + x.str() + ")";
        break;
      }
    out.push_back(pass ? ok("bottom-below-all", g)
                       : fail("bottom-below-all", g, detail));
  }
  {
    bool pass = true;
    std::string detail;
    for (const Dist& x : grid) {
      bool strict_above = false;
      for (const Dist& y : grid)
        if (y != x && leq(x, y)) {
          strict_above = true;
          break;
        }
      if (is_maximal(x) == strict_above) {
        pass = false;
        detail = "(" + x.str() + ")";
        break;
      }
    }
    out.push_back(pass ? ok("maximal-iff-point-mass", g)
                       : fail("maximal-iff-point-mass", g, detail));
  }
  {
    const std::vector<Perm> perms = all_perms(n);
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < g && pass; ++i)
      for (std::size_t j = 0; j < g && pass; ++j) {
        const bool base = leq(grid[i], grid[j]);
        for (const Perm& tau : perms) {
          ++checked;
          if (leq(apply(grid[i], tau), apply(grid[j], tau)) != base) {
            pass = false;
            detail = pair_str(grid[i], grid[j]) + ", tau=" + tau.str();
            break;
          }
        }
      }
    out.push_back(pass ? ok("permutation-equivariance", checked)
                       : fail("permutation-equivariance", checked, detail));
  }
  {
    // monotonizes agrees with the block criterion sigma[K_j] = I_j, and the
    // fast joint-monotonization path agrees with the exhaustive scan.
    const std::vector<Perm> perms = all_perms(n);
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (const Dist& x : grid) {
      const SpectralRep rep = spectral_rep(x);
      for (const Perm& sigma : perms) {
        ++checked;
        bool blocks_match = true;
        std::size_t start = 0;
        for (std::size_t j = 0; j < rep.num_values(); ++j) {
          IndexSet image = 0;
          for (std::size_t pos = start; pos < rep.cumulative(j); ++pos)
            image |= IndexSet{1} << sigma(pos);
          start = rep.cumulative(j);
          if (image != rep.blocks[j]) blocks_match = false;
        }
        if (monotonizes(x, sigma) != blocks_match) {
          pass = false;
          detail = "x=(" + x.str() + "), sigma=" + sigma.str();
        }
      }
      if (!pass) break;
    }
    for (std::size_t i = 0; i < g && pass; ++i)
      for (std::size_t j = 0; j < g && pass; ++j) {
        ++checked;
        bool any = false;
        for (const Perm& sigma : perms)
          if (monotonizes(grid[i], sigma) && monotonizes(grid[j], sigma)) {
            any = true;
            break;
          }
        if (joint_monotonization(grid[i], grid[j]).has_value() != any) {
          pass = false;
          detail = pair_str(grid[i], grid[j]);
        }
      }
    out.push_back(pass ? ok("monotonization-block-criterion", checked)
                       : fail("monotonization-block-criterion", checked,
                              detail));
  }
  return out;
}

std::vector<PropertyResult> equivalence(std::size_t n, unsigned denom) {
  const std::vector<Dist> grid = simplex_grid(n, denom);
  std::size_t checked = 0;
  for (const Dist& x : grid)
    for (const Dist& y : grid) {
      ++checked;
      if (leq(x, y) != leq_inductive(x, y))
        return {fail("definitional-equivalence", checked, pair_str(x, y))};
    }
  return {ok("definitional-equivalence", checked)};
}

std::vector<PropertyResult> entropy(std::size_t n, unsigned denom) {
  std::vector<PropertyResult> out;
  const std::vector<Dist> grid = simplex_grid(n, denom);
  {
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (const Dist& x : grid)
      for (const Dist& y : grid) {
        if (x == y || !leq(x, y)) continue;
        ++checked;
        if (!(shannon(x).value > shannon(y).value + 1e-9)) {
          pass = false;
          detail = pair_str(x, y);
          break;
        }
      }
    out.push_back(pass ? ok("entropy-strict-antitone", checked)
                       : fail("entropy-strict-antitone", checked, detail));
  }
  {
    const std::vector<Rat> weights{Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4),
                                   Rat(1)};
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::string first;
    for (const Dist& x : grid)
      for (const Dist& y : grid) {
        if (!leq(x, y)) continue;
        for (const Rat& p : weights) {
          ++checked;
          if (!mixing_law_check(x, y, p)) {
            if (violations == 0)
              first = pair_str(x, y) + ", p=" + rat_str(p);
            ++violations;
          }
        }
      }
    if (n == 2) {
      out.push_back(violations == 0 ? ok("mixing-law", checked)
                                    : fail("mixing-law", checked, first));
    } else {
      // Stated for two dimensions only; on larger simplices failures are
      // reported, not asserted.
      PropertyResult r = ok("mixing-law-exploratory", checked);
      r.advisory = true;
      r.detail = violations == 0
                     ? "no violations observed"
                     : std::to_string(violations) + " violations, first: " +
                           first;
      out.push_back(r);
    }
  }
  {
    const std::vector<Perm> perms = all_perms(n);
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (const Dist& x : grid) {
      const double base = shannon(x).value;
      for (const Perm& tau : perms) {
        ++checked;
        if (std::abs(shannon(apply(x, tau)).value - base) > kEntropyTol) {
          pass = false;
          detail = "x=(" + x.str() + "), tau=" + tau.str();
          break;
        }
      }
      if (!pass) break;
    }
    out.push_back(pass ? ok("entropy-permutation-symmetry", checked)
                       : fail("entropy-permutation-symmetry", checked, detail));
  }
  return out;
}

std::vector<PropertyResult> degeneration(std::size_t n, unsigned denom) {
  std::vector<PropertyResult> out;
  const std::vector<Dist> grid = simplex_grid(n, denom);
  {
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (const Dist& x : grid)
      for (const Dist& y : grid) {
        ++checked;
        if (leq(x, y) && !degeneration_necessary(x, y)) {
          pass = false;
          detail = pair_str(x, y);
          break;
        }
      }
    out.push_back(pass ? ok("degeneration-necessity", checked)
                       : fail("degeneration-necessity", checked, detail));
  }
  {
    const std::vector<Perm> perms = all_perms(n);
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (const Dist& x : grid) {
      const auto canonical = monotonize(x).entries;
      for (const Perm& tau : perms) {
        ++checked;
        if (monotonize(apply(x, tau)).entries != canonical) {
          pass = false;
          detail = "x=(" + x.str() + "), tau=" + tau.str();
          break;
        }
      }
      if (!pass) break;
    }
    out.push_back(pass ? ok("monotonize-permutation-invariant", checked)
                       : fail("monotonize-permutation-invariant", checked,
                              detail));
  }
  {
    bool pass = true;
    std::string detail;
    for (const Dist& x : grid)
      if (from_spectral_rep(spectral_rep(x)) != x) {
        pass = false;
        detail = "(" + x.str() + ")";
        break;
      }
    out.push_back(pass ? ok("spectral-roundtrip", grid.size())
                       : fail("spectral-roundtrip", grid.size(), detail));
  }
  return out;
}

std::vector<PropertyResult> decomposition(std::size_t n, unsigned denom) {
  std::vector<PropertyResult> out;
  const std::vector<Dist> grid = simplex_grid(n, denom);
  {
    bool pass = true;
    std::string detail;
    for (const Dist& x : grid)
      if (sup_coordinates(n, coordinates_of(x)) != x) {
        pass = false;
        detail = "(" + x.str() + ")";
        break;
      }
    out.push_back(pass ? ok("decomposition-roundtrip", grid.size())
                       : fail("decomposition-roundtrip", grid.size(), detail));
  }
  {
    // Each coordinate is below x and maximal among same-axis grid
    // coordinates below x.
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (const Dist& x : grid) {
      for (const Coordinate& c : coordinates_of(x)) {
        ++checked;
        if (!leq(c.dist, x)) {
          pass = false;
          detail = "c=(" + c.dist.str() + ") not below x=(" + x.str() + ")";
          break;
        }
        for (const Dist& candidate : grid) {
          const SpectralRep rep = spectral_rep(candidate);
          if (rep.num_values() != 2 || rep.blocks[0] != c.axis) continue;
          if (leq(candidate, x) && !leq(candidate, c.dist)) {
            pass = false;
            detail = "axis witness (" + candidate.str() + ") beats c=(" +
                     c.dist.str() + ") below x=(" + x.str() + ")";
            break;
          }
        }
        if (!pass) break;
      }
      if (!pass) break;
    }
    out.push_back(pass ? ok("coordinate-axis-maximality", checked)
                       : fail("coordinate-axis-maximality", checked, detail));
  }
  {
    // Forward direction, exhaustive: a nonzero at-most-binary spectrum (this
    // includes the bottom) forces the downset to be a chain. The biconditional
    // fails on grids twice over: pure states have a binary spectrum with a
    // non-chain downset once n >= 3, and a coarse grid can miss the witnesses
    // below a 3-value-spectrum point, leaving its on-grid downset a chain.
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (const Dist& x : grid) {
      const SpectralRep rep = spectral_rep(x);
      if (rep.num_values() > 2 || rep.zero_block_present()) continue;
      ++checked;
      if (!downset_is_chain(x, grid)) {
        pass = false;
        detail = "(" + x.str() + ")";
        break;
      }
    }
    out.push_back(pass ? ok("coordinate-downset-chain", checked)
                       : fail("coordinate-downset-chain", checked, detail));
  }
  {
    // Converse direction via exact witnesses: at every grid point with at
    // least three spectral values, the pair y (ratio copied from levels 1,2
    // over the top block) and z (ratio copied from levels 2,3 over the top
    // two blocks) is below x and incomparable, so the full downset is never
    // a chain even when the grid is too coarse to see it.
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (const Dist& x : grid) {
      const SpectralRep rep = spectral_rep(x);
      if (rep.num_values() < 3) continue;
      ++checked;
      const auto two_level = [&](IndexSet upper, const Rat& hi, const Rat& lo) {
        const Rat s = static_cast<int>(std::popcount(upper));
        const Rat t = static_cast<int>(n) - s;
        // entries proportional to hi on upper, lo elsewhere
        const Rat scale = s * hi + t * lo;
        std::vector<Rat> e(n);
        for (std::size_t i = 0; i < n; ++i)
          e[i] = ((upper >> i) & 1u ? hi : lo) / scale;
        return Dist(std::move(e));
      };
      const Dist y =
          two_level(rep.blocks[0], rep.spectrum[0], rep.spectrum[1]);
      const Dist z = two_level(rep.blocks[0] | rep.blocks[1], rep.spectrum[1],
                               rep.spectrum[2]);
      if (!leq(y, x) || !leq(z, x) || leq(y, z) || leq(z, y)) {
        pass = false;
        detail = "(" + x.str() + ")";
        break;
      }
    }
    out.push_back(pass ? ok("non-coordinate-downset-witnesses", checked)
                       : fail("non-coordinate-downset-witnesses", checked,
                              detail));
  }
  {
    // Each irreducible is the infimum over the grid of the pure states
    // above it.
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (const Coordinate& irr : irreducibles(n)) {
      ++checked;
      std::vector<Dist> pure;
      for (std::size_t i = 0; i < n; ++i)
        if (irr.axis & (IndexSet{1} << i)) {
          std::vector<Rat> e(n, Rat(0));
          e[i] = 1;
          pure.emplace_back(std::move(e));
        }
      auto below_all = [&](const Dist& z) {
        for (const Dist& e : pure)
          if (!leq(z, e)) return false;
        return true;
      };
      if (!below_all(irr.dist)) {
        pass = false;
        detail = "(" + irr.dist.str() + ") not below its pure states";
        break;
      }
      for (const Dist& z : grid)
        if (below_all(z) && !leq(z, irr.dist)) {
          pass = false;
          detail = "(" + z.str() + ") under Max above (" + irr.dist.str() +
                   ") but not below it";
          break;
        }
      if (!pass) break;
    }
    out.push_back(pass ? ok("irreducible-infimum", checked)
                       : fail("irreducible-infimum", checked, detail));
  }
  return out;
}

namespace {

FinitePoset random_bounded_graded_poset(std::mt19937& rng) {
  // Bottom, one to three interior levels with one to three elements each,
  // top. Every element covers at least one element of the level below.
  std::uniform_int_distribution<std::size_t> level_count(1, 3);
  std::uniform_int_distribution<std::size_t> level_size(1, 3);
  const std::size_t levels = level_count(rng);
  std::vector<std::vector<std::string>> tier(levels);
  std::size_t counter = 0;
  for (auto& t : tier) {
    const std::size_t size = level_size(rng);
    for (std::size_t i = 0; i < size; ++i)
      t.push_back("p" + std::to_string(counter++));
  }
  std::vector<std::string> elements{"bot"};
  for (const auto& t : tier)
    elements.insert(elements.end(), t.begin(), t.end());
  elements.push_back("top");

  std::vector<std::pair<std::string, std::string>> covers;
  for (const std::string& e : tier.front()) covers.emplace_back("bot", e);
  for (std::size_t l = 0; l + 1 < levels; ++l) {
    // connect both directions so no element dangles
    std::uniform_int_distribution<std::size_t> pick_lo(0, tier[l].size() - 1);
    std::uniform_int_distribution<std::size_t> pick_hi(0,
                                                       tier[l + 1].size() - 1);
    std::set<std::pair<std::string, std::string>> edges;
    for (const std::string& hi : tier[l + 1])
      edges.emplace(tier[l][pick_lo(rng)], hi);
    for (const std::string& lo : tier[l])
      edges.emplace(lo, tier[l + 1][pick_hi(rng)]);
    std::bernoulli_distribution extra(0.3);
    for (const std::string& lo : tier[l])
      for (const std::string& hi : tier[l + 1])
        if (extra(rng)) edges.emplace(lo, hi);
    for (const auto& e : edges) covers.push_back(e);
  }
  for (const std::string& e : tier.back()) covers.emplace_back(e, "top");
  return FinitePoset::from_covers(std::move(elements), covers);
}

}  // namespace

std::vector<PropertyResult> construction() {
  std::vector<PropertyResult> out;
  {
    // Soundness on random inputs; build() itself validates
    // the poset axioms and the unique bottom, so surviving is passing.
    std::mt19937 rng(20240817);
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const FinitePoset a = random_bounded_graded_poset(rng);
      std::uniform_int_distribution<std::size_t> interior(0, 1);
      const GammaChain gamma = GammaChain::uniform(interior(rng) + 0);
      ++checked;
      try {
        build(a, gamma);
      } catch (const Error& e) {
        pass = false;
        detail = std::string("trial ") + std::to_string(trial) + ": " +
                 e.what();
        break;
      }
    }
    out.push_back(pass ? ok("construction-soundness-random", checked)
                       : fail("construction-soundness-random", checked,
                              detail));
  }
  {
    // Chain/permutation bijection for the stripped-reversed powerset.
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
      const FinitePoset core = strip_and_reverse(powerset_lattice(n));
      const auto chains = maximal_chains(core);
      std::size_t factorial = 1;
      for (std::size_t i = 2; i <= n; ++i) factorial *= i;
      if (chains.size() != factorial) {
        pass = false;
        detail = "n=" + std::to_string(n) + ": " +
                 std::to_string(chains.size()) + " chains";
        break;
      }
      std::set<std::vector<std::size_t>> images;
      for (const auto& chain : chains) {
        ++checked;
        // recover sigma from the nested subsets, then rebuild the chain
        std::vector<std::size_t> sigma;
        IndexSet prev = 0;
        bool good = true;
        for (std::size_t pos = 0; pos < chain.size(); ++pos) {
          IndexSet mask = 0;
          const std::string& name = core.name(chain[pos]);
          std::istringstream in(name.substr(1, name.size() - 2));
          std::string token;
          while (std::getline(in, token, ','))
            mask |= IndexSet{1} << (std::stoul(token) - 1);
          IndexSet added = mask & ~prev;
          if (std::popcount(added) != 1 || (prev & ~mask)) good = false;
          if (good) sigma.push_back(std::countr_zero(added));
          prev = mask;
        }
        if (!good || !images.insert(sigma).second) {
          pass = false;
          detail = "n=" + std::to_string(n) + ": chain/permutation bijection "
                   "failed";
          break;
        }
      }
      if (!pass) break;
    }
    out.push_back(pass ? ok("mchain-permutation-bijection", checked)
                       : fail("mchain-permutation-bijection", checked,
                              detail));
  }
  {
    // Frozen class counts, confirmed against the brute-force quotient.
    struct Case {
      std::size_t n;
      std::size_t interior;
      std::size_t classes;
    };
    const std::vector<Case> cases{{2, 1, 5}, {2, 2, 7}, {3, 1, 25}};
    bool pass = true;
    std::string detail;
    for (const Case& c : cases) {
      const ConstructedPoset p =
          build(powerset_lattice(c.n), GammaChain::uniform(c.interior));
      if (p.classes.size() != c.classes) {
        pass = false;
        detail = "n=" + std::to_string(c.n) + ", interior " +
                 std::to_string(c.interior) + ": " +
                 std::to_string(p.classes.size()) + " classes, expected " +
                 std::to_string(c.classes);
        break;
      }
    }
    out.push_back(pass ? ok("class-counts", cases.size())
                       : fail("class-counts", cases.size(), detail));
  }
  {
    // Quotient well-definedness: the induced order never depends on the
    // representative pair, scanned exhaustively for the n=3 powerset.
    const GammaChain gamma = GammaChain::uniform(1);
    const ConstructedPoset p = build(powerset_lattice(3), gamma);
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < p.classes.size() && pass; ++i)
      for (std::size_t j = 0; j < p.classes.size() && pass; ++j) {
        // every chain pair representing (i, j) with a shared chain and
        // pointwise tuple order must agree with the stored verdict
        const EquivClass& ci = p.classes[i];
        const EquivClass& cj = p.classes[j];
        bool pointwise = true;
        for (std::size_t pos = 0; pos < ci.tuple.size(); ++pos)
          if (ci.tuple[pos] > cj.tuple[pos]) pointwise = false;
        bool witness = false;
        for (const auto& chain : p.chains) {
          ++checked;
          auto represents = [&](const EquivClass& cls) {
            for (const auto& [pos, elem] : cls.constrained)
              if (chain[pos] != elem) return false;
            return true;
          };
          if (pointwise && represents(ci) && represents(cj)) witness = true;
        }
        if (witness != induced_leq(p, i, j)) {
          pass = false;
          detail = p.class_str(i) + " vs " + p.class_str(j);
        }
      }
    out.push_back(pass ? ok("quotient-well-defined", checked)
                       : fail("quotient-well-defined", checked, detail));
  }
  {
    // alt_form is a bijection with the classes.
    bool pass = true;
    std::string detail;
    const GammaChain gamma = GammaChain::uniform(1);
    for (std::size_t n = 2; n <= 3; ++n) {
      const FinitePoset a = powerset_lattice(n);
      const ConstructedPoset p = build(a, gamma);
      const auto alts = alt_form(a, gamma);
      std::set<std::pair<std::vector<std::size_t>, GammaTuple>> distinct;
      for (const AltForm& alt : alts) distinct.emplace(alt.chain, alt.tuple);
      if (alts.size() != p.classes.size() ||
          distinct.size() != p.classes.size()) {
        pass = false;
        detail = "n=" + std::to_string(n);
        break;
      }
      for (const AltForm& alt : alts) {
        if (alt.tuple.size() > n - 1) pass = false;
        for (std::size_t i = 0; i + 1 < alt.tuple.size(); ++i)
          if (!gamma.is_interior(alt.tuple[i])) pass = false;
        if (!alt.tuple.empty() && alt.tuple.back() == 0) pass = false;
      }
      if (!pass) {
        detail = "n=" + std::to_string(n) + ": malformed alt form";
        break;
      }
    }
    out.push_back(pass ? ok("alt-form-bijection", 2)
                       : fail("alt-form-bijection", 2, detail));
  }
  {
    // The constructed order is gauge independent: relabeling interior
    // values must not change the relation.
    const ConstructedPoset a =
        build(powerset_lattice(3), GammaChain::uniform(1));
    const ConstructedPoset b = build(
        powerset_lattice(3), GammaChain::from_values({Rat(9, 10)}));
    bool pass = a.classes.size() == b.classes.size();
    if (pass)
      for (std::size_t i = 0; i < a.classes.size(); ++i)
        for (std::size_t j = 0; j < a.classes.size(); ++j)
          if (a.order[i][j] != b.order[i][j]) pass = false;
    out.push_back(pass ? ok("gauge-independence", a.classes.size() *
                                                      a.classes.size())
                       : fail("gauge-independence", 0, "orders differ"));
  }
  {
    bool pass = true;
    std::string detail;
    const GammaChain gamma = GammaChain::uniform(1);
    for (std::size_t m = 3; m <= 5; ++m)
      if (!check_monotone_states(m, gamma)) {
        pass = false;
        detail = "m=" + std::to_string(m);
        break;
      }
    out.push_back(pass ? ok("monotone-states", 3)
                       : fail("monotone-states", 3, detail));
  }
  return out;
}

std::vector<PropertyResult> isomorphisms() {
  std::vector<PropertyResult> out;
  {
    // Sampled (sigma, gauges) pairs act as order-automorphisms of
    // permutation-closed grids; identity gauges, label part varied.
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    struct GridCase {
      std::size_t n;
      unsigned denom;
    };
    for (const GridCase gc : {GridCase{2, 4}, GridCase{3, 6}}) {
      const std::vector<Dist> grid = simplex_grid(gc.n, gc.denom);
      std::map<Dist, std::size_t> index;
      for (std::size_t i = 0; i < grid.size(); ++i) index.emplace(grid[i], i);
      for (const Perm& sigma : all_perms(gc.n)) {
        const auto h = build_automorphism(sigma, {});
        std::vector<std::size_t> image;
        image.reserve(grid.size());
        std::set<std::size_t> hit;
        for (const Dist& x : grid) {
          const Dist y = h(x);
          auto it = index.find(y);
          if (it == index.end()) {
            pass = false;
            detail = "image (" + y.str() + ") left the grid";
            break;
          }
          image.push_back(it->second);
          hit.insert(it->second);
        }
        if (!pass) break;
        if (hit.size() != grid.size()) {
          pass = false;
          detail = "not a bijection for sigma=" + sigma.str();
          break;
        }
        for (std::size_t i = 0; i < grid.size() && pass; ++i)
          for (std::size_t j = 0; j < grid.size() && pass; ++j) {
            ++checked;
            if (leq(grid[i], grid[j]) !=
                leq(grid[image[i]], grid[image[j]])) {
              pass = false;
              detail = "order not preserved for sigma=" + sigma.str();
            }
          }
        if (!pass) break;
      }
      if (!pass) break;
    }
    out.push_back(pass ? ok("automorphism-grid-action", checked)
                       : fail("automorphism-grid-action", checked, detail));
  }
  {
    // A nontrivial gauge between two different axis value sets is an
    // order-isomorphism of the corresponding finite subposets.
    bool pass = true;
    std::string detail;
    AxisGauge gauge;
    gauge.axis = 1;  // axis {1} in the two-point simplex
    gauge.values = {{Rat(3, 5), Rat(2, 3)},
                    {Rat(3, 4), Rat(4, 5)},
                    {Rat(1), Rat(1)}};
    const auto h = build_automorphism(Perm::identity(2), {gauge});
    const std::vector<Dist> domain{
        bottom(2), Dist::parse("3/5,2/5"), Dist::parse("3/4,1/4"),
        Dist::parse("1,0")};
    const std::vector<Dist> expected{
        bottom(2), Dist::parse("2/3,1/3"), Dist::parse("4/5,1/5"),
        Dist::parse("1,0")};
    std::vector<Dist> image;
    for (const Dist& x : domain) image.push_back(h(x));
    for (std::size_t i = 0; i < domain.size() && pass; ++i) {
      if (image[i] != expected[i]) {
        pass = false;
        detail = "(" + domain[i].str() + ") -> (" + image[i].str() + ")";
      }
      for (std::size_t j = 0; j < domain.size() && pass; ++j)
        if (leq(domain[i], domain[j]) != leq(image[i], image[j])) {
          pass = false;
          detail = "gauge broke the order";
        }
    }
    out.push_back(pass ? ok("nontrivial-gauge-iso", domain.size())
                       : fail("nontrivial-gauge-iso", domain.size(), detail));
  }
  {
    bool pass = entropy_rigidity_check(2, simplex_grid(2, 4)) &&
                entropy_rigidity_check(3, simplex_grid(3, 6));
    out.push_back(pass ? ok("entropy-rigidity", 2)
                       : fail("entropy-rigidity", 2,
                              "a non-identity entropy-preserving "
                              "automorphism survived"));
  }
  {
    // Discrete shadow of the continuum classification: with a uniform
    // gauge chain only the label permutations should survive. Reported as
    // a finding, never a hard failure.
    PropertyResult r = ok("construction-automorphism-count", 2);
    r.advisory = true;
    std::ostringstream note;
    for (std::size_t n = 2; n <= 3; ++n) {
      const ConstructedPoset p =
          build(powerset_lattice(n), GammaChain::uniform(1));
      const auto autos = automorphisms(to_poset(p));
      std::size_t factorial = 1;
      for (std::size_t i = 2; i <= n; ++i) factorial *= i;
      if (n > 2) note << "; ";
      note << "n=" << n << ": " << autos.size() << " automorphisms (expected "
           << factorial << ")";
      if (autos.size() != factorial) r.detail = "DEVIATION ";
    }
    r.detail += note.str();
    out.push_back(r);
  }
  return out;
}

std::vector<PropertyResult> run_suite(const std::string& suite, std::size_t n,
                                      unsigned denom) {
  if (suite == "order-axioms") return order_axioms(n, denom);
  if (suite == "equivalence") return equivalence(n, denom);
  if (suite == "entropy") return entropy(n, denom);
  if (suite == "degeneration") return degeneration(n, denom);
  if (suite == "decomposition") return decomposition(n, denom);
  if (suite == "construction") return construction();
  if (suite == "isomorphisms") return isomorphisms();
  if (suite == "all") {
    std::vector<PropertyResult> out;
    for (const char* name :
         {"order-axioms", "equivalence", "entropy", "degeneration",
          "decomposition", "construction", "isomorphisms"}) {
      auto part = run_suite(name, n, denom);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw PreconditionError("unknown suite: " + suite);
}

}  // namespace entgeo::verify
