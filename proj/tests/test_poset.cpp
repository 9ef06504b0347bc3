#include <doctest.h>

#include <set>

#include "entgeo/errors.hpp"
#include "entgeo/grid.hpp"
#include "entgeo/poset.hpp"

using namespace entgeo;

namespace {

FinitePoset diamond() {
  return FinitePoset::from_covers(
      {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

}  // namespace

TEST_CASE("from_covers validation") {
  CHECK_NOTHROW(diamond());
  CHECK_THROWS_AS(FinitePoset::from_covers({"a", "b"}, {{"a", "b"},
                                                        {"b", "a"}}),
                  CycleError);
  CHECK_THROWS_AS(FinitePoset::from_covers({"a"}, {{"a", "z"}}),
                  UnknownElementError);
  CHECK_THROWS_AS(FinitePoset::from_covers({"a", "a"}, {}),
                  DuplicateCoverError);
  const FinitePoset one = FinitePoset::from_covers({"x"}, {});
  CHECK(one.size() == 1);
  CHECK(one.top() == one.bottom());
}

TEST_CASE("order queries on the diamond") {
  const FinitePoset d = diamond();
  CHECK(d.leq(d.index("0"), d.index("1")));
  CHECK(d.leq(d.index("a"), d.index("a")));
  CHECK_FALSE(d.leq(d.index("a"), d.index("b")));
  CHECK(d.covers().size() == 4);
  CHECK(d.top() == d.index("1"));
  CHECK(d.bottom() == d.index("0"));
  CHECK(d.meet(d.index("a"), d.index("b")) == d.index("0"));
  CHECK(d.join(d.index("a"), d.index("b")) == d.index("1"));
}

TEST_CASE("json round trip") {
  const FinitePoset d = diamond();
  const FinitePoset back = FinitePoset::from_json(d.to_json());
  CHECK(back.names() == d.names());
  CHECK(back.covers() == d.covers());
  CHECK_THROWS_AS(FinitePoset::from_json("not json"), ParseError);
}

TEST_CASE("strip_and_reverse") {
  const FinitePoset anti = strip_and_reverse(powerset_lattice(2));
  CHECK(anti.size() == 2);
  CHECK_FALSE(anti.leq(0, 1));
  CHECK_FALSE(anti.leq(1, 0));

  const FinitePoset four = chain_poset(4);
  const FinitePoset two = strip_and_reverse(four);
  CHECK(two.size() == 2);
  CHECK(two.leq(two.index("c2"), two.index("c1")));  // order dualized
  CHECK_FALSE(two.leq(two.index("c1"), two.index("c2")));

  CHECK(strip_and_reverse(chain_poset(2)).size() == 0);
  CHECK_THROWS_AS(
      strip_and_reverse(FinitePoset::from_covers({"a", "b"}, {})),
      NotBoundedError);
}

TEST_CASE("strip_and_reverse twice restores the interior order") {
  const FinitePoset p = powerset_lattice(3);
  const FinitePoset r = strip_and_reverse(p);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      CHECK(r.leq(i, j) ==
            p.leq(p.index(r.name(j)), p.index(r.name(i))));
}

TEST_CASE("maximal_chains") {
  CHECK(maximal_chains(strip_and_reverse(powerset_lattice(3))).size() == 6);
  const FinitePoset anti =
      FinitePoset::from_covers({"a", "b", "c"}, {});
  CHECK(maximal_chains(anti).size() == 3);
  CHECK(maximal_chains(chain_poset(5)).size() == 1);
  for (std::size_t n = 2; n <= 5; ++n) {
    std::size_t factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;
    CHECK(maximal_chains(strip_and_reverse(powerset_lattice(n))).size() ==
          factorial);
  }
}

TEST_CASE("generators") {
  CHECK(powerset_lattice(3).size() == 8);
  CHECK(powerset_lattice(3).covers().size() == 12);
  CHECK(chain_poset(4).size() == 4);
  CHECK(chain_poset(4).covers().size() == 3);
  CHECK(powerset_lattice(1).size() == 2);
  CHECK(powerset_lattice(1).covers().size() == 1);
  CHECK_THROWS_AS(powerset_lattice(0), DimensionError);
  CHECK_THROWS_AS(chain_poset(1), DimensionError);
}

TEST_CASE("automorphisms") {
  CHECK(automorphisms(powerset_lattice(3)).size() == 6);
  CHECK(automorphisms(chain_poset(5)).size() == 1);
  CHECK(automorphisms(FinitePoset::from_covers({"a", "b"}, {})).size() == 2);
}

TEST_CASE("orthoadditive measures on the Boolean algebra") {
  const FinitePoset l = powerset_lattice(3);
  OrthoStructure ortho;
  ortho.complement.resize(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::set<char> digits(l.name(i).begin(), l.name(i).end());
    std::string comp = "{";
    for (char c : {'1', '2', '3'})
      if (!digits.count(c)) comp += (comp.size() > 1 ? std::string(",") : "") + c;
    comp += "}";
    ortho.complement[i] = l.index(comp);
  }

  const auto measure_from = [&](const std::vector<Rat>& x) {
    std::vector<Rat> omega(l.size(), Rat(0));
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t d = 0; d < 3; ++d)
        if (l.name(i).find(static_cast<char>('1' + d)) != std::string::npos)
          omega[i] += x[d];
    return omega;
  };

  CHECK(is_orthoadditive_measure(
      l, ortho, measure_from({Rat(1, 2), Rat(1, 3), Rat(1, 6)})));
  CHECK_FALSE(is_orthoadditive_measure(
      l, ortho, measure_from({Rat(1, 2), Rat(1, 4), Rat(1, 8)})));
  std::vector<Rat> ones(l.size(), Rat(1));
  ones[l.index("{}")] = 0;
  CHECK_FALSE(is_orthoadditive_measure(l, ortho, ones));

  // Exactly the distribution-induced maps pass, over all denominator-4
  // atom assignments.
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b)
      for (unsigned c = 0; c <= 4; ++c) {
        const std::vector<Rat> x = {Rat(a, 4), Rat(b, 4), Rat(c, 4)};
        CHECK(is_orthoadditive_measure(l, ortho, measure_from(x)) ==
              (a + b + c == 4));
      }

  // a non-lattice input is rejected
  const FinitePoset anti = FinitePoset::from_covers({"a", "b"}, {});
  OrthoStructure swap;
  swap.complement = {1, 0};
  CHECK_THROWS_AS(
      is_orthoadditive_measure(anti, swap, {Rat(1, 2), Rat(1, 2)}),
      NotALatticeError);
  // an involution that is not an orthocomplementation is rejected
  OrthoStructure ident;
  ident.complement.resize(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) ident.complement[i] = i;
  CHECK_THROWS_AS(is_orthoadditive_measure(
                      l, ident, measure_from({Rat(1, 2), Rat(1, 3), Rat(1, 6)})),
                  NotOrthocomplementationError);
}

TEST_CASE("to_dot is deterministic and complete") {
  const std::string dot = to_dot(diamond());
  CHECK(dot == to_dot(diamond()));
  CHECK(dot.find("digraph") != std::string::npos);
  // 4 nodes, 4 edges
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos;
       pos = dot.find("->", pos + 1))
    ++edges;
  CHECK(edges == 4);
  std::size_t chain_edges = 0;
  const std::string c3 = to_dot(chain_poset(3));
  for (std::size_t pos = c3.find("->"); pos != std::string::npos;
       pos = c3.find("->", pos + 1))
    ++chain_edges;
  CHECK(chain_edges == 2);
}
