#include <doctest.h>

#include "dp/algebra.hpp"
#include "dp/eval.hpp"
#include "support/oracles.hpp"

using namespace dp;

TEST_CASE("DPChain tables agree with the two-case definitions") {
  for (std::uint32_t n = 2; n <= 7; ++n) {
    const DPChain c(n);
    const auto ref = oracle::TableChain::drastic(n);
    for (Rank x = 0; x < n; ++x)
      for (Rank y = 0; y < n; ++y) {
        CHECK(c.mul(x, y) == ref.mul[x][y]);
        CHECK(c.imp(x, y) == ref.imp(x, y));
      }
  }
}

TEST_CASE("DPChain: residuation law") {
  for (std::uint32_t n = 2; n <= 7; ++n) {
    const DPChain c(n);
    for (Rank x = 0; x < n; ++x)
      for (Rank y = 0; y < n; ++y)
        for (Rank z = 0; z < n; ++z) CHECK((c.mul(x, z) <= y) == (z <= c.imp(x, y)));
  }
}

TEST_CASE("DPChain: coatom is the unique negation fixpoint") {
  for (std::uint32_t n = 3; n <= 7; ++n) {
    const DPChain c(n);
    for (Rank x = 0; x < n; ++x) CHECK((c.neg(x) == x) == (x == c.coatom()));
  }
  CHECK(DPChain(2).coatom() == 0);
  CHECK_THROWS_AS(DPChain(1), AlgebraError);
}

TEST_CASE("DPChain: element names") {
  const DPChain c(5);
  CHECK(c.name(0) == "0");
  CHECK(c.name(1) == "r1");
  CHECK(c.name(3) == "c");
  CHECK(c.name(4) == "1");
  CHECK(DPChain(2).name(0) == "0");
}

TEST_CASE("eval on the 3-element chain") {
  const DPChain c(3);
  CHECK(eval(parse("x & y"), c, Valuation<Rank>({"x", "y"}, {1, 1})) == 0);
  CHECK(eval(parse("x -> y"), c, Valuation<Rank>({"x", "y"}, {1, 0})) == 1);
  for (std::uint32_t n = 2; n <= 5; ++n)
    for (Rank a = 0; a < n; ++a)
      CHECK(eval(parse("1 -> x"), DPChain(n), Valuation<Rank>({"x"}, {a})) == a);
}

TEST_CASE("eval errors") {
  const DPChain c(3);
  CHECK_THROWS_AS(eval(parse("x & y"), c, Valuation<Rank>({"x"}, {1})), AlgebraError);
  CHECK_THROWS_AS(eval(parse("x"), c, Valuation<Rank>({"x"}, {3})), AlgebraError);
  const FiniteMTLChain godel({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  CHECK_THROWS_AS(eval(parse("D x"), godel, Valuation<Rank>({"x"}, {1})), AlgebraError);
  // Delta is fine on a table that happens to be a DP-chain.
  const auto dp3 = FiniteMTLChain::from(DPChain(3));
  CHECK(eval(parse("D x"), dp3, Valuation<Rank>({"x"}, {1})) == 0);
}

TEST_CASE("eval agrees with the tree-walking oracle") {
  oracle::FormulaGen gen(3, {"x", "y", "z"});
  for (int i = 0; i < 150; ++i) {
    const Formula f = gen(6);
    for (std::uint32_t n = 2; n <= 5; ++n) {
      const DPChain c(n);
      const auto ref = oracle::TableChain::drastic(n);
      oracle::for_each_valuation({"x", "y", "z"}, n, [&](const auto& m) {
        const Valuation<Rank> v({"x", "y", "z"}, {m.at("x"), m.at("y"), m.at("z")});
        CHECK(eval(f, c, v) == oracle::eval(f, ref, m));
      });
    }
  }
}

TEST_CASE("FiniteMTLChain validates its table") {
  CHECK_NOTHROW(FiniteMTLChain({{0, 0}, {0, 1}}));
  CHECK_THROWS_AS(FiniteMTLChain({{0, 0, 0}, {0, 1, 1}}), AlgebraError);                  // not square
  CHECK_THROWS_AS(FiniteMTLChain({{0, 0, 0}, {0, 0, 2}, {0, 1, 2}}), AlgebraError);       // not commutative
  CHECK_THROWS_AS(FiniteMTLChain({{0, 0, 0}, {0, 0, 0}, {0, 0, 2}}), AlgebraError);       // unit
  CHECK_THROWS_AS(FiniteMTLChain({{0, 0, 1}, {0, 1, 1}, {1, 1, 2}}), AlgebraError);       // bottom
  CHECK_THROWS_AS(FiniteMTLChain({{0, 0, 0, 0}, {0, 2, 0, 1}, {0, 0, 0, 2}, {0, 1, 2, 3}}),
                  AlgebraError);  // monotone
  // Monotone and unital, but (a*b)*b = a while a*(b*b) = 0.
  CHECK_THROWS_AS(FiniteMTLChain({{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 1, 2}, {0, 1, 2, 3}}),
                  AlgebraError);
}

TEST_CASE("FiniteMTLChain residuum is the largest z with x*z <= y") {
  const FiniteMTLChain godel({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  CHECK(godel.imp(1, 0) == 0);
  CHECK(godel.imp(2, 1) == 1);
  CHECK(godel.imp(1, 1) == 2);
  for (Rank x = 0; x < 3; ++x)
    for (Rank y = 0; y < 3; ++y)
      for (Rank z = 0; z < 3; ++z) CHECK((godel.mul(x, z) <= y) == (z <= godel.imp(x, y)));
}

TEST_CASE("ProductAlgebra: pointwise operations") {
  const std::uint32_t sizes[] = {2, 4, 3};
  const auto p = ProductAlgebra::of_sizes(sizes);
  CHECK(p.cardinality() == 24);
  CHECK(p.decode(p.top()) == std::vector<Rank>{1, 3, 2});
  CHECK(p.decode(p.bottom()) == std::vector<Rank>{0, 0, 0});
  const DPChain c2(2), c4(4), c3(3);
  for (std::uint64_t a = 0; a < 24; ++a)
    for (std::uint64_t b = 0; b < 24; ++b) {
      const auto x = p.decode(a), y = p.decode(b);
      const std::vector<Rank> expect = {c2.imp(x[0], y[0]), c4.imp(x[1], y[1]), c3.imp(x[2], y[2])};
      CHECK(p.decode(p.imp(a, b)) == expect);
      const std::vector<Rank> m = {c2.mul(x[0], y[0]), c4.mul(x[1], y[1]), c3.mul(x[2], y[2])};
      CHECK(p.decode(p.mul(a, b)) == m);
    }
  const Rank tuple[] = {1, 2, 0};
  CHECK(p.name(p.encode(tuple)) == "(1,c,0)");
  CHECK_THROWS_AS(ProductAlgebra({}), AlgebraError);
}

TEST_CASE("ProductAlgebra: overflow is reported, not wrapped") {
  std::vector<std::uint32_t> sizes(70, 2);
  const auto p = ProductAlgebra::of_sizes(sizes);
  CHECK_THROWS_AS(p.cardinality(), CapExceeded);
  CHECK(p.factor_sizes().size() == 70);
}

TEST_CASE("holds: sweep, witness, cap") {
  const DPChain c(3);
  auto r = holds(parse("x \\/ ~x"), c);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->valuation.values == std::vector<Rank>{1});
  CHECK(r.witness->value == 1);

  auto ok = holds(parse("x \\/ ~(x^2)"), c);
  CHECK(ok.holds);
  CHECK(ok.points == 3);
  CHECK(holds(parse("1"), c).points == 1);

  CHECK_THROWS_AS(holds(parse("a & b & c & d & e & f & g & h & i"), DPChain(7)), CapExceeded);
  CHECK_NOTHROW(holds(parse("a & b"), DPChain(7), 49));
  CHECK_THROWS_AS(holds(parse("a & b"), DPChain(7), 48), CapExceeded);
}

TEST_CASE("holds on a product algebra") {
  const std::uint32_t sizes[] = {3, 4};
  const auto p = ProductAlgebra::of_sizes(sizes);
  CHECK(holds(parse("x \\/ ~(x^2)"), p).holds);
  const auto r = holds(parse("x \\/ ~x"), p);
  CHECK_FALSE(r.holds);
  CHECK(p.name(r.witness->value) != p.name(p.top()));
}
