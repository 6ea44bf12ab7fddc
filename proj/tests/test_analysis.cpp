#include <doctest.h>

#include <algorithm>

#include "dp/analysis.hpp"
#include "support/oracles.hpp"

using namespace dp;

TEST_CASE("enumerate_mtl_chains: counts") {
  CHECK(enumerate_mtl_chains(2).size() == 1);
  CHECK(enumerate_mtl_chains(3).size() == 2);
  CHECK(enumerate_mtl_chains(4).size() == 6);
  CHECK(enumerate_mtl_chains(5).size() == 22);
  CHECK_THROWS_AS(enumerate_mtl_chains(6), CapExceeded);
  CHECK_THROWS_AS(enumerate_mtl_chains(1), CapExceeded);
}

TEST_CASE("enumerate_mtl_chains matches brute force over all fillings") {
  for (std::uint32_t n = 2; n <= 5; ++n) {
    auto expect = oracle::mtl_tables(n);
    std::vector<std::vector<std::vector<Rank>>> got;
    for (const auto& c : enumerate_mtl_chains(n)) got.push_back(c.product_table());
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("Axiom parsing") {
  CHECK(Axiom::parse("dp").to_string() == "dp");
  CHECK(Axiom::parse("skmtl(3)").param == 3);
  CHECK(Axiom::parse("ncontract(2)").name == Axiom::Name::NContract);
  CHECK_THROWS(Axiom::parse("bogus"));
  CHECK_THROWS(Axiom::parse("skmtl(x)"));
}

TEST_CASE("satisfies_axiom on DP-chains and the 3-element Goedel chain") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    CHECK(satisfies_axiom(DPChain(n), Axiom::dp()));
    CHECK(satisfies_axiom(DPChain(n), Axiom::ncontract(3)));
  }
  CHECK_FALSE(satisfies_axiom(DPChain(4), Axiom::ncontract(2)));
  CHECK(satisfies_axiom(DPChain(2), Axiom::skmtl(2)));
  CHECK_FALSE(satisfies_axiom(DPChain(3), Axiom::skmtl(2)));
  const FiniteMTLChain godel({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  CHECK_FALSE(satisfies_axiom(godel, Axiom::dp()));
  CHECK(satisfies_axiom(godel, Axiom::wnm()));
  CHECK_FALSE(is_dp_chain(godel));
  CHECK(is_dp_chain(FiniteMTLChain::from(DPChain(4))));
}

TEST_CASE("is_simple") {
  for (std::uint32_t n = 2; n <= 6; ++n) CHECK(is_simple(DPChain(n)));
  const FiniteMTLChain godel({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  CHECK_FALSE(is_simple(godel));
  const std::uint32_t sizes[] = {3, 3};
  CHECK_FALSE(is_simple(ProductAlgebra::of_sizes(sizes)));
  const std::uint32_t one[] = {4};
  CHECK(is_simple(ProductAlgebra::of_sizes(one)));
  const std::uint32_t big[] = {5, 5, 5};
  CHECK_THROWS_AS(is_simple(ProductAlgebra::of_sizes(big)), CapExceeded);
}

TEST_CASE("is_simple agrees with the power criterion on all MTL-chains <= 5") {
  for (std::uint32_t n = 2; n <= 5; ++n)
    for (const auto& c : enumerate_mtl_chains(n)) CHECK(is_simple(c) == oracle::simple_chain(c.product_table()));
}

TEST_CASE("principal_filter") {
  const FiniteMTLChain godel({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  CHECK(principal_filter(godel, Rank{1}) == std::vector<std::uint64_t>{1, 2});
  CHECK(principal_filter(DPChain(4), Rank{2}) == std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(principal_filter(DPChain(4), Rank{3}) == std::vector<std::uint64_t>{3});
}

TEST_CASE("delta and discriminator") {
  const DPChain c(5);
  for (Rank x = 0; x < 5; ++x) CHECK(delta_of(c, x) == (x == 4 ? 4u : 0u));
  CHECK(discriminator(c, 2, 2, 1) == 1);
  CHECK(discriminator(c, 3, 1, 0) == 3);
  const auto ref = oracle::TableChain::drastic(4);
  const Formula t = discriminator_term();
  for (Rank x = 0; x < 4; ++x)
    for (Rank y = 0; y < 4; ++y)
      for (Rank z = 0; z < 4; ++z)
        CHECK(oracle::eval(t, ref, {{"x", x}, {"y", y}, {"z", z}}) == (x == y ? z : x));
}

TEST_CASE("find_embedding") {
  CHECK(find_embedding(DPChain(2), DPChain(5)) == std::vector<Rank>{0, 4});
  CHECK(find_embedding(DPChain(3), DPChain(5)) == std::vector<Rank>{0, 3, 4});
  CHECK(find_embedding(DPChain(4), DPChain(6)) == std::vector<Rank>{0, 1, 4, 5});
  CHECK_FALSE(find_embedding(DPChain(5), DPChain(4)));
  for (std::uint32_t m = 2; m <= 6; ++m)
    for (std::uint32_t n = m; n <= 7; ++n) {
      const auto e = find_embedding(DPChain(m), DPChain(n));
      REQUIRE(e);
      std::vector<std::uint64_t> map(e->begin(), e->end());
      CHECK(is_homomorphism(DPChain(m), DPChain(n), map));
      CHECK(std::is_sorted(map.begin(), map.end()));
      CHECK(std::adjacent_find(map.begin(), map.end()) == map.end());
    }
}

TEST_CASE("enumerate_homomorphisms between chains") {
  CHECK(enumerate_homomorphisms(DPChain(3), DPChain(3)).size() == 1);
  CHECK(enumerate_homomorphisms(DPChain(3), DPChain(4)).size() == 1);
  CHECK(enumerate_homomorphisms(DPChain(4), DPChain(3)).empty());
  for (std::uint32_t n = 2; n <= 6; ++n) CHECK(enumerate_homomorphisms(DPChain(2), DPChain(n)).size() == 1);
}

TEST_CASE("enumerate_homomorphisms agrees with naive backtracking on small products") {
  const std::vector<std::vector<std::uint32_t>> shapes = {{2}, {3}, {4}, {2, 2}, {2, 3}, {3, 3}, {2, 4}};
  for (const auto& s : shapes)
    for (const auto& t : shapes) {
      const auto a = ProductAlgebra::of_sizes(s);
      const auto b = ProductAlgebra::of_sizes(t);
      CHECK(enumerate_homomorphisms(a, b).size() ==
            oracle::count_homomorphisms(oracle::ProductTables(s), oracle::ProductTables(t)));
    }
}

TEST_CASE("enumerate_homomorphisms: node cap") {
  const std::uint32_t s[] = {3, 3, 3};
  const auto a = ProductAlgebra::of_sizes(s);
  CHECK_THROWS_AS(enumerate_homomorphisms(a, a, 2), CapExceeded);
}

TEST_CASE("subvariety_index") {
  const std::uint32_t s[] = {2, 5, 3};
  CHECK(subvariety_index(ProductAlgebra::of_sizes(s)) == 5);
}

TEST_CASE("free_algebra_bruteforce") {
  CHECK(free_algebra_bruteforce(0).count() == 2);
  const auto f1 = free_algebra_bruteforce(1);
  CHECK(f1.chain_size == 4);
  CHECK(f1.count() == 48);
  CHECK_THROWS_AS(free_algebra_bruteforce(2), AlgebraError);
}
