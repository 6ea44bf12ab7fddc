#include "dp/free.hpp"

#include <string>

namespace dp {

namespace {

BigInt pow_ui(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

MultisetObj free_generator_dual() { return MultisetObj{1, 1, 2, 3}; }

MultisetObj free_dual(std::uint32_t k, MultisetObj::Count cap) {
  return power(free_generator_dual(), k, cap);
}

BigInt free_coefficient(std::uint32_t k, std::uint32_t h) {
  if (h == 0) throw AlgebraError("free_coefficient: chain length must be positive");
  if (h == 1) return pow_ui(2, k);
  if (h == 2) return pow_ui(3, k) - pow_ui(2, k);
  if (h > k + 2) return 0;
  BigInt sum = 0;
  for (std::uint32_t i = 0; i <= h - 2; ++i) {
    BigInt term = binomial(h - 2, i) * pow_ui(h + 1 - i, k);
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

std::map<std::uint32_t, BigInt> free_coefficients(std::uint32_t k) {
  std::map<std::uint32_t, BigInt> out;
  for (std::uint32_t h = 1; h <= k + 2; ++h) {
    BigInt a = free_coefficient(k, h);
    if (a != 0) out.emplace(h, std::move(a));
  }
  return out;
}

std::map<std::uint32_t, BigInt> free_recurrence_step(const std::map<std::uint32_t, BigInt>& a) {
  auto at = [&a](std::uint32_t h) -> BigInt {
    const auto it = a.find(h);
    return it == a.end() ? BigInt(0) : it->second;
  };
  std::uint32_t max_h = a.empty() ? 1 : a.rbegin()->first;
  std::map<std::uint32_t, BigInt> next;
  auto put = [&next](std::uint32_t h, BigInt v) {
    if (v != 0) next.emplace(h, std::move(v));
  };
  put(1, 2 * at(1));
  put(2, at(1) + 3 * at(2));
  put(3, at(1) + at(2) + 4 * at(3));
  for (std::uint32_t h = 4; h <= std::max<std::uint32_t>(max_h + 1, 4); ++h)
    put(h, (h - 2) * at(h - 1) + (h + 1) * at(h));
  return next;
}

std::map<std::uint32_t, BigInt> free_coefficients_by_recurrence(std::uint32_t k) {
  std::map<std::uint32_t, BigInt> a{{1, BigInt(1)}};
  for (std::uint32_t i = 0; i < k; ++i) a = free_recurrence_step(a);
  return a;
}

BigInt dual_cardinality(const MultisetObj& c) {
  BigInt out = 1;
  for (const auto& [l, m] : c.counts()) out *= pow_ui(l + 1, m);
  return out;
}

std::vector<std::pair<std::uint32_t, BigInt>> free_cardinality_factored(std::uint32_t k) {
  if (k > kFactoredCardinalityCap)
    throw CapExceeded("free_cardinality_factored: k must be at most " +
                      std::to_string(kFactoredCardinalityCap));
  std::vector<std::pair<std::uint32_t, BigInt>> out;
  for (auto& [h, a] : free_coefficients(k)) out.emplace_back(h + 1, a);
  return out;
}

BigInt free_cardinality(std::uint32_t k) {
  if (k > kExactCardinalityCap)
    throw CapExceeded("free_cardinality: exact expansion is capped at k = " +
                      std::to_string(kExactCardinalityCap) +
                      "; use free_cardinality_factored for larger k");
  BigInt out = 1;
  for (const auto& [base, exp] : free_cardinality_factored(k))
    out *= pow_ui(base, exp.get_ui());
  return out;
}

}  // namespace dp
