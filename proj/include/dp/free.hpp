#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dp/duality.hpp"

namespace dp {

using BigInt = mpz_class;

/// Dual of the free one-generated algebra: {1,1,2,3}.
MultisetObj free_generator_dual();

/// Dual of the free k-generated algebra, as the k-th power of {1,1,2,3}.
MultisetObj free_dual(std::uint32_t k, MultisetObj::Count cap = kPowerCap);

/// Multiplicity of the h-element chain in the dual of F_k, by the closed
/// form: 2^k for h = 1, 3^k - 2^k for h = 2, and for 3 <= h <= k+2 the
/// alternating sum over i <= h-2 of (-1)^i C(h-2, i) (h+1-i)^k. Zero for
/// h > k+2.
BigInt free_coefficient(std::uint32_t k, std::uint32_t h);

/// All nonzero closed-form coefficients for F_k, keyed by chain length.
std::map<std::uint32_t, BigInt> free_coefficients(std::uint32_t k);

/// The same coefficients obtained by iterating the one-step recurrences
/// from F_0 = {1}.
std::map<std::uint32_t, BigInt> free_coefficients_by_recurrence(std::uint32_t k);

/// One recurrence step: coefficients of F_{k+1} from those of F_k.
std::map<std::uint32_t, BigInt> free_recurrence_step(const std::map<std::uint32_t, BigInt>& a);

/// Element count of the dual algebra: product of (length+1)^multiplicity.
BigInt dual_cardinality(const MultisetObj& c);

inline constexpr std::uint32_t kFactoredCardinalityCap = 12;
inline constexpr std::uint32_t kExactCardinalityCap = 8;

/// |F_k| as (base, exponent) pairs, bases 2..k+3 ascending, zero exponents
/// dropped. Valid for k <= 12.
std::vector<std::pair<std::uint32_t, BigInt>> free_cardinality_factored(std::uint32_t k);

/// |F_k| expanded exactly. The number has about 1.3e7 bits at k = 8 and
/// grows by an order of magnitude per step, so k is capped at 8.
BigInt free_cardinality(std::uint32_t k);

}  // namespace dp
