#pragma once

#include <cstdint>
#include <optional>

#include "dp/algebra.hpp"
#include "dp/errors.hpp"
#include "dp/eval.hpp"
#include "dp/formula.hpp"

namespace dp {

struct TheoremResult {
  bool theorem = false;
  std::uint32_t chain_size = 0;  // the chain that was swept
  std::optional<Witness<Rank>> countermodel;

  explicit operator bool() const { return theorem; }
};

/// Size of the single chain that decides k-variable DP validity: k+3, or 2
/// for a closed formula. A k-generated subalgebra of any DP-chain has at
/// most k+3 elements (the generators plus 0, coatom, top), and every
/// smaller DP-chain embeds into the (k+3)-chain.
std::uint32_t deciding_chain_size(std::size_t variables);

/// Decides DP-theoremhood by sweeping the deciding chain. Delta is read as
/// x*x. A non-theorem's countermodel lives on the smallest DP-chain that
/// refutes it. Throws CapExceeded when (k+3)^k exceeds cap.
TheoremResult is_theorem(const Formula& f, std::uint64_t cap = kDefaultSweepCap);

/// Validity in the subvariety generated by the n-element DP-chain.
TheoremResult is_theorem_in_variety(const Formula& f, std::uint32_t n,
                                    std::uint64_t cap = kDefaultSweepCap);

/// Disjunction of xi <-> xj over all i < j <= n+1: valid on n elements by
/// pigeonhole, refuted by n+1 distinct values.
Formula separating_formula(std::uint32_t n);

}  // namespace dp
