#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dp/errors.hpp"

namespace dp {

/// Position of an element in a finite chain, 0 = bottom.
using Rank = std::uint32_t;

/// Operations every finite algebra in this library exposes. Elements are
/// enumerable as element(0) .. element(cardinality() - 1).
template <class A>
concept FiniteAlgebra = requires(const A& a, typename A::value_type x, std::uint64_t i) {
  { a.cardinality() } -> std::convertible_to<std::uint64_t>;
  { a.element(i) } -> std::same_as<typename A::value_type>;
  { a.index(x) } -> std::convertible_to<std::uint64_t>;
  { a.bottom() } -> std::same_as<typename A::value_type>;
  { a.top() } -> std::same_as<typename A::value_type>;
  { a.mul(x, x) } -> std::same_as<typename A::value_type>;
  { a.imp(x, x) } -> std::same_as<typename A::value_type>;
  { a.meet(x, x) } -> std::same_as<typename A::value_type>;
  { a.join(x, x) } -> std::same_as<typename A::value_type>;
  { a.delta(x) } -> std::same_as<typename A::value_type>;
  { a.name(x) } -> std::convertible_to<std::string>;
};

/// The finite drastic product chain on ranks 0 < 1 < ... < size-1.
///
/// x*y is 0 when both x and y are below the top and min(x, y) otherwise;
/// x=>y is the top if x <= y, the top itself returns y, and every remaining
/// pair (top > x > y) yields the coatom.
class DPChain {
 public:
  using value_type = Rank;

  explicit DPChain(std::uint32_t size);

  std::uint32_t size() const { return size_; }
  std::uint64_t cardinality() const { return size_; }
  Rank element(std::uint64_t i) const { return static_cast<Rank>(i); }
  std::uint64_t index(Rank x) const { return x; }

  Rank bottom() const { return 0; }
  Rank top() const { return size_ - 1; }
  // Equals the bottom on the two-element chain.
  Rank coatom() const { return size_ - 2; }

  Rank mul(Rank x, Rank y) const {
    if (x < top() && y < top()) return 0;
    return x < y ? x : y;
  }
  Rank imp(Rank x, Rank y) const {
    if (x <= y) return top();
    if (x == top()) return y;
    return coatom();
  }
  Rank meet(Rank x, Rank y) const { return x < y ? x : y; }
  Rank join(Rank x, Rank y) const { return x < y ? y : x; }
  Rank neg(Rank x) const { return imp(x, 0); }
  /// Baaz Delta, definable as x*x.
  Rank delta(Rank x) const { return mul(x, x); }

  /// "0", "c" (coatom), "1" (top), or "r<k>" for any other rank.
  std::string name(Rank x) const;

  friend bool operator==(const DPChain&, const DPChain&) = default;

 private:
  std::uint32_t size_;
};

/// A finite MTL-chain given by its monoid table; the residuum is derived.
///
/// The constructor validates commutativity, associativity, monotonicity,
/// the unit (top) and absorbing bottom, and throws AlgebraError otherwise.
class FiniteMTLChain {
 public:
  using value_type = Rank;
  using Table = std::vector<std::vector<Rank>>;

  explicit FiniteMTLChain(Table product);
  static FiniteMTLChain from(const DPChain& chain);

  std::uint32_t size() const { return size_; }
  std::uint64_t cardinality() const { return size_; }
  Rank element(std::uint64_t i) const { return static_cast<Rank>(i); }
  std::uint64_t index(Rank x) const { return x; }

  Rank bottom() const { return 0; }
  Rank top() const { return size_ - 1; }
  Rank coatom() const { return size_ - 2; }

  Rank mul(Rank x, Rank y) const { return product_[x][y]; }
  Rank imp(Rank x, Rank y) const { return residuum_[x][y]; }
  Rank meet(Rank x, Rank y) const { return x < y ? x : y; }
  Rank join(Rank x, Rank y) const { return x < y ? y : x; }
  Rank neg(Rank x) const { return imp(x, 0); }
  /// Only defined when the chain is a DP-chain; throws AlgebraError otherwise.
  Rank delta(Rank x) const;

  std::string name(Rank x) const;

  const Table& product_table() const { return product_; }
  const Table& residuum_table() const { return residuum_; }

  /// Every element below the top squares to 0.
  bool square_nilpotent() const { return dp_; }

  friend bool operator==(const FiniteMTLChain& a, const FiniteMTLChain& b) {
    return a.product_ == b.product_;
  }

 private:
  std::uint32_t size_;
  Table product_;
  Table residuum_;
  bool dp_;
};

/// A finite DP-algebra in decomposed form: the direct product of DP-chains.
/// Elements are mixed-radix indices into the tuple space, factor 0 most
/// significant.
class ProductAlgebra {
 public:
  using value_type = std::uint64_t;

  explicit ProductAlgebra(std::vector<DPChain> factors);
  /// Convenience: factors given by their sizes.
  static ProductAlgebra of_sizes(std::span<const std::uint32_t> sizes);

  const std::vector<DPChain>& factors() const { return factors_; }
  std::vector<std::uint32_t> factor_sizes() const;

  /// Throws CapExceeded if the element count does not fit 64 bits.
  std::uint64_t cardinality() const;
  value_type element(std::uint64_t i) const { return i; }
  std::uint64_t index(value_type x) const { return x; }

  std::vector<Rank> decode(value_type x) const;
  value_type encode(std::span<const Rank> ranks) const;

  value_type bottom() const { return 0; }
  value_type top() const { return top_; }
  value_type mul(value_type x, value_type y) const;
  value_type imp(value_type x, value_type y) const;
  value_type meet(value_type x, value_type y) const;
  value_type join(value_type x, value_type y) const;
  value_type neg(value_type x) const { return imp(x, bottom()); }
  value_type delta(value_type x) const { return mul(x, x); }

  /// Tuple of factor names, e.g. "(1,c,0)".
  std::string name(value_type x) const;

  friend bool operator==(const ProductAlgebra& a, const ProductAlgebra& b) {
    return a.factors_ == b.factors_;
  }

 private:
  template <class Op>
  value_type pointwise(value_type x, value_type y, Op op) const;

  std::vector<DPChain> factors_;
  std::vector<std::uint64_t> radix_;  // place value of each factor; 0 when overflowed
  bool overflow_ = false;
  value_type top_ = 0;
};

static_assert(FiniteAlgebra<DPChain>);
static_assert(FiniteAlgebra<FiniteMTLChain>);
static_assert(FiniteAlgebra<ProductAlgebra>);

}  // namespace dp
