#include "dp/algebra.hpp"

#include <limits>
#include <utility>

namespace dp {

namespace {

std::string chain_name(Rank x, std::uint32_t size) {
  if (x == 0) return "0";
  if (x == size - 1) return "1";
  if (x == size - 2) return "c";
  return "r" + std::to_string(x);
}

}  // namespace

DPChain::DPChain(std::uint32_t size) : size_(size) {
  if (size < 2) throw AlgebraError("a DP-chain needs at least 2 elements");
}

std::string DPChain::name(Rank x) const { return chain_name(x, size_); }

// {{{ FiniteMTLChain

FiniteMTLChain::FiniteMTLChain(Table product) : product_(std::move(product)) {
  const std::size_t n = product_.size();
  if (n < 2) throw AlgebraError("an MTL-chain needs at least 2 elements");
  for (const auto& row : product_)
    if (row.size() != n) throw AlgebraError("product table is not square");
  size_ = static_cast<std::uint32_t>(n);
  const Rank t = top();
  for (Rank x = 0; x < n; ++x) {
    for (Rank y = 0; y < n; ++y) {
      const Rank xy = product_[x][y];
      if (xy >= n) throw AlgebraError("product table entry out of range");
      if (xy != product_[y][x]) throw AlgebraError("product is not commutative");
      if (y + 1 < n && xy > product_[x][y + 1]) throw AlgebraError("product is not monotone");
    }
    if (product_[x][t] != x) throw AlgebraError("top is not the unit of the product");
    if (product_[x][0] != 0) throw AlgebraError("bottom is not absorbing");
  }
  for (Rank x = 0; x < n; ++x)
    for (Rank y = 0; y < n; ++y)
      for (Rank z = 0; z < n; ++z)
        if (product_[product_[x][y]][z] != product_[x][product_[y][z]])
          throw AlgebraError("product is not associative");

  // x => y = max{z : x*z <= y}; the set is a nonempty downset by monotonicity.
  residuum_.assign(n, std::vector<Rank>(n, 0));
  for (Rank x = 0; x < n; ++x)
    for (Rank y = 0; y < n; ++y)
      for (Rank z = 0; z < n; ++z)
        if (product_[x][z] <= y) residuum_[x][y] = z;

  dp_ = true;
  for (Rank x = 0; x < t; ++x)
    if (product_[x][x] != 0) dp_ = false;
}

FiniteMTLChain FiniteMTLChain::from(const DPChain& chain) {
  const std::uint32_t n = chain.size();
  Table t(n, std::vector<Rank>(n));
  for (Rank x = 0; x < n; ++x)
    for (Rank y = 0; y < n; ++y) t[x][y] = chain.mul(x, y);
  return FiniteMTLChain(std::move(t));
}

Rank FiniteMTLChain::delta(Rank x) const {
  if (!dp_) throw AlgebraError("Delta is only interpreted on DP-chains (as x*x)");
  return mul(x, x);
}

std::string FiniteMTLChain::name(Rank x) const { return chain_name(x, size_); }

// }}}

// {{{ ProductAlgebra

ProductAlgebra::ProductAlgebra(std::vector<DPChain> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw AlgebraError("a product algebra needs at least one factor");
  radix_.assign(factors_.size(), 0);
  std::uint64_t place = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    radix_[i] = place;
    const std::uint64_t n = factors_[i].size();
    if (place > std::numeric_limits<std::uint64_t>::max() / n) {
      overflow_ = true;
      break;
    }
    place *= n;
  }
  if (!overflow_) top_ = place - 1;
}

ProductAlgebra ProductAlgebra::of_sizes(std::span<const std::uint32_t> sizes) {
  std::vector<DPChain> chains;
  chains.reserve(sizes.size());
  for (auto s : sizes) chains.emplace_back(s);
  return ProductAlgebra(std::move(chains));
}

std::vector<std::uint32_t> ProductAlgebra::factor_sizes() const {
  std::vector<std::uint32_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.size());
  return out;
}

std::uint64_t ProductAlgebra::cardinality() const {
  if (overflow_) throw CapExceeded("product algebra has more than 2^64 elements");
  return top_ + 1;
}

std::vector<Rank> ProductAlgebra::decode(value_type x) const {
  cardinality();
  std::vector<Rank> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = static_cast<Rank>(x / radix_[i]);
    x %= radix_[i];
  }
  return out;
}

ProductAlgebra::value_type ProductAlgebra::encode(std::span<const Rank> ranks) const {
  cardinality();
  if (ranks.size() != factors_.size()) throw AlgebraError("tuple length does not match factors");
  value_type x = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] >= factors_[i].size()) throw AlgebraError("rank out of range for factor");
    x += ranks[i] * radix_[i];
  }
  return x;
}

template <class Op>
ProductAlgebra::value_type ProductAlgebra::pointwise(value_type x, value_type y, Op op) const {
  if (overflow_) throw CapExceeded("product algebra has more than 2^64 elements");
  value_type out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto xi = static_cast<Rank>(x / radix_[i]);
    const auto yi = static_cast<Rank>(y / radix_[i]);
    x %= radix_[i];
    y %= radix_[i];
    out += op(factors_[i], xi, yi) * radix_[i];
  }
  return out;
}

ProductAlgebra::value_type ProductAlgebra::mul(value_type x, value_type y) const {
  return pointwise(x, y, [](const DPChain& c, Rank a, Rank b) { return c.mul(a, b); });
}
ProductAlgebra::value_type ProductAlgebra::imp(value_type x, value_type y) const {
  return pointwise(x, y, [](const DPChain& c, Rank a, Rank b) { return c.imp(a, b); });
}
ProductAlgebra::value_type ProductAlgebra::meet(value_type x, value_type y) const {
  return pointwise(x, y, [](const DPChain& c, Rank a, Rank b) { return c.meet(a, b); });
}
ProductAlgebra::value_type ProductAlgebra::join(value_type x, value_type y) const {
  return pointwise(x, y, [](const DPChain& c, Rank a, Rank b) { return c.join(a, b); });
}

std::string ProductAlgebra::name(value_type x) const {
  const auto ranks = decode(x);
  std::string out = "(";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) out += ',';
    out += factors_[i].name(ranks[i]);
  }
  return out + ")";
}

// }}}

}  // namespace dp
