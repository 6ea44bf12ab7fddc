#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "dp/algebra.hpp"
#include "dp/eval.hpp"
#include "dp/formula.hpp"

namespace dp {

// {{{ Axiom schemas

/// Named axiom schemas checked as written, with distinct variables x, y.
struct Axiom {
  enum class Name { Dp, Wnm, Rdp, SkMtl, NContract };
  Name name;
  std::uint32_t param = 0;  // k for skmtl(k), n for ncontract(n)

  static Axiom dp() { return {Name::Dp}; }
  static Axiom wnm() { return {Name::Wnm}; }
  static Axiom rdp() { return {Name::Rdp}; }
  static Axiom skmtl(std::uint32_t k) { return {Name::SkMtl, k}; }
  static Axiom ncontract(std::uint32_t n) { return {Name::NContract, n}; }

  /// Accepts "dp", "wnm", "rdp", "skmtl(k)" and "ncontract(n)".
  static Axiom parse(const std::string& text);
  std::string to_string() const;
  Formula formula() const;
};

/// The five Delta axioms of MTL_Delta, over variables x, y.
std::vector<Formula> delta_axioms();

/// (D(x <-> y) /\ z) \/ (~D(x <-> y) /\ x)
Formula discriminator_term();

template <FiniteAlgebra A>
bool satisfies_axiom(const A& a, const Axiom& axiom, std::uint64_t cap = kDefaultSweepCap) {
  return holds(axiom.formula(), a, cap).holds;
}

/// True iff every element below the top squares to the bottom. A finite
/// chain always has a coatom, so this is the whole DP-chain condition.
bool is_dp_chain(const FiniteMTLChain& a);

// }}}

/// Every monoid table on the n-element chain that makes it an MTL-chain,
/// in lexicographic order of the free upper-triangle entries. 2 <= n <= 5.
std::vector<FiniteMTLChain> enumerate_mtl_chains(std::uint32_t n);

// {{{ Filters and simplicity

inline constexpr std::uint64_t kSimplicityCap = 64;

template <FiniteAlgebra A>
bool leq(const A& a, typename A::value_type x, typename A::value_type y) {
  return a.meet(x, y) == x;
}

/// Filter generated by x: the upset of the least power of x. Element
/// indices, ascending.
template <FiniteAlgebra A>
std::vector<std::uint64_t> principal_filter(const A& a, typename A::value_type x) {
  auto p = x;
  for (;;) {
    const auto next = a.mul(p, x);
    if (next == p) break;
    p = next;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < a.cardinality(); ++i)
    if (leq(a, p, a.element(i))) out.push_back(i);
  return out;
}

/// True iff {top} and the whole universe are the only filters. Throws
/// CapExceeded above kSimplicityCap elements.
template <FiniteAlgebra A>
bool is_simple(const A& a) {
  const std::uint64_t n = a.cardinality();
  if (n > kSimplicityCap) throw CapExceeded("is_simple: algebra has more than 64 elements");
  // Every filter is a union of principal ones, so checking generators suffices.
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto x = a.element(i);
    if (x == a.top()) continue;
    if (principal_filter(a, x).size() != n) return false;
  }
  return true;
}

// }}}

template <FiniteAlgebra A>
typename A::value_type delta_of(const A& a, typename A::value_type x) {
  return a.delta(x);
}

/// Value of the discriminator term at (x, y, z).
Rank discriminator(const DPChain& a, Rank x, Rank y, Rank z);

/// The monotone injection B -> A fixing 0, coatom and top, or nullopt when
/// |B| > |A|. Entry i is the image of rank i.
std::optional<std::vector<Rank>> find_embedding(const DPChain& from, const DPChain& to);

// {{{ Homomorphisms

/// Checks that map (indexed by element index of `a`, valued in element
/// indices of `b`) preserves *, =>, meet, join, 0 and top.
template <FiniteAlgebra A, FiniteAlgebra B>
bool is_homomorphism(const A& a, const B& b, const std::vector<std::uint64_t>& map) {
  const std::uint64_t n = a.cardinality();
  if (map.size() != n) return false;
  auto h = [&](typename A::value_type x) { return b.element(map[a.index(x)]); };
  if (h(a.bottom()) != b.bottom() || h(a.top()) != b.top()) return false;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto x = a.element(i);
    for (std::uint64_t j = 0; j < n; ++j) {
      const auto y = a.element(j);
      if (h(a.mul(x, y)) != b.mul(h(x), h(y))) return false;
      if (h(a.imp(x, y)) != b.imp(h(x), h(y))) return false;
      if (h(a.meet(x, y)) != b.meet(h(x), h(y))) return false;
      if (h(a.join(x, y)) != b.join(h(x), h(y))) return false;
    }
  }
  return true;
}

namespace detail {

template <FiniteAlgebra A, FiniteAlgebra B>
class HomSearch {
 public:
  static constexpr std::int64_t kUnset = -1;

  HomSearch(const A& a, const B& b, std::uint64_t cap) : a_(a), b_(b), cap_(cap) {}

  std::vector<std::vector<std::uint64_t>> run() {
    std::vector<std::int64_t> h(a_.cardinality(), kUnset);
    if (assign(h, a_.index(a_.bottom()), b_.index(b_.bottom())) &&
        assign(h, a_.index(a_.top()), b_.index(b_.top())))
      search(h);
    return std::move(out_);
  }

 private:
  // Sets h[x] = y and closes under all four operations. False on conflict.
  bool assign(std::vector<std::int64_t>& h, std::uint64_t x, std::uint64_t y) {
    if (h[x] != kUnset) return h[x] == static_cast<std::int64_t>(y);
    h[x] = static_cast<std::int64_t>(y);
    std::deque<std::uint64_t> work{x};
    while (!work.empty()) {
      const std::uint64_t u = work.front();
      work.pop_front();
      const auto au = a_.element(u);
      const auto bu = b_.element(static_cast<std::uint64_t>(h[u]));
      for (std::uint64_t v = 0; v < h.size(); ++v) {
        if (h[v] == kUnset) continue;
        const auto av = a_.element(v);
        const auto bv = b_.element(static_cast<std::uint64_t>(h[v]));
        const std::pair<typename A::value_type, typename B::value_type> checks[] = {
            {a_.mul(au, av), b_.mul(bu, bv)},   {a_.imp(au, av), b_.imp(bu, bv)},
            {a_.imp(av, au), b_.imp(bv, bu)},   {a_.meet(au, av), b_.meet(bu, bv)},
            {a_.join(au, av), b_.join(bu, bv)},
        };
        for (const auto& [ar, br] : checks) {
          const std::uint64_t r = a_.index(ar);
          const auto want = static_cast<std::int64_t>(b_.index(br));
          if (h[r] == kUnset) {
            h[r] = want;
            work.push_back(r);
          } else if (h[r] != want) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void search(const std::vector<std::int64_t>& h) {
    if (++nodes_ > cap_) throw CapExceeded("homomorphism search exceeds cap");
    const auto it = std::find(h.begin(), h.end(), kUnset);
    if (it == h.end()) {
      out_.emplace_back(h.begin(), h.end());
      return;
    }
    const auto x = static_cast<std::uint64_t>(it - h.begin());
    for (std::uint64_t y = 0; y < b_.cardinality(); ++y) {
      auto next = h;
      if (assign(next, x, y)) search(next);
    }
  }

  const A& a_;
  const B& b_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::uint64_t>> out_;
};

}  // namespace detail

/// All homomorphisms A -> B as index maps, by backtracking with forced
/// propagation through the operations. Each result is re-verified with
/// is_homomorphism. Throws CapExceeded if the search visits more than cap
/// nodes.
template <FiniteAlgebra A, FiniteAlgebra B>
std::vector<std::vector<std::uint64_t>> enumerate_homomorphisms(
    const A& a, const B& b, std::uint64_t cap = kDefaultSweepCap) {
  auto maps = detail::HomSearch<A, B>(a, b, cap).run();
  for (const auto& m : maps)
    if (!is_homomorphism(a, b, m))
      throw std::logic_error("homomorphism search produced a non-homomorphism");
  return maps;
}

// }}}

/// n such that the product generates the subvariety of the n-element chain.
std::uint32_t subvariety_index(const ProductAlgebra& a);

/// Term functions of the free k-generated algebra, realised on the
/// (k+3)-element chain.
struct FreeAlgebraTable {
  std::uint32_t generators = 0;
  std::uint32_t chain_size = 0;
  // Each function lists its values on the chain^k points in odometer order.
  std::vector<std::vector<Rank>> functions;

  std::size_t count() const { return functions.size(); }
};

/// Closes the projections and the constants 0, 1 under *, =>, meet and join,
/// pointwise. Only k in {0, 1} is in range; throws AlgebraError otherwise.
FreeAlgebraTable free_algebra_bruteforce(std::uint32_t k);

}  // namespace dp
