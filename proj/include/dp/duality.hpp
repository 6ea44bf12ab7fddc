#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dp/algebra.hpp"
#include "dp/errors.hpp"

namespace dp {

/// Object of MC^T: a finite multiset of nonempty finite chains, stored as
/// chain length -> multiplicity. Lengths are >= 1 and multiplicities >= 1;
/// equality of canonical forms stands in for isomorphism.
class MultisetObj {
 public:
  using Count = std::uint64_t;

  MultisetObj() = default;
  MultisetObj(std::initializer_list<std::uint32_t> lengths);
  static MultisetObj from_lengths(std::span<const std::uint32_t> lengths);
  static MultisetObj from_counts(const std::map<std::uint32_t, Count>& counts);
  /// Accepts "{1,3,2,1}", "{}" and the multiplicity form "{1:4,2:5}".
  static MultisetObj parse(std::string_view text);

  /// Adds `mult` copies of the chain with `length` elements.
  void add(std::uint32_t length, Count mult = 1);

  const std::map<std::uint32_t, Count>& counts() const { return counts_; }
  std::vector<std::pair<std::uint32_t, Count>> chains() const {
    return {counts_.begin(), counts_.end()};
  }
  Count multiplicity(std::uint32_t length) const;
  Count instance_count() const;
  /// Chain lengths listed once per instance, ascending.
  std::vector<std::uint32_t> instances() const;
  bool empty() const { return counts_.empty(); }

  /// Canonical list form when short, e.g. "{1,1,2,3}"; otherwise "{1:4,2:5}".
  std::string to_string() const;

  friend bool operator==(const MultisetObj&, const MultisetObj&) = default;

 private:
  std::map<std::uint32_t, Count> counts_;
};

/// Family of per-instance monotone surjections. components[i] maps source
/// instance i (in instances() order) onto target instance `target`.
struct MCMorphism {
  struct Component {
    std::size_t target;
    std::vector<Rank> map;
    friend bool operator==(const Component&, const Component&) = default;
  };
  std::vector<Component> components;
  friend bool operator==(const MCMorphism&, const MCMorphism&) = default;
};

/// Disjoint union.
MultisetObj coproduct(const MultisetObj& c, const MultisetObj& d);

/// Adds a fresh maximum to every chain.
MultisetObj top_lift(const MultisetObj& c);

/// Categorical product, by distributing over coproducts and unfolding the
/// singleton rules {i}x{1} = {i}, {i+1}x{2} = {i+1} and
/// {i+2}x{j+2} = ({i+2}x{j+1} + {i+1}x{j+1} + {i+1}x{j+2})^T.
MultisetObj product(const MultisetObj& c, const MultisetObj& d);

inline constexpr MultisetObj::Count kPowerCap = 1'000'000;

/// k-fold product; power(C, 0) = {1}. Throws CapExceeded once an
/// intermediate result exceeds `cap` chain instances.
MultisetObj power(const MultisetObj& c, std::uint32_t k, MultisetObj::Count cap = kPowerCap);

/// The finite DP-algebra dual to c: one DP-chain with len+1 elements per
/// instance. Throws AlgebraError for the empty object.
ProductAlgebra mc_inverse(const MultisetObj& c);

/// Hall-forest rendering of an object: each chain of length l becomes the
/// pair (1-element tree, chain of length l-1).
struct HallPair {
  std::uint32_t tree_size = 1;
  std::uint32_t chain_length = 0;
  friend bool operator==(const HallPair&, const HallPair&) = default;
};
std::vector<HallPair> tr(const MultisetObj& c);

/// Max chain length. Throws AlgebraError for the empty object.
std::uint32_t height(const MultisetObj& c);

/// True iff m is a morphism c -> d: each component an order-preserving
/// surjection onto its target, and the target maximum has the source
/// maximum as its only preimage unless the target is the 1-element chain.
bool is_morphism(const MultisetObj& c, const MultisetObj& d, const MCMorphism& m);

inline constexpr std::uint32_t kMorphismSizeCap = 8;

/// All morphisms c -> d, counted literally as indexed families. Throws
/// CapExceeded if either object has more than 8 instances or a chain
/// longer than 8, or if the family count exceeds `cap`.
std::vector<MCMorphism> enumerate_morphisms(const MultisetObj& c, const MultisetObj& d,
                                            std::uint64_t cap = kDefaultSweepCap);

/// |Hom(c, d)| without materialising the families: the product over source
/// instances of the number of admissible (target, surjection) choices.
/// Throws CapExceeded on 64-bit overflow or chains longer than 8.
std::uint64_t count_morphisms(const MultisetObj& c, const MultisetObj& d);

/// Monotone surjections from the `from`-chain onto the `to`-chain obeying
/// the top-fiber condition, in lexicographic order.
std::vector<std::vector<Rank>> admissible_surjections(std::uint32_t from, std::uint32_t to);

/// product({k},{3}) == (k-1){k+1} + (k-2){k}, for 2 <= k <= 20.
bool kx3_identity_check(std::uint32_t k);

}  // namespace dp
