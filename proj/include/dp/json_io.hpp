#pragma once

#include <variant>

#include <json.hpp>

#include "dp/algebra.hpp"
#include "dp/decide.hpp"
#include "dp/duality.hpp"
#include "dp/eval.hpp"

namespace dp {

using json = nlohmann::json;
using AnyAlgebra = std::variant<DPChain, FiniteMTLChain, ProductAlgebra>;

// Algebras: {"type":"dp_chain","size":n}, {"type":"mtl_chain","size":n,
// "product":[[...]]}, {"type":"product","factors":[n1,...]}.
json to_json(const DPChain& a);
json to_json(const FiniteMTLChain& a);
json to_json(const ProductAlgebra& a);
json to_json(const AnyAlgebra& a);
AnyAlgebra algebra_from_json(const json& j);

// Objects: {"chains":[{"len":i,"mult":m},...]}.
json to_json(const MultisetObj& c);
MultisetObj multiset_from_json(const json& j);

// Morphisms: {"components":[{"target":j,"map":[...]},...]}.
json to_json(const MCMorphism& m);
MCMorphism morphism_from_json(const json& j);

// Valuations on chains: {"var":rank,...}.
json valuation_to_json(const Valuation<Rank>& v);
Valuation<Rank> valuation_from_json(const json& j);

/// {"algebra":..., "valuation":{...}, "names":{"x":"c",...}, "value":r,
///  "value_name":"c"}
json witness_to_json(const DPChain& a, const Witness<Rank>& w);
json witness_to_json(const FiniteMTLChain& a, const Witness<Rank>& w);

}  // namespace dp
