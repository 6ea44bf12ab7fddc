#include "dp/json_io.hpp"

#include <string>

namespace dp {

json to_json(const DPChain& a) { return {{"type", "dp_chain"}, {"size", a.size()}}; }

json to_json(const FiniteMTLChain& a) {
  return {{"type", "mtl_chain"}, {"size", a.size()}, {"product", a.product_table()}};
}

json to_json(const ProductAlgebra& a) {
  return {{"type", "product"}, {"factors", a.factor_sizes()}};
}

json to_json(const AnyAlgebra& a) {
  return std::visit([](const auto& x) { return to_json(x); }, a);
}

AnyAlgebra algebra_from_json(const json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "dp_chain") return DPChain(j.at("size").get<std::uint32_t>());
    if (type == "mtl_chain") {
      auto table = j.at("product").get<FiniteMTLChain::Table>();
      if (j.contains("size") && j.at("size").get<std::size_t>() != table.size())
        throw AlgebraError("mtl_chain: size does not match product table");
      return FiniteMTLChain(std::move(table));
    }
    if (type == "product") {
      const auto sizes = j.at("factors").get<std::vector<std::uint32_t>>();
      return ProductAlgebra::of_sizes(sizes);
    }
    throw AlgebraError("unknown algebra type '" + type + "'");
  } catch (const json::exception& e) {
    throw AlgebraError(std::string("malformed algebra JSON: ") + e.what());
  }
}

json to_json(const MultisetObj& c) {
  json chains = json::array();
  for (const auto& [l, m] : c.counts()) chains.push_back({{"len", l}, {"mult", m}});
  return {{"chains", chains}};
}

MultisetObj multiset_from_json(const json& j) {
  try {
    MultisetObj out;
    for (const auto& item : j.at("chains")) {
      const auto len = item.at("len").get<std::uint32_t>();
      const auto mult = item.at("mult").get<MultisetObj::Count>();
      if (mult == 0) throw AlgebraError("multiplicity must be positive");
      out.add(len, mult);
    }
    return out;
  } catch (const json::exception& e) {
    throw AlgebraError(std::string("malformed multiset JSON: ") + e.what());
  }
}

json to_json(const MCMorphism& m) {
  json comps = json::array();
  for (const auto& c : m.components) comps.push_back({{"target", c.target}, {"map", c.map}});
  return {{"components", comps}};
}

MCMorphism morphism_from_json(const json& j) {
  try {
    MCMorphism m;
    for (const auto& c : j.at("components"))
      m.components.push_back({c.at("target").get<std::size_t>(), c.at("map").get<std::vector<Rank>>()});
    return m;
  } catch (const json::exception& e) {
    throw AlgebraError(std::string("malformed morphism JSON: ") + e.what());
  }
}

json valuation_to_json(const Valuation<Rank>& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.variables.size(); ++i) out[v.variables[i]] = v.values[i];
  return out;
}

Valuation<Rank> valuation_from_json(const json& j) {
  if (!j.is_object()) throw AlgebraError("valuation JSON must be an object");
  Valuation<Rank> v;
  for (const auto& [k, x] : j.items()) {
    if (!x.is_number_unsigned()) throw AlgebraError("valuation value for '" + k + "' is not a rank");
    v.variables.push_back(k);
    v.values.push_back(x.get<Rank>());
  }
  return v;
}

namespace {

template <class Chain>
json chain_witness(const Chain& a, const Witness<Rank>& w) {
  json names = json::object();
  for (std::size_t i = 0; i < w.valuation.variables.size(); ++i)
    names[w.valuation.variables[i]] = a.name(w.valuation.values[i]);
  return {{"algebra", to_json(a)},
          {"valuation", valuation_to_json(w.valuation)},
          {"names", names},
          {"value", w.value},
          {"value_name", a.name(w.value)}};
}

}  // namespace

json witness_to_json(const DPChain& a, const Witness<Rank>& w) { return chain_witness(a, w); }
json witness_to_json(const FiniteMTLChain& a, const Witness<Rank>& w) {
  return chain_witness(a, w);
}

}  // namespace dp
