#include "dp/decide.hpp"

#include <optional>
#include <string>

namespace dp {

namespace {

TheoremResult sweep(const CompiledFormula& f, std::uint32_t size, std::uint64_t cap) {
  const DPChain chain(size);
  auto r = holds(f, chain, cap);
  TheoremResult out;
  out.theorem = r.holds;
  out.chain_size = size;
  out.countermodel = std::move(r.witness);
  return out;
}

}  // namespace

std::uint32_t deciding_chain_size(std::size_t variables) {
  return variables == 0 ? 2 : static_cast<std::uint32_t>(variables + 3);
}

TheoremResult is_theorem(const Formula& f, std::uint64_t cap) {
  const CompiledFormula cf(f);
  const std::uint32_t size = deciding_chain_size(cf.variables().size());
  TheoremResult out = sweep(cf, size, cap);
  if (out.theorem) return out;
  // Prefer the countermodel on the smallest refuting chain.
  for (std::uint32_t n = 2; n < size; ++n) {
    TheoremResult smaller = sweep(cf, n, cap);
    if (!smaller.theorem) return smaller;
  }
  return out;
}

TheoremResult is_theorem_in_variety(const Formula& f, std::uint32_t n, std::uint64_t cap) {
  if (n < 2) throw AlgebraError("a subvariety index must be at least 2");
  return sweep(CompiledFormula(f), n, cap);
}

Formula separating_formula(std::uint32_t n) {
  if (n < 2) throw AlgebraError("separating_formula needs n >= 2");
  std::optional<Formula> acc;
  for (std::uint32_t i = 1; i <= n + 1; ++i) {
    for (std::uint32_t j = i + 1; j <= n + 1; ++j) {
      Formula eq = Formula::iff(Formula::var("x" + std::to_string(i)),
                                Formula::var("x" + std::to_string(j)));
      acc = acc ? Formula::lor(*acc, eq) : eq;
    }
  }
  return *acc;
}

}  // namespace dp
