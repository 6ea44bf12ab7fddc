#include "dp/analysis.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace dp {

Axiom Axiom::parse(const std::string& text) {
  if (text == "dp") return dp();
  if (text == "wnm") return wnm();
  if (text == "rdp") return rdp();
  auto with_param = [&](const std::string& prefix) -> std::optional<std::uint32_t> {
    if (text.rfind(prefix + "(", 0) != 0 || text.back() != ')') return std::nullopt;
    const std::string digits = text.substr(prefix.size() + 1, text.size() - prefix.size() - 2);
    if (digits.empty() || digits.size() > 6 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    return static_cast<std::uint32_t>(std::stoul(digits));
  };
  if (auto k = with_param("skmtl")) {
    if (*k < 2) throw AlgebraError("skmtl(k) needs k >= 2");
    return skmtl(*k);
  }
  if (auto n = with_param("ncontract")) {
    if (*n < 1) throw AlgebraError("ncontract(n) needs n >= 1");
    return ncontract(*n);
  }
  throw AlgebraError("unknown axiom '" + text + "'");
}

std::string Axiom::to_string() const {
  switch (name) {
    case Name::Dp:
      return "dp";
    case Name::Wnm:
      return "wnm";
    case Name::Rdp:
      return "rdp";
    case Name::SkMtl:
      return "skmtl(" + std::to_string(param) + ")";
    case Name::NContract:
      return "ncontract(" + std::to_string(param) + ")";
  }
  return "?";
}

Formula Axiom::formula() const {
  const Formula x = Formula::var("x");
  const Formula y = Formula::var("y");
  switch (name) {
    case Name::Dp:
      return Formula::lor(x, Formula::neg(Formula::power(x, 2)));
    case Name::Wnm:
      return Formula::lor(Formula::neg(Formula::strong(x, y)),
                          Formula::imp(Formula::min(x, y), Formula::strong(x, y)));
    case Name::Rdp:
      return Formula::lor(Formula::imp(x, Formula::neg(x)), Formula::neg(Formula::neg(x)));
    case Name::SkMtl:
      return Formula::lor(x, Formula::neg(Formula::power(x, param - 1)));
    case Name::NContract:
      return Formula::iff(Formula::power(x, param), Formula::power(x, param - 1));
  }
  throw std::logic_error("unknown axiom");
}

std::vector<Formula> delta_axioms() {
  return {
      parse("D x \\/ ~D x"),
      parse("D x -> x"),
      parse("D x -> D D x"),
      parse("D(x -> y) -> (D x -> D y)"),
      parse("D(x \\/ y) -> (D x \\/ D y)"),
  };
}

Formula discriminator_term() { return parse("(D(x <-> y) /\\ z) \\/ (~D(x <-> y) /\\ x)"); }

bool is_dp_chain(const FiniteMTLChain& a) { return a.square_nilpotent(); }

std::vector<FiniteMTLChain> enumerate_mtl_chains(std::uint32_t n) {
  if (n < 2 || n > 5) throw CapExceeded("enumerate_mtl_chains: size must be in [2, 5]");
  const Rank top = n - 1;
  FiniteMTLChain::Table t(n, std::vector<Rank>(n, 0));
  for (Rank x = 0; x < n; ++x) {
    t[x][top] = x;
    t[top][x] = x;
  }
  // Free entries: x*y with 1 <= x <= y < top, row-major.
  std::vector<std::pair<Rank, Rank>> cells;
  for (Rank x = 1; x < top; ++x)
    for (Rank y = x; y < top; ++y) cells.emplace_back(x, y);

  auto associative = [&]() {
    for (Rank x = 0; x < n; ++x)
      for (Rank y = 0; y < n; ++y)
        for (Rank z = 0; z < n; ++z)
          if (t[t[x][y]][z] != t[x][t[y][z]]) return false;
    return true;
  };

  std::vector<FiniteMTLChain> out;
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == cells.size()) {
      if (associative()) out.emplace_back(t);
      return;
    }
    const auto [x, y] = cells[i];
    // Monotone in both arguments; both neighbours below are already fixed.
    Rank lo = std::max(t[x - 1][y], t[x][y - 1]);
    for (Rank v = lo; v <= x; ++v) {
      t[x][y] = v;
      t[y][x] = v;
      fill(i + 1);
    }
    t[x][y] = 0;
    t[y][x] = 0;
  };
  fill(0);
  return out;
}

Rank discriminator(const DPChain& a, Rank x, Rank y, Rank z) {
  static const CompiledFormula term(discriminator_term());
  // Variables appear in first-occurrence order x, y, z.
  const Rank values[] = {x, y, z};
  return term.run(a, std::span<const Rank>(values));
}

std::optional<std::vector<Rank>> find_embedding(const DPChain& from, const DPChain& to) {
  const std::uint32_t m = from.size();
  const std::uint32_t n = to.size();
  if (m > n) return std::nullopt;
  std::vector<Rank> map(m);
  if (m == 2) {
    map = {to.bottom(), to.top()};
    return map;
  }
  for (Rank i = 0; i + 2 < m; ++i) map[i] = i;
  map[from.coatom()] = to.coatom();
  map[from.top()] = to.top();
  return map;
}

std::uint32_t subvariety_index(const ProductAlgebra& a) {
  std::uint32_t best = 0;
  for (const auto& f : a.factors()) best = std::max(best, f.size());
  return best;
}

FreeAlgebraTable free_algebra_bruteforce(std::uint32_t k) {
  if (k > 1)
    throw AlgebraError("free_algebra_bruteforce: only k = 0 or 1 is tractable");
  const DPChain c(k + 3);
  std::uint64_t points = 1;
  for (std::uint32_t i = 0; i < k; ++i) points *= c.size();

  using Fn = std::vector<Rank>;
  std::set<Fn> seen;
  std::vector<Fn> elems;
  auto add = [&](Fn f) {
    if (seen.insert(f).second) elems.push_back(std::move(f));
  };
  add(Fn(points, c.bottom()));
  add(Fn(points, c.top()));
  for (std::uint32_t g = 0; g < k; ++g) {
    // Projection onto coordinate g of the odometer-ordered points.
    Fn f(points);
    std::uint64_t stride = 1;
    for (std::uint32_t j = g + 1; j < k; ++j) stride *= c.size();
    for (std::uint64_t p = 0; p < points; ++p) f[p] = static_cast<Rank>((p / stride) % c.size());
    add(std::move(f));
  }

  // Saturate: every pair, including pairs with newly found functions.
  std::size_t done = 0;
  while (done < elems.size()) {
    const std::size_t frontier = elems.size();
    for (std::size_t i = 0; i < frontier; ++i) {
      for (std::size_t j = (i < done ? done : 0); j < frontier; ++j) {
        Fn mul(points), imp1(points), imp2(points), meet(points), join(points);
        for (std::uint64_t p = 0; p < points; ++p) {
          const Rank x = elems[i][p];
          const Rank y = elems[j][p];
          mul[p] = c.mul(x, y);
          imp1[p] = c.imp(x, y);
          imp2[p] = c.imp(y, x);
          meet[p] = c.meet(x, y);
          join[p] = c.join(x, y);
        }
        add(std::move(mul));
        add(std::move(imp1));
        add(std::move(imp2));
        add(std::move(meet));
        add(std::move(join));
      }
    }
    done = frontier;
  }

  FreeAlgebraTable out;
  out.generators = k;
  out.chain_size = c.size();
  out.functions.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace dp
