#pragma once

// Test-only reference implementations. Nothing here calls the evaluation,
// search or product code under test.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dp/formula.hpp"

namespace dp::oracle {

/// A finite chain given by explicit tables; residuum found by scanning.
struct TableChain {
  std::uint32_t n;
  std::vector<std::vector<std::uint32_t>> mul;

  // Drastic product straight from its two-case definition.
  static TableChain drastic(std::uint32_t n) {
    TableChain c{n, std::vector<std::vector<std::uint32_t>>(n, std::vector<std::uint32_t>(n))};
    const std::uint32_t one = n - 1;
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        c.mul[x][y] = (x < one && y < one) ? 0 : std::min(x, y);
    return c;
  }

  std::uint32_t imp(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t best = 0;
    for (std::uint32_t z = 0; z < n; ++z)
      if (mul[x][z] <= y) best = z;
    return best;
  }
};

/// Recursive evaluation straight from the connective definitions.
inline std::uint32_t eval(const Formula& f, const TableChain& c,
                          const std::map<std::string, std::uint32_t>& v) {
  const std::uint32_t top = c.n - 1;
  switch (f.kind()) {
    case Kind::Var:
      return v.at(f.name());
    case Kind::Bot:
      return 0;
    case Kind::Top:
      return top;
    case Kind::Strong:
      return c.mul[eval(f.lhs(), c, v)][eval(f.rhs(), c, v)];
    case Kind::Min:
      return std::min(eval(f.lhs(), c, v), eval(f.rhs(), c, v));
    case Kind::Imp:
      return c.imp(eval(f.lhs(), c, v), eval(f.rhs(), c, v));
    case Kind::Neg:
      return c.imp(eval(f.arg(), c, v), 0);
    case Kind::Or:
      return std::max(eval(f.lhs(), c, v), eval(f.rhs(), c, v));
    case Kind::Iff: {
      const auto a = eval(f.lhs(), c, v);
      const auto b = eval(f.rhs(), c, v);
      return std::min(c.imp(a, b), c.imp(b, a));
    }
    case Kind::Delta:
      return eval(f.arg(), c, v) == top ? top : 0;
    case Kind::Power: {
      const auto a = eval(f.arg(), c, v);
      std::uint32_t acc = top;
      for (std::uint32_t i = 0; i < f.exponent(); ++i) acc = c.mul[acc][a];
      return acc;
    }
  }
  return 0;
}

/// Calls visit(valuation) for every assignment of vars to 0..n-1.
inline void for_each_valuation(const std::vector<std::string>& vars, std::uint32_t n,
                               const std::function<void(const std::map<std::string, std::uint32_t>&)>& visit) {
  std::map<std::string, std::uint32_t> v;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars.size()) {
      visit(v);
      return;
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      v[vars[i]] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

inline bool valid_on(const Formula& f, const TableChain& c) {
  bool ok = true;
  for_each_valuation(variables(f), c.n, [&](const auto& v) { ok = ok && eval(f, c, v) == c.n - 1; });
  return ok;
}

/// Random formulas over the given variables, depth-bounded.
class FormulaGen {
 public:
  explicit FormulaGen(std::uint32_t seed, std::vector<std::string> vars, bool with_delta = true)
      : rng_(seed), vars_(std::move(vars)), with_delta_(with_delta) {}

  Formula operator()(int depth) {
    std::uniform_int_distribution<int> leaf(0, 9);
    if (depth <= 0 || leaf(rng_) < 2) return atom();
    std::uniform_int_distribution<int> pick(0, with_delta_ ? 9 : 8);
    switch (pick(rng_)) {
      case 0:
        return Formula::strong((*this)(depth - 1), (*this)(depth - 1));
      case 1:
        return Formula::min((*this)(depth - 1), (*this)(depth - 1));
      case 2:
      case 3:
        return Formula::imp((*this)(depth - 1), (*this)(depth - 1));
      case 4:
        return Formula::neg((*this)(depth - 1));
      case 5:
        return Formula::lor((*this)(depth - 1), (*this)(depth - 1));
      case 6:
        return Formula::iff((*this)(depth - 1), (*this)(depth - 1));
      case 7:
      case 8: {
        std::uniform_int_distribution<std::uint32_t> e(0, 4);
        return Formula::power((*this)(depth - 1), e(rng_));
      }
      default:
        return Formula::delta((*this)(depth - 1));
    }
  }

 private:
  Formula atom() {
    std::uniform_int_distribution<std::size_t> pick(0, vars_.size() + 1);
    const std::size_t i = pick(rng_);
    if (i == vars_.size()) return Formula::bot();
    if (i == vars_.size() + 1) return Formula::top();
    return Formula::var(vars_[i]);
  }

  std::mt19937 rng_;
  std::vector<std::string> vars_;
  bool with_delta_;
};

/// Every map A -> B (as index vectors) that passes `is_hom`; only for tiny
/// algebras, |B|^|A| iterations.
template <class IsHom>
std::vector<std::vector<std::uint64_t>> all_maps_where(std::uint64_t a, std::uint64_t b, IsHom is_hom) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> m(a, 0);
  for (;;) {
    if (is_hom(m)) out.push_back(m);
    std::size_t i = 0;
    while (i < a && ++m[i] == b) m[i++] = 0;
    if (i == a) break;
  }
  return out;
}

/// Monotone surjections {0..a-1} -> {0..b-1} with the top-fiber condition,
/// counted by brute force over all b^a functions.
inline std::uint64_t admissible_surjection_count(std::uint32_t a, std::uint32_t b) {
  std::uint64_t count = 0;
  std::vector<std::uint32_t> m(a, 0);
  for (;;) {
    bool ok = true;
    std::vector<bool> hit(b, false);
    for (std::uint32_t i = 0; i < a; ++i) {
      hit[m[i]] = true;
      if (i && m[i] < m[i - 1]) ok = false;
    }
    for (bool h : hit) ok = ok && h;
    if (b > 1)
      for (std::uint32_t i = 0; i + 1 < a; ++i) ok = ok && m[i] != b - 1;
    count += ok;
    std::size_t i = 0;
    while (i < a && ++m[i] == b) m[i++] = 0;
    if (i == a) break;
  }
  return count;
}

/// Every commutative, associative, monotone monoid table on 0..n-1 with unit
/// n-1 and absorbing 0, by trying all fillings of the interior cells.
inline std::vector<std::vector<std::vector<std::uint32_t>>> mtl_tables(std::uint32_t n) {
  using Table = std::vector<std::vector<std::uint32_t>>;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (std::uint32_t x = 1; x + 1 < n; ++x)
    for (std::uint32_t y = x; y + 1 < n; ++y) cells.emplace_back(x, y);
  std::vector<std::uint32_t> fill(cells.size(), 0);
  std::vector<Table> out;
  for (;;) {
    Table t(n, std::vector<std::uint32_t>(n, 0));
    for (std::uint32_t x = 0; x < n; ++x) {
      t[x][n - 1] = t[n - 1][x] = x;
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
      t[cells[i].first][cells[i].second] = t[cells[i].second][cells[i].first] = fill[i];
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      for (std::uint32_t y = 0; y < n && ok; ++y) {
        if (x + 1 < n && t[x][y] > t[x + 1][y]) ok = false;
        for (std::uint32_t z = 0; z < n && ok; ++z) ok = t[t[x][y]][z] == t[x][t[y][z]];
      }
    if (ok) out.push_back(t);
    std::size_t i = 0;
    while (i < fill.size() && ++fill[i] == n) fill[i++] = 0;
    if (i == fill.size()) break;
  }
  return out;
}

/// A product of drastic chains with its operation tables spelled out, for
/// homomorphism counting that shares no code with the library.
struct ProductTables {
  std::uint32_t size = 1;
  std::uint32_t top = 0;
  std::vector<std::vector<std::uint32_t>> mul, imp, meet, join;

  explicit ProductTables(const std::vector<std::uint32_t>& factors) {
    for (auto f : factors) size *= f;
    auto digits = [&](std::uint32_t e) {
      std::vector<std::uint32_t> d(factors.size());
      for (std::size_t i = factors.size(); i-- > 0;) {
        d[i] = e % factors[i];
        e /= factors[i];
      }
      return d;
    };
    auto pack = [&](const std::vector<std::uint32_t>& d) {
      std::uint32_t e = 0;
      for (std::size_t i = 0; i < d.size(); ++i) e = e * factors[i] + d[i];
      return e;
    };
    std::vector<TableChain> chains;
    std::vector<std::uint32_t> tops;
    for (auto f : factors) {
      chains.push_back(TableChain::drastic(f));
      tops.push_back(f - 1);
    }
    top = pack(tops);
    auto table = [&](auto op) {
      std::vector<std::vector<std::uint32_t>> t(size, std::vector<std::uint32_t>(size));
      for (std::uint32_t a = 0; a < size; ++a)
        for (std::uint32_t b = 0; b < size; ++b) {
          auto da = digits(a), db = digits(b), dc = da;
          for (std::size_t i = 0; i < factors.size(); ++i) dc[i] = op(chains[i], da[i], db[i]);
          t[a][b] = pack(dc);
        }
      return t;
    };
    mul = table([](const TableChain& c, auto x, auto y) { return c.mul[x][y]; });
    imp = table([](const TableChain& c, auto x, auto y) { return c.imp(x, y); });
    meet = table([](const TableChain&, auto x, auto y) { return std::min(x, y); });
    join = table([](const TableChain&, auto x, auto y) { return std::max(x, y); });
  }
};

/// Number of maps A -> B preserving 0, top and all four operations, by
/// plain backtracking in element order. Partial maps are pruned on
/// assigned pairs; complete maps are checked in full.
inline std::uint64_t count_homomorphisms(const ProductTables& a, const ProductTables& b) {
  std::vector<std::int64_t> h(a.size, -1);
  std::uint64_t count = 0;
  auto consistent = [&](std::uint32_t u) {
    for (std::uint32_t v = 0; v < a.size; ++v) {
      if (h[v] < 0) continue;
      const auto hu = static_cast<std::uint32_t>(h[u]), hv = static_cast<std::uint32_t>(h[v]);
      const std::uint32_t pairs[][2] = {{a.mul[u][v], b.mul[hu][hv]},   {a.imp[u][v], b.imp[hu][hv]},
                                        {a.imp[v][u], b.imp[hv][hu]},   {a.meet[u][v], b.meet[hu][hv]},
                                        {a.join[u][v], b.join[hu][hv]}};
      for (const auto& p : pairs)
        if (h[p[0]] >= 0 && static_cast<std::uint32_t>(h[p[0]]) != p[1]) return false;
    }
    return true;
  };
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t u) {
    if (u == a.size) {
      bool ok = true;
      for (std::uint32_t v = 0; v < a.size && ok; ++v) ok = consistent(v);
      count += ok;
      return;
    }
    if (h[u] >= 0) {
      rec(u + 1);
      return;
    }
    for (std::uint32_t y = 0; y < b.size; ++y) {
      h[u] = y;
      if (consistent(u)) rec(u + 1);
    }
    h[u] = -1;
  };
  h[0] = 0;
  h[a.top] = b.top;
  if (consistent(0) && consistent(a.top)) rec(0);
  return count;
}

/// Simplicity of a finite chain: every element below the top has a power
/// equal to 0.
inline bool simple_chain(const std::vector<std::vector<std::uint32_t>>& t) {
  const auto n = static_cast<std::uint32_t>(t.size());
  for (std::uint32_t x = 0; x + 1 < n; ++x) {
    std::uint32_t p = x;
    for (std::uint32_t i = 0; i < n; ++i) p = t[p][x];
    if (p != 0) return false;
  }
  return true;
}

}  // namespace dp::oracle
