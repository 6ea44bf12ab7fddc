#include "dp/duality.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

namespace dp {

namespace {

MultisetObj::Count checked_mul(MultisetObj::Count a, MultisetObj::Count b) {
  MultisetObj::Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapExceeded("chain multiplicity overflows 64 bits");
  return r;
}

MultisetObj::Count checked_add(MultisetObj::Count a, MultisetObj::Count b) {
  MultisetObj::Count r;
  if (__builtin_add_overflow(a, b, &r)) throw CapExceeded("chain multiplicity overflows 64 bits");
  return r;
}

}  // namespace

// {{{ MultisetObj

MultisetObj::MultisetObj(std::initializer_list<std::uint32_t> lengths) {
  for (auto l : lengths) add(l);
}

MultisetObj MultisetObj::from_lengths(std::span<const std::uint32_t> lengths) {
  MultisetObj out;
  for (auto l : lengths) out.add(l);
  return out;
}

MultisetObj MultisetObj::from_counts(const std::map<std::uint32_t, Count>& counts) {
  MultisetObj out;
  for (const auto& [l, m] : counts) out.add(l, m);
  return out;
}

void MultisetObj::add(std::uint32_t length, Count mult) {
  if (length == 0) throw AlgebraError("chains in a multiset must be nonempty");
  if (mult == 0) return;
  auto& slot = counts_[length];
  slot = checked_add(slot, mult);
}

MultisetObj::Count MultisetObj::multiplicity(std::uint32_t length) const {
  const auto it = counts_.find(length);
  return it == counts_.end() ? 0 : it->second;
}

MultisetObj::Count MultisetObj::instance_count() const {
  Count n = 0;
  for (const auto& [l, m] : counts_) n = checked_add(n, m);
  return n;
}

std::vector<std::uint32_t> MultisetObj::instances() const {
  std::vector<std::uint32_t> out;
  for (const auto& [l, m] : counts_) out.insert(out.end(), m, l);
  return out;
}

std::string MultisetObj::to_string() const {
  std::string out = "{";
  bool first = true;
  if (instance_count() <= 16) {
    for (auto l : instances()) {
      if (!first) out += ',';
      out += std::to_string(l);
      first = false;
    }
  } else {
    for (const auto& [l, m] : counts_) {
      if (!first) out += ',';
      out += std::to_string(l) + ":" + std::to_string(m);
      first = false;
    }
  }
  return out + "}";
}

MultisetObj MultisetObj::parse(std::string_view text) {
  auto bad = [&](const std::string& why) {
    return AlgebraError("cannot parse multiset '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw bad("expected {...}");
  MultisetObj out;
  std::string_view body(s);
  body = body.substr(1, body.size() - 2);
  if (body.empty()) return out;
  auto number = [&](std::string_view tok) -> std::uint64_t {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw bad("'" + std::string(tok) + "' is not a number");
    return v;
  };
  while (true) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto colon = item.find(':');
    const std::uint64_t len = number(item.substr(0, colon));
    const std::uint64_t mult = colon == std::string_view::npos ? 1 : number(item.substr(colon + 1));
    if (len == 0 || len > UINT32_MAX) throw bad("chain length out of range");
    if (mult == 0) throw bad("multiplicity must be positive");
    out.add(static_cast<std::uint32_t>(len), mult);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

// }}}

MultisetObj coproduct(const MultisetObj& c, const MultisetObj& d) {
  MultisetObj out = c;
  for (const auto& [l, m] : d.counts()) out.add(l, m);
  return out;
}

MultisetObj top_lift(const MultisetObj& c) {
  MultisetObj out;
  for (const auto& [l, m] : c.counts()) out.add(l + 1, m);
  return out;
}

namespace {

// Products of two single chains, memoised per top-level call.
class SingletonProducts {
 public:
  const MultisetObj& get(std::uint32_t i, std::uint32_t j) {
    if (i > j) std::swap(i, j);
    const auto key = std::pair{i, j};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    MultisetObj r;
    if (i == 1) {
      r.add(j);
    } else if (i == 2) {
      r.add(j);
    } else {
      r = top_lift(coproduct(coproduct(get(i, j - 1), get(i - 1, j - 1)), get(i - 1, j)));
    }
    return memo_.emplace(key, std::move(r)).first->second;
  }

 private:
  std::map<std::pair<std::uint32_t, std::uint32_t>, MultisetObj> memo_;
};

}  // namespace

MultisetObj product(const MultisetObj& c, const MultisetObj& d) {
  SingletonProducts table;
  MultisetObj out;
  for (const auto& [i, m] : c.counts())
    for (const auto& [j, n] : d.counts()) {
      const MultisetObj::Count pairs = checked_mul(m, n);
      for (const auto& [l, k] : table.get(i, j).counts()) out.add(l, checked_mul(pairs, k));
    }
  return out;
}

MultisetObj power(const MultisetObj& c, std::uint32_t k, MultisetObj::Count cap) {
  MultisetObj acc{1};
  for (std::uint32_t i = 0; i < k; ++i) {
    acc = product(acc, c);
    if (acc.instance_count() > cap)
      throw CapExceeded("power: result exceeds " + std::to_string(cap) + " chain instances");
  }
  return acc;
}

ProductAlgebra mc_inverse(const MultisetObj& c) {
  if (c.empty())
    throw AlgebraError("the empty multiset is dual to the trivial algebra, which has no chain factors");
  std::vector<DPChain> factors;
  for (auto l : c.instances()) factors.emplace_back(l + 1);
  return ProductAlgebra(std::move(factors));
}

std::vector<HallPair> tr(const MultisetObj& c) {
  std::vector<HallPair> out;
  for (auto l : c.instances()) out.push_back({1, l - 1});
  return out;
}

std::uint32_t height(const MultisetObj& c) {
  if (c.empty()) throw AlgebraError("height of the empty multiset is undefined");
  return c.counts().rbegin()->first;
}

bool is_morphism(const MultisetObj& c, const MultisetObj& d, const MCMorphism& m) {
  const auto src = c.instances();
  const auto dst = d.instances();
  if (m.components.size() != src.size()) return false;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto& comp = m.components[i];
    if (comp.target >= dst.size() || comp.map.size() != src[i]) return false;
    const std::uint32_t b = dst[comp.target];
    std::vector<bool> hit(b, false);
    for (std::size_t r = 0; r < comp.map.size(); ++r) {
      if (comp.map[r] >= b) return false;
      if (r > 0 && comp.map[r] < comp.map[r - 1]) return false;
      hit[comp.map[r]] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
    if (b > 1) {
      for (std::size_t r = 0; r + 1 < comp.map.size(); ++r)
        if (comp.map[r] == b - 1) return false;
    }
  }
  return true;
}

std::vector<std::vector<Rank>> admissible_surjections(std::uint32_t from, std::uint32_t to) {
  std::vector<std::vector<Rank>> out;
  if (from == 0 || to == 0 || to > from) return out;
  std::vector<Rank> map(from);
  // Monotone maps that step by 0 or 1 and start at 0 are exactly the
  // surjections; the top fiber is checked when the map is complete.
  std::function<void(std::uint32_t)> fill = [&](std::uint32_t r) {
    if (r == from) {
      if (map.back() != to - 1) return;
      if (to > 1 && from > 1 && map[from - 2] == to - 1) return;
      out.push_back(map);
      return;
    }
    for (Rank step = 0; step <= 1; ++step) {
      const Rank v = r == 0 ? 0 : map[r - 1] + step;
      if (r == 0 && step == 1) break;
      if (v >= to) break;
      map[r] = v;
      fill(r + 1);
    }
  };
  fill(0);
  return out;
}

namespace {

void check_lengths(const MultisetObj& c) {
  if (!c.empty() && height(c) > kMorphismSizeCap)
    throw CapExceeded("morphism enumeration: chain longer than 8");
}

}  // namespace

std::uint64_t count_morphisms(const MultisetObj& c, const MultisetObj& d) {
  check_lengths(c);
  check_lengths(d);
  std::uint64_t total = 1;
  for (const auto& [a, m] : c.counts()) {
    std::uint64_t options = 0;
    for (const auto& [b, n] : d.counts())
      options = checked_add(options, checked_mul(n, admissible_surjections(a, b).size()));
    for (MultisetObj::Count i = 0; i < m; ++i) total = checked_mul(total, options);
  }
  return total;
}

std::vector<MCMorphism> enumerate_morphisms(const MultisetObj& c, const MultisetObj& d,
                                            std::uint64_t cap) {
  check_lengths(c);
  check_lengths(d);
  if (c.instance_count() > kMorphismSizeCap || d.instance_count() > kMorphismSizeCap)
    throw CapExceeded("morphism enumeration: more than 8 chain instances");
  if (count_morphisms(c, d) > cap) throw CapExceeded("morphism enumeration exceeds cap");

  const auto src = c.instances();
  const auto dst = d.instances();
  std::vector<std::vector<MCMorphism::Component>> options(src.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < dst.size(); ++j)
      for (auto& s : admissible_surjections(src[i], dst[j])) options[i].push_back({j, std::move(s)});

  std::vector<MCMorphism> out;
  MCMorphism current;
  current.components.resize(src.size());
  std::function<void(std::size_t)> choose = [&](std::size_t i) {
    if (i == src.size()) {
      out.push_back(current);
      return;
    }
    for (const auto& opt : options[i]) {
      current.components[i] = opt;
      choose(i + 1);
    }
  };
  choose(0);
  return out;
}

bool kx3_identity_check(std::uint32_t k) {
  if (k < 2 || k > 20) throw AlgebraError("kx3_identity_check: k must be in [2, 20]");
  MultisetObj expected;
  expected.add(k + 1, k - 1);
  expected.add(k, k - 2);
  return product(MultisetObj{k}, MultisetObj{3}) == expected;
}

}  // namespace dp
