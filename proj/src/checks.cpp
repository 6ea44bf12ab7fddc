#include "dp/checks.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dp/analysis.hpp"
#include "dp/decide.hpp"
#include "dp/free.hpp"

namespace dp {

Suite parse_suite(const std::string& name) {
  if (name == "axioms") return Suite::Axioms;
  if (name == "duality") return Suite::Duality;
  if (name == "free") return Suite::Free;
  if (name == "all") return Suite::All;
  throw AlgebraError("unknown suite '" + name + "'");
}

std::vector<MultisetObj> small_objects(std::uint32_t max_instances, std::uint32_t max_length) {
  std::vector<MultisetObj> out;
  std::vector<std::uint32_t> lengths;
  // Nondecreasing length sequences are exactly the multisets.
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t from) {
    if (!lengths.empty()) out.push_back(MultisetObj::from_lengths(lengths));
    if (lengths.size() == max_instances) return;
    for (std::uint32_t l = from; l <= max_length; ++l) {
      lengths.push_back(l);
      extend(l);
      lengths.pop_back();
    }
  };
  extend(1);
  return out;
}

namespace {

class Report {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

template <FiniteAlgebra A>
bool residuated(const A& a) {
  const auto n = a.cardinality();
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      for (std::uint64_t k = 0; k < n; ++k) {
        const auto x = a.element(i), y = a.element(j), z = a.element(k);
        if (leq(a, a.mul(x, z), y) != leq(a, z, a.imp(x, y))) return false;
      }
  return true;
}

bool matches_dp_tables(const FiniteMTLChain& m) {
  const DPChain d(m.size());
  for (Rank x = 0; x < m.size(); ++x)
    for (Rank y = 0; y < m.size(); ++y)
      if (m.mul(x, y) != d.mul(x, y) || m.imp(x, y) != d.imp(x, y)) return false;
  return true;
}

std::vector<FiniteMTLChain> chains_upto(std::uint32_t n) {
  std::vector<FiniteMTLChain> out;
  for (std::uint32_t s = 2; s <= n; ++s) {
    auto c = enumerate_mtl_chains(s);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

void axiom_checks(Report& r) {
  bool ok = true;
  for (std::uint32_t n = 2; n <= 7; ++n) ok = ok && residuated(DPChain(n));
  for (const auto& c : chains_upto(5)) ok = ok && residuated(c);
  r.add("residuation law (DP-chains <= 7, MTL-chains <= 5)", ok);

  for (const Axiom ax : {Axiom::dp(), Axiom::wnm(), Axiom::rdp(), Axiom::ncontract(3)}) {
    ok = true;
    for (std::uint32_t n = 2; n <= 7; ++n) ok = ok && satisfies_axiom(DPChain(n), ax);
    r.add(ax.to_string() + " on DP-chains 2..7", ok);
  }

  ok = true;
  for (const auto& f : delta_axioms())
    for (std::uint32_t n = 2; n <= 7; ++n) ok = ok && holds(f, DPChain(n)).holds;
  for (std::uint32_t n = 2; n <= 7; ++n) {
    const DPChain c(n);
    for (Rank x = 0; x < n; ++x) ok = ok && delta_of(c, x) == (x == c.top() ? c.top() : 0);
  }
  r.add("Delta axioms and Delta = x^2 on DP-chains 2..7", ok);

  ok = true;
  for (std::uint32_t n = 2; n <= 7; ++n) {
    const DPChain c(n);
    for (Rank x = 0; x < n; ++x)
      for (Rank y = 0; y < n; ++y)
        for (Rank z = 0; z < n; ++z) ok = ok && discriminator(c, x, y, z) == (x == y ? z : x);
  }
  r.add("discriminator term on DP-chains 2..7", ok);

  const auto small = chains_upto(4);
  ok = true;
  for (const auto& c : small) {
    const bool by_table = is_dp_chain(c);
    const bool by_axiom = satisfies_axiom(c, Axiom::dp());
    ok = ok && by_table == by_axiom && (!by_table || matches_dp_tables(c));
  }
  r.add("DP-chain characterisation on MTL-chains <= 4", ok);

  ok = true;
  bool rdp_not_dp = false;
  bool wnm_not_rdp = false;
  for (const auto& c : small) {
    const bool d = satisfies_axiom(c, Axiom::dp());
    const bool rd = satisfies_axiom(c, Axiom::rdp()) && satisfies_axiom(c, Axiom::wnm());
    const bool w = satisfies_axiom(c, Axiom::wnm());
    ok = ok && (!d || rd) && (!rd || w);
    rdp_not_dp = rdp_not_dp || (rd && !d);
    wnm_not_rdp = wnm_not_rdp || (w && !rd);
  }
  r.add("DP < RDP < WNM on MTL-chains <= 4", ok && rdp_not_dp && wnm_not_rdp);

  ok = true;
  for (const auto& c : small) {
    if (!satisfies_axiom(c, Axiom::wnm())) continue;
    ok = ok && is_simple(c) == is_dp_chain(c);
    ok = ok && satisfies_axiom(c, Axiom::ncontract(3));
  }
  r.add("simple WNM-chains are DP-chains; WNM-chains are 3-contractive", ok);

  ok = true;
  for (const auto& c : small) ok = ok && satisfies_axiom(c, Axiom::skmtl(2)) == (c.size() == 2);
  r.add("skmtl(2) holds exactly on the Boolean chain", ok);

  ok = true;
  const DPChain three(3);
  for (Rank x = 0; x < 3; ++x)
    for (Rank y = 0; y < 3; ++y) {
      const Rank luk_mul = x + y >= 2 ? x + y - 2 : 0;
      const Rank luk_imp = std::min<Rank>(2, 2 - x + y);
      ok = ok && three.mul(x, y) == luk_mul && three.imp(x, y) == luk_imp;
    }
  r.add("3-element DP-chain equals the 3-element MV-chain", ok);
}

void duality_checks(Report& r) {
  const auto objs = small_objects(2, 3);
  bool ok = true;
  std::ostringstream bad;
  for (const auto& c : objs)
    for (const auto& d : objs) {
      const auto mc = count_morphisms(c, d);
      const auto alg = enumerate_homomorphisms(mc_inverse(d), mc_inverse(c)).size();
      if (mc != alg) {
        ok = false;
        bad << c.to_string() << "->" << d.to_string() << " ";
      }
    }
  r.add("hom-count duality (<= 2 chains of length <= 3)", ok, bad.str());

  ok = true;
  for (const auto& x : objs)
    for (const auto& a : objs)
      for (const auto& b : objs)
        ok = ok && count_morphisms(x, product(a, b)) == count_morphisms(x, a) * count_morphisms(x, b);
  for (const auto& c : objs) ok = ok && count_morphisms(c, MultisetObj{1}) == 1;
  for (const auto& c : objs) ok = ok && product(c, MultisetObj{1}) == c;
  r.add("product universal property and terminal {1}", ok);

  const auto sweep = small_objects(3, 4);
  ok = true;
  for (const auto& a : sweep)
    for (const auto& b : sweep) {
      ok = ok && product(a, b) == product(b, a);
      ok = ok && product(a, coproduct(b, a)) == coproduct(product(a, b), product(a, a));
    }
  const auto tiny = small_objects(2, 4);
  for (const auto& a : tiny)
    for (const auto& b : tiny)
      for (const auto& c : tiny) ok = ok && product(product(a, b), c) == product(a, product(b, c));
  r.add("product commutative, associative, distributive", ok);

  ok = true;
  for (const auto& c : objs)
    for (const auto& d : objs)
      for (const auto& m : enumerate_morphisms(c, d)) {
        ok = ok && is_morphism(c, d, m);
        // Image of every component never exceeds its source chain.
        for (std::size_t i = 0; i < m.components.size(); ++i)
          ok = ok && d.instances()[m.components[i].target] <= c.instances()[i];
      }
  r.add("morphisms valid; surjections never raise height", ok);

  ok = true;
  for (std::uint32_t k = 2; k <= 20; ++k) ok = ok && kx3_identity_check(k);
  r.add("{k}x{3} identity for k = 2..20", ok);

  // Finite products of the n-chain are dual to copowers of {n-1}.
  ok = true;
  for (std::uint32_t n = 2; n <= 4; ++n) {
    MultisetObj acc{n - 1};
    for (std::uint32_t k = 1; k <= 3; ++k, acc = coproduct(acc, MultisetObj{n - 1}))
      ok = ok && height(acc) == n - 1;
  }
  r.add("duals of finite powers of the n-chain have height n-1", ok);
}

void free_checks(Report& r) {
  bool ok = true;
  std::ostringstream bad;
  for (std::uint32_t k = 0; k <= 6; ++k) {
    const auto closed = free_coefficients(k);
    const auto rec = free_coefficients_by_recurrence(k);
    const auto pw = free_dual(k);
    bool same = closed == rec && pw.counts().size() == closed.size();
    for (const auto& [h, a] : closed) same = same && BigInt(std::to_string(pw.multiplicity(h))) == a;
    if (!same) bad << "k=" << k << " ";
    ok = ok && same;
  }
  r.add("closed form = recurrence = power for k = 0..6", ok, bad.str());

  ok = true;
  for (std::uint32_t k = 0; k <= 6; ++k) ok = ok && free_cardinality(k) == dual_cardinality(free_dual(k));
  r.add("cardinality formula = product over dual for k = 0..6", ok);

  ok = free_algebra_bruteforce(0).count() == 2 && free_algebra_bruteforce(1).count() == 48 &&
       free_cardinality(1) == 48 && free_dual(1) == MultisetObj({1, 1, 2, 3});
  r.add("term-function closure: |F_0| = 2, |F_1| = 48", ok);
}

}  // namespace

std::vector<CheckResult> run_checks(Suite suite) {
  Report r;
  if (suite == Suite::Axioms || suite == Suite::All) axiom_checks(r);
  if (suite == Suite::Duality || suite == Suite::All) duality_checks(r);
  if (suite == Suite::Free || suite == Suite::All) free_checks(r);
  return r.take();
}

}  // namespace dp
