#include "commands.hpp"

#include <sstream>

#include "dp/analysis.hpp"
#include "dp/checks.hpp"
#include "dp/decide.hpp"
#include "dp/duality.hpp"
#include "dp/formula.hpp"
#include "dp/free.hpp"

namespace dp::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Theorem:
      return "theorem";
    case Status::NonTheorem:
      return "non_theorem";
    case Status::Ok:
      return "ok";
    case Status::Error:
      return "error";
  }
  return "error";
}

json CommandResult::to_json() const { return {{"status", to_string(status)}, {"payload", payload}}; }

CommandResult error_result(int exit_code, const std::string& message) {
  CommandResult r;
  r.status = Status::Error;
  r.exit_code = exit_code;
  r.payload = {{"message", message}};
  r.human_text = "error: " + message;
  return r;
}

namespace {

// Runs body, translating library exceptions into exit codes 2 and 3.
template <class Body>
CommandResult guarded(Body body) {
  try {
    return body();
  } catch (const ParseError& e) {
    CommandResult r = error_result(2, e.what());
    r.payload["position"] = e.position();
    r.payload["expected"] = e.expected();
    return r;
  } catch (const CapExceeded& e) {
    return error_result(3, e.what());
  } catch (const FormulaError& e) {
    return error_result(2, e.what());
  } catch (const AlgebraError& e) {
    return error_result(2, e.what());
  }
}

std::string big_to_string(const BigInt& x) { return x.get_str(); }

}  // namespace

CommandResult cmd_parse(const std::string& formula_text) {
  return guarded([&] {
    const Formula f = parse(formula_text);
    CommandResult r;
    r.payload = {{"formula", render(f)}, {"variables", variables(f)}};
    r.human_text = render(f);
    return r;
  });
}

CommandResult cmd_thm(const std::string& formula_text, std::optional<std::uint32_t> variety,
                      std::uint64_t cap) {
  return guarded([&] {
    const Formula f = parse(formula_text);
    const TheoremResult t = variety ? is_theorem_in_variety(f, *variety, cap) : is_theorem(f, cap);
    CommandResult r;
    r.payload = {{"formula", render(f)}, {"chain_size", t.chain_size}};
    if (variety) r.payload["variety"] = *variety;
    if (t.theorem) {
      r.status = Status::Theorem;
      r.exit_code = 0;
      r.human_text = "theorem: " + render(f) + " (checked on the " + std::to_string(t.chain_size) +
                     "-element DP-chain)";
      return r;
    }
    const DPChain chain(t.chain_size);
    r.status = Status::NonTheorem;
    r.exit_code = 1;
    r.payload["witness"] = witness_to_json(chain, *t.countermodel);
    std::ostringstream os;
    os << "not a theorem: " << render(f) << "\ncountermodel on the " << t.chain_size
       << "-element DP-chain:";
    const auto& v = t.countermodel->valuation;
    for (std::size_t i = 0; i < v.variables.size(); ++i)
      os << " " << v.variables[i] << "=" << chain.name(v.values[i]) << " (rank " << v.values[i] << ")";
    os << "\nvalue: " << chain.name(t.countermodel->value);
    r.human_text = os.str();
    return r;
  });
}

CommandResult cmd_free(std::uint32_t k, FreeMode mode) {
  return guarded([&] {
    CommandResult r;
    std::ostringstream os;
    r.payload["k"] = k;
    bool consistent = true;

    std::optional<std::map<std::uint32_t, BigInt>> closed;
    if (mode == FreeMode::Closed || mode == FreeMode::All) {
      closed = free_coefficients(k);
      json coeffs = json::object();
      for (const auto& [h, a] : *closed) coeffs[std::to_string(h)] = big_to_string(a);
      r.payload["coefficients"] = coeffs;
      os << "coefficients:";
      for (const auto& [h, a] : *closed) os << " " << h << ":" << a.get_str();
      os << "\n";
      json factored = json::array();
      for (const auto& [base, e] : free_cardinality_factored(k))
        factored.push_back({base, big_to_string(e)});
      r.payload["cardinality_factored"] = factored;
    }

    std::optional<MultisetObj> dual;
    const bool want_power = mode == FreeMode::Power || mode == FreeMode::All;
    if (want_power) {
      try {
        dual = free_dual(k);
      } catch (const CapExceeded&) {
        if (mode == FreeMode::Power) throw;
      }
    } else if (closed) {
      dual = MultisetObj();
    }
    if (dual && want_power) {
      r.payload["multiset"] = to_json(*dual);
      r.payload["multiset_text"] = dual->to_string();
      os << "dual: " << dual->to_string() << "\n";
      if (closed) {
        bool same = dual->counts().size() == closed->size();
        for (const auto& [h, a] : *closed) same = same && BigInt(std::to_string(dual->multiplicity(h))) == a;
        consistent = consistent && same;
      }
    }

    if (mode != FreeMode::Oracle) {
      if (k <= kExactCardinalityCap) {
        const BigInt card = free_cardinality(k);
        r.payload["cardinality"] = big_to_string(card);
        os << "cardinality: " << card.get_str() << "\n";
        if (dual && want_power) consistent = consistent && card == dual_cardinality(*dual);
      } else {
        os << "cardinality: product of (base^exponent) in cardinality_factored\n";
      }
    }

    if (mode == FreeMode::Oracle || (mode == FreeMode::All && k <= 1)) {
      const auto table = free_algebra_bruteforce(k);
      r.payload["oracle_count"] = table.count();
      os << "term-function closure on the " << table.chain_size << "-element chain: "
         << table.count() << " elements\n";
      if (mode == FreeMode::All) consistent = consistent && BigInt(table.count()) == free_cardinality(k);
    }
    r.payload["consistent"] = consistent;
    if (!consistent) {
      r.status = Status::Error;
      r.exit_code = 1;
      os << "MISMATCH between computation routes\n";
    }
    r.human_text = os.str();
    if (!r.human_text.empty() && r.human_text.back() == '\n') r.human_text.pop_back();
    return r;
  });
}

namespace {

MultisetObj operand(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text.find('"') != std::string::npos) {
    try {
      return multiset_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw AlgebraError(std::string("bad multiset JSON: ") + e.what());
    }
  }
  return MultisetObj::parse(text);
}

void require_operands(const std::vector<std::string>& ops, std::size_t n, const std::string& op) {
  if (ops.size() != n)
    throw AlgebraError("dual " + op + " takes " + std::to_string(n) + " operand(s)");
}

CommandResult object_result(const MultisetObj& m) {
  CommandResult r;
  r.payload = {{"result", to_json(m)}, {"text", m.to_string()}};
  r.human_text = m.to_string();
  return r;
}

}  // namespace

CommandResult cmd_dual(const std::string& op, const std::vector<std::string>& operands,
                       std::uint64_t cap) {
  return guarded([&]() -> CommandResult {
    if (op == "product" || op == "coproduct") {
      require_operands(operands, 2, op);
      const auto a = operand(operands[0]);
      const auto b = operand(operands[1]);
      return object_result(op == "product" ? product(a, b) : coproduct(a, b));
    }
    if (op == "power") {
      require_operands(operands, 2, op);
      const auto exponent = std::stoul(operands[1]);
      return object_result(power(operand(operands[0]), static_cast<std::uint32_t>(exponent)));
    }
    if (op == "homcount") {
      require_operands(operands, 2, op);
      const auto a = operand(operands[0]);
      const auto b = operand(operands[1]);
      const std::uint64_t n = count_morphisms(a, b);
      if (n > cap) throw CapExceeded("homcount exceeds cap");
      CommandResult r;
      r.payload = {{"count", n}};
      r.human_text = std::to_string(n);
      return r;
    }
    if (op == "inverse") {
      require_operands(operands, 1, op);
      const auto alg = mc_inverse(operand(operands[0]));
      CommandResult r;
      const auto sizes = alg.factor_sizes();
      BigInt card = 1;
      for (auto s : sizes) card *= s;
      r.payload = {{"algebra", to_json(alg)}, {"cardinality", card.get_str()}};
      std::ostringstream os;
      os << "product of DP-chains of sizes [";
      for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
      os << "] (" << card.get_str() << " elements)";
      r.human_text = os.str();
      return r;
    }
    if (op == "tr") {
      require_operands(operands, 1, op);
      CommandResult r;
      json pairs = json::array();
      std::ostringstream os;
      for (const auto& p : tr(operand(operands[0]))) {
        pairs.push_back({{"tree", p.tree_size}, {"chain", p.chain_length}});
        os << "(" << p.tree_size << "," << p.chain_length << ") ";
      }
      r.payload = {{"pairs", pairs}};
      r.human_text = os.str();
      if (!r.human_text.empty()) r.human_text.pop_back();
      return r;
    }
    if (op == "height") {
      require_operands(operands, 1, op);
      CommandResult r;
      const auto h = height(operand(operands[0]));
      r.payload = {{"height", h}};
      r.human_text = std::to_string(h);
      return r;
    }
    throw AlgebraError("unknown dual operation '" + op + "'");
  });
}

CommandResult cmd_chains(std::uint32_t n, const std::string& cls) {
  return guarded([&] {
    if (cls != "mtl" && cls != "wnm" && cls != "rdp" && cls != "dp")
      throw AlgebraError("unknown chain class '" + cls + "'");
    const auto all = enumerate_mtl_chains(n);
    CommandResult r;
    json list = json::array();
    std::ostringstream os;
    std::size_t count = 0;
    for (const auto& c : all) {
      const bool wnm = satisfies_axiom(c, Axiom::wnm());
      const bool rdp = wnm && satisfies_axiom(c, Axiom::rdp());
      const bool dpc = is_dp_chain(c);
      const bool keep = cls == "mtl" || (cls == "wnm" && wnm) || (cls == "rdp" && rdp) ||
                        (cls == "dp" && dpc);
      if (!keep) continue;
      ++count;
      list.push_back({{"product", c.product_table()},
                      {"wnm", wnm},
                      {"rdp", rdp},
                      {"dp", dpc},
                      {"simple", is_simple(c)}});
      os << "chain " << count << (dpc ? " [dp]" : rdp ? " [rdp]" : wnm ? " [wnm]" : "") << "\n";
      for (const auto& row : c.product_table()) {
        os << " ";
        for (auto v : row) os << " " << v;
        os << "\n";
      }
    }
    r.payload = {{"n", n}, {"class", cls}, {"count", count}, {"total", all.size()}, {"chains", list}};
    os << count << " of " << all.size() << " MTL-chains on " << n << " elements";
    r.human_text = os.str();
    return r;
  });
}

CommandResult cmd_check(const std::string& suite) {
  return guarded([&] {
    const auto results = run_checks(parse_suite(suite));
    CommandResult r;
    json checks = json::array();
    std::ostringstream os;
    bool all = true;
    for (const auto& c : results) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      os << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << "\n";
      all = all && c.passed;
    }
    r.payload = {{"suite", suite}, {"checks", checks}, {"passed", all}};
    r.exit_code = all ? 0 : 1;
    r.status = all ? Status::Ok : Status::Error;
    os << (all ? "all checks passed" : "some checks FAILED");
    r.human_text = os.str();
    return r;
  });
}

}  // namespace dp::cli
