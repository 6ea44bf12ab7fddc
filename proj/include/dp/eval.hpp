#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dp/algebra.hpp"
#include "dp/errors.hpp"
#include "dp/formula.hpp"

namespace dp {

/// A formula flattened to postfix instructions over indexed variables, so
/// that exhaustive sweeps do not walk the tree or look names up.
class CompiledFormula {
 public:
  enum class Op : std::uint8_t { Var, Bot, Top, Strong, Min, Imp, Neg, Or, Iff, Delta, Power };
  struct Instr {
    Op op;
    std::uint32_t operand;  // variable index for Var, exponent for Power
  };

  explicit CompiledFormula(const Formula& f);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Instr>& code() const { return code_; }
  bool uses_delta() const { return uses_delta_; }

  template <FiniteAlgebra A>
  typename A::value_type run(const A& a, std::span<const typename A::value_type> values,
                             std::vector<typename A::value_type>& stack) const;

  template <FiniteAlgebra A>
  typename A::value_type run(const A& a, std::span<const typename A::value_type> values) const {
    std::vector<typename A::value_type> stack;
    return run(a, values, stack);
  }

 private:
  std::vector<std::string> variables_;
  std::vector<Instr> code_;
  bool uses_delta_ = false;
};

/// Assignment of algebra elements to an ordered list of variable names.
template <class E>
struct Valuation {
  std::vector<std::string> variables;
  std::vector<E> values;

  Valuation() = default;
  Valuation(std::vector<std::string> vars, std::vector<E> vals)
      : variables(std::move(vars)), values(std::move(vals)) {
    if (variables.size() != values.size())
      throw AlgebraError("valuation: variable and value lists differ in length");
  }
  static Valuation from_map(const std::map<std::string, E>& m) {
    Valuation v;
    for (const auto& [k, x] : m) {
      v.variables.push_back(k);
      v.values.push_back(x);
    }
    return v;
  }

  std::optional<E> lookup(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
      if (variables[i] == name) return values[i];
    return std::nullopt;
  }
};

/// A valuation under which a formula does not evaluate to the top.
template <class E>
struct Witness {
  Valuation<E> valuation;
  E value;
};

template <class E>
struct HoldsResult {
  bool holds = true;
  std::optional<Witness<E>> witness;
  std::uint64_t points = 0;  // valuations evaluated

  explicit operator bool() const { return holds; }
};

/// Value of f under v. Throws AlgebraError on an unbound variable, on a value
/// outside the algebra, or on Delta over a chain that is not a DP-chain.
template <FiniteAlgebra A>
typename A::value_type eval(const Formula& f, const A& a, const Valuation<typename A::value_type>& v);

/// Number of valuations a sweep of `vars` variables over `a` visits, or
/// nullopt when it overflows 64 bits.
template <FiniteAlgebra A>
std::optional<std::uint64_t> sweep_size(const A& a, std::size_t vars);

/// Exhaustive check that f evaluates to the top under every valuation.
/// Stops at the first failing valuation and returns it as witness. Throws
/// CapExceeded if |A|^#vars exceeds cap.
template <FiniteAlgebra A>
HoldsResult<typename A::value_type> holds(const Formula& f, const A& a,
                                          std::uint64_t cap = kDefaultSweepCap);

template <FiniteAlgebra A>
HoldsResult<typename A::value_type> holds(const CompiledFormula& f, const A& a,
                                          std::uint64_t cap = kDefaultSweepCap);

// {{{ Implementation

template <FiniteAlgebra A>
typename A::value_type CompiledFormula::run(const A& a,
                                            std::span<const typename A::value_type> values,
                                            std::vector<typename A::value_type>& stack) const {
  using E = typename A::value_type;
  stack.clear();
  auto pop = [&stack]() {
    E x = stack.back();
    stack.pop_back();
    return x;
  };
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::Var:
        stack.push_back(values[in.operand]);
        break;
      case Op::Bot:
        stack.push_back(a.bottom());
        break;
      case Op::Top:
        stack.push_back(a.top());
        break;
      case Op::Neg:
        stack.back() = a.imp(stack.back(), a.bottom());
        break;
      case Op::Delta:
        stack.back() = a.delta(stack.back());
        break;
      case Op::Power: {
        const E base = stack.back();
        E acc = a.top();
        for (std::uint32_t i = 0; i < in.operand; ++i) acc = a.mul(acc, base);
        stack.back() = acc;
        break;
      }
      default: {
        const E y = pop();
        const E x = stack.back();
        E r;
        switch (in.op) {
          case Op::Strong:
            r = a.mul(x, y);
            break;
          case Op::Min:
            r = a.meet(x, y);
            break;
          case Op::Imp:
            r = a.imp(x, y);
            break;
          case Op::Or:
            // ((x -> y) -> y) /\ ((y -> x) -> x)
            r = a.meet(a.imp(a.imp(x, y), y), a.imp(a.imp(y, x), x));
            break;
          case Op::Iff:
            r = a.meet(a.imp(x, y), a.imp(y, x));
            break;
          default:
            r = x;
            break;
        }
        stack.back() = r;
        break;
      }
    }
  }
  return stack.back();
}

template <FiniteAlgebra A>
typename A::value_type eval(const Formula& f, const A& a,
                            const Valuation<typename A::value_type>& v) {
  using E = typename A::value_type;
  const CompiledFormula cf(f);
  std::vector<E> values;
  values.reserve(cf.variables().size());
  for (const auto& name : cf.variables()) {
    auto x = v.lookup(name);
    if (!x) throw AlgebraError("unbound variable '" + name + "'");
    if (a.index(*x) >= a.cardinality())
      throw AlgebraError("value of '" + name + "' is not an element of the algebra");
    values.push_back(*x);
  }
  return cf.run(a, std::span<const E>(values));
}

template <FiniteAlgebra A>
std::optional<std::uint64_t> sweep_size(const A& a, std::size_t vars) {
  const std::uint64_t n = a.cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    if (n != 0 && total > UINT64_MAX / n) return std::nullopt;
    total *= n;
  }
  return total;
}

template <FiniteAlgebra A>
HoldsResult<typename A::value_type> holds(const CompiledFormula& f, const A& a,
                                          std::uint64_t cap) {
  using E = typename A::value_type;
  const std::size_t k = f.variables().size();
  const auto total = sweep_size(a, k);
  if (!total || *total > cap)
    throw CapExceeded("sweep of " + std::to_string(k) + " variables over " +
                      std::to_string(a.cardinality()) + " elements exceeds cap " +
                      std::to_string(cap));
  const std::uint64_t n = a.cardinality();
  std::vector<std::uint64_t> digits(k, 0);
  std::vector<E> values(k, a.element(0));
  std::vector<E> stack;
  HoldsResult<E> result;
  const E top = a.top();
  for (;;) {
    ++result.points;
    const E value = f.run(a, std::span<const E>(values), stack);
    if (value != top) {
      result.holds = false;
      result.witness = Witness<E>{Valuation<E>(f.variables(), values), value};
      return result;
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++digits[i] < n) {
        values[i] = a.element(digits[i]);
        break;
      }
      digits[i] = 0;
      values[i] = a.element(0);
      if (i == 0) return result;
    }
    if (k == 0) return result;
  }
}

template <FiniteAlgebra A>
HoldsResult<typename A::value_type> holds(const Formula& f, const A& a, std::uint64_t cap) {
  return holds(CompiledFormula(f), a, cap);
}

// }}}

}  // namespace dp
