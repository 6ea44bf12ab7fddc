#include "dp/eval.hpp"

#include <algorithm>

namespace dp {

namespace {

void emit(const Formula& f, const std::vector<std::string>& vars,
          std::vector<CompiledFormula::Instr>& code) {
  using Op = CompiledFormula::Op;
  switch (f.kind()) {
    case Kind::Var: {
      const auto it = std::find(vars.begin(), vars.end(), f.name());
      code.push_back({Op::Var, static_cast<std::uint32_t>(it - vars.begin())});
      return;
    }
    case Kind::Bot:
      code.push_back({Op::Bot, 0});
      return;
    case Kind::Top:
      code.push_back({Op::Top, 0});
      return;
    case Kind::Neg:
      emit(f.arg(), vars, code);
      code.push_back({Op::Neg, 0});
      return;
    case Kind::Delta:
      emit(f.arg(), vars, code);
      code.push_back({Op::Delta, 0});
      return;
    case Kind::Power:
      emit(f.arg(), vars, code);
      code.push_back({Op::Power, f.exponent()});
      return;
    case Kind::Strong:
    case Kind::Min:
    case Kind::Imp:
    case Kind::Or:
    case Kind::Iff:
      break;
  }
  emit(f.lhs(), vars, code);
  emit(f.rhs(), vars, code);
  Op op = Op::Strong;
  switch (f.kind()) {
    case Kind::Min:
      op = Op::Min;
      break;
    case Kind::Imp:
      op = Op::Imp;
      break;
    case Kind::Or:
      op = Op::Or;
      break;
    case Kind::Iff:
      op = Op::Iff;
      break;
    default:
      break;
  }
  code.push_back({op, 0});
}

}  // namespace

CompiledFormula::CompiledFormula(const Formula& f)
    : variables_(dp::variables(f)), uses_delta_(f.contains_delta()) {
  code_.reserve(f.node_count());
  emit(f, variables_, code_);
}

}  // namespace dp
