#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dp {

enum class Kind {
  Var,
  Bot,
  Top,
  Strong,  // &
  Min,     // /\ (lattice meet)
  Imp,     // ->
  Neg,     // ~
  Or,      // \/ (lattice join, derived)
  Iff,     // <->
  Delta,   // D
  Power,   // ^n
};

/// Immutable propositional formula over the MTL signature.
///
/// Nodes are shared; copying a Formula copies a pointer. Derived connectives
/// (negation, disjunction, biconditional, top, powers) are kept as nodes of
/// their own and only rewritten by expand_derived().
class Formula {
 public:
  static Formula var(std::string name);
  static Formula bot();
  static Formula top();
  static Formula strong(Formula lhs, Formula rhs);
  static Formula min(Formula lhs, Formula rhs);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula neg(Formula arg);
  static Formula lor(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);
  static Formula delta(Formula arg);
  static Formula power(Formula arg, std::uint32_t exponent);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  std::uint32_t exponent() const { return node_->exponent; }
  // Unary nodes (Neg, Delta, Power) keep their argument in lhs().
  const Formula& lhs() const { return node_->children.front(); }
  const Formula& rhs() const { return node_->children.back(); }
  const Formula& arg() const { return node_->children.front(); }

  bool is_binary() const;
  bool is_unary() const;
  bool contains_delta() const;
  std::size_t node_count() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::uint32_t exponent = 0;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, std::uint32_t exponent,
                      std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, std::string found);

  /// Byte offset into the input where parsing failed.
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Thrown by operations that reject a formula shape (e.g. Delta in expand_derived).
class FormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses the ASCII surface syntax (Unicode aliases accepted). Throws ParseError.
Formula parse(std::string_view text);

/// Prints with the minimal parentheses needed for parse(render(f)) == f.
std::string render(const Formula& f);

/// Variable names in first-occurrence order, without duplicates.
std::vector<std::string> variables(const Formula& f);

/// Rewrites f into the core signature {Var, Bot, Strong, Min, Imp}.
/// Throws FormulaError if f contains a Delta node.
Formula expand_derived(const Formula& f);

bool is_identifier(std::string_view s);

}  // namespace dp
