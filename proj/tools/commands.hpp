#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dp/errors.hpp"
#include "dp/json_io.hpp"

namespace dp::cli {

enum class Status { Theorem, NonTheorem, Ok, Error };

std::string to_string(Status s);

/// Outcome of one subcommand. `exit_code` follows the CLI contract:
/// 0 success/theorem, 1 non-theorem or failed check, 2 usage or parse
/// error, 3 cap exceeded.
struct CommandResult {
  Status status = Status::Ok;
  json payload = json::object();
  std::string human_text;
  int exit_code = 0;

  /// {"status": ..., "payload": {...}}
  json to_json() const;
};

CommandResult cmd_thm(const std::string& formula_text, std::optional<std::uint32_t> variety,
                      std::uint64_t cap = kDefaultSweepCap);

enum class FreeMode { Closed, Power, Oracle, All };
CommandResult cmd_free(std::uint32_t k, FreeMode mode);

/// op is one of product, coproduct, power, homcount, inverse, tr, height.
/// Operands are inline multisets ("{1,3,2,1}") or JSON objects; power takes
/// the exponent as its second operand.
CommandResult cmd_dual(const std::string& op, const std::vector<std::string>& operands,
                       std::uint64_t cap = kDefaultSweepCap);

CommandResult cmd_chains(std::uint32_t n, const std::string& cls);

CommandResult cmd_check(const std::string& suite);

CommandResult cmd_parse(const std::string& formula_text);

/// Maps library exceptions onto a CommandResult with the matching exit code.
CommandResult error_result(int exit_code, const std::string& message);

}  // namespace dp::cli
