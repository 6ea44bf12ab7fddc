#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dp {

/// Default bound on evaluated points for exhaustive sweeps.
inline constexpr std::uint64_t kDefaultSweepCap = 10'000'000;

/// An argument violates an operation's precondition (bad table, empty object, ...).
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search or sweep would exceed its configured bound.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dp
