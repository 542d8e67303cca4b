#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lienil {

enum class Errc {
  InvalidPermutation,
  OrderExceeded,
  NotAbelian,
  ParseError,
  DegreeMismatch,
  EmptyArguments,
  BoundExceeded,
  ScaleExceeded,
  NotLieNilpotent,
  NotPGroup,
  InvalidPrime,
  NoWitness,
  CaseMismatch,
  ChainVanished,
  StepMismatch,
};

std::string_view to_string(Errc code);

/// Library-wide exception; `code()` identifies the failure class.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace lienil
