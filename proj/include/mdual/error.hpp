#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdual {

enum class Errc {
  RankMismatch,
  InvalidArgument,
  NotFiniteType,
  PairingViolation,
  OrderBoundExceeded,
  UnknownGroup,
  BetaNotEven,
  BetaNotSymmetric,
  FormNotInvariant,
  RootNotInSharp,
  CorootNotIntegral,
  InvalidSubset,
  NotDominant,
  BoundTooSmall,
  NotInSharp,
  PreconditionViolated,
  InsufficientPrecision,
  OddDiagonal,
  SyntaxError,
  SemanticError,
};

std::string_view errc_name(Errc code);

/// Every library failure is reported through this exception type; `code()`
/// identifies the failure class, `what()` carries the context.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace mdual
