#include "mdual/error.hpp"

namespace mdual {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotFiniteType: return "NotFiniteType";
    case Errc::PairingViolation: return "PairingViolation";
    case Errc::OrderBoundExceeded: return "OrderBoundExceeded";
    case Errc::UnknownGroup: return "UnknownGroup";
    case Errc::BetaNotEven: return "BetaNotEven";
    case Errc::BetaNotSymmetric: return "BetaNotSymmetric";
    case Errc::FormNotInvariant: return "FormNotInvariant";
    case Errc::RootNotInSharp: return "RootNotInSharp";
    case Errc::CorootNotIntegral: return "CorootNotIntegral";
    case Errc::InvalidSubset: return "InvalidSubset";
    case Errc::NotDominant: return "NotDominant";
    case Errc::BoundTooSmall: return "BoundTooSmall";
    case Errc::NotInSharp: return "NotInSharp";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::OddDiagonal: return "OddDiagonal";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace mdual
