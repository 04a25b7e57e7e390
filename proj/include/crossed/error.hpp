// Error type shared by every module of the library.

#ifndef CROSSED_ERROR_HPP_
#define CROSSED_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crossed {

enum class ErrorKind {
  InvalidArgument,
  Overflow,
  NotInvertible,
  // crossed systems
  NotAutomorphism,
  WeakActionViolated,
  CocycleViolated,
  NotNormalized,
  NotNormalSubgroup,
  BadTransversal,
  // cocycles
  NotSymmetric,
  NotCocycle,
  TooLarge,
  // families
  HolderCongruenceFailed,
  NotCoprime,
  OddOrderFlip,
  FamilyMismatch,
  InfiniteFamily,
  // cyclicity
  NotCoprimeTriple,
  NotCyclicInputs,
  // text input
  ParseError,
  SemanticError,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::WeakActionViolated: return "WeakActionViolated";
    case ErrorKind::CocycleViolated: return "CocycleViolated";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotNormalSubgroup: return "NotNormalSubgroup";
    case ErrorKind::BadTransversal: return "BadTransversal";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::HolderCongruenceFailed: return "HolderCongruenceFailed";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::OddOrderFlip: return "OddOrderFlip";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::InfiniteFamily: return "InfiniteFamily";
    case ErrorKind::NotCoprimeTriple: return "NotCoprimeTriple";
    case ErrorKind::NotCyclicInputs: return "NotCyclicInputs";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

// Thrown by every fallible operation. `witness` carries the offending
// element indices or parameters (e.g. the triple that breaks the cocycle
// condition), in the order the message names them.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg,
        std::vector<std::int64_t> witness = {})
    : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
      kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

private:
  ErrorKind kind_;
  std::vector<std::int64_t> witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg,
                              std::vector<std::int64_t> witness = {}) {
  throw Error(kind, msg, std::move(witness));
}

} // namespace crossed

#endif // CROSSED_ERROR_HPP_
