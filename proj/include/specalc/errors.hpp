#pragma once

#include <stdexcept>
#include <string>

namespace specalc {

enum class ErrKind {
  AmbientMismatch,
  NotASubspace,
  CyclicQuiver,
  NonIntegralDim,
  BasisMismatch,
  NonAdmissible,
  MissingExtData,
  InconsistentInput,
  LimitExceeded,
  ParseError,
  Internal,
};

const char* err_kind_name(ErrKind k);

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, const std::string& msg)
      : std::runtime_error(std::string(err_kind_name(kind)) + ": " + msg),
        kind_(kind),
        msg_(msg) {}

  ErrKind kind() const { return kind_; }

  // Bare message without the kind prefix (what() carries the prefix).
  const std::string& msg() const { return msg_; }

  // Input errors map to exit code 2 at the CLI, everything else to 1.
  bool is_input_error() const {
    switch (kind_) {
      case ErrKind::CyclicQuiver:
      case ErrKind::NonIntegralDim:
      case ErrKind::NonAdmissible:
      case ErrKind::MissingExtData:
      case ErrKind::InconsistentInput:
      case ErrKind::LimitExceeded:
      case ErrKind::ParseError:
        return true;
      default:
        return false;
    }
  }

private:
  ErrKind kind_;
  std::string msg_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

// Invariant check for conditions that indicate a bug rather than bad input.
inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) fail(ErrKind::Internal, msg);
}

}  // namespace specalc
