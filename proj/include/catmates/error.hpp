#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catmates {

enum class ErrorCode {
  DuplicateId,
  DanglingEndpoint,
  MissingComposite,
  AssocViolation,
  IdentityViolation,
  SizeOverflow,
  BoundaryMismatch,
  NoColimit,
  InvalidAdjunction,
  TriangleFailure,
  NotAdjoint,
  NaturalityFailure,
  IndexOutOfRange,
  InvalidAnchor,
  UniverseNotClosed,
  NotFinite,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace catmates
