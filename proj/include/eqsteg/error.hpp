#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqsteg {

enum class ErrorKind {
  IdOutOfRange,
  UnsupportedCharacter,
  ValueOutOfRange,
  InvalidEquation,
  InvalidOperators,
  LengthMismatch,
  NoSelectableOperator,
  CapacityExceeded,
  MalformedStego,
  UnknownKeyMap,
  DuplicateKeyMap,
  InvalidKeyMap,
  KeymapParse,
};

/// Short stable name for an error kind, e.g. "malformed stego".
std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Every domain failure in the library is reported as this exception.
/// The kind is what callers dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eqsteg
