#include "eqsteg/error.hpp"

namespace eqsteg {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IdOutOfRange: return "id out of range";
    case ErrorKind::UnsupportedCharacter: return "unsupported character";
    case ErrorKind::ValueOutOfRange: return "value out of range";
    case ErrorKind::InvalidEquation: return "invalid equation";
    case ErrorKind::InvalidOperators: return "invalid operator sequence";
    case ErrorKind::LengthMismatch: return "length mismatch";
    case ErrorKind::NoSelectableOperator: return "no selectable operator";
    case ErrorKind::CapacityExceeded: return "capacity exceeded";
    case ErrorKind::MalformedStego: return "malformed stego";
    case ErrorKind::UnknownKeyMap: return "unknown key map";
    case ErrorKind::DuplicateKeyMap: return "duplicate key map";
    case ErrorKind::InvalidKeyMap: return "invalid key map";
    case ErrorKind::KeymapParse: return "keymap parse error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace eqsteg
