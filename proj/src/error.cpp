#include "fgre/error.hpp"

namespace fgre {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kNotInvertible: return "NotInvertible";
    case ErrorKind::kUnsupportedExponent: return "UnsupportedExponent";
    case ErrorKind::kInternalInconsistency: return "InternalInconsistency";
    case ErrorKind::kNotAClassFunction: return "NotAClassFunction";
    case ErrorKind::kNotIdempotent: return "NotIdempotent";
    case ErrorKind::kNotAbelian: return "NotAbelian";
    case ErrorKind::kWrongGroup: return "WrongGroup";
    case ErrorKind::kUnknownName: return "UnknownName";
    case ErrorKind::kNotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::kNotClifford: return "NotClifford";
    case ErrorKind::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace fgre
