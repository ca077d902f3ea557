#include "liepic/error.hpp"

namespace liepic {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidType: return "invalid_type";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::Consistency: return "consistency";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace liepic
