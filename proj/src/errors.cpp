#include "cmc/errors.hpp"

namespace cmc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::EmptyDomain: return "empty-domain";
    case ErrorKind::Accuracy: return "accuracy";
    case ErrorKind::Range: return "range";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Branch: return "branch";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cmc
