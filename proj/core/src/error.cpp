#include "qfrob/error.hpp"

namespace qfrob {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorKind::Unsupported: return "UNSUPPORTED";
    case ErrorKind::Degenerate: return "DEGENERATE";
    case ErrorKind::Inconsistent: return "INCONSISTENT";
    case ErrorKind::Malformed: return "MALFORMED";
    case ErrorKind::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorKind::SearchExhausted: return "SEARCH_EXHAUSTED";
  }
  return "UNKNOWN";
}

}  // namespace qfrob
