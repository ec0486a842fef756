#include "magic/error.hpp"

namespace magic {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::UnknownEndpoint: return "UnknownEndpoint";
    case Errc::DuplicateNodeId: return "DuplicateNodeId";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::UndirectedNetwork: return "UndirectedNetwork";
    case Errc::NonPositiveDocumentTimestamp: return "NonPositiveDocumentTimestamp";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::StaleCache: return "StaleCache";
    case Errc::EmptyOrFullSet: return "EmptyOrFullSet";
    case Errc::NotNatural: return "NotNatural";
    case Errc::TooFewEdges: return "TooFewEdges";
    case Errc::EmptyCover: return "EmptyCover";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    case Errc::FormatVersionMismatch: return "FormatVersionMismatch";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace magic
