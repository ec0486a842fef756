#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace magic {

enum class Errc {
  UnknownEndpoint,
  DuplicateNodeId,
  SelfLoop,
  UndirectedNetwork,
  NonPositiveDocumentTimestamp,
  ShapeMismatch,
  StaleCache,
  EmptyOrFullSet,
  NotNatural,
  TooFewEdges,
  EmptyCover,
  InvalidArgument,
  ParseError,
  IoError,
  FormatVersionMismatch,
};

std::string_view to_string(Errc code) noexcept;

// All library failures surface as magic::Error; code() identifies the kind,
// what() carries the offending id, line or value.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace magic
