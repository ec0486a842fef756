#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "magic/graph.hpp"

namespace magic {

struct ProjectionConfig {
  bool lowercase = true;
  std::set<std::string, std::less<>> stopwords = default_stopwords();
  std::size_t min_document_frequency = 2;
  double max_document_frequency_ratio = 0.5;

  static std::set<std::string, std::less<>> default_stopwords();
  void validate() const;  // throws InvalidArgument
};

// Prefix that keeps word node ids apart from document ids.
inline constexpr std::string_view kWordIdPrefix = "w:";

/// Document network plus one node per vocabulary term (timestamp 0) and one
/// word -> document edge per (term, containing document) incidence.
/// Documents keep their original indices [0, num_documents); word nodes follow.
struct ProjectedTemporalTextNetwork {
  TemporalTextNetwork network;
  std::size_t num_documents = 0;

  std::size_t num_words() const noexcept { return network.num_nodes() - num_documents; }
  bool is_word(NodeIndex u) const noexcept { return u >= num_documents; }
  std::string_view term(NodeIndex u) const;  // word id without prefix
};

/// Splits on anything that is not an ASCII letter or digit (bytes >= 0x80 are
/// kept as word characters so UTF-8 words stay intact).
std::map<std::string, std::size_t> tokenize(std::string_view text, const ProjectionConfig& cfg);

/// Throws NonPositiveDocumentTimestamp, UndirectedNetwork or InvalidArgument.
ProjectedTemporalTextNetwork project(const TemporalTextNetwork& net, const ProjectionConfig& cfg);

}  // namespace magic
