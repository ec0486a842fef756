#include "magic/projection.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "magic/error.hpp"

namespace magic {

std::set<std::string, std::less<>> ProjectionConfig::default_stopwords() {
  return {"a",    "an",   "and", "are",  "as",   "at",   "be",   "by",  "for",  "from", "has",
          "in",   "is",   "it",  "its",  "of",   "on",   "or",   "that", "the", "this", "to",
          "was",  "were", "will", "with", "we",  "our",  "via",  "using", "based"};
}

void ProjectionConfig::validate() const {
  if (min_document_frequency < 1) throw Error(Errc::InvalidArgument, "min document frequency must be >= 1");
  if (!(max_document_frequency_ratio > 0.0 && max_document_frequency_ratio <= 1.0))
    throw Error(Errc::InvalidArgument, "max document frequency ratio must be in (0, 1]");
}

std::string_view ProjectedTemporalTextNetwork::term(NodeIndex u) const {
  std::string_view id = network.node(u).id;
  if (id.starts_with(kWordIdPrefix)) id.remove_prefix(kWordIdPrefix.size());
  return id;
}

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

}  // namespace

std::map<std::string, std::size_t> tokenize(std::string_view text, const ProjectionConfig& cfg) {
  std::map<std::string, std::size_t> counts;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !is_word_char(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && is_word_char(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      std::string word(text.substr(i, j - i));
      if (cfg.lowercase) {
        std::transform(word.begin(), word.end(), word.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      }
      if (!cfg.stopwords.contains(word)) ++counts[word];
    }
    i = j;
  }
  return counts;
}

ProjectedTemporalTextNetwork project(const TemporalTextNetwork& net, const ProjectionConfig& cfg) {
  cfg.validate();
  if (!net.directed()) throw Error(Errc::UndirectedNetwork, "projection requires a directed document network");

  const std::size_t num_docs = net.num_nodes();
  std::vector<std::vector<std::string>> doc_terms(num_docs);
  std::map<std::string, std::size_t> document_frequency;
  for (NodeIndex d = 0; d < num_docs; ++d) {
    const NodeRecord& doc = net.node(d);
    if (doc.kind != NodeKind::Document) throw Error(Errc::InvalidArgument, "input already contains word node " + doc.id);
    if (doc.timestamp < 1) throw Error(Errc::NonPositiveDocumentTimestamp, doc.id);
    std::string joined;
    for (const auto& tok : doc.tokens) {
      joined += tok;
      joined += ' ';
    }
    for (auto& [term, count] : tokenize(joined, cfg)) {
      ++document_frequency[term];
      doc_terms[d].push_back(term);
    }
  }

  const double max_df = cfg.max_document_frequency_ratio * static_cast<double>(num_docs);
  std::map<std::string, NodeIndex> vocabulary;
  std::vector<NodeRecord> nodes(net.nodes().begin(), net.nodes().end());
  for (const auto& [term, df] : document_frequency) {
    if (df < cfg.min_document_frequency || static_cast<double>(df) > max_df) continue;
    vocabulary.emplace(term, nodes.size());
    nodes.push_back(NodeRecord{std::string(kWordIdPrefix) + term, 0, {}, NodeKind::Word});
  }

  std::vector<Edge> edges(net.edges().begin(), net.edges().end());
  for (NodeIndex d = 0; d < num_docs; ++d) {
    for (const auto& term : doc_terms[d]) {
      auto it = vocabulary.find(term);
      if (it != vocabulary.end()) edges.push_back({it->second, d});
    }
  }

  ProjectedTemporalTextNetwork projected;
  projected.num_documents = num_docs;
  projected.network = build_network_indexed(std::move(nodes), std::move(edges), Directedness::Directed);
  return projected;
}

}  // namespace magic
