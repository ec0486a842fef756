#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magic/cover.hpp"

namespace magic {

/// Fraction of edges whose endpoints share no community (direction ignored).
double interaction_edge_ratio(const TemporalTextNetwork& net, const CommunityCover& truth);

struct InteractionScores {
  std::vector<double> internal;                    // IC per community
  std::vector<double> external;                    // EC per community
  std::vector<std::optional<double>> ratio;        // IR = EC / (IC + EC); empty when IC + EC = 0
  std::size_t unlabeled_edges = 0;                 // neither endpoint in any community; skipped
  std::size_t half_labeled_edges = 0;              // exactly one endpoint labeled; carries EC mass 1/2
};

/// One pass over edges. A shared-community edge adds 1/|C(u) ∩ C(v)| to the IC
/// of each common community; otherwise each c in C(u) gains 1/(2|C(u)|) EC and
/// each c in C(v) gains 1/(2|C(v)|) EC.
InteractionScores ic_ec_scores(const TemporalTextNetwork& net, const CommunityCover& truth);

/// |a ∩ b| / |a ∪ b| over token sets; 1 when both are empty.
double jaccard_similarity(std::span<const std::string> a, std::span<const std::string> b);

struct JaccardStudyRow {
  std::optional<double> community_mean;  // empty for communities with < 2 documents
  std::optional<double> baseline_mean;
  std::size_t pairs = 0;                 // pairs evaluated per side
  bool sampled = false;
};

/// Mean pairwise Jaccard similarity of member token sets per community against
/// an equal-size uniformly drawn set of documents. When a community has more
/// than max_pairs pairs, max_pairs pairs are drawn uniformly instead.
std::vector<JaccardStudyRow> community_jaccard_study(const TemporalTextNetwork& net, const CommunityCover& truth,
                                                     std::size_t max_pairs, std::uint64_t seed);

inline constexpr std::size_t kDefaultMaxJaccardPairs = 100000;

}  // namespace magic
