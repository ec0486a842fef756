#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "magic/cover.hpp"
#include "magic/optimize.hpp"

namespace magic {

// Diagonal entries below this are raised to it before thresholding.
inline constexpr double kMinDiagonal = 1e-6;

/// delta_k = sqrt(-log(1 - 1/N) / eta_kk): the affiliation at which two
/// members of k link through k with probability 1/N. Throws InvalidArgument
/// for N < 2.
Vector community_thresholds(const InteractionMatrix& eta, std::size_t num_nodes);

/// Community k = { u : F_uk >= delta_k }.
CommunityCover extract_cover(const AffiliationMatrix& F, const Vector& thresholds);

/// Document and word parts of a cover on a projected network, each re-indexed
/// into its own universe (documents keep their indices; word w maps to
/// w - num_documents).
struct SplitCover {
  CommunityCover documents;
  CommunityCover words;
};
SplitCover split_cover(const CommunityCover& cover, std::span<const NodeKind> kinds);

/// Area under the ROC curve of `positives` against `negatives` (ties count
/// one half). Throws InvalidArgument if either side is empty.
double auc(std::span<const double> positives, std::span<const double> negatives);

struct ChooseKResult {
  std::size_t K = 0;
  std::vector<std::size_t> candidates;
  std::vector<double> scores;  // held-out AUC per candidate
};

/// Hides a uniform `holdout` fraction of observed edges, fits each candidate K
/// on the rest, and scores held-out edges against an equal number of sampled
/// allowed non-edges by link probability (AUC). The best score wins; ties go
/// to the smaller K. Throws TooFewEdges when the split would leave either side
/// empty.
ChooseKResult choose_K(const TemporalTextNetwork& net, std::span<const std::size_t> candidates, double holdout,
                       std::uint64_t seed, const FitConfig& base = {});

}  // namespace magic
