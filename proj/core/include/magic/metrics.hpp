#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "magic/cover.hpp"

namespace magic {

struct MetricReport {
  double coverage = 0.0;
  double f1 = 0.0;
  double modularity = 0.0;
  double omega = 0.0;
  std::size_t detected_communities = 0;  // nonempty
  std::size_t truth_communities = 0;     // nonempty
  std::size_t empty_detected = 0;
  std::size_t universe = 0;
};

/// |union of communities| / N.
double coverage_ratio(const CommunityCover& cover);

/// Set F1 of two node sets (0 when either is empty).
double pairwise_f1(std::span<const NodeIndex> a, std::span<const NodeIndex> b);

/// Average of (mean over detected of best-matching F1 against truth) and
/// (mean over truth of best-matching F1 against detected). Empty communities
/// are ignored; throws EmptyCover if either side has none left.
double f1_score(const CommunityCover& detected, const CommunityCover& truth);

/// Overlapping modularity in the Lazar-Bodo-Kiss form, on the undirected view
/// of the network:
///   M_c = [ (1/|c|) sum_{i in c} (in_c(i) - out_c(i)) / (deg(i) s_i) ] * e_c / C(|c|, 2)
///   M   = (1/K) sum_c M_c
/// Zero-degree members and communities with fewer than two members add 0.
double overlapping_modularity(const TemporalTextNetwork& net, const CommunityCover& cover);

/// Chance-adjusted omega index over unordered node pairs, comparing how many
/// communities each pair shares in the two covers. Returns 1 when the covers
/// agree on every pair. Pairs are counted sparsely (only pairs that share a
/// community somewhere are materialised).
double omega_index(const CommunityCover& detected, const CommunityCover& truth);

MetricReport evaluate(const TemporalTextNetwork& net, const CommunityCover& detected, const CommunityCover& truth);

/// Rows are methods, columns are the four metrics. Each column is divided by
/// its maximum and the normalized values are summed per method. A column whose
/// maximum is not positive contributes 0 for every method.
std::vector<double> composite_score(const std::vector<std::vector<double>>& table);

}  // namespace magic
