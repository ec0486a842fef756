#include "magic/membership.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "magic/error.hpp"
#include "magic/random.hpp"

namespace magic {

Vector community_thresholds(const InteractionMatrix& eta, std::size_t num_nodes) {
  if (num_nodes < 2) throw Error(Errc::InvalidArgument, "thresholds need at least 2 nodes");
  const double target = -std::log1p(-1.0 / static_cast<double>(num_nodes));
  Vector thresholds(eta.rows());
  for (Eigen::Index k = 0; k < eta.rows(); ++k) {
    thresholds[k] = std::sqrt(target / std::max(eta(k, k), kMinDiagonal));
  }
  return thresholds;
}

CommunityCover extract_cover(const AffiliationMatrix& F, const Vector& thresholds) {
  if (F.cols() != thresholds.size()) throw Error(Errc::ShapeMismatch, "one threshold per community required");
  CommunityCover cover;
  cover.universe = static_cast<std::size_t>(F.rows());
  cover.communities.resize(static_cast<std::size_t>(F.cols()));
  for (Eigen::Index u = 0; u < F.rows(); ++u) {
    for (Eigen::Index k = 0; k < F.cols(); ++k) {
      if (F(u, k) >= thresholds[k]) cover.communities[static_cast<std::size_t>(k)].push_back(static_cast<NodeIndex>(u));
    }
  }
  return cover;
}

SplitCover split_cover(const CommunityCover& cover, std::span<const NodeKind> kinds) {
  if (kinds.size() != cover.universe) throw Error(Errc::ShapeMismatch, "one node kind per universe member required");
  std::vector<std::size_t> local(kinds.size());
  SplitCover split;
  for (std::size_t u = 0; u < kinds.size(); ++u) {
    local[u] = kinds[u] == NodeKind::Word ? split.words.universe++ : split.documents.universe++;
  }
  split.documents.communities.resize(cover.size());
  split.words.communities.resize(cover.size());
  split.documents.labels = cover.labels;
  split.words.labels = cover.labels;
  for (std::size_t k = 0; k < cover.size(); ++k) {
    for (NodeIndex u : cover.communities[k]) {
      auto& target = kinds[u] == NodeKind::Word ? split.words : split.documents;
      target.communities[k].push_back(local[u]);
    }
  }
  return split;
}

double auc(std::span<const double> positives, std::span<const double> negatives) {
  if (positives.empty() || negatives.empty()) throw Error(Errc::InvalidArgument, "AUC needs both classes");
  std::vector<std::pair<double, bool>> all;
  all.reserve(positives.size() + negatives.size());
  for (double p : positives) all.emplace_back(p, true);
  for (double n : negatives) all.emplace_back(n, false);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Mann-Whitney U with mid-ranks for ties.
  double rank_sum = 0.0;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j].first == all[i].first) ++j;
    const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t)
      if (all[t].second) rank_sum += mid_rank;
    i = j;
  }
  const auto np = static_cast<double>(positives.size());
  const auto nn = static_cast<double>(negatives.size());
  return (rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

ChooseKResult choose_K(const TemporalTextNetwork& net, std::span<const std::size_t> candidates, double holdout,
                       std::uint64_t seed, const FitConfig& base) {
  if (candidates.empty()) throw Error(Errc::InvalidArgument, "no candidate K given");
  if (!(holdout > 0.0 && holdout < 1.0)) throw Error(Errc::InvalidArgument, "holdout fraction must be in (0, 1)");

  ChooseKResult result;
  result.candidates.assign(candidates.begin(), candidates.end());
  if (candidates.size() == 1) {
    result.K = candidates.front();
    return result;
  }

  const ModelGraph full(net, base.mode, base.strict_temporality);
  std::vector<Edge> edges(full.edges().begin(), full.edges().end());
  const auto held = static_cast<std::size_t>(std::llround(holdout * static_cast<double>(edges.size())));
  if (held == 0 || held >= edges.size())
    throw Error(Errc::TooFewEdges, std::to_string(edges.size()) + " usable edges cannot be split");
  if (full.num_allowed_pairs() - static_cast<double>(edges.size()) < static_cast<double>(held))
    throw Error(Errc::TooFewEdges, "not enough allowed non-edges to pair with the held-out edges");

  Rng split_rng(derive_seed(seed, streams::kHoldout));
  for (std::size_t i = 0; i < held; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, edges.size() - 1);
    std::swap(edges[i], edges[pick(split_rng)]);
  }
  const std::vector<Edge> validation(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(held));
  std::vector<Edge> training(edges.begin() + static_cast<std::ptrdiff_t>(held), edges.end());

  std::vector<Edge> non_edges;
  {
    Rng rng(derive_seed(seed, streams::kNonEdges));
    std::uniform_int_distribution<NodeIndex> node(0, net.num_nodes() - 1);
    std::set<std::pair<NodeIndex, NodeIndex>> seen;
    const std::size_t max_attempts = 1000 * held + 100000;
    for (std::size_t attempt = 0; non_edges.size() < held && attempt < max_attempts; ++attempt) {
      NodeIndex u = node(rng);
      NodeIndex v = node(rng);
      if (base.mode == Mode::Raw && full.rank(v) < full.rank(u)) std::swap(u, v);
      if (!full.allowed(u, v) || full.has_edge(u, v)) continue;
      if (seen.emplace(u, v).second) non_edges.push_back({u, v});
    }
    if (non_edges.size() < held) throw Error(Errc::TooFewEdges, "could not sample enough allowed non-edges");
  }

  std::vector<NodeRecord> nodes(net.nodes().begin(), net.nodes().end());
  const TemporalTextNetwork train_net = build_network_indexed(std::move(nodes), std::move(training), net.directedness());

  for (std::size_t K : candidates) {
    FitConfig cfg = base;
    cfg.K = K;
    const FittedModel model = fit(train_net, cfg);
    auto score = [&](const Edge& e) {
      return edge_probability(model.F.row(static_cast<Eigen::Index>(e.src)).transpose(), model.eta,
                              model.F.row(static_cast<Eigen::Index>(e.dst)).transpose(), 1);
    };
    std::vector<double> pos, neg;
    for (const Edge& e : validation) pos.push_back(score(e));
    for (const Edge& e : non_edges) neg.push_back(score(e));
    result.scores.push_back(auc(pos, neg));
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < result.candidates.size(); ++i) {
    const bool better = result.scores[i] > result.scores[best] ||
                        (result.scores[i] == result.scores[best] && result.candidates[i] < result.candidates[best]);
    if (better) best = i;
  }
  result.K = result.candidates[best];
  return result;
}

}  // namespace magic
