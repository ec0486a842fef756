#include "magic/analytics.hpp"

#include <algorithm>
#include <numeric>

#include "magic/error.hpp"
#include "magic/random.hpp"

namespace magic {

namespace {

std::vector<std::size_t> common(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::vector<std::size_t>> sorted_memberships(const TemporalTextNetwork& net, const CommunityCover& truth) {
  if (truth.universe > net.num_nodes()) throw Error(Errc::ShapeMismatch, "cover universe larger than network");
  auto of = truth.memberships();
  of.resize(net.num_nodes());
  for (auto& m : of) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  return of;
}

std::vector<std::string> token_set(const NodeRecord& node) {
  std::vector<std::string> set = node.tokens;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

struct PairMean {
  double mean = 0.0;
  std::size_t pairs = 0;
  bool sampled = false;
};

PairMean mean_pairwise_jaccard(const std::vector<NodeIndex>& members,
                               const std::vector<std::vector<std::string>>& tokens, std::size_t max_pairs,
                               std::uint64_t seed) {
  const std::size_t n = members.size();
  const std::size_t all_pairs = n * (n - 1) / 2;
  PairMean result;
  double sum = 0.0;
  if (all_pairs <= max_pairs) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) sum += jaccard_similarity(tokens[members[a]], tokens[members[b]]);
    result.pairs = all_pairs;
  } else {
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> first(0, n - 1);
    std::uniform_int_distribution<std::size_t> second(0, n - 2);
    for (std::size_t p = 0; p < max_pairs; ++p) {
      const std::size_t a = first(rng);
      std::size_t b = second(rng);
      if (b >= a) ++b;
      sum += jaccard_similarity(tokens[members[a]], tokens[members[b]]);
    }
    result.pairs = max_pairs;
    result.sampled = true;
  }
  result.mean = sum / static_cast<double>(result.pairs);
  return result;
}

}  // namespace

double interaction_edge_ratio(const TemporalTextNetwork& net, const CommunityCover& truth) {
  if (net.num_edges() == 0) return 0.0;
  const auto of = sorted_memberships(net, truth);
  std::size_t interaction = 0;
  for (const Edge& e : net.edges()) {
    if (common(of[e.src], of[e.dst]).empty()) ++interaction;
  }
  return static_cast<double>(interaction) / static_cast<double>(net.num_edges());
}

InteractionScores ic_ec_scores(const TemporalTextNetwork& net, const CommunityCover& truth) {
  const auto of = sorted_memberships(net, truth);
  InteractionScores scores;
  scores.internal.assign(truth.size(), 0.0);
  scores.external.assign(truth.size(), 0.0);
  for (const Edge& e : net.edges()) {
    const auto& cu = of[e.src];
    const auto& cv = of[e.dst];
    if (cu.empty() && cv.empty()) {
      ++scores.unlabeled_edges;
      continue;
    }
    const auto shared = common(cu, cv);
    if (!shared.empty()) {
      const double share = 1.0 / static_cast<double>(shared.size());
      for (std::size_t c : shared) scores.internal[c] += share;
      continue;
    }
    if (cu.empty() || cv.empty()) ++scores.half_labeled_edges;
    for (std::size_t c : cu) scores.external[c] += 1.0 / (2.0 * static_cast<double>(cu.size()));
    for (std::size_t c : cv) scores.external[c] += 1.0 / (2.0 * static_cast<double>(cv.size()));
  }
  scores.ratio.resize(truth.size());
  for (std::size_t c = 0; c < truth.size(); ++c) {
    const double mass = scores.internal[c] + scores.external[c];
    if (mass > 0.0) scores.ratio[c] = scores.external[c] / mass;
  }
  return scores;
}

double jaccard_similarity(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
  std::sort(sb.begin(), sb.end());
  sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
  if (sa.empty() && sb.empty()) return 1.0;
  std::size_t inter = 0;
  for (auto ia = sa.begin(), ib = sb.begin(); ia != sa.end() && ib != sb.end();) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++inter;
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(inter) / static_cast<double>(sa.size() + sb.size() - inter);
}

std::vector<JaccardStudyRow> community_jaccard_study(const TemporalTextNetwork& net, const CommunityCover& truth,
                                                     std::size_t max_pairs, std::uint64_t seed) {
  if (max_pairs == 0) throw Error(Errc::InvalidArgument, "max pairs must be >= 1");
  if (truth.universe > net.num_nodes()) throw Error(Errc::ShapeMismatch, "cover universe larger than network");
  std::vector<std::vector<std::string>> tokens(net.num_nodes());
  std::vector<NodeIndex> documents;
  for (NodeIndex u = 0; u < net.num_nodes(); ++u) {
    tokens[u] = token_set(net.node(u));
    if (net.node(u).kind == NodeKind::Document) documents.push_back(u);
  }

  std::vector<JaccardStudyRow> rows(truth.size());
  std::vector<NodeIndex> pool;
  for (std::size_t c = 0; c < truth.size(); ++c) {
    std::vector<NodeIndex> members;
    for (NodeIndex u : truth.communities[c])
      if (net.node(u).kind == NodeKind::Document) members.push_back(u);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() < 2) continue;

    const PairMean inside = mean_pairwise_jaccard(members, tokens, max_pairs, derive_seed(seed, streams::kJaccard + 16 * c));

    Rng rng(derive_seed(seed, streams::kBaseline + 16 * c));
    pool = documents;
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    const std::vector<NodeIndex> baseline(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(members.size()));
    const PairMean random = mean_pairwise_jaccard(baseline, tokens, max_pairs, rng());

    rows[c].community_mean = inside.mean;
    rows[c].baseline_mean = random.mean;
    rows[c].pairs = inside.pairs;
    rows[c].sampled = inside.sampled;
  }
  return rows;
}

}  // namespace magic
