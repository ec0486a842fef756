#include "magic/init.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "magic/error.hpp"
#include "magic/random.hpp"

namespace magic {

namespace {

// Conductance with marker-array membership; `stamp` must be unique per call.
class ConductanceScorer {
 public:
  explicit ConductanceScorer(const TemporalTextNetwork& net)
      : net_(net), mark_(net.num_nodes(), 0), total_volume_(2.0 * static_cast<double>(net.num_edges())) {}

  double operator()(std::span<const NodeIndex> members) {
    ++stamp_;
    for (NodeIndex s : members) mark_[s] = stamp_;
    double volume = 0.0;
    double internal_ends = 0.0;
    for (NodeIndex s : members) {
      volume += static_cast<double>(net_.degree(s));
      for (NodeIndex w : net_.out_neighbors(s)) internal_ends += mark_[w] == stamp_ ? 1.0 : 0.0;
      for (NodeIndex w : net_.in_neighbors(s)) internal_ends += mark_[w] == stamp_ ? 1.0 : 0.0;
    }
    const double cut = volume - internal_ends;
    const double denom = std::min(volume, total_volume_ - volume);
    if (denom <= 0.0) return 1.0;
    return cut / denom;
  }

 private:
  const TemporalTextNetwork& net_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
  double total_volume_;
};

std::vector<NodeIndex> unique_sorted(std::vector<NodeIndex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

double conductance(const TemporalTextNetwork& net, std::span<const NodeIndex> members) {
  const auto set = unique_sorted(std::vector<NodeIndex>(members.begin(), members.end()));
  if (set.empty() || set.size() >= net.num_nodes())
    throw Error(Errc::EmptyOrFullSet, "conductance needs a nonempty proper subset");
  for (NodeIndex s : set)
    if (s >= net.num_nodes()) throw Error(Errc::UnknownEndpoint, "#" + std::to_string(s));
  return ConductanceScorer(net)(set);
}

AffiliationMatrix init_affiliations(const TemporalTextNetwork& net, std::size_t K, std::uint64_t seed, Mode mode) {
  if (K < 1) throw Error(Errc::InvalidArgument, "K must be >= 1");
  const std::size_t n = net.num_nodes();
  const bool undirected_view = mode == Mode::Raw || !net.directed();

  std::vector<std::vector<NodeIndex>> neighborhood(n);
  std::vector<double> score(n);
  ConductanceScorer scorer(net);
  for (NodeIndex u = 0; u < n; ++u) {
    std::vector<NodeIndex> members;
    if (undirected_view) {
      members = net.neighbors(u);
    } else {
      auto in = net.in_neighbors(u);
      members.assign(in.begin(), in.end());
    }
    members.push_back(u);
    neighborhood[u] = unique_sorted(std::move(members));
    score[u] = scorer(neighborhood[u]);
  }

  std::vector<NodeIndex> seeds;
  for (NodeIndex u = 0; u < n; ++u) {
    const std::vector<NodeIndex> compare = undirected_view ? net.neighbors(u)
                                                           : std::vector<NodeIndex>(net.out_neighbors(u).begin(),
                                                                                    net.out_neighbors(u).end());
    const bool minimal =
        std::all_of(compare.begin(), compare.end(), [&](NodeIndex v) { return score[u] < score[v]; });
    if (minimal) seeds.push_back(u);
  }
  std::stable_sort(seeds.begin(), seeds.end(), [&](NodeIndex a, NodeIndex b) { return score[a] < score[b]; });

  AffiliationMatrix F = AffiliationMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(K));
  const std::size_t seeded = std::min(K, seeds.size());
  for (std::size_t k = 0; k < seeded; ++k) {
    for (NodeIndex v : neighborhood[seeds[k]]) F(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(k)) = 1.0;
  }
  if (seeded < K && n > 0) {
    Rng rng(derive_seed(seed, streams::kInit));
    const std::size_t fill = std::min(n, (n + K - 1) / K);
    std::vector<NodeIndex> pool(n);
    for (std::size_t k = seeded; k < K; ++k) {
      std::iota(pool.begin(), pool.end(), NodeIndex{0});
      for (std::size_t i = 0; i < fill; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(pool[i], pool[pick(rng)]);
        F(static_cast<Eigen::Index>(pool[i]), static_cast<Eigen::Index>(k)) = 1.0;
      }
    }
  }
  return F;
}

InteractionMatrix init_interactions(std::size_t K) {
  if (K < 1) throw Error(Errc::InvalidArgument, "K must be >= 1");
  const auto k = static_cast<Eigen::Index>(K);
  InteractionMatrix eta = InteractionMatrix::Constant(k, k, 0.1);
  eta.diagonal().setConstant(0.9);
  return eta;
}

}  // namespace magic
