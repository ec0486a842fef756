#include "magic/sampler.hpp"

#include <cmath>

#include "magic/error.hpp"
#include "magic/random.hpp"

namespace magic {

TemporalTextNetwork sample_network(const AffiliationMatrix& F, const InteractionMatrix& eta,
                                   std::vector<NodeRecord> nodes, Mode mode, std::uint64_t seed) {
  check_shapes(nodes.size(), F, eta);
  if ((F.array() < 0.0).any() || (eta.array() < 0.0).any())
    throw Error(Errc::InvalidArgument, "F and eta must be nonnegative");

  const auto n = static_cast<Eigen::Index>(nodes.size());
  // row v: (eta F_v)'
  const AffiliationMatrix partner = F * eta.transpose();
  Rng rng(derive_seed(seed, streams::kSampler));
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<Edge> edges;

  auto visit = [&](Eigen::Index u, Eigen::Index v) {
    const double x = F.row(u).dot(partner.row(v));
    if (x <= 0.0) return;  // probability zero; no draw
    if (uniform(rng) < -std::expm1(-x)) edges.push_back({static_cast<NodeIndex>(u), static_cast<NodeIndex>(v)});
  };

  for (Eigen::Index u = 0; u < n; ++u) {
    const Timestamp tu = nodes[static_cast<std::size_t>(u)].timestamp;
    if (mode == Mode::Raw) {
      for (Eigen::Index v = u + 1; v < n; ++v) visit(u, v);
    } else {
      for (Eigen::Index v = 0; v < n; ++v) {
        if (delta(tu, nodes[static_cast<std::size_t>(v)].timestamp, mode) == 1) visit(u, v);
      }
    }
  }
  return build_network_indexed(std::move(nodes), std::move(edges),
                               mode == Mode::Raw ? Directedness::Undirected : Directedness::Directed);
}

}  // namespace magic

namespace magic {

PlantedNetwork sample_planted(const PlantedSpec& spec, Mode mode, std::uint64_t seed) {
  if (spec.blocks < 1 || spec.block_size < 1 || spec.max_timestamp < 1)
    throw Error(Errc::InvalidArgument, "planted spec needs blocks, block size and max timestamp >= 1");
  const std::size_t n = spec.blocks * spec.block_size;
  const auto k = static_cast<Eigen::Index>(spec.blocks);

  PlantedNetwork planted;
  planted.F = AffiliationMatrix::Zero(static_cast<Eigen::Index>(n), k);
  planted.eta = InteractionMatrix::Constant(k, k, spec.eta_out);
  planted.eta.diagonal().setConstant(spec.eta_in);
  planted.truth.universe = n;
  planted.truth.communities.resize(spec.blocks);

  Rng rng(derive_seed(seed, streams::kSampler + 100));
  std::uniform_int_distribution<Timestamp> when(1, spec.max_timestamp);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<NodeRecord> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t block = i / spec.block_size;
    nodes[i].id = "n" + std::to_string(i);
    nodes[i].timestamp = when(rng);
    planted.F(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(block)) = spec.strength;
    planted.truth.communities[block].push_back(i);
    if (spec.vocabulary_per_block > 0) {
      std::uniform_int_distribution<std::size_t> own(0, spec.vocabulary_per_block - 1);
      std::uniform_int_distribution<std::size_t> shared(0, std::max<std::size_t>(spec.shared_vocabulary, 1) - 1);
      for (std::size_t t = 0; t < spec.tokens_per_document; ++t) {
        if (spec.shared_vocabulary > 0 && unit(rng) < spec.noise_rate) {
          nodes[i].tokens.push_back("shared" + std::to_string(shared(rng)));
        } else {
          nodes[i].tokens.push_back("b" + std::to_string(block) + "w" + std::to_string(own(rng)));
        }
      }
    }
  }
  for (std::size_t b = 0; b < spec.blocks; ++b) planted.truth.labels.push_back("block" + std::to_string(b));
  planted.network = sample_network(planted.F, planted.eta, std::move(nodes), mode, seed);
  return planted;
}

}  // namespace magic
