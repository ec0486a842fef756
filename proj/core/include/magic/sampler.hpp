#pragma once

#include <cstdint>
#include <vector>

#include "magic/cover.hpp"
#include "magic/model.hpp"

namespace magic {

/// Forward generator: every allowed pair (ordered pair with delta = 1 in
/// All/Net mode, unordered pair in Raw mode) becomes an edge independently
/// with its link probability. Node i of the result is nodes[i]; F row i
/// belongs to it. Raw mode produces an undirected network.
TemporalTextNetwork sample_network(const AffiliationMatrix& F, const InteractionMatrix& eta,
                                   std::vector<NodeRecord> nodes, Mode mode, std::uint64_t seed);

/// Disjoint planted blocks: node i belongs to block i / block_size with
/// affiliation `strength`; eta has eta_in on the diagonal and eta_out off it.
/// Timestamps are uniform in [1, max_timestamp]. When vocabulary_per_block > 0
/// every document gets tokens_per_document tokens drawn from its block's
/// private vocabulary ("b<block>w<j>"), mixed with probability noise_rate with
/// words from a shared vocabulary ("shared<j>").
struct PlantedSpec {
  std::size_t blocks = 3;
  std::size_t block_size = 100;
  double strength = 1.0;
  double eta_in = 0.1;
  double eta_out = 0.005;
  Timestamp max_timestamp = 1000000;
  std::size_t vocabulary_per_block = 0;
  std::size_t shared_vocabulary = 20;
  std::size_t tokens_per_document = 8;
  double noise_rate = 0.25;
};

struct PlantedNetwork {
  TemporalTextNetwork network;
  CommunityCover truth;
  AffiliationMatrix F;
  InteractionMatrix eta;
};

PlantedNetwork sample_planted(const PlantedSpec& spec, Mode mode, std::uint64_t seed);

}  // namespace magic
