#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string_view>
#include <vector>

#include "magic/graph.hpp"

namespace magic {

/// All: text-augmented (projected) network with time gating.
/// Net: link structure only, with time gating.
/// Raw: undirected, no time information.
enum class Mode { All, Net, Raw };

std::string_view to_string(Mode mode) noexcept;
Mode parse_mode(std::string_view text);  // "all" | "net" | "raw", throws InvalidArgument

// Row u is the K-vector of node u.
using AffiliationMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using InteractionMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using VectorRef = Eigen::Ref<const Eigen::VectorXd>;

inline constexpr double kDefaultEpsilonFloor = 1e-10;

/// Time gate on a candidate link u -> v. Strict inequality: ties never link.
int delta(Timestamp t_u, Timestamp t_v, Mode mode) noexcept;

/// F_u' eta F_v
double affinity(VectorRef f_u, const InteractionMatrix& eta, VectorRef f_v);

/// (1 - exp(-F_u' eta F_v)) * delta
double edge_probability(VectorRef f_u, const InteractionMatrix& eta, VectorRef f_v, int delta);

/// log(1 - exp(-x)) with x clamped below at `floor`.
double log_link(double x, double floor) noexcept;

/// d/dx log(1 - exp(-x)) = exp(-x) / (1 - exp(-x)), evaluated at max(x, floor).
double link_weight(double x, double floor) noexcept;

/// The network as the likelihood sees it under a mode.
///
/// Nodes are ranked by a strict-weak order: (timestamp, id) in All/Net mode
/// with equal timestamps forming tie groups; id order in Raw mode with every
/// node its own group. A candidate pair (u, v) is "allowed" iff group(u) <
/// group(v). Raw mode orients each undirected pair from lower to higher rank,
/// so every unordered pair is allowed exactly once.
///
/// Observed edges that are not allowed (t(src) >= t(dst)) would have
/// probability zero; they are dropped and counted in dropped_edges(), or
/// rejected with NotNatural when strict is set. All iteration happens in rank
/// order, which makes every sum independent of the input node order.
class ModelGraph {
 public:
  ModelGraph(const TemporalTextNetwork& net, Mode mode, bool strict = false);

  Mode mode() const noexcept { return mode_; }
  std::size_t num_nodes() const noexcept { return group_of_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_groups() const noexcept { return group_starts_.empty() ? 0 : group_starts_.size() - 1; }
  std::size_t dropped_edges() const noexcept { return dropped_; }

  std::span<const NodeIndex> order() const noexcept { return order_; }
  std::span<const NodeIndex> group(std::size_t g) const {
    return std::span<const NodeIndex>(order_).subspan(group_starts_[g], group_starts_[g + 1] - group_starts_[g]);
  }
  std::size_t group_of(NodeIndex u) const { return group_of_[u]; }
  std::size_t rank(NodeIndex u) const { return rank_[u]; }
  bool allowed(NodeIndex u, NodeIndex v) const { return group_of_[u] < group_of_[v]; }

  // Allowed observed edges, sorted by (rank(src), rank(dst)).
  std::span<const Edge> edges() const noexcept { return edges_; }
  // Allowed in/out neighbours, each sorted by rank.
  std::span<const NodeIndex> in_neighbors(NodeIndex u) const {
    return std::span<const NodeIndex>(in_).subspan(in_off_[u], in_off_[u + 1] - in_off_[u]);
  }
  std::span<const NodeIndex> out_neighbors(NodeIndex u) const {
    return std::span<const NodeIndex>(out_).subspan(out_off_[u], out_off_[u + 1] - out_off_[u]);
  }
  bool has_edge(NodeIndex src, NodeIndex dst) const;

  // Number of allowed ordered pairs (observed or not).
  double num_allowed_pairs() const;

 private:
  Mode mode_;
  std::size_t dropped_ = 0;
  std::vector<NodeIndex> order_;
  std::vector<std::size_t> group_starts_;
  std::vector<std::size_t> group_of_;
  std::vector<std::size_t> rank_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> in_off_, out_off_;
  std::vector<NodeIndex> in_, out_;
};

/// Per-tie-group sums of F with lazily maintained prefix and suffix sums:
/// past(u) = sum of F_v over t(v) < t(u), future(u) = sum over t(v) > t(u).
/// update_row keeps the cache consistent after a single-row change in O(K)
/// amortized for time-ordered sweeps.
class PrefixCache {
 public:
  PrefixCache(const ModelGraph& graph, const AffiliationMatrix& F);

  void rebuild(const AffiliationMatrix& F);
  void update_row(NodeIndex u, VectorRef new_row);

  Vector past(NodeIndex u) const;
  Vector future(NodeIndex u) const;
  const Vector& total() const noexcept { return total_; }

  // Throws StaleCache when F's shape differs from the cache, or when the row of
  // u or of any of its neighbours was changed without update_row.
  void check(const AffiliationMatrix& F, NodeIndex u) const;

 private:
  void extend_prefix(std::size_t g) const;
  void extend_suffix(std::size_t g) const;

  const ModelGraph* graph_;
  AffiliationMatrix tracked_;
  Eigen::MatrixXd group_sum_;                  // G x K
  mutable Eigen::MatrixXd prefix_;             // row g: sum over groups < g
  mutable Eigen::MatrixXd suffix_;             // row g: sum over groups > g
  mutable std::size_t prefix_valid_ = 0;       // rows [0, prefix_valid_] valid
  mutable std::size_t suffix_valid_ = 0;       // rows [suffix_valid_, G) valid
  Vector total_;
};

/// The part of the log-likelihood that involves F_u, as a function of F_u with
/// every other row and eta held fixed. Built in O(|N(u)| K^2); each evaluation
/// costs O(|N(u)| K).
class NodeObjective {
 public:
  NodeObjective(const ModelGraph& graph, const AffiliationMatrix& F, const InteractionMatrix& eta,
                NodeIndex u, const PrefixCache& cache, double floor = kDefaultEpsilonFloor);

  double value(VectorRef f_u) const;
  Vector gradient(VectorRef f_u) const;

 private:
  Eigen::MatrixXd partners_;  // row j: eta' F_v (in-neighbour) or eta F_v (out-neighbour)
  Vector linear_;             // summed non-neighbour coefficients
  double floor_;
};

void check_shapes(std::size_t num_nodes, const AffiliationMatrix& F, const InteractionMatrix& eta);

/// Observed-edge log terms minus allowed non-edge affinities, using the cached
/// allowed-pair sum (one time-ordered pass) instead of a double loop.
double log_likelihood(const ModelGraph& graph, const AffiliationMatrix& F, const InteractionMatrix& eta,
                      double floor = kDefaultEpsilonFloor);
double log_likelihood(const TemporalTextNetwork& net, const AffiliationMatrix& F, const InteractionMatrix& eta,
                      Mode mode, double floor = kDefaultEpsilonFloor);

/// Gradient of the log-likelihood with respect to F_u, in O(|N(u)| K^2).
Vector gradient_F_u(const ModelGraph& graph, const AffiliationMatrix& F, const InteractionMatrix& eta,
                    NodeIndex u, const PrefixCache& cache, double floor = kDefaultEpsilonFloor);

/// Gradient with respect to every eta_ij. The non-edge term is the allowed-pair
/// outer-product sum minus its observed-edge part.
InteractionMatrix gradient_eta(const ModelGraph& graph, const AffiliationMatrix& F, const InteractionMatrix& eta,
                               double floor = kDefaultEpsilonFloor);

/// Allowed-pair sum of F_u F_v' over all (u, v) with group(u) < group(v).
Eigen::MatrixXd allowed_pair_outer_sum(const ModelGraph& graph, const AffiliationMatrix& F);

}  // namespace magic
