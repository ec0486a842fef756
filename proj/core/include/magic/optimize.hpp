#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "magic/model.hpp"

namespace magic {

struct LineSearchConfig {
  double initial_step = 1.0;
  double shrink = 0.5;
  double armijo = 1e-4;
  int max_backtracks = 10;
};

struct LineSearchResult {
  double step = 0.0;  // 0 when no trial step was accepted
  Vector point;       // accepted projected point (the input point when step == 0)
  double value = 0.0; // objective at `point`
};

using Objective = std::function<double(const Vector&)>;

/// Projected backtracking: tries step = initial * shrink^m for m = 0..max and
/// accepts the first (largest) one whose projected point max(0, x + step*d)
/// satisfies f(x_new) - f(x) >= armijo * d'(x_new - x). Without active bounds
/// the right-hand side is armijo * step * |d|^2.
LineSearchResult line_search(const Objective& objective, const Vector& point, const Vector& direction,
                             const LineSearchConfig& cfg, std::optional<double> value_at_point = std::nullopt);

double line_search_step(const Objective& objective, const Vector& point, const Vector& direction,
                        const LineSearchConfig& cfg);

struct FitConfig {
  std::size_t K = 1;
  Mode mode = Mode::Net;
  std::size_t max_sweeps = 500;
  double tolerance = 1e-4;       // relative log-likelihood improvement per sweep
  LineSearchConfig line_search;
  double epsilon_floor = kDefaultEpsilonFloor;
  // Ascent directions are the gradients clipped componentwise to
  // [-direction_clip, direction_clip]; 0 disables clipping.
  double direction_clip = 10.0;
  std::uint64_t seed = 1;
  bool strict_temporality = false;  // NotNatural instead of dropping backward edges

  void validate() const;  // throws InvalidArgument
};

struct FittedModel {
  Mode mode = Mode::Net;
  AffiliationMatrix F;
  InteractionMatrix eta;
  double log_likelihood = 0.0;
  std::size_t sweeps = 0;
  std::vector<double> trace;  // trace[0] is the initial log-likelihood
  bool converged = false;
  std::size_t dropped_edges = 0;
  std::vector<std::string> node_ids;
  std::vector<NodeKind> node_kinds;

  std::size_t num_nodes() const noexcept { return static_cast<std::size_t>(F.rows()); }
  std::size_t num_communities() const noexcept { return static_cast<std::size_t>(F.cols()); }
};

/// Block coordinate projected gradient ascent. Each sweep updates every F_u in
/// time order (per-node projected gradient step with backtracking) and then eta
/// (one projected gradient step). In Raw mode the eta direction is symmetrised
/// so eta stays symmetric.
class Fitter {
 public:
  /// Initializes F by conductance seeding and eta with 0.9 / 0.1.
  Fitter(const TemporalTextNetwork& net, FitConfig cfg);
  Fitter(const TemporalTextNetwork& net, FitConfig cfg, AffiliationMatrix F, InteractionMatrix eta);
  Fitter(const Fitter&) = delete;  // cache_ points into graph_
  Fitter& operator=(const Fitter&) = delete;

  /// One full sweep; returns the log-likelihood after it.
  double sweep();
  void update_affiliations();
  void update_interactions();

  /// Sweeps until the relative improvement drops below tolerance or the sweep
  /// budget is spent.
  FittedModel run();

  const ModelGraph& graph() const noexcept { return graph_; }
  const AffiliationMatrix& F() const noexcept { return F_; }
  const InteractionMatrix& eta() const noexcept { return eta_; }
  double log_likelihood() const;
  const std::vector<double>& trace() const noexcept { return trace_; }

 private:
  Vector clip(Vector direction) const;

  FitConfig cfg_;
  ModelGraph graph_;
  AffiliationMatrix F_;
  InteractionMatrix eta_;
  PrefixCache cache_;
  std::vector<double> trace_;
  std::vector<std::string> ids_;
  std::vector<NodeKind> kinds_;
};

FittedModel fit(const TemporalTextNetwork& net, const FitConfig& cfg);

}  // namespace magic
