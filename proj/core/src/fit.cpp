#include <cmath>
#include <limits>

#include "magic/error.hpp"
#include "magic/init.hpp"
#include "magic/optimize.hpp"

namespace magic {

void FitConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(Errc::InvalidArgument, what); };
  if (K < 1) fail("K must be >= 1");
  if (!(tolerance > 0.0)) fail("tolerance must be > 0");
  if (!(line_search.shrink > 0.0 && line_search.shrink < 1.0)) fail("shrink factor must be in (0, 1)");
  if (!(line_search.initial_step > 0.0)) fail("initial step must be > 0");
  if (!(line_search.armijo > 0.0 && line_search.armijo < 1.0)) fail("Armijo constant must be in (0, 1)");
  if (line_search.max_backtracks < 0) fail("max backtracks must be >= 0");
  if (!(epsilon_floor > 0.0 && epsilon_floor <= 1e-6)) fail("epsilon floor must be in (0, 1e-6]");
  if (!(direction_clip >= 0.0)) fail("direction clip must be >= 0");
}

Fitter::Fitter(const TemporalTextNetwork& net, FitConfig cfg)
    : Fitter(net, cfg, init_affiliations(net, cfg.K, cfg.seed, cfg.mode), init_interactions(cfg.K)) {}

Fitter::Fitter(const TemporalTextNetwork& net, FitConfig cfg, AffiliationMatrix F, InteractionMatrix eta)
    : cfg_(cfg),
      graph_(net, cfg.mode, cfg.strict_temporality),
      F_(std::move(F)),
      eta_(std::move(eta)),
      cache_(graph_, F_) {
  cfg_.validate();
  check_shapes(graph_.num_nodes(), F_, eta_);
  if (static_cast<std::size_t>(eta_.rows()) != cfg_.K)
    throw Error(Errc::ShapeMismatch, "eta does not have K rows");
  if ((F_.array() < 0.0).any() || (eta_.array() < 0.0).any())
    throw Error(Errc::InvalidArgument, "initial F and eta must be nonnegative");
  ids_.reserve(net.num_nodes());
  kinds_.reserve(net.num_nodes());
  for (const NodeRecord& node : net.nodes()) {
    ids_.push_back(node.id);
    kinds_.push_back(node.kind);
  }
  trace_.push_back(log_likelihood());
}

double Fitter::log_likelihood() const { return magic::log_likelihood(graph_, F_, eta_, cfg_.epsilon_floor); }

Vector Fitter::clip(Vector direction) const {
  if (cfg_.direction_clip > 0.0) direction = direction.cwiseMax(-cfg_.direction_clip).cwiseMin(cfg_.direction_clip);
  return direction;
}

void Fitter::update_affiliations() {
  cache_.rebuild(F_);
  for (NodeIndex u : graph_.order()) {
    const auto row = static_cast<Eigen::Index>(u);
    const NodeObjective objective(graph_, F_, eta_, u, cache_, cfg_.epsilon_floor);
    const Vector current = F_.row(row).transpose();
    const Vector direction = clip(objective.gradient(current));
    if (direction.isZero(0.0)) continue;
    const LineSearchResult step = line_search([&](const Vector& f) { return objective.value(f); }, current,
                                              direction, cfg_.line_search, objective.value(current));
    if (step.step > 0.0) {
      F_.row(row) = step.point.transpose();
      cache_.update_row(u, step.point);
    }
  }
}

void Fitter::update_interactions() {
  const auto k = eta_.rows();
  const Eigen::MatrixXd allowed = allowed_pair_outer_sum(graph_, F_);
  const auto edges = graph_.edges();
  const double floor = cfg_.epsilon_floor;
  auto objective = [&](const Vector& flat) {
    const Eigen::Map<const Eigen::MatrixXd> eta(flat.data(), k, k);
    double total = -(eta.array() * allowed.array()).sum();
    for (const Edge& e : edges) {
      const double x = F_.row(static_cast<Eigen::Index>(e.src)) * eta * F_.row(static_cast<Eigen::Index>(e.dst)).transpose();
      total += log_link(x, floor) + x;
    }
    return total;
  };

  InteractionMatrix grad = gradient_eta(graph_, F_, eta_, floor);
  if (cfg_.mode == Mode::Raw) grad = 0.5 * (grad + grad.transpose()).eval();
  const Vector point = Eigen::Map<const Vector>(eta_.data(), k * k);
  const Vector direction = clip(Eigen::Map<const Vector>(grad.data(), k * k));
  if (direction.isZero(0.0)) return;
  const LineSearchResult step = line_search(objective, point, direction, cfg_.line_search);
  if (step.step > 0.0) {
    eta_ = Eigen::Map<const Eigen::MatrixXd>(step.point.data(), k, k);
    if (cfg_.mode == Mode::Raw) eta_ = 0.5 * (eta_ + eta_.transpose()).eval();
  }
}

double Fitter::sweep() {
  update_affiliations();
  update_interactions();
  trace_.push_back(log_likelihood());
  return trace_.back();
}

FittedModel Fitter::run() {
  bool converged = false;
  for (std::size_t s = 0; s < cfg_.max_sweeps; ++s) {
    const double before = trace_.back();
    const double after = sweep();
    const double scale = std::max(std::abs(before), std::numeric_limits<double>::min());
    if ((after - before) / scale < cfg_.tolerance) {
      converged = true;
      break;
    }
  }
  FittedModel model;
  model.mode = cfg_.mode;
  model.F = F_;
  model.eta = eta_;
  model.log_likelihood = trace_.back();
  model.sweeps = trace_.size() - 1;
  model.trace = trace_;
  model.converged = converged;
  model.dropped_edges = graph_.dropped_edges();
  model.node_ids = ids_;
  model.node_kinds = kinds_;
  return model;
}

FittedModel fit(const TemporalTextNetwork& net, const FitConfig& cfg) {
  cfg.validate();
  Fitter fitter(net, cfg);
  return fitter.run();
}

}  // namespace magic
