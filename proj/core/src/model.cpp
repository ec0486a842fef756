#include "magic/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "magic/error.hpp"

namespace magic {

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::All: return "all";
    case Mode::Net: return "net";
    case Mode::Raw: return "raw";
  }
  return "net";
}

Mode parse_mode(std::string_view text) {
  if (text == "all") return Mode::All;
  if (text == "net") return Mode::Net;
  if (text == "raw") return Mode::Raw;
  throw Error(Errc::InvalidArgument, "unknown mode '" + std::string(text) + "' (expected all, net or raw)");
}

int delta(Timestamp t_u, Timestamp t_v, Mode mode) noexcept {
  if (mode == Mode::Raw) return 1;
  return t_u < t_v ? 1 : 0;
}

double affinity(VectorRef f_u, const InteractionMatrix& eta, VectorRef f_v) { return f_u.dot(eta * f_v); }

double edge_probability(VectorRef f_u, const InteractionMatrix& eta, VectorRef f_v, int delta) {
  if (delta == 0) return 0.0;
  return -std::expm1(-affinity(f_u, eta, f_v));
}

double log_link(double x, double floor) noexcept { return std::log(-std::expm1(-std::max(x, floor))); }

double link_weight(double x, double floor) noexcept { return 1.0 / std::expm1(std::max(x, floor)); }

void check_shapes(std::size_t num_nodes, const AffiliationMatrix& F, const InteractionMatrix& eta) {
  if (static_cast<std::size_t>(F.rows()) != num_nodes || eta.rows() != eta.cols() || F.cols() != eta.rows()) {
    throw Error(Errc::ShapeMismatch, "F is " + std::to_string(F.rows()) + "x" + std::to_string(F.cols()) +
                                         ", eta is " + std::to_string(eta.rows()) + "x" +
                                         std::to_string(eta.cols()) + ", network has " +
                                         std::to_string(num_nodes) + " nodes");
  }
}

// ---------------------------------------------------------------------------
// ModelGraph

ModelGraph::ModelGraph(const TemporalTextNetwork& net, Mode mode, bool strict) : mode_(mode) {
  const std::size_t n = net.num_nodes();
  if (mode == Mode::Raw) {
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), NodeIndex{0});
    std::sort(order_.begin(), order_.end(),
              [&](NodeIndex a, NodeIndex b) { return net.node(a).id < net.node(b).id; });
    group_starts_.resize(n + 1);
    std::iota(group_starts_.begin(), group_starts_.end(), std::size_t{0});
    group_of_.resize(n);
    rank_.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      group_of_[order_[pos]] = pos;
      rank_[order_[pos]] = pos;
    }
  } else {
    if (!net.directed()) throw Error(Errc::UndirectedNetwork, "mode " + std::string(to_string(mode)) +
                                                                  " needs a directed network; use raw");
    TimeOrderedIndex index = time_ordered_view(net);
    order_ = std::move(index.order);
    group_starts_ = std::move(index.group_starts);
    group_of_ = std::move(index.group_of);
    rank_ = std::move(index.rank);
  }
  if (n == 0) group_starts_.clear();

  edges_.reserve(net.num_edges());
  for (const Edge& e : net.edges()) {
    if (mode == Mode::Raw) {
      edges_.push_back(rank_[e.src] < rank_[e.dst] ? e : Edge{e.dst, e.src});
    } else if (group_of_[e.src] < group_of_[e.dst]) {
      edges_.push_back(e);
    } else {
      if (strict) {
        throw Error(Errc::NotNatural, "edge " + net.node(e.src).id + " -> " + net.node(e.dst).id +
                                          " does not go forward in time");
      }
      ++dropped_;
    }
  }
  auto by_rank = [this](const Edge& a, const Edge& b) {
    if (rank_[a.src] != rank_[b.src]) return rank_[a.src] < rank_[b.src];
    return rank_[a.dst] < rank_[b.dst];
  };
  std::sort(edges_.begin(), edges_.end(), by_rank);
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  in_off_.assign(n + 1, 0);
  out_off_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++out_off_[e.src + 1];
    ++in_off_[e.dst + 1];
  }
  std::partial_sum(in_off_.begin(), in_off_.end(), in_off_.begin());
  std::partial_sum(out_off_.begin(), out_off_.end(), out_off_.begin());
  in_.resize(edges_.size());
  out_.resize(edges_.size());
  std::vector<std::size_t> in_fill(in_off_.begin(), in_off_.end() - 1);
  std::vector<std::size_t> out_fill(out_off_.begin(), out_off_.end() - 1);
  // edges_ sorted by (rank src, rank dst): out lists come out rank-sorted, and
  // in lists are filled in rank(src) order.
  for (const Edge& e : edges_) {
    out_[out_fill[e.src]++] = e.dst;
    in_[in_fill[e.dst]++] = e.src;
  }
}

bool ModelGraph::has_edge(NodeIndex src, NodeIndex dst) const {
  auto out = out_neighbors(src);
  return std::binary_search(out.begin(), out.end(), dst,
                            [this](NodeIndex a, NodeIndex b) { return rank_[a] < rank_[b]; });
}

double ModelGraph::num_allowed_pairs() const {
  double pairs = 0.0;
  double earlier = 0.0;
  for (std::size_t g = 0; g < num_groups(); ++g) {
    const auto size = static_cast<double>(group(g).size());
    pairs += earlier * size;
    earlier += size;
  }
  return pairs;
}

// ---------------------------------------------------------------------------
// PrefixCache

PrefixCache::PrefixCache(const ModelGraph& graph, const AffiliationMatrix& F) : graph_(&graph) { rebuild(F); }

void PrefixCache::rebuild(const AffiliationMatrix& F) {
  if (static_cast<std::size_t>(F.rows()) != graph_->num_nodes())
    throw Error(Errc::ShapeMismatch, "F rows do not match the network");
  const std::size_t groups = graph_->num_groups();
  const auto k = F.cols();
  tracked_ = F;
  group_sum_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(groups), k);
  for (std::size_t g = 0; g < groups; ++g) {
    for (NodeIndex v : graph_->group(g)) group_sum_.row(static_cast<Eigen::Index>(g)) += F.row(static_cast<Eigen::Index>(v));
  }
  prefix_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(groups), k);
  suffix_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(groups), k);
  for (std::size_t g = 1; g < groups; ++g) {
    const auto i = static_cast<Eigen::Index>(g);
    prefix_.row(i) = prefix_.row(i - 1) + group_sum_.row(i - 1);
  }
  for (std::size_t g = groups; g-- > 1;) {
    const auto i = static_cast<Eigen::Index>(g);
    suffix_.row(i - 1) = suffix_.row(i) + group_sum_.row(i);
  }
  prefix_valid_ = groups == 0 ? 0 : groups - 1;
  suffix_valid_ = 0;
  total_ = Vector::Zero(k);
  for (std::size_t g = 0; g < groups; ++g) total_ += group_sum_.row(static_cast<Eigen::Index>(g)).transpose();
}

void PrefixCache::update_row(NodeIndex u, VectorRef new_row) {
  const auto row = static_cast<Eigen::Index>(u);
  const std::size_t g = graph_->group_of(u);
  const Vector change = new_row - tracked_.row(row).transpose();
  group_sum_.row(static_cast<Eigen::Index>(g)) += change.transpose();
  total_ += change;
  tracked_.row(row) = new_row.transpose();
  prefix_valid_ = std::min(prefix_valid_, g);
  suffix_valid_ = std::max(suffix_valid_, g);
}

void PrefixCache::extend_prefix(std::size_t g) const {
  while (prefix_valid_ < g) {
    const auto i = static_cast<Eigen::Index>(prefix_valid_);
    prefix_.row(i + 1) = prefix_.row(i) + group_sum_.row(i);
    ++prefix_valid_;
  }
}

void PrefixCache::extend_suffix(std::size_t g) const {
  while (suffix_valid_ > g) {
    const auto i = static_cast<Eigen::Index>(suffix_valid_);
    suffix_.row(i - 1) = suffix_.row(i) + group_sum_.row(i);
    --suffix_valid_;
  }
}

Vector PrefixCache::past(NodeIndex u) const {
  const std::size_t g = graph_->group_of(u);
  extend_prefix(g);
  return prefix_.row(static_cast<Eigen::Index>(g)).transpose();
}

Vector PrefixCache::future(NodeIndex u) const {
  const std::size_t g = graph_->group_of(u);
  extend_suffix(g);
  return suffix_.row(static_cast<Eigen::Index>(g)).transpose();
}

void PrefixCache::check(const AffiliationMatrix& F, NodeIndex u) const {
  if (F.rows() != tracked_.rows() || F.cols() != tracked_.cols())
    throw Error(Errc::StaleCache, "cache was built for a differently shaped F");
  auto same = [&](NodeIndex v) {
    const auto r = static_cast<Eigen::Index>(v);
    if (F.row(r) != tracked_.row(r)) throw Error(Errc::StaleCache, "row " + std::to_string(v) + " changed since caching");
  };
  same(u);
  for (NodeIndex v : graph_->in_neighbors(u)) same(v);
  for (NodeIndex v : graph_->out_neighbors(u)) same(v);
}

// ---------------------------------------------------------------------------
// NodeObjective

NodeObjective::NodeObjective(const ModelGraph& graph, const AffiliationMatrix& F, const InteractionMatrix& eta,
                             NodeIndex u, const PrefixCache& cache, double floor)
    : floor_(floor) {
  check_shapes(graph.num_nodes(), F, eta);
  cache.check(F, u);
  const auto in = graph.in_neighbors(u);
  const auto out = graph.out_neighbors(u);
  const auto k = F.cols();
  partners_.resize(static_cast<Eigen::Index>(in.size() + out.size()), k);
  Vector in_sum = Vector::Zero(k);
  Vector out_sum = Vector::Zero(k);
  Eigen::Index j = 0;
  for (NodeIndex v : in) {
    const auto fv = F.row(static_cast<Eigen::Index>(v)).transpose();
    partners_.row(j++) = (eta.transpose() * fv).transpose();
    in_sum += fv;
  }
  for (NodeIndex v : out) {
    const auto fv = F.row(static_cast<Eigen::Index>(v)).transpose();
    partners_.row(j++) = (eta * fv).transpose();
    out_sum += fv;
  }
  linear_ = eta.transpose() * (cache.past(u) - in_sum) + eta * (cache.future(u) - out_sum);
}

double NodeObjective::value(VectorRef f_u) const {
  double total = 0.0;
  for (Eigen::Index j = 0; j < partners_.rows(); ++j) total += log_link(partners_.row(j).dot(f_u), floor_);
  return total - linear_.dot(f_u);
}

Vector NodeObjective::gradient(VectorRef f_u) const {
  Vector grad = -linear_;
  for (Eigen::Index j = 0; j < partners_.rows(); ++j) {
    grad += link_weight(partners_.row(j).dot(f_u), floor_) * partners_.row(j).transpose();
  }
  return grad;
}

// ---------------------------------------------------------------------------
// Likelihood and gradients

namespace {

// Visits (earlier-groups sum, current-group sum) for every tie group in order.
template <typename Visit>
void for_each_group_sum(const ModelGraph& graph, const AffiliationMatrix& F, Visit&& visit) {
  const auto k = F.cols();
  Vector earlier = Vector::Zero(k);
  Vector current(k);
  for (std::size_t g = 0; g < graph.num_groups(); ++g) {
    current.setZero();
    for (NodeIndex v : graph.group(g)) current += F.row(static_cast<Eigen::Index>(v)).transpose();
    visit(earlier, current);
    earlier += current;
  }
}

}  // namespace

Eigen::MatrixXd allowed_pair_outer_sum(const ModelGraph& graph, const AffiliationMatrix& F) {
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(F.cols(), F.cols());
  for_each_group_sum(graph, F, [&](const Vector& earlier, const Vector& current) {
    sum.noalias() += earlier * current.transpose();
  });
  return sum;
}

double log_likelihood(const ModelGraph& graph, const AffiliationMatrix& F, const InteractionMatrix& eta,
                      double floor) {
  check_shapes(graph.num_nodes(), F, eta);
  double edge_term = 0.0;
  double edge_affinity = 0.0;
  for (const Edge& e : graph.edges()) {
    const double x = affinity(F.row(static_cast<Eigen::Index>(e.src)).transpose(), eta,
                              F.row(static_cast<Eigen::Index>(e.dst)).transpose());
    edge_term += log_link(x, floor);
    edge_affinity += x;
  }
  double allowed_affinity = 0.0;
  for_each_group_sum(graph, F, [&](const Vector& earlier, const Vector& current) {
    allowed_affinity += earlier.dot(eta * current);
  });
  return edge_term - (allowed_affinity - edge_affinity);
}

double log_likelihood(const TemporalTextNetwork& net, const AffiliationMatrix& F, const InteractionMatrix& eta,
                      Mode mode, double floor) {
  return log_likelihood(ModelGraph(net, mode), F, eta, floor);
}

Vector gradient_F_u(const ModelGraph& graph, const AffiliationMatrix& F, const InteractionMatrix& eta, NodeIndex u,
                    const PrefixCache& cache, double floor) {
  NodeObjective objective(graph, F, eta, u, cache, floor);
  return objective.gradient(F.row(static_cast<Eigen::Index>(u)).transpose());
}

InteractionMatrix gradient_eta(const ModelGraph& graph, const AffiliationMatrix& F, const InteractionMatrix& eta,
                               double floor) {
  check_shapes(graph.num_nodes(), F, eta);
  InteractionMatrix grad = -allowed_pair_outer_sum(graph, F);
  for (const Edge& e : graph.edges()) {
    const auto fu = F.row(static_cast<Eigen::Index>(e.src)).transpose();
    const auto fv = F.row(static_cast<Eigen::Index>(e.dst)).transpose();
    const double x = fu.dot(eta * fv);
    // observed-edge term plus the edge's share added back to the non-edge sum
    grad.noalias() += (link_weight(x, floor) + 1.0) * fu * fv.transpose();
  }
  return grad;
}

}  // namespace magic
