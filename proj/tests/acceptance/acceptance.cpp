// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (0 when everything passes).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"

using namespace magic;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <typename... Args>
std::string fmt(const char* format, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome gradient_correctness() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> size(5, 30), comms(1, 4);
  const Mode modes[] = {Mode::Net, Mode::All, Mode::Raw};
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Mode mode = modes[i % 3];
    const std::size_t n = size(rng), k = comms(rng);
    auto inst = oracle::random_instance(rng, n, k, mode, 0.2, 12);
    ModelGraph graph(inst.net, mode);
    PrefixCache cache(graph, inst.F);
    for (NodeIndex u = 0; u < n; ++u) {
      const Vector fd = oracle::fd_gradient_F_u(inst.net, inst.F, inst.eta, u, mode);
      worst = std::max(worst, oracle::relative_error(gradient_F_u(graph, inst.F, inst.eta, u, cache), fd));
    }
    const InteractionMatrix fd_eta = oracle::fd_gradient_eta(inst.net, inst.F, inst.eta, mode);
    worst = std::max(worst, oracle::relative_error(gradient_eta(graph, inst.F, inst.eta), fd_eta));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-5 && elapsed < 10.0, fmt("max relative error %.2e over 20 instances, %.2fs", worst, elapsed)};
}

Outcome caching_equivalence() {
  const auto start = Clock::now();
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<std::size_t> size(100, 200), comms(1, 5);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Mode mode = i % 2 ? Mode::Raw : Mode::Net;
    const std::size_t n = size(rng), k = comms(rng);
    auto inst = oracle::random_instance(rng, n, k, mode, 0.05, 40);
    ModelGraph graph(inst.net, mode);
    PrefixCache cache(graph, inst.F);
    for (NodeIndex u = 0; u < n; ++u) {
      const Vector naive = oracle::naive_gradient_F_u(inst.net, inst.F, inst.eta, u, mode);
      worst = std::max(worst, oracle::relative_error(gradient_F_u(graph, inst.F, inst.eta, u, cache), naive));
    }
    const InteractionMatrix naive_eta = oracle::naive_gradient_eta(inst.net, inst.F, inst.eta, mode);
    worst = std::max(worst, oracle::relative_error(gradient_eta(graph, inst.F, inst.eta), naive_eta));
    const double naive_ll = oracle::naive_log_likelihood(inst.net, inst.F, inst.eta, mode);
    worst = std::max(worst, std::abs(log_likelihood(graph, inst.F, inst.eta) - naive_ll) / std::abs(naive_ll));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-10 && elapsed < 30.0, fmt("max relative deviation %.2e over 10 networks, %.2fs", worst, elapsed)};
}

Outcome monotone_ascent() {
  struct Case {
    std::string name;
    TemporalTextNetwork net;
    Mode mode;
    std::size_t K;
  };
  std::vector<Case> cases;
  std::mt19937_64 rng(303);
  for (Mode mode : {Mode::Net, Mode::Raw}) {
    auto inst = oracle::random_instance(rng, 120, 4, mode, 0.05, 50);
    cases.push_back({"random-" + std::string(to_string(mode)), std::move(inst.net), mode, 4});
  }
  cases.push_back({"planted", sample_planted(PlantedSpec{}, Mode::Net, 3).network, Mode::Net, 3});
  PlantedSpec text;
  text.vocabulary_per_block = 30;
  auto projected = project(sample_planted(text, Mode::Net, 4).network, ProjectionConfig{});
  cases.push_back({"projected", std::move(projected.network), Mode::All, 3});
  cases.push_back({"planted-raw", sample_planted(PlantedSpec{}, Mode::Raw, 5).network, Mode::Raw, 3});

  std::size_t steps = 0, violations = 0;
  for (const auto& c : cases) {
    FitConfig cfg;
    cfg.K = c.K;
    cfg.mode = c.mode;
    cfg.max_sweeps = 60;
    cfg.tolerance = 1e-15;
    const auto model = fit(c.net, cfg);
    for (std::size_t i = 1; i < model.trace.size(); ++i, ++steps)
      if (model.trace[i] < model.trace[i - 1] - 1e-9 * std::abs(model.trace[i - 1])) ++violations;
  }
  return {violations == 0 && steps > 0,
          fmt("%zu decreasing steps out of %zu across %zu fits", violations, steps, cases.size())};
}

// Per-sweep time per edge at two sizes with constant average degree.
Outcome iteration_scaling() {
  auto planted = [](std::size_t target_edges, std::uint64_t seed) {
    PlantedSpec spec;
    spec.blocks = 5;
    spec.block_size = target_edges / 25;  // ~10 edges per node
    const double pairs = 5.0 * static_cast<double>(spec.block_size) * (spec.block_size - 1) / 2.0;
    spec.eta_in = -std::log1p(-0.9 * static_cast<double>(target_edges) / pairs);
    spec.eta_out = spec.eta_in * 0.1 / 4.0 / 5.0;
    return sample_planted(spec, Mode::Net, seed).network;
  };
  auto per_edge = [](const TemporalTextNetwork& net) {
    FitConfig cfg;
    cfg.K = 5;
    Fitter fitter(net, cfg);
    fitter.sweep();  // warm-up
    std::vector<double> times;
    for (int i = 0; i < 5; ++i) {
      const auto start = Clock::now();
      fitter.sweep();
      times.push_back(seconds_since(start));
    }
    std::nth_element(times.begin(), times.begin() + 2, times.end());
    return times[2] / static_cast<double>(net.num_edges());
  };
  const auto small = planted(10000, 1);
  const auto large = planted(100000, 2);
  const double a = per_edge(small);
  const double b = per_edge(large);
  const double ratio = b / a;
  return {ratio <= 2.0 && ratio >= 0.5,
          fmt("|E|=%zu: %.1f ns/edge, |E|=%zu: %.1f ns/edge, ratio %.2f", small.num_edges(), a * 1e9,
              large.num_edges(), b * 1e9, ratio)};
}

struct Evaluation {
  double ll;
  std::vector<Vector> grads;  // per original node, original index order
  InteractionMatrix eta_grad;
};

Evaluation evaluate_model(const TemporalTextNetwork& net, const AffiliationMatrix& F, const InteractionMatrix& eta,
                          Mode mode, const std::vector<NodeIndex>& where) {
  ModelGraph graph(net, mode);
  PrefixCache cache(graph, F);
  Evaluation e{log_likelihood(graph, F, eta), {}, gradient_eta(graph, F, eta)};
  for (NodeIndex u : where) e.grads.push_back(gradient_F_u(graph, F, eta, u, cache));
  return e;
}

bool identical(const Evaluation& a, const Evaluation& b) {
  if (a.ll != b.ll || a.eta_grad != b.eta_grad || a.grads.size() != b.grads.size()) return false;
  for (std::size_t i = 0; i < a.grads.size(); ++i)
    if (a.grads[i] != b.grads[i]) return false;
  return true;
}

Outcome impossible_link_irrelevance() {
  std::mt19937_64 rng(505);
  std::size_t checks = 0, failures = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const Mode mode = trial % 2 ? Mode::All : Mode::Net;
    const std::size_t n = 40, k = 3;
    auto inst = oracle::random_instance(rng, n, k, mode, 0.15, 8);
    std::vector<NodeIndex> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    const auto base = evaluate_model(inst.net, inst.F, inst.eta, mode, identity);

    // (a) permuted input order of nodes and edges
    std::vector<NodeIndex> perm = identity;
    std::shuffle(perm.begin(), perm.end(), rng);  // new position i holds old node perm[i]
    std::vector<NodeIndex> where(n);
    std::vector<NodeRecord> nodes(n);
    AffiliationMatrix F(inst.F.rows(), inst.F.cols());
    for (NodeIndex i = 0; i < n; ++i) {
      nodes[i] = inst.net.node(perm[i]);
      F.row(static_cast<Eigen::Index>(i)) = inst.F.row(static_cast<Eigen::Index>(perm[i]));
      where[perm[i]] = i;
    }
    std::vector<Edge> edges;
    for (const Edge& e : inst.net.edges()) edges.push_back({where[e.src], where[e.dst]});
    std::shuffle(edges.begin(), edges.end(), rng);
    auto permuted = build_network_indexed(nodes, edges);
    ++checks;
    failures += !identical(base, evaluate_model(permuted, F, inst.eta, mode, where));

    // (b) augmented with time-reversed, non-adjacent pairs carrying zero affiliation
    std::vector<NodeRecord> more(inst.net.nodes().begin(), inst.net.nodes().end());
    std::uniform_int_distribution<Timestamp> when(1, 8);
    for (int p = 0; p < 6; ++p) {
      const Timestamp late = when(rng);
      more.push_back({"x" + std::to_string(p) + "late", late, {}, NodeKind::Document});
      more.push_back({"x" + std::to_string(p) + "early", std::max<Timestamp>(1, late - p % 3), {}, NodeKind::Document});
    }
    AffiliationMatrix G = AffiliationMatrix::Zero(static_cast<Eigen::Index>(more.size()), inst.F.cols());
    G.topRows(inst.F.rows()) = inst.F;
    auto augmented =
        build_network_indexed(more, std::vector<Edge>(inst.net.edges().begin(), inst.net.edges().end()));
    ++checks;
    failures += !identical(base, evaluate_model(augmented, G, inst.eta, mode, identity));

    // (c) strictly monotone timestamp remap keeps the impossible-link set
    std::vector<NodeRecord> remapped(inst.net.nodes().begin(), inst.net.nodes().end());
    for (auto& r : remapped) r.timestamp = 1000 + r.timestamp * r.timestamp * 7;
    auto stretched =
        build_network_indexed(remapped, std::vector<Edge>(inst.net.edges().begin(), inst.net.edges().end()));
    ++checks;
    failures += !identical(base, evaluate_model(stretched, inst.F, inst.eta, mode, identity));
  }
  return {failures == 0, fmt("%zu of %zu transformed networks bit-identical", checks - failures, checks)};
}

struct Recovery {
  double f1;
  double coverage;
};

Recovery recover(const TemporalTextNetwork& net, const CommunityCover& truth, Mode mode, std::uint64_t seed) {
  FitConfig cfg;
  cfg.K = truth.size();
  cfg.mode = mode;
  cfg.seed = seed;
  const auto model = fit(net, cfg);
  const auto cover = extract_cover(model.F, community_thresholds(model.eta, net.num_nodes()));
  if (cover.num_empty() == cover.size()) return {0.0, 0.0};
  return {f1_score(cover, truth), coverage_ratio(cover)};
}

Outcome planted_recovery() {
  const auto start = Clock::now();
  int good = 0;
  std::ostringstream scores;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto planted = sample_planted(PlantedSpec{}, Mode::Net, seed);
    const auto r = recover(planted.network, planted.truth, Mode::Net, seed);
    good += r.f1 >= 0.8 && r.coverage >= 0.95;
    scores << (seed > 1 ? " " : "") << fmt("%.2f/%.2f", r.f1, r.coverage);
  }
  const double elapsed = seconds_since(start);
  return {good >= 8 && elapsed < 120.0,
          fmt("%d/10 seeds with F1>=0.8 and coverage>=0.95 [%s], %.1fs", good, scores.str().c_str(), elapsed)};
}

Outcome choose_k_sanity() {
  const std::size_t candidates[] = {2, 3, 6};
  int hits = 0;
  std::ostringstream picks;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto planted = sample_planted(PlantedSpec{}, Mode::Net, 100 + seed);
    const auto r = choose_K(planted.network, candidates, 0.2, seed);
    hits += r.K == 3;
    picks << (seed > 1 ? "," : "") << r.K;
  }
  return {hits >= 8, fmt("selected K=3 in %d/10 seeds (picks %s)", hits, picks.str().c_str())};
}

Outcome threshold_check() {
  const double value = community_thresholds(InteractionMatrix::Constant(1, 1, 0.9), 1000)[0];
  return {std::abs(value - 0.0333417) <= 1e-6, fmt("delta = %.7f", value)};
}

Outcome analytics_conservation() {
  std::mt19937_64 rng(909);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = oracle::random_instance(rng, 60, 1, Mode::Net, 0.1, 30);
    CommunityCover truth;
    truth.universe = 60;
    truth.communities.resize(5);
    std::uniform_int_distribution<std::size_t> pick(0, 4);
    std::bernoulli_distribution extra(0.3);
    for (NodeIndex u = 0; u < 60; ++u) {
      truth.communities[pick(rng)].push_back(u);
      if (extra(rng)) truth.communities[pick(rng)].push_back(u);
    }
    truth.normalize();
    const auto s = ic_ec_scores(inst.net, truth);
    const double total = std::accumulate(s.internal.begin(), s.internal.end(), 0.0) +
                         std::accumulate(s.external.begin(), s.external.end(), 0.0);
    worst = std::max(worst, std::abs(total - static_cast<double>(inst.net.num_edges())));
  }

  std::vector<NodeRecord> two{{"u", 1, {}, NodeKind::Document}, {"v", 2, {}, NodeKind::Document}};
  const auto edge = build_network_indexed(two, {{0, 1}});
  CommunityCover shared;
  shared.universe = 2;
  shared.communities = {{0}, {0, 1}, {1}};
  const auto a = ic_ec_scores(edge, shared);
  const bool shared_ok = a.internal == std::vector<double>{0.0, 1.0, 0.0} && a.external == std::vector<double>(3, 0.0);
  CommunityCover disjoint;
  disjoint.universe = 2;
  disjoint.communities = {{0}, {1}};
  const auto b = ic_ec_scores(edge, disjoint);
  const bool disjoint_ok = b.external == std::vector<double>{0.5, 0.5} && b.internal == std::vector<double>(2, 0.0);
  return {worst <= 1e-9 && shared_ok && disjoint_ok,
          fmt("max |sum IC + sum EC - |E|| = %.1e over 20 networks; shared-edge case %s; disjoint-edge case %s", worst,
              shared_ok ? "exact" : "WRONG", disjoint_ok ? "exact" : "WRONG")};
}

Outcome metric_oracles() {
  const auto start = Clock::now();
  const std::size_t universe = 5;
  const auto covers = oracle::all_covers(universe, 2);
  std::vector<CommunityCover> built;
  for (const auto& c : covers) built.push_back(oracle::cover_from_masks(c, universe));

  double worst_f1 = 0.0, worst_omega = 0.0, worst_cov = 0.0;
  bool identity_exact = true;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    worst_cov = std::max(worst_cov, std::abs(coverage_ratio(built[i]) - oracle::brute_coverage(covers[i], universe)));
    identity_exact = identity_exact && f1_score(built[i], built[i]) == 1.0 && omega_index(built[i], built[i]) == 1.0;
    for (std::size_t j = 0; j < covers.size(); ++j) {
      worst_f1 = std::max(worst_f1, std::abs(f1_score(built[i], built[j]) - oracle::brute_f1(covers[i], covers[j])));
      worst_omega = std::max(
          worst_omega, std::abs(omega_index(built[i], built[j]) - oracle::brute_omega(covers[i], covers[j], universe)));
    }
  }
  const double elapsed = seconds_since(start);
  const bool ok = worst_f1 <= 1e-12 && worst_omega <= 1e-12 && worst_cov == 0.0 && identity_exact;
  return {ok, fmt("%zu covers, %zu ordered pairs: max |dF1| %.1e, max |dOmega| %.1e, max |dCoverage| %.1e, "
                  "identity covers %s, %.1fs",
                  covers.size(), covers.size() * covers.size(), worst_f1, worst_omega, worst_cov,
                  identity_exact ? "exactly 1" : "NOT 1", elapsed)};
}

Outcome qualitative_substitutes() {
  PlantedSpec spec;
  spec.vocabulary_per_block = 30;

  // Jaccard study direction
  std::size_t above = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto planted = sample_planted(spec, Mode::Net, seed);
    for (const auto& row : community_jaccard_study(planted.network, planted.truth, kDefaultMaxJaccardPairs, seed)) {
      ++total;
      above += row.community_mean && row.baseline_mean && *row.community_mean > *row.baseline_mean;
    }
  }

  // text on top of links
  double f1_all = 0.0, f1_net = 0.0;
  std::ostringstream per_seed;
  const int seeds = 5;
  for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
    const auto planted = sample_planted(spec, Mode::Net, 40 + seed);
    const auto net = recover(planted.network, planted.truth, Mode::Net, seed).f1;

    const auto projected = project(planted.network, ProjectionConfig{});
    FitConfig cfg;
    cfg.K = planted.truth.size();
    cfg.mode = Mode::All;
    cfg.seed = seed;
    const auto model = fit(projected.network, cfg);
    const auto cover = extract_cover(model.F, community_thresholds(model.eta, projected.network.num_nodes()));
    std::vector<NodeKind> kinds;
    for (const auto& r : projected.network.nodes()) kinds.push_back(r.kind);
    const auto docs = split_cover(cover, kinds).documents;
    const double all = docs.num_empty() == docs.size() ? 0.0 : f1_score(docs, planted.truth);
    f1_all += all / seeds;
    f1_net += net / seeds;
    per_seed << (seed > 1 ? " " : "") << fmt("%.3f/%.3f", all, net);
  }
  const bool jaccard_ok = above == total && total > 0;
  const bool text_ok = f1_all >= f1_net - 0.02;
  return {jaccard_ok && text_ok,
          fmt("Jaccard community > baseline in %zu/%zu communities; mean F1 all %.3f vs net %.3f (per seed all/net: %s)",
              above, total, f1_all, f1_net, per_seed.str().c_str())};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "gradient correctness", gradient_correctness},
      {2, "caching identity equivalence", caching_equivalence},
      {3, "monotone ascent", monotone_ascent},
      {4, "per-sweep cost linear in |E|", iteration_scaling},
      {5, "impossible-link irrelevance", impossible_link_irrelevance},
      {6, "planted recovery", planted_recovery},
      {7, "choose_K sanity", choose_k_sanity},
      {8, "membership threshold value", threshold_check},
      {9, "analytics conservation", analytics_conservation},
      {10, "metric oracles", metric_oracles},
      {11, "qualitative substitutes (Jaccard direction, text never hurts)", qualitative_substitutes},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
