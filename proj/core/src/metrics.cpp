#include "magic/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "magic/error.hpp"

namespace magic {

// ---------------------------------------------------------------------------
// CommunityCover

std::size_t CommunityCover::num_empty() const {
  return static_cast<std::size_t>(
      std::count_if(communities.begin(), communities.end(), [](const auto& c) { return c.empty(); }));
}

void CommunityCover::normalize() {
  for (auto& c : communities) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (!c.empty() && c.back() >= universe)
      throw Error(Errc::InvalidArgument, "community member " + std::to_string(c.back()) + " outside universe");
  }
}

std::vector<std::vector<std::size_t>> CommunityCover::memberships() const {
  std::vector<std::vector<std::size_t>> of(universe);
  for (std::size_t k = 0; k < communities.size(); ++k)
    for (NodeIndex u : communities[k]) of.at(u).push_back(k);
  return of;
}

std::string CommunityCover::label(std::size_t k) const {
  if (k < labels.size() && !labels[k].empty()) return labels[k];
  return "c" + std::to_string(k);
}

// ---------------------------------------------------------------------------
// Metrics

namespace {

std::vector<std::size_t> nonempty(const CommunityCover& cover) {
  std::vector<std::size_t> ids;
  for (std::size_t k = 0; k < cover.size(); ++k)
    if (!cover.communities[k].empty()) ids.push_back(k);
  return ids;
}

// For each community of `from`, the best F1 against any community of `to`.
// Candidates come from an inverted index, so communities sharing no member
// (F1 = 0) are never visited.
double mean_best_f1(const CommunityCover& from, const CommunityCover& to) {
  const auto from_ids = nonempty(from);
  const auto members_of = to.memberships();
  std::vector<std::size_t> overlap(to.size(), 0);
  std::vector<std::size_t> touched;
  double total = 0.0;
  for (std::size_t k : from_ids) {
    const auto& c = from.communities[k];
    touched.clear();
    for (NodeIndex u : c) {
      if (u >= members_of.size()) continue;
      for (std::size_t j : members_of[u]) {
        if (overlap[j]++ == 0) touched.push_back(j);
      }
    }
    double best = 0.0;
    for (std::size_t j : touched) {
      const double inter = static_cast<double>(overlap[j]);
      const double f1 = 2.0 * inter / static_cast<double>(c.size() + to.communities[j].size());
      best = std::max(best, f1);
      overlap[j] = 0;
    }
    total += best;
  }
  return total / static_cast<double>(from_ids.size());
}

using PairCounts = std::unordered_map<std::uint64_t, std::uint32_t>;

PairCounts shared_counts(const CommunityCover& cover) {
  PairCounts counts;
  const auto n = static_cast<std::uint64_t>(cover.universe);
  for (const auto& c : cover.communities) {
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) ++counts[static_cast<std::uint64_t>(c[a]) * n + c[b]];
  }
  return counts;
}

CommunityCover normalized(const CommunityCover& cover) {
  CommunityCover copy = cover;
  copy.normalize();
  return copy;
}

}  // namespace

double coverage_ratio(const CommunityCover& cover) {
  if (cover.universe == 0) throw Error(Errc::InvalidArgument, "coverage needs a nonempty universe");
  std::vector<char> covered(cover.universe, 0);
  for (const auto& c : cover.communities)
    for (NodeIndex u : c) covered.at(u) = 1;
  return static_cast<double>(std::count(covered.begin(), covered.end(), 1)) / static_cast<double>(cover.universe);
}

double pairwise_f1(std::span<const NodeIndex> a, std::span<const NodeIndex> b) {
  if (a.empty() || b.empty()) return 0.0;
  std::vector<NodeIndex> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<NodeIndex> inter;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
  return 2.0 * static_cast<double>(inter.size()) / static_cast<double>(sa.size() + sb.size());
}

double f1_score(const CommunityCover& detected_in, const CommunityCover& truth_in) {
  const CommunityCover detected = normalized(detected_in);
  const CommunityCover truth = normalized(truth_in);
  if (nonempty(detected).empty()) throw Error(Errc::EmptyCover, "detected cover has no nonempty community");
  if (nonempty(truth).empty()) throw Error(Errc::EmptyCover, "truth cover has no nonempty community");
  return 0.5 * (mean_best_f1(detected, truth) + mean_best_f1(truth, detected));
}

double overlapping_modularity(const TemporalTextNetwork& net, const CommunityCover& cover) {
  if (cover.universe > net.num_nodes()) throw Error(Errc::ShapeMismatch, "cover universe larger than network");
  const auto community_count = cover.memberships();
  std::vector<char> in_c(net.num_nodes(), 0);
  double total = 0.0;
  std::size_t counted = 0;
  for (const auto& c : cover.communities) {
    if (c.empty()) continue;
    ++counted;
    if (c.size() < 2) continue;
    for (NodeIndex u : c) in_c[u] = 1;
    double inside_edges = 0.0;
    double member_sum = 0.0;
    for (NodeIndex i : c) {
      const auto degree = static_cast<double>(net.degree(i));
      double inside = 0.0;
      for (NodeIndex w : net.out_neighbors(i)) inside += in_c[w];
      for (NodeIndex w : net.in_neighbors(i)) inside += in_c[w];
      inside_edges += inside;
      if (degree > 0.0) {
        const double outside = degree - inside;
        member_sum += (inside - outside) / (degree * static_cast<double>(community_count[i].size()));
      }
    }
    for (NodeIndex u : c) in_c[u] = 0;
    const double n = static_cast<double>(c.size());
    const double e_c = inside_edges / 2.0;  // each internal edge seen from both ends
    total += (member_sum / n) * e_c / (n * (n - 1.0) / 2.0);
  }
  return counted == 0 ? 0.0 : total / static_cast<double>(counted);
}

double omega_index(const CommunityCover& detected_in, const CommunityCover& truth_in) {
  if (detected_in.universe != truth_in.universe)
    throw Error(Errc::InvalidArgument, "covers have different universes");
  const CommunityCover detected = normalized(detected_in);
  const CommunityCover truth = normalized(truth_in);
  const auto n = static_cast<std::uint64_t>(detected.universe);
  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (pairs == 0) return 1.0;

  const PairCounts a = shared_counts(detected);
  const PairCounts b = shared_counts(truth);

  std::uint64_t disagree = 0;
  for (const auto& [key, count] : a) {
    auto it = b.find(key);
    if (it == b.end() || it->second != count) ++disagree;
  }
  for (const auto& [key, count] : b) {
    if (!a.contains(key)) ++disagree;
  }
  const double total = static_cast<double>(pairs);
  const double agreement = static_cast<double>(pairs - disagree) / total;
  if (disagree == 0) return 1.0;

  auto histogram = [&](const PairCounts& counts) {
    std::vector<std::uint64_t> h(1, pairs - counts.size());
    for (const auto& [key, count] : counts) {
      if (count >= h.size()) h.resize(count + 1, 0);
      ++h[count];
    }
    return h;
  };
  const auto ha = histogram(a);
  const auto hb = histogram(b);
  double expected = 0.0;
  for (std::size_t j = 0; j < std::min(ha.size(), hb.size()); ++j)
    expected += (static_cast<double>(ha[j]) / total) * (static_cast<double>(hb[j]) / total);
  if (expected >= 1.0) return 1.0;
  return (agreement - expected) / (1.0 - expected);
}

MetricReport evaluate(const TemporalTextNetwork& net, const CommunityCover& detected, const CommunityCover& truth) {
  MetricReport report;
  report.universe = detected.universe;
  report.coverage = coverage_ratio(detected);
  report.f1 = f1_score(detected, truth);
  report.modularity = overlapping_modularity(net, detected);
  report.omega = omega_index(detected, truth);
  report.detected_communities = detected.size() - detected.num_empty();
  report.truth_communities = truth.size() - truth.num_empty();
  report.empty_detected = detected.num_empty();
  return report;
}

std::vector<double> composite_score(const std::vector<std::vector<double>>& table) {
  std::vector<double> scores(table.size(), 0.0);
  if (table.empty()) return scores;
  const std::size_t columns = table.front().size();
  for (const auto& row : table)
    if (row.size() != columns) throw Error(Errc::ShapeMismatch, "every method needs the same metric columns");
  for (std::size_t j = 0; j < columns; ++j) {
    double best = 0.0;
    for (const auto& row : table) best = std::max(best, row[j]);
    if (!(best > 0.0)) continue;  // degenerate column
    for (std::size_t i = 0; i < table.size(); ++i) scores[i] += table[i][j] / best;
  }
  return scores;
}

}  // namespace magic
