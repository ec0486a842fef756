#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magic/analytics.hpp"
#include "magic/cover.hpp"
#include "magic/metrics.hpp"
#include "magic/optimize.hpp"

namespace magic::io {

// Tab-separated, UTF-8 formats:
//   nodes        id<TAB>timestamp[<TAB>space-joined tokens]
//   edges        src<TAB>dst
//   communities  community_id<TAB>space-joined node ids
// Blank lines are ignored.

struct NetworkFileSet {
  std::filesystem::path nodes;
  std::filesystem::path edges;
  std::optional<std::filesystem::path> communities;
};

struct ParsedNetwork {
  TemporalTextNetwork network;
  std::optional<CommunityCover> truth;
};

std::vector<NodeRecord> read_nodes(std::istream& in, std::string_view source = "nodes");
std::vector<DirectedEdge> read_edges(std::istream& in, std::string_view source = "edges");
/// Community members resolve against `net`; unknown ids throw UnknownEndpoint.
CommunityCover read_communities(std::istream& in, const TemporalTextNetwork& net,
                                std::string_view source = "communities");

/// Throws ParseError (with file and line), UnknownEndpoint, DuplicateNodeId,
/// SelfLoop or IoError.
ParsedNetwork parse_network(const NetworkFileSet& files, Directedness directedness = Directedness::Directed);

/// Nodes and edges sorted by id, so equal networks serialize identically.
void write_nodes(std::ostream& out, const TemporalTextNetwork& net);
void write_edges(std::ostream& out, const TemporalTextNetwork& net);
void write_communities(std::ostream& out, const CommunityCover& cover, const std::vector<std::string>& node_ids);

// Model container, version 1:
//   MAGIC-MODEL v1
//   K<TAB>k / N<TAB>n / mode<TAB>all|net|raw
//   loglik<TAB>x / sweeps<TAB>s / converged<TAB>0|1 / dropped<TAB>d
//   trace<TAB>x0<TAB>x1...
//   eta          followed by K rows of K values
//   F            followed by N rows: id<TAB>d|w<TAB>K values
//   end
// Reals use 17 significant digits, so a save/load round trip is exact.
inline constexpr std::string_view kModelHeader = "MAGIC-MODEL v1";

void write_model(std::ostream& out, const FittedModel& model);
/// Throws FormatVersionMismatch on a wrong header or ParseError on malformed
/// or truncated content.
FittedModel read_model(std::istream& in, std::string_view source = "model");
void save_model(const std::filesystem::path& path, const FittedModel& model);
FittedModel load_model(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

std::string format_real(double value);

/// metric<TAB>value rows for coverage, f1, modularity, omega.
void write_metric_report(std::ostream& out, const MetricReport& report);

/// community<TAB>IC<TAB>EC<TAB>IR<TAB>jaccard_mean<TAB>baseline_mean rows;
/// undefined values are written as "NA".
void write_analytics_report(std::ostream& out, const CommunityCover& truth, const InteractionScores& scores,
                            const std::vector<JaccardStudyRow>& jaccard);

inline constexpr std::string_view kMetricHeader = "metric\tvalue";
inline constexpr std::string_view kAnalyticsHeader = "community\tIC\tEC\tIR\tjaccard_mean\tbaseline_mean";

}  // namespace magic::io
