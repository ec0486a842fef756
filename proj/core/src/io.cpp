#include "magic/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "magic/error.hpp"

namespace magic::io {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string> words(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view w : split(text, ' '))
    if (!w.empty()) out.emplace_back(w);
  return out;
}

[[noreturn]] void parse_fail(std::string_view source, std::size_t line, const std::string& reason) {
  throw Error(Errc::ParseError, std::string(source) + ":" + std::to_string(line) + ": " + reason);
}

// Strips a trailing '\r' so files written on Windows parse too.
bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end && !text.empty();
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return in;
}

}  // namespace

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

// ---------------------------------------------------------------------------
// Networks

std::vector<NodeRecord> read_nodes(std::istream& in, std::string_view source) {
  std::vector<NodeRecord> nodes;
  std::string line;
  for (std::size_t lineno = 1; next_line(in, line); ++lineno) {
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) parse_fail(source, lineno, "expected id<TAB>timestamp[<TAB>tokens]");
    if (fields[0].empty()) parse_fail(source, lineno, "empty node id");
    NodeRecord node;
    node.id = std::string(fields[0]);
    if (!parse_number(fields[1], node.timestamp))
      parse_fail(source, lineno, "bad timestamp '" + std::string(fields[1]) + "'");
    if (fields.size() == 3) node.tokens = words(fields[2]);
    nodes.push_back(std::move(node));
  }
  return nodes;
}

std::vector<DirectedEdge> read_edges(std::istream& in, std::string_view source) {
  std::vector<DirectedEdge> edges;
  std::string line;
  for (std::size_t lineno = 1; next_line(in, line); ++lineno) {
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      parse_fail(source, lineno, "expected src<TAB>dst");
    edges.push_back({std::string(fields[0]), std::string(fields[1])});
  }
  return edges;
}

CommunityCover read_communities(std::istream& in, const TemporalTextNetwork& net, std::string_view source) {
  CommunityCover cover;
  cover.universe = net.num_nodes();
  std::string line;
  for (std::size_t lineno = 1; next_line(in, line); ++lineno) {
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() > 2 || fields[0].empty()) parse_fail(source, lineno, "expected community_id<TAB>node ids");
    std::vector<NodeIndex> members;
    if (fields.size() == 2) {
      for (const auto& id : words(fields[1])) {
        auto idx = net.find(id);
        if (!idx) throw Error(Errc::UnknownEndpoint, std::string(source) + ":" + std::to_string(lineno) + ": " + id);
        members.push_back(*idx);
      }
    }
    cover.labels.emplace_back(fields[0]);
    cover.communities.push_back(std::move(members));
  }
  cover.normalize();
  return cover;
}

ParsedNetwork parse_network(const NetworkFileSet& files, Directedness directedness) {
  ParsedNetwork parsed;
  {
    auto nodes_in = open_input(files.nodes);
    auto edges_in = open_input(files.edges);
    auto nodes = read_nodes(nodes_in, files.nodes.filename().string());
    auto edges = read_edges(edges_in, files.edges.filename().string());
    parsed.network = build_network(std::move(nodes), edges, directedness);
  }
  if (files.communities) {
    auto in = open_input(*files.communities);
    parsed.truth = read_communities(in, parsed.network, files.communities->filename().string());
  }
  return parsed;
}

void write_nodes(std::ostream& out, const TemporalTextNetwork& net) {
  std::vector<NodeIndex> order(net.num_nodes());
  std::iota(order.begin(), order.end(), NodeIndex{0});
  std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) { return net.node(a).id < net.node(b).id; });
  for (NodeIndex u : order) {
    const NodeRecord& node = net.node(u);
    out << node.id << '\t' << node.timestamp;
    if (!node.tokens.empty()) {
      out << '\t';
      for (std::size_t i = 0; i < node.tokens.size(); ++i) out << (i ? " " : "") << node.tokens[i];
    }
    out << '\n';
  }
}

void write_edges(std::ostream& out, const TemporalTextNetwork& net) {
  std::vector<std::pair<std::string_view, std::string_view>> rows;
  rows.reserve(net.num_edges());
  for (const Edge& e : net.edges()) rows.emplace_back(net.node(e.src).id, net.node(e.dst).id);
  std::sort(rows.begin(), rows.end());
  for (const auto& [src, dst] : rows) out << src << '\t' << dst << '\n';
}

void write_communities(std::ostream& out, const CommunityCover& cover, const std::vector<std::string>& node_ids) {
  for (std::size_t k = 0; k < cover.size(); ++k) {
    out << cover.label(k) << '\t';
    const auto& c = cover.communities[k];
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << node_ids.at(c[i]);
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Model container

void write_model(std::ostream& out, const FittedModel& model) {
  const auto k = model.F.cols();
  const auto n = model.F.rows();
  if (model.eta.rows() != k || model.eta.cols() != k) throw Error(Errc::ShapeMismatch, "eta is not K x K");
  if (model.node_ids.size() != static_cast<std::size_t>(n) || model.node_kinds.size() != static_cast<std::size_t>(n))
    throw Error(Errc::ShapeMismatch, "model needs one id and kind per F row");
  out << kModelHeader << '\n';
  out << "K\t" << k << '\n' << "N\t" << n << '\n' << "mode\t" << to_string(model.mode) << '\n';
  out << "loglik\t" << format_real(model.log_likelihood) << '\n';
  out << "sweeps\t" << model.sweeps << '\n';
  out << "converged\t" << (model.converged ? 1 : 0) << '\n';
  out << "dropped\t" << model.dropped_edges << '\n';
  out << "trace";
  for (double v : model.trace) out << '\t' << format_real(v);
  out << '\n' << "eta\n";
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) out << (j ? "\t" : "") << format_real(model.eta(i, j));
    out << '\n';
  }
  out << "F\n";
  for (Eigen::Index u = 0; u < n; ++u) {
    const auto idx = static_cast<std::size_t>(u);
    out << model.node_ids[idx] << '\t' << (model.node_kinds[idx] == NodeKind::Word ? 'w' : 'd');
    for (Eigen::Index j = 0; j < k; ++j) out << '\t' << format_real(model.F(u, j));
    out << '\n';
  }
  out << "end\n";
}

FittedModel read_model(std::istream& in, std::string_view source) {
  std::string line;
  std::size_t lineno = 0;
  auto expect_line = [&]() -> std::string_view {
    if (!next_line(in, line)) parse_fail(source, lineno + 1, "unexpected end of file (truncated model?)");
    ++lineno;
    return line;
  };
  if (!next_line(in, line) || line != kModelHeader)
    throw Error(Errc::FormatVersionMismatch, std::string(source) + ": first line must be '" +
                                                 std::string(kModelHeader) + "'");
  ++lineno;

  auto keyed = [&](std::string_view key) {
    const auto fields = split(expect_line(), '\t');
    if (fields.empty() || fields[0] != key) parse_fail(source, lineno, "expected '" + std::string(key) + "'");
    return std::vector<std::string>(fields.begin() + 1, fields.end());
  };
  auto single = [&](std::string_view key) {
    auto values = keyed(key);
    if (values.size() != 1) parse_fail(source, lineno, "expected one value after '" + std::string(key) + "'");
    return values.front();
  };
  auto real = [&](std::string_view text) {
    double v = 0.0;
    if (!parse_number(text, v)) parse_fail(source, lineno, "bad number '" + std::string(text) + "'");
    return v;
  };
  auto count = [&](std::string_view text) {
    std::size_t v = 0;
    if (!parse_number(text, v)) parse_fail(source, lineno, "bad count '" + std::string(text) + "'");
    return v;
  };

  FittedModel model;
  const std::size_t k = count(single("K"));
  const std::size_t n = count(single("N"));
  try {
    model.mode = parse_mode(single("mode"));
  } catch (const Error& e) {
    parse_fail(source, lineno, e.what());
  }
  model.log_likelihood = real(single("loglik"));
  model.sweeps = count(single("sweeps"));
  model.converged = count(single("converged")) != 0;
  model.dropped_edges = count(single("dropped"));
  for (const auto& v : keyed("trace")) model.trace.push_back(real(v));

  if (expect_line() != "eta") parse_fail(source, lineno, "expected 'eta'");
  model.eta.resize(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const auto fields = split(expect_line(), '\t');
    if (fields.size() != k) parse_fail(source, lineno, "eta row needs " + std::to_string(k) + " values");
    for (std::size_t j = 0; j < k; ++j)
      model.eta(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = real(fields[j]);
  }

  if (expect_line() != "F") parse_fail(source, lineno, "expected 'F'");
  model.F.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
  for (std::size_t u = 0; u < n; ++u) {
    const auto fields = split(expect_line(), '\t');
    if (fields.size() != k + 2) parse_fail(source, lineno, "F row needs id, kind and " + std::to_string(k) + " values");
    model.node_ids.emplace_back(fields[0]);
    if (fields[1] == "d") {
      model.node_kinds.push_back(NodeKind::Document);
    } else if (fields[1] == "w") {
      model.node_kinds.push_back(NodeKind::Word);
    } else {
      parse_fail(source, lineno, "node kind must be d or w");
    }
    for (std::size_t j = 0; j < k; ++j)
      model.F(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(j)) = real(fields[j + 2]);
  }
  if (expect_line() != "end") parse_fail(source, lineno, "expected 'end'");
  return model;
}

void save_model(const std::filesystem::path& path, const FittedModel& model) {
  std::ostringstream out;
  write_model(out, model);
  write_file_atomic(path, out.str());
}

FittedModel load_model(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_model(in, path.filename().string());
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoError, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw Error(Errc::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(Errc::IoError, "cannot move output into place at " + path.string());
  }
}

// ---------------------------------------------------------------------------
// Reports

void write_metric_report(std::ostream& out, const MetricReport& report) {
  out << kMetricHeader << '\n';
  out << "coverage\t" << format_real(report.coverage) << '\n';
  out << "f1\t" << format_real(report.f1) << '\n';
  out << "modularity\t" << format_real(report.modularity) << '\n';
  out << "omega\t" << format_real(report.omega) << '\n';
}

void write_analytics_report(std::ostream& out, const CommunityCover& truth, const InteractionScores& scores,
                            const std::vector<JaccardStudyRow>& jaccard) {
  auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string("NA"); };
  out << kAnalyticsHeader << '\n';
  for (std::size_t c = 0; c < truth.size(); ++c) {
    out << truth.label(c) << '\t' << format_real(scores.internal.at(c)) << '\t' << format_real(scores.external.at(c))
        << '\t' << opt(scores.ratio.at(c)) << '\t';
    if (c < jaccard.size()) {
      out << opt(jaccard[c].community_mean) << '\t' << opt(jaccard[c].baseline_mean);
    } else {
      out << "NA\tNA";
    }
    out << '\n';
  }
}

}  // namespace magic::io
