#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "magic/magic.hpp"

namespace magic::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NetworkOptions {
  std::string nodes;
  std::string edges;
  bool undirected = false;

  io::ParsedNetwork load(const std::string& truth = {}) const {
    io::NetworkFileSet files{nodes, edges, std::nullopt};
    if (!truth.empty()) files.communities = truth;
    return io::parse_network(files, undirected ? Directedness::Undirected : Directedness::Directed);
  }
};

struct ProjectionOptions {
  std::size_t min_df = 2;
  double max_df_ratio = 0.5;
  bool no_lowercase = false;
  std::string stopwords;

  ProjectionConfig config() const {
    ProjectionConfig cfg;
    cfg.min_document_frequency = min_df;
    cfg.max_document_frequency_ratio = max_df_ratio;
    cfg.lowercase = !no_lowercase;
    if (!stopwords.empty()) {
      std::ifstream in(stopwords);
      if (!in) throw Error(Errc::IoError, "cannot open " + stopwords);
      cfg.stopwords.clear();
      for (std::string word; in >> word;) cfg.stopwords.insert(word);
    }
    return cfg;
  }
};

struct FitOptions {
  std::string mode = "net";
  std::size_t max_sweeps = 500;
  double tolerance = 1e-4;
  double initial_step = 1.0;
  double shrink = 0.5;
  double armijo = 1e-4;
  int max_backtracks = 10;
  double epsilon_floor = kDefaultEpsilonFloor;
  double direction_clip = 10.0;
  bool strict = false;

  FitConfig config(std::size_t K, std::uint64_t seed) const {
    FitConfig cfg;
    cfg.K = K;
    cfg.mode = parse_mode(mode);
    cfg.max_sweeps = max_sweeps;
    cfg.tolerance = tolerance;
    cfg.line_search = {initial_step, shrink, armijo, max_backtracks};
    cfg.epsilon_floor = epsilon_floor;
    cfg.direction_clip = direction_clip;
    cfg.seed = seed;
    cfg.strict_temporality = strict;
    return cfg;
  }
};

void add_network_options(CLI::App* cmd, NetworkOptions& opts) {
  cmd->add_option("--nodes", opts.nodes, "Nodes file: id<TAB>timestamp[<TAB>tokens]")->required()->check(CLI::ExistingFile);
  cmd->add_option("--edges", opts.edges, "Edges file: src<TAB>dst")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--undirected", opts.undirected, "Treat edges as undirected pairs");
}

void add_projection_options(CLI::App* cmd, ProjectionOptions& opts) {
  cmd->add_option("--min-df", opts.min_df, "Minimum document frequency of a word")->check(CLI::PositiveNumber);
  cmd->add_option("--max-df-ratio", opts.max_df_ratio, "Maximum document frequency as a fraction of documents")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_flag("--no-lowercase", opts.no_lowercase, "Keep token case");
  cmd->add_option("--stopwords", opts.stopwords, "Whitespace-separated stopword file (replaces the default list)")
      ->check(CLI::ExistingFile);
}

void add_fit_options(CLI::App* cmd, FitOptions& opts) {
  cmd->add_option("--mode", opts.mode, "all | net | raw")->check(CLI::IsMember({"all", "net", "raw"}));
  cmd->add_option("--max-sweeps", opts.max_sweeps, "Sweep budget");
  cmd->add_option("--tolerance", opts.tolerance, "Relative log-likelihood improvement to stop at");
  cmd->add_option("--initial-step", opts.initial_step, "Line search initial step");
  cmd->add_option("--shrink", opts.shrink, "Line search shrink factor");
  cmd->add_option("--armijo", opts.armijo, "Line search sufficient-increase constant");
  cmd->add_option("--max-backtracks", opts.max_backtracks, "Line search backtracks");
  cmd->add_option("--epsilon-floor", opts.epsilon_floor, "Floor on affinities inside log(1 - exp(-x))");
  cmd->add_option("--direction-clip", opts.direction_clip, "Componentwise clip on ascent directions (0 = off)");
  cmd->add_flag("--strict", opts.strict, "Reject edges that go backward in time instead of dropping them");
}

fs::path output_dir(const std::string& dir) {
  fs::path path(dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + path.string());
  return path;
}

template <typename Write>
void write_output(const fs::path& path, Write&& write) {
  std::ostringstream buffer;
  write(buffer);
  io::write_file_atomic(path, buffer.str());
}

// key=value lines; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return entries;
}

std::string find_config(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].starts_with("--config=")) return args[i].substr(9);
  }
  return {};
}

bool given(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.starts_with(flag + "="); });
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_validate(const NetworkOptions& net_opts, std::ostream& out) {
  const auto parsed = net_opts.load();
  const auto& net = parsed.network;
  if (!net.directed()) {
    out << "undirected\n";
    return kExitOk;
  }
  const auto report = classify_temporality(net);
  out << (report.kind == Temporality::Natural ? "natural" : "complex") << '\n';
  for (const Edge& e : report.violations) out << "violation\t" << net.node(e.src).id << '\t' << net.node(e.dst).id << '\n';
  return kExitOk;
}

int cmd_project(const NetworkOptions& net_opts, const ProjectionOptions& proj_opts, const std::string& out_dir,
                std::ostream& out) {
  const auto parsed = net_opts.load();
  const auto projected = project(parsed.network, proj_opts.config());
  const fs::path dir = output_dir(out_dir);
  write_output(dir / "nodes.tsv", [&](std::ostream& os) { io::write_nodes(os, projected.network); });
  write_output(dir / "edges.tsv", [&](std::ostream& os) { io::write_edges(os, projected.network); });
  out << "documents\t" << projected.num_documents << '\n'
      << "words\t" << projected.num_words() << '\n'
      << "word_edges\t" << projected.network.num_edges() - parsed.network.num_edges() << '\n';
  return kExitOk;
}

int cmd_fit(const NetworkOptions& net_opts, const ProjectionOptions& proj_opts, const FitOptions& fit_opts,
            std::size_t K, std::uint64_t seed, const std::string& out_dir, std::ostream& out, std::ostream& err) {
  const auto parsed = net_opts.load();
  const FitConfig cfg = fit_opts.config(K, seed);
  const fs::path dir = output_dir(out_dir);
  FittedModel model;
  if (cfg.mode == Mode::All) {
    const auto projected = project(parsed.network, proj_opts.config());
    model = fit(projected.network, cfg);
  } else {
    model = fit(parsed.network, cfg);
  }
  if (model.dropped_edges > 0)
    err << "warning: " << model.dropped_edges << " edges do not go forward in time and were ignored\n";
  io::save_model(dir / "model.txt", model);
  out << "mode\t" << to_string(model.mode) << '\n'
      << "K\t" << model.num_communities() << '\n'
      << "N\t" << model.num_nodes() << '\n'
      << "loglik\t" << io::format_real(model.log_likelihood) << '\n'
      << "sweeps\t" << model.sweeps << '\n'
      << "converged\t" << (model.converged ? 1 : 0) << '\n';
  return kExitOk;
}

int cmd_communities(const std::string& model_path, const std::string& out_dir, std::size_t top_words,
                    std::ostream& out) {
  const FittedModel model = io::load_model(model_path);
  const Vector thresholds = community_thresholds(model.eta, model.num_nodes());
  CommunityCover cover = extract_cover(model.F, thresholds);
  const SplitCover split = split_cover(cover, model.node_kinds);

  std::vector<std::string> doc_ids, word_ids;
  std::vector<NodeIndex> word_rows;
  for (std::size_t u = 0; u < model.num_nodes(); ++u) {
    if (model.node_kinds[u] == NodeKind::Word) {
      std::string_view id = model.node_ids[u];
      if (id.starts_with(kWordIdPrefix)) id.remove_prefix(kWordIdPrefix.size());
      word_ids.emplace_back(id);
      word_rows.push_back(u);
    } else {
      doc_ids.push_back(model.node_ids[u]);
    }
  }

  const fs::path dir = output_dir(out_dir);
  write_output(dir / "communities.tsv", [&](std::ostream& os) { io::write_communities(os, split.documents, doc_ids); });
  if (!word_ids.empty()) {
    write_output(dir / "word_communities.tsv",
                 [&](std::ostream& os) { io::write_communities(os, split.words, word_ids); });
    write_output(dir / "top_words.tsv", [&](std::ostream& os) {
      os << "community\ttop_words\n";
      for (std::size_t k = 0; k < split.words.size(); ++k) {
        std::vector<NodeIndex> members = split.words.communities[k];
        const auto col = static_cast<Eigen::Index>(k);
        std::stable_sort(members.begin(), members.end(), [&](NodeIndex a, NodeIndex b) {
          return model.F(static_cast<Eigen::Index>(word_rows[a]), col) > model.F(static_cast<Eigen::Index>(word_rows[b]), col);
        });
        if (members.size() > top_words) members.resize(top_words);
        os << split.words.label(k) << '\t';
        for (std::size_t i = 0; i < members.size(); ++i) os << (i ? " " : "") << word_ids[members[i]];
        os << '\n';
      }
    });
  }
  out << "community\tdocuments\twords\tthreshold\n";
  for (std::size_t k = 0; k < cover.size(); ++k) {
    out << split.documents.label(k) << '\t' << split.documents.communities[k].size() << '\t'
        << split.words.communities[k].size() << '\t' << io::format_real(thresholds[static_cast<Eigen::Index>(k)])
        << '\n';
  }
  return kExitOk;
}

int cmd_eval(const NetworkOptions& net_opts, const std::string& detected_path, const std::string& truth_path,
             const std::string& out_dir, std::ostream& out) {
  const auto parsed = net_opts.load(truth_path);
  std::ifstream in(detected_path);
  if (!in) throw Error(Errc::IoError, "cannot open " + detected_path);
  const CommunityCover detected = io::read_communities(in, parsed.network, fs::path(detected_path).filename().string());
  const MetricReport report = evaluate(parsed.network, detected, *parsed.truth);
  io::write_metric_report(out, report);
  if (!out_dir.empty()) {
    write_output(output_dir(out_dir) / "eval.tsv", [&](std::ostream& os) { io::write_metric_report(os, report); });
  }
  return kExitOk;
}

int cmd_analyze(const NetworkOptions& net_opts, const std::string& truth_path, std::size_t max_pairs,
                std::uint64_t seed, const std::string& out_dir, std::ostream& out, std::ostream& err) {
  const auto parsed = net_opts.load(truth_path);
  const auto& net = parsed.network;
  const auto& truth = *parsed.truth;
  const double ratio = interaction_edge_ratio(net, truth);
  const InteractionScores scores = ic_ec_scores(net, truth);
  const auto jaccard = community_jaccard_study(net, truth, max_pairs, seed);
  io::write_analytics_report(out, truth, scores, jaccard);
  auto summary = [&](std::ostream& os) {
    os << io::kMetricHeader << '\n'
       << "interaction_edge_ratio\t" << io::format_real(ratio) << '\n'
       << "unlabeled_edges\t" << scores.unlabeled_edges << '\n'
       << "half_labeled_edges\t" << scores.half_labeled_edges << '\n';
  };
  err << "interaction_edge_ratio\t" << io::format_real(ratio) << '\n';
  if (!out_dir.empty()) {
    const fs::path dir = output_dir(out_dir);
    write_output(dir / "analytics.tsv",
                 [&](std::ostream& os) { io::write_analytics_report(os, truth, scores, jaccard); });
    write_output(dir / "summary.tsv", summary);
  }
  return kExitOk;
}

int cmd_choose_k(const NetworkOptions& net_opts, const ProjectionOptions& proj_opts, const FitOptions& fit_opts,
                 const std::vector<std::size_t>& candidates, double holdout, std::uint64_t seed, std::ostream& out,
                 std::ostream& err) {
  const auto parsed = net_opts.load();
  const FitConfig cfg = fit_opts.config(1, seed);
  ChooseKResult result;
  if (cfg.mode == Mode::All) {
    const auto projected = project(parsed.network, proj_opts.config());
    result = choose_K(projected.network, candidates, holdout, seed, cfg);
  } else {
    result = choose_K(parsed.network, candidates, holdout, seed, cfg);
  }
  for (std::size_t i = 0; i < result.scores.size(); ++i)
    err << "K=" << result.candidates[i] << "\tauc=" << io::format_real(result.scores[i]) << '\n';
  out << result.K << '\n';
  return kExitOk;
}

struct SampleOptions {
  std::string model;
  std::string nodes;
  std::string mode = "net";
  std::size_t blocks = 0;
  std::size_t block_size = 100;
  double strength = 1.0;
  double eta_in = 0.1;
  double eta_out = 0.005;
  Timestamp max_timestamp = 1000000;
  std::size_t vocabulary = 0;
  std::size_t tokens_per_document = 8;
};

int cmd_sample(const SampleOptions& opts, std::uint64_t seed, const std::string& out_dir, std::ostream& out) {
  const fs::path dir = output_dir(out_dir);
  TemporalTextNetwork net;
  std::optional<CommunityCover> truth;
  if (!opts.model.empty()) {
    if (opts.nodes.empty()) throw UsageError("sample --model needs --nodes for timestamps");
    const FittedModel model = io::load_model(opts.model);
    std::ifstream in(opts.nodes);
    if (!in) throw Error(Errc::IoError, "cannot open " + opts.nodes);
    std::vector<NodeRecord> records = io::read_nodes(in, fs::path(opts.nodes).filename().string());
    std::unordered_map<std::string, std::size_t> by_id;
    for (std::size_t i = 0; i < records.size(); ++i) by_id.emplace(records[i].id, i);
    // Document rows only; word rows of text-augmented models are not resampled.
    std::vector<Eigen::Index> rows;
    std::vector<NodeRecord> nodes;
    for (std::size_t u = 0; u < model.num_nodes(); ++u) {
      if (model.node_kinds[u] == NodeKind::Word) continue;
      auto it = by_id.find(model.node_ids[u]);
      if (it == by_id.end()) throw Error(Errc::UnknownEndpoint, model.node_ids[u] + " has no timestamp in " + opts.nodes);
      rows.push_back(static_cast<Eigen::Index>(u));
      nodes.push_back(records[it->second]);
    }
    AffiliationMatrix F(static_cast<Eigen::Index>(rows.size()), model.F.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) F.row(static_cast<Eigen::Index>(i)) = model.F.row(rows[i]);
    const Mode mode = model.mode == Mode::Raw ? Mode::Raw : Mode::Net;
    net = sample_network(F, model.eta, std::move(nodes), mode, seed);
  } else {
    if (opts.blocks == 0) throw UsageError("sample needs either --model or --blocks");
    PlantedSpec spec;
    spec.blocks = opts.blocks;
    spec.block_size = opts.block_size;
    spec.strength = opts.strength;
    spec.eta_in = opts.eta_in;
    spec.eta_out = opts.eta_out;
    spec.max_timestamp = opts.max_timestamp;
    spec.vocabulary_per_block = opts.vocabulary;
    spec.tokens_per_document = opts.tokens_per_document;
    PlantedNetwork planted = sample_planted(spec, parse_mode(opts.mode), seed);
    net = std::move(planted.network);
    truth = std::move(planted.truth);
  }
  write_output(dir / "nodes.tsv", [&](std::ostream& os) { io::write_nodes(os, net); });
  write_output(dir / "edges.tsv", [&](std::ostream& os) { io::write_edges(os, net); });
  if (truth) {
    std::vector<std::string> ids;
    for (const auto& node : net.nodes()) ids.push_back(node.id);
    write_output(dir / "truth.tsv", [&](std::ostream& os) { io::write_communities(os, *truth, ids); });
  }
  out << "nodes\t" << net.num_nodes() << '\n' << "edges\t" << net.num_edges() << '\n';
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Overlapping community detection in temporal text networks"};
  app.name("magic");
  app.require_subcommand(1);

  NetworkOptions net_opts;
  ProjectionOptions proj_opts;
  FitOptions fit_opts;
  SampleOptions sample_opts;
  std::string config_path, out_dir, model_path, detected_path, truth_path;
  std::uint64_t seed = 1;
  std::size_t K = 0;
  std::size_t top_words = 10;
  std::size_t max_pairs = kDefaultMaxJaccardPairs;
  std::vector<std::size_t> candidates;
  double holdout = 0.2;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "key=value file; command-line flags take precedence");
  };
  auto add_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", seed, "Seed for every random step"); };

  auto* validate = app.add_subcommand("validate", "Check a network and report whether it is natural");
  add_common(validate);
  add_network_options(validate, net_opts);

  auto* project_cmd = app.add_subcommand("project", "Write the projected (word-augmented) network");
  add_common(project_cmd);
  add_network_options(project_cmd, net_opts);
  add_projection_options(project_cmd, proj_opts);
  project_cmd->add_option("--out", out_dir, "Output directory")->required();

  auto* fit_cmd = app.add_subcommand("fit", "Fit the model and write model.txt");
  add_common(fit_cmd);
  add_network_options(fit_cmd, net_opts);
  add_projection_options(fit_cmd, proj_opts);
  add_fit_options(fit_cmd, fit_opts);
  add_seed(fit_cmd);
  fit_cmd->add_option("--k", K, "Number of communities")->required()->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  fit_cmd->add_option("--out", out_dir, "Output directory")->required();

  auto* communities_cmd = app.add_subcommand("communities", "Threshold a fitted model into communities");
  add_common(communities_cmd);
  communities_cmd->add_option("--model", model_path, "Model file")->required()->check(CLI::ExistingFile);
  communities_cmd->add_option("--out", out_dir, "Output directory")->required();
  communities_cmd->add_option("--top-words", top_words, "Words listed per community in top_words.tsv");

  auto* eval_cmd = app.add_subcommand("eval", "Score detected communities against ground truth");
  add_common(eval_cmd);
  add_network_options(eval_cmd, net_opts);
  eval_cmd->add_option("--detected", detected_path, "Detected communities file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--truth", truth_path, "Ground-truth communities file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--out", out_dir, "Also write eval.tsv here");

  auto* analyze_cmd = app.add_subcommand("analyze", "Interaction ratios and text similarity per community");
  add_common(analyze_cmd);
  add_network_options(analyze_cmd, net_opts);
  add_seed(analyze_cmd);
  analyze_cmd->add_option("--truth", truth_path, "Ground-truth communities file")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--max-pairs", max_pairs, "Pair sampling cap per community")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--out", out_dir, "Also write analytics.tsv and summary.tsv here");

  auto* choose_cmd = app.add_subcommand("choose-k", "Pick K by held-out link prediction");
  add_common(choose_cmd);
  add_network_options(choose_cmd, net_opts);
  add_projection_options(choose_cmd, proj_opts);
  add_fit_options(choose_cmd, fit_opts);
  add_seed(choose_cmd);
  choose_cmd->add_option("--candidates", candidates, "Candidate K values, comma separated")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  choose_cmd->add_option("--holdout", holdout, "Fraction of edges held out")->check(CLI::Range(0.0, 1.0));

  auto* sample_cmd = app.add_subcommand("sample", "Generate a network from a model or planted blocks");
  add_common(sample_cmd);
  add_seed(sample_cmd);
  sample_cmd->add_option("--model", sample_opts.model, "Model file to sample from")->check(CLI::ExistingFile);
  sample_cmd->add_option("--nodes", sample_opts.nodes, "Nodes file supplying timestamps (with --model)")
      ->check(CLI::ExistingFile);
  sample_cmd->add_option("--mode", sample_opts.mode, "net | raw (planted)")->check(CLI::IsMember({"net", "raw"}));
  sample_cmd->add_option("--blocks", sample_opts.blocks, "Planted block count");
  sample_cmd->add_option("--block-size", sample_opts.block_size, "Nodes per planted block");
  sample_cmd->add_option("--strength", sample_opts.strength, "Planted affiliation strength");
  sample_cmd->add_option("--eta-in", sample_opts.eta_in, "Planted within-block interaction");
  sample_cmd->add_option("--eta-out", sample_opts.eta_out, "Planted between-block interaction");
  sample_cmd->add_option("--max-timestamp", sample_opts.max_timestamp, "Timestamps are uniform in [1, max]");
  sample_cmd->add_option("--vocabulary", sample_opts.vocabulary, "Private words per block (0 = no text)");
  sample_cmd->add_option("--tokens-per-document", sample_opts.tokens_per_document, "Tokens per document");
  sample_cmd->add_option("--out", out_dir, "Output directory")->required();

  std::vector<std::string> args = raw_args;
  try {
    if (const std::string cfg = find_config(args); !cfg.empty()) {
      CLI::App* target = nullptr;
      for (CLI::App* sub : app.get_subcommands({})) {
        if (std::find(args.begin(), args.end(), sub->get_name()) != args.end()) {
          target = sub;
          break;
        }
      }
      for (const auto& [key, value] : read_config(cfg)) {
        const std::string flag = "--" + key;
        if (key == "config" || target == nullptr || target->get_option_no_throw(flag) == nullptr) continue;
        if (!given(args, flag)) args.push_back(flag + "=" + value);
      }
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(net_opts, out);
    if (*project_cmd) return cmd_project(net_opts, proj_opts, out_dir, out);
    if (*fit_cmd) return cmd_fit(net_opts, proj_opts, fit_opts, K, seed, out_dir, out, err);
    if (*communities_cmd) return cmd_communities(model_path, out_dir, top_words, out);
    if (*eval_cmd) return cmd_eval(net_opts, detected_path, truth_path, out_dir, out);
    if (*analyze_cmd) return cmd_analyze(net_opts, truth_path, max_pairs, seed, out_dir, out, err);
    if (*choose_cmd) return cmd_choose_k(net_opts, proj_opts, fit_opts, candidates, holdout, seed, out, err);
    if (*sample_cmd) return cmd_sample(sample_opts, seed, out_dir, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::InvalidArgument ? kExitUsage : kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace magic::cli
