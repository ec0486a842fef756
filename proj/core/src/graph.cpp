#include "magic/graph.hpp"

#include <algorithm>
#include <numeric>

#include "magic/error.hpp"

namespace magic {

std::optional<NodeIndex> TemporalTextNetwork::find(std::string_view id) const {
  auto it = id_index_.find(std::string(id));
  if (it == id_index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex TemporalTextNetwork::index_of(std::string_view id) const {
  auto idx = find(id);
  if (!idx) throw Error(Errc::UnknownEndpoint, std::string(id));
  return *idx;
}

std::span<const NodeIndex> TemporalTextNetwork::out_neighbors(NodeIndex u) const {
  return std::span<const NodeIndex>(out_targets_).subspan(out_offsets_[u], out_degree(u));
}

std::span<const NodeIndex> TemporalTextNetwork::in_neighbors(NodeIndex u) const {
  return std::span<const NodeIndex>(in_sources_).subspan(in_offsets_[u], in_degree(u));
}

std::vector<NodeIndex> TemporalTextNetwork::neighbors(NodeIndex u) const {
  auto in = in_neighbors(u);
  auto out = out_neighbors(u);
  std::vector<NodeIndex> all;
  all.reserve(in.size() + out.size());
  std::set_union(in.begin(), in.end(), out.begin(), out.end(), std::back_inserter(all));
  return all;
}

bool TemporalTextNetwork::has_edge(NodeIndex src, NodeIndex dst) const {
  auto out = out_neighbors(src);
  return std::binary_search(out.begin(), out.end(), dst);
}

std::size_t TemporalTextNetwork::count_kind(NodeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [kind](const NodeRecord& n) { return n.kind == kind; }));
}

void TemporalTextNetwork::index_adjacency() {
  const std::size_t n = nodes_.size();
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.src + 1];
    ++in_offsets_[e.dst + 1];
  }
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
  std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());
  out_targets_.assign(edges_.size(), 0);
  in_sources_.assign(edges_.size(), 0);
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // edges_ is sorted by (src, dst), so targets come out sorted; sources are
  // appended in src order, hence also sorted.
  for (const Edge& e : edges_) {
    out_targets_[out_fill[e.src]++] = e.dst;
    in_sources_[in_fill[e.dst]++] = e.src;
  }
}

TemporalTextNetwork build_network_indexed(std::vector<NodeRecord> nodes, std::vector<Edge> edges,
                                          Directedness directedness) {
  TemporalTextNetwork net;
  net.directedness_ = directedness;
  net.id_index_.reserve(nodes.size());
  for (NodeIndex i = 0; i < nodes.size(); ++i) {
    auto [it, inserted] = net.id_index_.emplace(nodes[i].id, i);
    if (!inserted) throw Error(Errc::DuplicateNodeId, nodes[i].id);
    if (nodes[i].kind == NodeKind::Word && (nodes[i].timestamp != 0 || !nodes[i].tokens.empty()))
      throw Error(Errc::InvalidArgument, "word node " + nodes[i].id + " must have timestamp 0 and no tokens");
  }
  for (Edge& e : edges) {
    if (e.src >= nodes.size()) throw Error(Errc::UnknownEndpoint, "#" + std::to_string(e.src));
    if (e.dst >= nodes.size()) throw Error(Errc::UnknownEndpoint, "#" + std::to_string(e.dst));
    if (e.src == e.dst) throw Error(Errc::SelfLoop, nodes[e.src].id);
    if (directedness == Directedness::Undirected && nodes[e.dst].id < nodes[e.src].id) std::swap(e.src, e.dst);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  net.nodes_ = std::move(nodes);
  net.edges_ = std::move(edges);
  net.index_adjacency();
  return net;
}

TemporalTextNetwork build_network(std::vector<NodeRecord> nodes, const std::vector<DirectedEdge>& edges,
                                  Directedness directedness) {
  std::unordered_map<std::string_view, NodeIndex> ids;
  ids.reserve(nodes.size());
  for (NodeIndex i = 0; i < nodes.size(); ++i) {
    if (!ids.emplace(nodes[i].id, i).second) throw Error(Errc::DuplicateNodeId, nodes[i].id);
  }
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const DirectedEdge& e : edges) {
    auto s = ids.find(e.src);
    if (s == ids.end()) throw Error(Errc::UnknownEndpoint, e.src);
    auto d = ids.find(e.dst);
    if (d == ids.end()) throw Error(Errc::UnknownEndpoint, e.dst);
    if (s->second == d->second) throw Error(Errc::SelfLoop, e.src);
    indexed.push_back({s->second, d->second});
  }
  ids.clear();  // views into nodes; drop before moving them
  return build_network_indexed(std::move(nodes), std::move(indexed), directedness);
}

TemporalityReport classify_temporality(const TemporalTextNetwork& net) {
  if (!net.directed()) throw Error(Errc::UndirectedNetwork, "temporality is defined for directed networks");
  TemporalityReport report;
  for (const Edge& e : net.edges()) {
    if (!(net.timestamp(e.src) < net.timestamp(e.dst))) report.violations.push_back(e);
  }
  report.kind = report.violations.empty() ? Temporality::Natural : Temporality::Complex;
  return report;
}

TimeOrderedIndex time_ordered_view(const TemporalTextNetwork& net) {
  TimeOrderedIndex index;
  const std::size_t n = net.num_nodes();
  index.order.resize(n);
  std::iota(index.order.begin(), index.order.end(), NodeIndex{0});
  std::stable_sort(index.order.begin(), index.order.end(), [&](NodeIndex a, NodeIndex b) {
    const auto ta = net.timestamp(a);
    const auto tb = net.timestamp(b);
    if (ta != tb) return ta < tb;
    return net.node(a).id < net.node(b).id;
  });
  index.group_of.assign(n, 0);
  index.rank.assign(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const NodeIndex u = index.order[pos];
    if (pos == 0 || net.timestamp(u) != net.timestamp(index.order[pos - 1])) index.group_starts.push_back(pos);
    index.group_of[u] = index.group_starts.size() - 1;
    index.rank[u] = pos;
  }
  index.group_starts.push_back(n);
  if (n == 0) index.group_starts.clear();
  return index;
}

}  // namespace magic
