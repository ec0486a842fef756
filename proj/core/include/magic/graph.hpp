#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace magic {

using Timestamp = std::int64_t;
using NodeIndex = std::size_t;

enum class NodeKind { Document, Word };
enum class Directedness { Directed, Undirected };

struct NodeRecord {
  std::string id;
  Timestamp timestamp = 0;
  std::vector<std::string> tokens;  // multiset; empty for word nodes
  NodeKind kind = NodeKind::Document;
};

// Edge between two node ids, as supplied to build_network.
struct DirectedEdge {
  std::string src;
  std::string dst;
};

// Edge between two node indices, as stored.
struct Edge {
  NodeIndex src;
  NodeIndex dst;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed (or undirected) unweighted graph whose nodes carry a timestamp and
/// an optional token multiset. Immutable once built.
///
/// Edges are deduplicated and sorted by (src, dst) index. Undirected networks
/// store each pair once with src the smaller id (string order); in_neighbors
/// and out_neighbors then refer to that canonical orientation and
/// neighbors() gives the union.
class TemporalTextNetwork {
 public:
  TemporalTextNetwork() = default;

  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  Directedness directedness() const noexcept { return directedness_; }
  bool directed() const noexcept { return directedness_ == Directedness::Directed; }

  const NodeRecord& node(NodeIndex u) const { return nodes_.at(u); }
  std::span<const NodeRecord> nodes() const noexcept { return nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  Timestamp timestamp(NodeIndex u) const { return nodes_[u].timestamp; }
  std::optional<NodeIndex> find(std::string_view id) const;
  NodeIndex index_of(std::string_view id) const;  // throws UnknownEndpoint

  std::span<const NodeIndex> out_neighbors(NodeIndex u) const;
  std::span<const NodeIndex> in_neighbors(NodeIndex u) const;
  std::vector<NodeIndex> neighbors(NodeIndex u) const;  // in ∪ out, sorted
  std::size_t in_degree(NodeIndex u) const { return in_offsets_[u + 1] - in_offsets_[u]; }
  std::size_t out_degree(NodeIndex u) const { return out_offsets_[u + 1] - out_offsets_[u]; }
  std::size_t degree(NodeIndex u) const { return in_degree(u) + out_degree(u); }
  bool has_edge(NodeIndex src, NodeIndex dst) const;

  std::size_t count_kind(NodeKind kind) const;

 private:
  friend TemporalTextNetwork build_network(std::vector<NodeRecord>, const std::vector<DirectedEdge>&,
                                           Directedness);
  friend TemporalTextNetwork build_network_indexed(std::vector<NodeRecord>, std::vector<Edge>,
                                                   Directedness);
  void index_adjacency();

  std::vector<NodeRecord> nodes_;
  std::vector<Edge> edges_;
  Directedness directedness_ = Directedness::Directed;
  std::unordered_map<std::string, NodeIndex> id_index_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeIndex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeIndex> in_sources_;
};

/// Validates and assembles a network. Throws DuplicateNodeId, UnknownEndpoint
/// or SelfLoop. Duplicate edges collapse to one.
TemporalTextNetwork build_network(std::vector<NodeRecord> nodes, const std::vector<DirectedEdge>& edges,
                                  Directedness directedness = Directedness::Directed);

/// Same as build_network for callers that already hold node indices.
TemporalTextNetwork build_network_indexed(std::vector<NodeRecord> nodes, std::vector<Edge> edges,
                                          Directedness directedness = Directedness::Directed);

enum class Temporality { Natural, Complex };

struct TemporalityReport {
  Temporality kind = Temporality::Natural;
  std::vector<Edge> violations;  // edges with t(src) >= t(dst)
};

/// Natural iff every edge satisfies t(src) < t(dst). Throws UndirectedNetwork.
TemporalityReport classify_temporality(const TemporalTextNetwork& net);

/// Node permutation sorted by (timestamp, id) with maximal equal-timestamp
/// runs recorded as tie groups.
struct TimeOrderedIndex {
  std::vector<NodeIndex> order;
  std::vector<std::size_t> group_starts;  // offsets into order; back() == order.size()
  std::vector<std::size_t> group_of;      // node index -> tie group
  std::vector<std::size_t> rank;          // node index -> position in order

  std::size_t num_groups() const noexcept {
    return group_starts.empty() ? 0 : group_starts.size() - 1;
  }
  std::span<const NodeIndex> group(std::size_t g) const {
    return std::span<const NodeIndex>(order).subspan(group_starts[g], group_starts[g + 1] - group_starts[g]);
  }
};

TimeOrderedIndex time_ordered_view(const TemporalTextNetwork& net);

}  // namespace magic
