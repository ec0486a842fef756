#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "magic/magic.hpp"

namespace magic::fixture {

struct N {
  std::string id;
  Timestamp t = 1;
  std::vector<std::string> tokens = {};
};

inline TemporalTextNetwork net(std::initializer_list<N> nodes,
                               std::initializer_list<std::pair<std::string, std::string>> edges,
                               Directedness directedness = Directedness::Directed) {
  std::vector<NodeRecord> records;
  for (const auto& n : nodes) records.push_back({n.id, n.t, n.tokens, NodeKind::Document});
  std::vector<DirectedEdge> list;
  for (const auto& [s, d] : edges) list.push_back({s, d});
  return build_network(std::move(records), list, directedness);
}

inline CommunityCover cover(std::size_t universe, std::vector<std::vector<NodeIndex>> communities) {
  CommunityCover c;
  c.universe = universe;
  c.communities = std::move(communities);
  return c;
}

template <typename F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected magic::Error");
}

}  // namespace magic::fixture
