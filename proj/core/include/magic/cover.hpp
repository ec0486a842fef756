#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "magic/graph.hpp"

namespace magic {

/// K possibly overlapping node sets over a universe of `universe` node
/// indices. Members are kept sorted and unique; empty communities are allowed.
struct CommunityCover {
  std::vector<std::vector<NodeIndex>> communities;
  std::vector<std::string> labels;  // optional, parallel to communities
  std::size_t universe = 0;

  std::size_t size() const noexcept { return communities.size(); }
  std::size_t num_empty() const;
  /// Sorts, dedups and range-checks every community; throws InvalidArgument.
  void normalize();
  /// Node -> communities it belongs to.
  std::vector<std::vector<std::size_t>> memberships() const;
  std::string label(std::size_t k) const;
};

}  // namespace magic
