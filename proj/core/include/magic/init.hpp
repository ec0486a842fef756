#pragma once

#include <cstdint>
#include <span>

#include "magic/model.hpp"

namespace magic {

/// cut(S) / min(vol(S), vol(V \ S)) with edges counted regardless of
/// direction. A zero denominator yields 1 (worst). Throws EmptyOrFullSet.
double conductance(const TemporalTextNetwork& net, std::span<const NodeIndex> members);

/// Conductance-seeded affiliations. Each node u proposes S_u = inN(u) ∪ {u}
/// (N(u) ∪ {u} in Raw mode); S_u is a seed when its conductance is strictly
/// lower than that of S_v for every v in outN(u) (N(u) in Raw mode). The K
/// lowest-conductance seeds get membership 1. Communities left without a seed
/// are filled with ceil(N/K) uniformly sampled nodes.
AffiliationMatrix init_affiliations(const TemporalTextNetwork& net, std::size_t K, std::uint64_t seed,
                                    Mode mode = Mode::Net);

/// 0.9 on the diagonal, 0.1 elsewhere.
InteractionMatrix init_interactions(std::size_t K);

}  // namespace magic
