#pragma once

#include <span>
#include <string>
#include <vector>

#include "poset.hpp"

namespace charposet {

enum class Direction { Up, Down };

/// Path of pairwise comparable nodes; directions[i] relates nodes[i] and nodes[i + 1].
struct WitnessChain {
  std::vector<PosetNode> nodes;
  std::vector<Direction> directions;
};

/// (H, alpha) <= (G, omega) >= (K, beta) for alpha, beta sharing a constituent on H ∩ K.
/// Throws PreconditionFailed if they do not.
WitnessChain witness_theorem3(const CharPoset& poset, const PosetNode& a, const PosetNode& b);

/// Chain from (L_0, alpha_0) to (L_{n+1}, alpha_{n+1}) built by descending
/// through the running intersections K_j = L_0 ∩ ... ∩ L_j.
/// `chain` holds poset subgroup indices L_0..L_{n+1}.
WitnessChain witness_theorem4(const CharPoset& poset, std::span<const int> chain, int alpha_first,
                              int alpha_last);

/// True when every consecutive pair is comparable in the recorded direction.
bool validate_chain(const CharPoset& poset, const WitnessChain& chain);

struct Connection {
  WitnessChain chain;
  std::string route;  ///< "identity", "theorem3", "theorem4" or "graph"
};

/// Chain between two nodes of the same component. Tries the direct
/// intersection argument, then the descent to I, then a shortest path in the
/// comparability graph. Throws PreconditionFailed across components.
Connection connect(const CharPoset& poset, const PosetNode& a, const PosetNode& b);

}  // namespace charposet
