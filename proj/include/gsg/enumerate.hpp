#pragma once

#include <vector>

#include "gsg/signed_graph.hpp"

namespace gsg {

struct CircleInfo {
  EdgeSet edges;
  Sign sign = 1;
};

// All circles (simple closed subgraphs, loops included) within `scope`.
std::vector<CircleInfo> enumerate_circles(const SignedGraph& sg, const EdgeSet& scope);

// All sign circuits contained in `scope`: loose edges, positive circles, and
// handcuffs of two negative figures with every minimal connecting path.
std::vector<SignCircuit> enumerate_sign_circuits(const SignedGraph& sg,
                                                 const EdgeSet& scope);

}  // namespace gsg
