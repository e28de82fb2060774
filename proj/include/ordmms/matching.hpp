#ifndef ORDMMS_MATCHING_HPP
#define ORDMMS_MATCHING_HPP

#include <utility>
#include <vector>

namespace ordmms {

/// Agents on one side, candidate bundles ("parts") on the other. An edge
/// (i, j) means agent i finds part j acceptable.
struct AcceptabilityGraph {
    int agents = 0;
    int parts = 0;
    std::vector<std::vector<bool>> edge;  // edge[agent][part]

    AcceptabilityGraph() = default;
    AcceptabilityGraph(int a, int p)
        : agents(a), parts(p), edge(a, std::vector<bool>(p, false)) {}
};

/// Maximum-cardinality envy-free matching: a matching in which no unmatched
/// agent is adjacent to a matched part. Returns (agent, part) pairs sorted by
/// agent. Starts from a maximum matching and repeatedly discards every part
/// adjacent to an unmatched agent (freeing its partner) until a fixed point.
std::vector<std::pair<int, int>> envy_free_matching(const AcceptabilityGraph& g);

}  // namespace ordmms

#endif
