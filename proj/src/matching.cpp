#include "ordmms/matching.hpp"

#include <algorithm>

namespace ordmms {

namespace {

bool try_augment(const AcceptabilityGraph& g, int agent,
                 std::vector<int>& match_part, std::vector<int>& match_agent,
                 std::vector<bool>& visited) {
    for (int p = 0; p < g.parts; ++p) {
        if (!g.edge[agent][p] || visited[p]) continue;
        visited[p] = true;
        if (match_part[p] < 0 ||
            try_augment(g, match_part[p], match_part, match_agent, visited)) {
            match_part[p] = agent;
            match_agent[agent] = p;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<std::pair<int, int>> envy_free_matching(const AcceptabilityGraph& g) {
    std::vector<int> match_agent(g.agents, -1);  // agent -> part
    std::vector<int> match_part(g.parts, -1);    // part -> agent
    for (int i = 0; i < g.agents; ++i) {
        std::vector<bool> visited(g.parts, false);
        try_augment(g, i, match_part, match_agent, visited);
    }

    std::vector<bool> discarded(g.parts, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < g.agents; ++i) {
            if (match_agent[i] >= 0) continue;
            for (int p = 0; p < g.parts; ++p) {
                if (!g.edge[i][p] || discarded[p]) continue;
                discarded[p] = true;
                if (match_part[p] >= 0) {
                    match_agent[match_part[p]] = -1;
                    match_part[p] = -1;
                }
                changed = true;
            }
        }
    }

    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < g.agents; ++i)
        if (match_agent[i] >= 0) out.emplace_back(i, match_agent[i]);
    return out;
}

}  // namespace ordmms
