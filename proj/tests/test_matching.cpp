#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <functional>
#include <random>

#include "ordmms/matching.hpp"

using namespace ordmms;

namespace {

AcceptabilityGraph graph(int agents, int parts,
                         const std::vector<std::pair<int, int>>& edges) {
    AcceptabilityGraph g;
    g.agents = agents;
    g.parts = parts;
    g.edge.assign(agents, std::vector<bool>(parts, false));
    for (auto [a, p] : edges) g.edge[a][p] = true;
    return g;
}

bool is_envy_free(const AcceptabilityGraph& g,
                  const std::vector<std::pair<int, int>>& matching) {
    std::vector<bool> matched_agent(g.agents, false), matched_part(g.parts, false);
    for (auto [a, p] : matching) {
        if (!g.edge[a][p]) return false;
        if (matched_agent[a] || matched_part[p]) return false;
        matched_agent[a] = true;
        matched_part[p] = true;
    }
    for (int a = 0; a < g.agents; ++a) {
        if (matched_agent[a]) continue;
        for (int p = 0; p < g.parts; ++p)
            if (g.edge[a][p] && matched_part[p]) return false;
    }
    return true;
}

// maximum envy-free matching size by exhaustive (agents, parts) subset pairs
int brute_max_ef(const AcceptabilityGraph& g) {
    const int na = g.agents, np = g.parts;
    auto perfect = [&](unsigned amask, unsigned pmask) {
        std::vector<int> agents, parts;
        for (int a = 0; a < na; ++a)
            if (amask >> a & 1u) agents.push_back(a);
        for (int p = 0; p < np; ++p)
            if (pmask >> p & 1u) parts.push_back(p);
        std::vector<int> match(parts.size(), -1);
        std::vector<bool> used;
        std::function<bool(int)> aug = [&](int ai) {
            for (size_t pi = 0; pi < parts.size(); ++pi) {
                if (used[pi] || !g.edge[agents[ai]][parts[pi]]) continue;
                used[pi] = true;
                if (match[pi] < 0 || aug(match[pi])) {
                    match[pi] = ai;
                    return true;
                }
            }
            return false;
        };
        for (size_t ai = 0; ai < agents.size(); ++ai) {
            used.assign(parts.size(), false);
            if (!aug(static_cast<int>(ai))) return false;
        }
        return true;
    };
    int best = 0;
    for (unsigned amask = 0; amask < (1u << na); ++amask) {
        const int sz = std::popcount(amask);
        if (sz <= best) continue;
        // envy-freeness: agents outside amask may touch no matched part
        unsigned forbidden = 0;
        for (int a = 0; a < na; ++a) {
            if (amask >> a & 1u) continue;
            for (int p = 0; p < np; ++p)
                if (g.edge[a][p]) forbidden |= 1u << p;
        }
        for (unsigned pmask = 0; pmask < (1u << np); ++pmask) {
            if (std::popcount(pmask) != sz || (pmask & forbidden)) continue;
            if (perfect(amask, pmask)) {
                best = sz;
                break;
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("complete bipartite graph gets a perfect matching") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n; ++a)
            for (int p = 0; p < n; ++p) edges.emplace_back(a, p);
        auto m = envy_free_matching(graph(n, n, edges));
        CHECK(static_cast<int>(m.size()) == n);
    }
}

TEST_CASE("contested part forces a size-1 envy-free matching") {
    AcceptabilityGraph g = graph(3, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}});
    auto m = envy_free_matching(g);
    REQUIRE(m.size() == 1);
    CHECK(m[0].first == 0);
    CHECK(m[0].second != 0);  // using Y1 would make agents 2,3 envious
    CHECK(is_envy_free(g, m));
    CHECK(brute_max_ef(g) == 1);
}

TEST_CASE("an agent adjacent to every part guarantees a nonempty matching") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        // as in the Lone Divider: one part per remaining agent
        const int na = 1 + static_cast<int>(rng() % 4);
        const int np = na;
        AcceptabilityGraph g = graph(na, np, {});
        for (int a = 1; a < na; ++a)
            for (int p = 0; p < np; ++p) g.edge[a][p] = rng() % 2;
        for (int p = 0; p < np; ++p) g.edge[0][p] = true;  // the divider
        auto m = envy_free_matching(g);
        CHECK(!m.empty());
        CHECK(is_envy_free(g, m));
    }
}

TEST_CASE("matches brute force on all graphs up to 4x4") {
    for (int na = 1; na <= 4; ++na) {
        const int np = na;
        const int bits = na * np;
        for (unsigned code = 0; code < (1u << bits); ++code) {
            AcceptabilityGraph g = graph(na, np, {});
            for (int b = 0; b < bits; ++b)
                if (code >> b & 1u) g.edge[b / np][b % np] = true;
            auto m = envy_free_matching(g);
            CHECK(is_envy_free(g, m));
            CHECK(static_cast<int>(m.size()) == brute_max_ef(g));
        }
    }
}

TEST_CASE("matches brute force on random 5x5..7x7 graphs") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 400; ++trial) {
        const int na = 5 + static_cast<int>(rng() % 3);
        const int np = 5 + static_cast<int>(rng() % 3);
        AcceptabilityGraph g = graph(na, np, {});
        for (int a = 0; a < na; ++a)
            for (int p = 0; p < np; ++p) g.edge[a][p] = rng() % 3 == 0;
        auto m = envy_free_matching(g);
        CHECK(is_envy_free(g, m));
        CHECK(static_cast<int>(m.size()) == brute_max_ef(g));
    }
}
