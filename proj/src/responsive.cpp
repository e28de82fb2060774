#include "ordmms/responsive.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordmms {

bool dominates(const std::vector<int>& rank, const Bundle& x, const Bundle& y) {
    if (x.goods.size() > y.goods.size()) return false;
    auto by_rank = [&](const Bundle& b) {
        std::vector<int> r;
        r.reserve(b.goods.size());
        for (int g : b.goods) r.push_back(rank.at(g));
        std::sort(r.begin(), r.end());
        return r;
    };
    const std::vector<int> rx = by_rank(x), ry = by_rank(y);
    // match x's best against y's best, and so on; any injection exists iff
    // this greedy one does
    for (size_t t = 0; t < rx.size(); ++t)
        if (ry[t] > rx[t]) return false;
    return true;
}

namespace {

long long goods_count(int d) { return (1LL << (d * d)) - 1; }

bool in_family(const Bundle& b, int j) { return MajorityFamily{j}.contains(b); }

bool worth_one(int d, int agent, const Bundle& b) {
    for (int i = 1; i <= d; ++i) {
        bool all = true;
        for (int j = 1; j <= d && all; ++j) {
            const int idx = agent == 1 ? (i - 1) * d + j : (j - 1) * d + i;
            all = in_family(b, idx);
        }
        if (all) return true;
    }
    return false;
}

}  // namespace

int counterexample_value(int d, int agent, const Bundle& b) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (agent != 1 && agent != 2) throw std::invalid_argument("agent must be 1 or 2");
    const long long m = goods_count(d);
    for (int g : b.goods)
        if (g < 0 || g >= m)
            throw std::invalid_argument("good outside the 2^(d*d)-1 range");
    return worth_one(d, agent, b) ? 1 : 0;
}

std::vector<Bundle> counterexample_partition(int d, int agent) {
    std::vector<Bundle> parts(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            const int idx = agent == 1 ? (i - 1) * d + j : (j - 1) * d + i;
            // block G_idx: goods 2^(idx-1)-1 .. 2^idx-2
            for (long long g = (1LL << (idx - 1)) - 1; g <= (1LL << idx) - 2; ++g)
                parts[i - 1].add(static_cast<int>(g));
        }
    return parts;
}

bool verify_counterexample(int d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (d * d > 4) throw std::invalid_argument("d too large for exhaustive sweep");
    const int m = static_cast<int>(goods_count(d));

    for (int agent = 1; agent <= 2; ++agent) {
        std::vector<bool> covered(m, false);
        for (const Bundle& p : counterexample_partition(d, agent)) {
            if (counterexample_value(d, agent, p) != 1) return false;
            for (int g : p.goods) {
                if (covered[g]) return false;  // parts must be disjoint
                covered[g] = true;
            }
        }
        if (std::find(covered.begin(), covered.end(), false) != covered.end())
            return false;
    }

    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Bundle a1, a2;
        for (int g = 0; g < m; ++g)
            (mask >> g & 1u ? a1 : a2).add(g);
        if (counterexample_value(d, 1, a1) == 1 &&
            counterexample_value(d, 2, a2) == 1)
            return false;
    }
    return true;
}

}  // namespace ordmms
