#ifndef ORDMMS_RESPONSIVE_HPP
#define ORDMMS_RESPONSIVE_HPP

#include <vector>

#include "ordmms/core.hpp"

namespace ordmms {

/// B_j: bundles holding a strict majority of the first 2^j - 1 goods
/// (goods are 0-indexed; good 0 is the highest-ranked).
struct MajorityFamily {
    int j = 1;

    bool contains(const Bundle& b) const {
        const long long prefix = (1LL << j) - 1;
        long long cnt = 0;
        for (int g : b.goods)
            if (g < prefix) ++cnt;
        return 2 * cnt > prefix;
    }
};

/// rank[g] is good g's position in a strict ranking (0 = best). True iff an
/// injection from x into y exists mapping each good to a weakly higher-ranked
/// one.
bool dominates(const std::vector<int>& rank, const Bundle& x, const Bundle& y);

/// Two-agent construction over m = 2^(d*d) - 1 commonly-ranked goods.
/// Agent 1 values a bundle 1 iff it lies in some intersection
/// B_{(i-1)d+1} ... B_{(i-1)d+d}; agent 2 uses the transposed index pattern.
/// Everything else is worth 0.
int counterexample_value(int d, int agent, const Bundle& b);

/// The d bundles G_{(i-1)d+1} U ... U G_{(i-1)d+d} (agent 1) or their
/// transposed counterparts (agent 2), where G_j covers goods
/// 2^(j-1)-1 .. 2^j-2. Each part is worth 1 to its agent.
std::vector<Bundle> counterexample_partition(int d, int agent);

/// Checks that both agents' witness partitions reach value 1 and that no
/// bipartition of the goods gives both agents value 1 at once. Exhaustive
/// 2^m sweep, so d*d must stay <= 4.
bool verify_counterexample(int d);

}  // namespace ordmms

#endif
