#ifndef ORDMMS_LONE_DIVIDER_HPP
#define ORDMMS_LONE_DIVIDER_HPP

#include <functional>
#include <vector>

#include "ordmms/core.hpp"
#include "ordmms/mms.hpp"

namespace ordmms {

/// The first ell groups of n ordered positions each: group l covers
/// positions [l*n, (l+1)*n).
struct BalancedGroups {
    int ell = 1;
    int n = 1;

    int group_of(int pos) const { return pos < ell * n ? pos / n : -1; }
};

/// True iff the first min(|b|, ell) groups each contribute exactly one good
/// and later groups contribute none.
bool is_l_balanced(const Bundle& b, const BalancedGroups& groups);

struct BagRecord {
    int step = 0;  // 0: top-tuple extraction, 1: high-value bags,
                   // 2: remainder-set bags, 3: plain bag-filling
    Bundle bundle;
    Rational waste;
};

struct DividerTrace {
    int k = 0;
    int kprime = 0;
    int case_id = 0;  // 1, 2 or 3
    int s = 0;        // acceptable bundles built in step 1 (case 3 only)
    std::vector<BagRecord> bags;
};

struct DividerState {
    std::vector<Bundle> allocated;  // k previously allocated bundles
    Bundle remaining;
};

/// Thrown when the divider cannot produce the promised number of acceptable
/// bundles; indicates a violated precondition.
struct ContractViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The restricted divider strategy: builds n-k pairwise-disjoint l-balanced
/// bundles from the remaining goods, each worth at least ell to the divider,
/// covering every remaining good. Requires sv.values in non-increasing
/// position order with sv.witness in the same position space, and every
/// allocated bundle l-balanced and worth less than ell.
std::vector<Bundle> balanced_partition(const ScaledValuation& sv,
                                       const DividerState& state,
                                       const BalancedGroups& groups,
                                       DividerTrace* trace = nullptr);

Rational waste(const ScaledValuation& sv, const Bundle& b);

/// Divider callback: partition the remaining goods into n-k bundles
/// acceptable to the divider agent.
using DividerStrategy =
    std::function<std::vector<Bundle>(int divider, const DividerState& state)>;

/// Generic Lone Divider loop. The lowest-index remaining agent divides, an
/// envy-free matching assigns acceptable bundles, and the rest recurse.
Allocation lone_divider(const std::vector<std::vector<Rational>>& values,
                        const std::vector<Rational>& thresholds, int m,
                        const DividerStrategy& strategy);

struct SolveResult {
    Allocation allocation;        // original good ids, dummies stripped
    Allocation ordered;           // per-agent ordered-position space
    OrderingMaps maps;            // position -> original good, per agent
    std::vector<Rational> shares; // per-agent guarantee used for scaling
    int d = 0;
    int padded_m = 0;
};

/// Orders each agent's scaled valuation (given in the padded instance's good
/// space), runs the restricted Lone Divider with threshold ell, and un-orders
/// by picking sequence, stripping goods past `original_m`.
SolveResult restricted_lone_divider(int original_m, int padded_m, int ell,
                                    std::vector<ScaledValuation> svs);

/// Full pipeline for the l-out-of-floor((l+1/2)n) guarantee: pad, compute
/// per-agent witnesses (exact shares, or greedy lower bounds when
/// greedy_thresholds is set), scale, run the restricted Lone Divider with
/// threshold ell, and un-order by picking sequence.
SolveResult solve_ordinal(const Instance& inst, int ell,
                          bool greedy_thresholds = false,
                          int good_cap = kDefaultGoodCap);

}  // namespace ordmms

#endif
