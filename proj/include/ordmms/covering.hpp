#ifndef ORDMMS_COVERING_HPP
#define ORDMMS_COVERING_HPP

#include <functional>
#include <vector>

#include "ordmms/core.hpp"
#include "ordmms/rational.hpp"

namespace ordmms {

struct FilledBag {
    int agent = -1;  // receiver (participant index)
    int seed = -1;   // leftmost good the bag was initialized with
    Bundle goods;
};

struct CoverResult {
    std::vector<FilledBag> filled;
    Bundle leftover;

    int count() const { return static_cast<int>(filled.size()); }
};

/// A cover-share value together with the successful simulation at that value.
struct CoverShare {
    Value value = 0;
    CoverResult witness;
};

/// A bin-covering procedure: given an ordered instance and per-agent
/// thresholds, award bundles to agents.
using CoverOracle = std::function<CoverResult(
    const Instance&, const std::vector<Rational>&)>;

/// Bag k is seeded with the k-th leftmost unconsumed good and filled from the
/// right end (ascending value) until some remaining agent accepts it; ties go
/// to the lowest agent index. Requires every row non-increasing.
CoverResult bidirectional_bag_filling(const Instance& ordered,
                                      const std::vector<Rational>& thresholds);

/// Same, but bags grow left-to-right in descending order of value.
CoverResult unidirectional_bag_filling(const Instance& ordered,
                                       const std::vector<Rational>& thresholds);

/// Largest integer t for which the oracle fills at least `d` bundles when run
/// with d clones of `row` at threshold t. Binary search over [0, v(M)]; the
/// boundary (success at t, failure at t+1) is asserted. The witness merges the
/// leftover into the last filled bundle, giving a d-partition.
CoverShare cover_share(const std::vector<Value>& row, int d,
                       const CoverOracle& oracle);

/// Audit variant: downward linear scan instead of binary search.
CoverShare cover_share_linear(const std::vector<Value>& row, int d,
                              const CoverOracle& oracle);

/// Bidirectional bag-filling share: cover_share with the bidirectional oracle
/// and d = n.
CoverShare bbfs(const std::vector<Value>& row, int n);

struct BBFSAllocationResult {
    Allocation allocation;  // original good ids, dummies stripped
    Allocation ordered;
    OrderingMaps maps;
    std::vector<Value> thresholds;
    bool prefix_invariant_held = true;  // allocated-goods prefix containment
};

/// Orders the instance, computes per-agent BBFS thresholds, and runs
/// bidirectional bag-filling; exactly n bundles are awarded. Checks during
/// execution that the globally allocated goods stay a subset of the goods
/// allocated at the same round in every remaining agent's simulation.
BBFSAllocationResult bbfs_allocation(const Instance& inst);

/// Exact bin covering: the maximum number of disjoint bundles each worth at
/// least t (each bundle nonempty). Subset DP; throws beyond `good_cap` goods.
int cover_opt_exact(const std::vector<Value>& row, Value t, int good_cap = 14);

/// Guaranteed fill count of the JS bin-covering scheme: opt - 2.35*opt^(2/3) - 1.
double js_bound(double opt);

/// The epsilon choice (13*t/s)^(1/3) used to derive that bound.
double js_epsilon(double total_value, double bin_size);

/// Denominator of the polynomial-time l-out-of-d guarantee:
/// ceil(d + 15*d^(2/3) + ell) with d = floor((ell+1/2)*n).
long long approx_d(int ell, int n);

struct EllApproxResult {
    Allocation allocation;
    std::vector<Value> shares;  // per-agent cover share at d
    int d = 0;
};

/// Pipeline for ell >= 2: per-agent cover shares at d = floor((ell+1/2)n),
/// scaling so every witness bundle is worth exactly 1, then the restricted
/// Lone Divider at threshold ell. Each agent ends up with at least
/// ell * share_i.
EllApproxResult ell_approx_allocation(const Instance& inst, int ell,
                                      const CoverOracle& oracle);

}  // namespace ordmms

#endif
