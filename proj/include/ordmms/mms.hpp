#ifndef ORDMMS_MMS_HPP
#define ORDMMS_MMS_HPP

#include <utility>
#include <vector>

#include "ordmms/core.hpp"
#include "ordmms/rational.hpp"

namespace ordmms {

/// An l-out-of-d share together with a d-partition attaining it.
struct MMSWitness {
    Rational value;
    std::vector<Bundle> partition;  // exactly d bundles, covering all goods
};

/// One agent's valuation after normalization: the l-out-of-d share of the
/// scaled values is exactly `ell`, and every witness bundle is worth at most
/// ell - x (the ell-1 smallest sum to x).
struct ScaledValuation {
    std::vector<Rational> values;
    int ell = 1;
    Rational x;
    std::vector<Bundle> witness;
    bool degenerate = false;  // all-zero valuation; every bundle acceptable
};

inline constexpr int kDefaultGoodCap = 14;

/// Exact l-out-of-d share by branch-and-bound over labeled-part assignments.
/// Throws std::runtime_error when the number of nonzero goods exceeds
/// `good_cap`.
MMSWitness mms_exact(const Instance& inst, int agent, int ell, int d,
                     int good_cap = kDefaultGoodCap);
MMSWitness mms_exact_row(const std::vector<Rational>& row, int ell, int d,
                         int good_cap = kDefaultGoodCap);

/// Sandwich bounds: ell * MMS^{1,d} <= MMS^{ell,d} <= ell * MMS^{1,d-ell+1}.
std::pair<Rational, Rational> mms_bounds(const Instance& inst, int agent,
                                         int ell, int d,
                                         int good_cap = kDefaultGoodCap);

/// Greedy number partitioning: goods in descending value, each to the
/// currently lightest of d bundles. The sum of the ell lightest bundles is a
/// lower bound for the exact share.
MMSWitness greedy_lower_bound(const Instance& inst, int agent, int ell, int d);
MMSWitness greedy_lower_bound_row(const std::vector<Rational>& row, int ell,
                                  int d);

/// Normalizes one agent's row so the witness share becomes exactly `ell`,
/// then lowers goods inside over-full witness bundles (largest value first)
/// until every bundle above the ell-th smallest is worth exactly ell - x.
ScaledValuation scale_to_mms(const Instance& inst, int agent, int ell, int d,
                             const MMSWitness& witness);

Rational proportional_share(const Instance& inst, int agent);

Rational row_value(const std::vector<Rational>& row, const Bundle& b);

}  // namespace ordmms

#endif
