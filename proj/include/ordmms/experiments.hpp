#ifndef ORDMMS_EXPERIMENTS_HPP
#define ORDMMS_EXPERIMENTS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ordmms/core.hpp"

namespace ordmms {

struct Distribution {
    enum class Kind { uniform, geometric };
    Kind kind = Kind::uniform;
    Value lo = 1, hi = 1000;  // uniform
    Value mean = 1000;        // geometric: success probability 1/mean, >= 1

    static Distribution uniform(Value lo, Value hi);
    static Distribution geometric(Value mean);
};

/// Deterministic draws on top of mt19937_64 (the distribution adaptors in
/// <random> are not pinned across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t bound);  // uniform on [0, bound)
    Value uniform(Value lo, Value hi);
    Value geometric(Value mean);  // inversion, truncated to >= 1
    Value draw(const Distribution& dist);

private:
    std::mt19937_64 eng_;
};

/// Stable per-(cell, trial) seed derivation so trials can run in any order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c);

Instance gen_instance(int n, int m, const Distribution& dist,
                      std::uint64_t seed);

struct ReportRow {
    int n = 0;
    int m = 0;
    std::string param;   // ell or fill method
    std::string metric;  // min_ratio | mean_ratio | min_of_means | success_fraction
    double value = 0.0;
};

struct ExperimentReport {
    std::vector<ReportRow> rows;

    std::string to_csv() const;  // header: n,m,param,metric,value
    std::string to_svg() const;  // one polyline per (n, param, metric) over m
};

/// Greedy ordinal lower bound at d = floor((ell+1/2)n) against the
/// proportional share, per cell (n, m, ell), averaged over trials.
ExperimentReport experiment_ordinal(const std::vector<int>& ns,
                                    const std::vector<int>& ms,
                                    const std::vector<int>& ells,
                                    const Distribution& dist, int trials,
                                    std::uint64_t seed);

enum class ThresholdMode { individual, common };

/// Bidirectional vs unidirectional bag filling. Individual mode uses each
/// agent's own cover share as its threshold; common mode binary-searches the
/// largest permille t such that every agent receives at least
/// t/1000 * v_i(M)/n. Ratios are against the proportional share.
ExperimentReport experiment_thresholds(const std::vector<int>& ns,
                                       const std::vector<int>& ms,
                                       const Distribution& dist, int trials,
                                       std::uint64_t seed, ThresholdMode mode);

}  // namespace ordmms

#endif
