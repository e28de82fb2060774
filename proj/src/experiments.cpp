#include "ordmms/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "ordmms/covering.hpp"
#include "ordmms/mms.hpp"

namespace ordmms {

Distribution Distribution::uniform(Value lo, Value hi) {
    if (lo > hi) throw std::invalid_argument("uniform: lo > hi");
    Distribution d;
    d.kind = Kind::uniform;
    d.lo = lo;
    d.hi = hi;
    return d;
}

Distribution Distribution::geometric(Value mean) {
    if (mean < 1) throw std::invalid_argument("geometric: mean < 1");
    Distribution d;
    d.kind = Kind::geometric;
    d.mean = mean;
    return d;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t r;
    do {
        r = eng_();
    } while (r >= limit);
    return r % bound;
}

Value Rng::uniform(Value lo, Value hi) {
    return lo + static_cast<Value>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Value Rng::geometric(Value mean) {
    if (mean <= 1) return 1;
    const double p = 1.0 / static_cast<double>(mean);
    const double u =
        (static_cast<double>(eng_() >> 11) + 0.5) / 9007199254740992.0;
    return 1 + static_cast<Value>(std::floor(std::log(u) / std::log1p(-p)));
}

Value Rng::draw(const Distribution& dist) {
    return dist.kind == Distribution::Kind::uniform ? uniform(dist.lo, dist.hi)
                                                    : geometric(dist.mean);
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c) {
    return splitmix(splitmix(splitmix(splitmix(seed) ^ a) ^ b) ^ c);
}

Instance gen_instance(int n, int m, const Distribution& dist,
                      std::uint64_t seed) {
    if (n < 1 || m < 1) throw std::invalid_argument("n and m must be >= 1");
    Rng rng(seed);
    Instance inst;
    inst.n = n;
    inst.m = m;
    inst.values.assign(n, std::vector<Value>(m));
    for (int i = 0; i < n; ++i)
        for (int g = 0; g < m; ++g) inst.values[i][g] = rng.draw(dist);
    return inst;
}

std::string ExperimentReport::to_csv() const {
    std::string out = "n,m,param,metric,value\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%d,%s,%s,%.6f", r.n, r.m,
                      r.param.c_str(), r.metric.c_str(), r.value);
        out += buf;
        out += '\n';
    }
    return out;
}

std::string ExperimentReport::to_svg() const {
    // one polyline per (n, param, metric) with m on the x-axis
    std::map<std::string, std::vector<std::pair<int, double>>> series;
    for (const auto& r : rows) {
        std::string key =
            r.metric + " " + r.param + " n=" + std::to_string(r.n);
        series[key].emplace_back(r.m, r.value);
    }
    int lo_m = 1 << 30, hi_m = 0;
    double lo_v = 0.0, hi_v = 1.0;
    for (const auto& [k, pts] : series)
        for (auto [m, v] : pts) {
            lo_m = std::min(lo_m, m);
            hi_m = std::max(hi_m, m);
            lo_v = std::min(lo_v, v);
            hi_v = std::max(hi_v, v);
        }
    if (series.empty()) lo_m = hi_m = 1;
    if (hi_m == lo_m) ++hi_m;
    if (hi_v == lo_v) hi_v += 1.0;

    const double W = 720, H = 480, L = 60, T = 20;
    auto px = [&](int m) { return L + (W - 2 * L) * (m - lo_m) / (hi_m - lo_m); };
    auto py = [&](double v) {
        return T + (H - 2 * T) * (1.0 - (v - lo_v) / (hi_v - lo_v));
    };
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    char buf[160];
    std::string svg;
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                  "height=\"%.0f\">\n",
                  W, H + 16.0 * series.size());
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                  "fill=\"none\" stroke=\"black\"/>\n",
                  L, T, W - 2 * L, H - 2 * T);
    svg += buf;
    int idx = 0;
    for (const auto& [key, raw] : series) {
        auto pts = raw;
        std::sort(pts.begin(), pts.end());
        const char* color = palette[idx % 8];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" points=\"";
        for (auto [m, v] : pts) {
            std::snprintf(buf, sizeof buf, "%.1f,%.1f ", px(m), py(v));
            svg += buf;
        }
        svg += "\"/>\n";
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.1f\" y=\"%.1f\" fill=\"%s\" "
                      "font-size=\"12\">%s</text>\n",
                      L, H + 12.0 + 16.0 * idx, color, key.c_str());
        svg += buf;
        ++idx;
    }
    svg += "</svg>\n";
    return svg;
}

ExperimentReport experiment_ordinal(const std::vector<int>& ns,
                                    const std::vector<int>& ms,
                                    const std::vector<int>& ells,
                                    const Distribution& dist, int trials,
                                    std::uint64_t seed) {
    ExperimentReport rep;
    for (int n : ns)
        for (int m : ms)
            for (int ell : ells) {
                const int d = ((2 * ell + 1) * n) / 2;
                const double line = 0.75 + 1.0 / (12.0 * n);
                double sum = 0.0, mn = 1e300, min_of_means = 1e300;
                long long cnt = 0, above = 0;
                for (int t = 0; t < trials; ++t) {
                    Instance inst = gen_instance(
                        n, m, dist,
                        mix_seed(seed, static_cast<std::uint64_t>(n) << 20 | m,
                                 ell, t));
                    double inst_sum = 0.0;
                    for (int i = 0; i < n; ++i) {
                        const Rational share =
                            greedy_lower_bound(inst, i, ell, d).value;
                        const Rational prop = proportional_share(inst, i);
                        const double ratio =
                            prop == 0 ? 0.0 : to_double(share / prop);
                        sum += ratio;
                        inst_sum += ratio;
                        mn = std::min(mn, ratio);
                        if (ratio >= line) ++above;
                        ++cnt;
                    }
                    min_of_means = std::min(min_of_means, inst_sum / n);
                }
                const std::string param = std::to_string(ell);
                rep.rows.push_back({n, m, param, "min_ratio", mn});
                rep.rows.push_back({n, m, param, "mean_ratio", sum / cnt});
                rep.rows.push_back({n, m, param, "min_of_means", min_of_means});
                rep.rows.push_back({n, m, param, "success_fraction",
                                    static_cast<double>(above) / cnt});
            }
    return rep;
}

ExperimentReport experiment_thresholds(const std::vector<int>& ns,
                                       const std::vector<int>& ms,
                                       const Distribution& dist, int trials,
                                       std::uint64_t seed, ThresholdMode mode) {
    struct Agg {
        double sum = 0.0, mn = 1e300, min_of_means = 1e300;
        long long cnt = 0, ok = 0, runs = 0;
    };
    const CoverOracle oracles[2] = {bidirectional_bag_filling,
                                    unidirectional_bag_filling};
    const char* names[2] = {"bidirectional", "unidirectional"};

    ExperimentReport rep;
    for (int n : ns)
        for (int m : ms) {
            if (m < n) continue;
            Agg agg[2];
            for (int t = 0; t < trials; ++t) {
                Instance inst = gen_instance(
                    n, m, dist,
                    mix_seed(seed, static_cast<std::uint64_t>(n) << 20 | m,
                             mode == ThresholdMode::common, t));
                Instance ord = order_instance(inst).first;
                std::vector<Rational> totals(n);
                for (int i = 0; i < n; ++i)
                    totals[i] = proportional_share(inst, i) * n;

                for (int o = 0; o < 2; ++o) {
                    std::vector<Rational> th(n);
                    bool all_served;
                    CoverResult run;
                    if (mode == ThresholdMode::individual) {
                        for (int i = 0; i < n; ++i)
                            th[i] = Rational(
                                cover_share(ord.values[i], n, oracles[o]).value);
                        run = oracles[o](ord, th);
                        all_served = run.count() == n;
                    } else {
                        // largest permille p with everyone at p/1000 of the
                        // proportional share; 0.1% resolution
                        auto serves = [&](long p) {
                            for (int i = 0; i < n; ++i)
                                th[i] = totals[i] * p / (1000L * n);
                            return oracles[o](ord, th).count() == n;
                        };
                        long lo = 0, hi = 1000L * n + 1;
                        if (!serves(lo)) {
                            hi = 0;
                        } else {
                            while (hi - lo > 1) {
                                long mid = lo + (hi - lo) / 2;
                                if (serves(mid))
                                    lo = mid;
                                else
                                    hi = mid;
                            }
                        }
                        const long best = hi == 0 ? 0 : lo;
                        for (int i = 0; i < n; ++i)
                            th[i] = totals[i] * best / (1000L * n);
                        run = oracles[o](ord, th);
                        all_served = best >= 1000 && run.count() == n;
                    }

                    std::vector<Rational> got(n, Rational(0));
                    for (const auto& bag : run.filled)
                        got[bag.agent] =
                            Rational(bundle_value(ord, bag.agent, bag.goods));
                    double inst_sum = 0.0;
                    for (int i = 0; i < n; ++i) {
                        const double ratio =
                            totals[i] == 0
                                ? 1.0
                                : to_double(got[i] * n / totals[i]);
                        agg[o].sum += ratio;
                        inst_sum += ratio;
                        agg[o].mn = std::min(agg[o].mn, ratio);
                        ++agg[o].cnt;
                    }
                    agg[o].min_of_means =
                        std::min(agg[o].min_of_means, inst_sum / n);
                    if (all_served) ++agg[o].ok;
                    ++agg[o].runs;
                }
            }
            for (int o = 0; o < 2; ++o) {
                rep.rows.push_back({n, m, names[o], "min_ratio", agg[o].mn});
                rep.rows.push_back(
                    {n, m, names[o], "mean_ratio", agg[o].sum / agg[o].cnt});
                rep.rows.push_back(
                    {n, m, names[o], "min_of_means", agg[o].min_of_means});
                rep.rows.push_back({n, m, names[o], "success_fraction",
                                    static_cast<double>(agg[o].ok) /
                                        agg[o].runs});
            }
        }
    return rep;
}

}  // namespace ordmms
