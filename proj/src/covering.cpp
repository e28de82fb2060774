#include "ordmms/covering.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "ordmms/lone_divider.hpp"
#include "ordmms/mms.hpp"

namespace ordmms {

namespace {

CoverResult bag_filling(const Instance& ordered,
                        const std::vector<Rational>& thresholds,
                        bool from_right) {
    const int n = ordered.n;
    const int m = ordered.m;
    if (static_cast<int>(thresholds.size()) != n)
        throw std::invalid_argument("one threshold per agent required");
    for (int i = 0; i < n; ++i)
        for (int g = 0; g + 1 < m; ++g)
            if (ordered.values[i][g] < ordered.values[i][g + 1])
                throw std::invalid_argument("rows must be non-increasing");

    CoverResult res;
    std::deque<int> pool(m);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<bool> served(n, false);
    int unserved = n;

    while (unserved > 0 && !pool.empty()) {
        FilledBag bag;
        bag.seed = pool.front();
        pool.pop_front();
        bag.goods.add(bag.seed);
        std::vector<Rational> bagval(n);
        for (int i = 0; i < n; ++i)
            if (!served[i]) bagval[i] = Rational(ordered.values[i][bag.seed]);

        auto taker = [&]() {
            for (int i = 0; i < n; ++i)
                if (!served[i] && bagval[i] >= thresholds[i]) return i;
            return -1;
        };

        int who = taker();
        while (who < 0 && !pool.empty()) {
            int g = from_right ? pool.back() : pool.front();
            if (from_right)
                pool.pop_back();
            else
                pool.pop_front();
            bag.goods.add(g);
            for (int i = 0; i < n; ++i)
                if (!served[i]) bagval[i] += ordered.values[i][g];
            who = taker();
        }

        if (who < 0) {
            res.leftover = bag.goods;
            break;
        }
        bag.agent = who;
        served[who] = true;
        --unserved;
        res.filled.push_back(std::move(bag));
    }
    for (int g : pool) res.leftover.add(g);
    return res;
}

struct SortedRow {
    std::vector<Value> values;  // non-increasing
    std::vector<int> perm;      // perm[p] = original index of position p
};

SortedRow sort_row(const std::vector<Value>& row) {
    SortedRow s;
    s.perm.resize(row.size());
    std::iota(s.perm.begin(), s.perm.end(), 0);
    std::stable_sort(s.perm.begin(), s.perm.end(),
                     [&](int a, int b) { return row[a] > row[b]; });
    s.values.reserve(row.size());
    for (int g : s.perm) s.values.push_back(row[g]);
    return s;
}

// Runs the oracle with d clones of the sorted row at threshold t and
// translates the outcome back to the input row's indices.
CoverResult simulate(const SortedRow& s, int d, Value t,
                     const CoverOracle& oracle) {
    Instance clones;
    clones.n = d;
    clones.m = static_cast<int>(s.values.size());
    clones.values.assign(d, s.values);
    CoverResult pos = oracle(clones, std::vector<Rational>(d, Rational(t)));
    CoverResult out;
    for (const auto& bag : pos.filled) {
        FilledBag b;
        b.agent = bag.agent;
        b.seed = s.perm[bag.seed];
        for (int g : bag.goods.goods) b.goods.add(s.perm[g]);
        out.filled.push_back(std::move(b));
    }
    for (int g : pos.leftover.goods) out.leftover.add(s.perm[g]);
    return out;
}

void merge_leftover(CoverResult& r) {
    if (r.filled.empty() || r.leftover.goods.empty()) return;
    r.filled.back().goods.unite(r.leftover);
    r.leftover = Bundle{};
}

}  // namespace

CoverResult bidirectional_bag_filling(const Instance& ordered,
                                      const std::vector<Rational>& thresholds) {
    return bag_filling(ordered, thresholds, true);
}

CoverResult unidirectional_bag_filling(const Instance& ordered,
                                       const std::vector<Rational>& thresholds) {
    return bag_filling(ordered, thresholds, false);
}

CoverShare cover_share(const std::vector<Value>& row, int d,
                       const CoverOracle& oracle) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    const SortedRow s = sort_row(row);
    const Value total = std::accumulate(row.begin(), row.end(), Value{0});
    auto fills = [&](Value t) { return simulate(s, d, t, oracle).count() >= d; };

    CoverShare cs;
    if (!fills(0)) {
        cs.value = 0;
        cs.witness = simulate(s, d, 0, oracle);
        merge_leftover(cs.witness);
        return cs;
    }
    Value lo = 0, hi = total + 1;
    while (hi - lo > 1) {
        Value mid = lo + (hi - lo) / 2;
        if (fills(mid))
            lo = mid;
        else
            hi = mid;
    }
    cs.witness = simulate(s, d, lo, oracle);
    if (cs.witness.count() < d)
        throw std::logic_error("cover share boundary check failed at t");
    if (fills(lo + 1))
        throw std::logic_error("cover share boundary check failed at t+1");
    cs.value = lo;
    merge_leftover(cs.witness);
    return cs;
}

CoverShare cover_share_linear(const std::vector<Value>& row, int d,
                              const CoverOracle& oracle) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    const SortedRow s = sort_row(row);
    const Value total = std::accumulate(row.begin(), row.end(), Value{0});
    CoverShare cs;
    for (Value t = total; t >= 0; --t) {
        CoverResult r = simulate(s, d, t, oracle);
        if (r.count() >= d || t == 0) {
            cs.value = r.count() >= d ? t : 0;
            cs.witness = std::move(r);
            merge_leftover(cs.witness);
            return cs;
        }
    }
    return cs;  // unreachable (t == 0 always returns)
}

CoverShare bbfs(const std::vector<Value>& row, int n) {
    return cover_share(row, n, bidirectional_bag_filling);
}

BBFSAllocationResult bbfs_allocation(const Instance& inst) {
    const int n = inst.n;
    const Instance padded = pad_with_dummies(inst, std::max(0, n - inst.m));
    const int m = padded.m;

    BBFSAllocationResult res;
    auto [ordered, maps] = order_instance(padded);
    res.maps = std::move(maps);

    res.thresholds.resize(n);
    std::vector<Rational> th(n);
    std::vector<CoverResult> sims(n);
    for (int i = 0; i < n; ++i) {
        CoverShare cs = bbfs(ordered.values[i], n);
        res.thresholds[i] = cs.value;
        th[i] = Rational(cs.value);
        // The ordered row is already sorted, so the witness stays in the
        // shared position space.
        sims[i] = std::move(cs.witness);
    }

    CoverResult run = bidirectional_bag_filling(ordered, th);
    if (run.count() != n)
        throw std::runtime_error("bag filling awarded fewer than n bundles");

    // Before each round the goods already handed out must be a subset of the
    // goods the simulation of every still-waiting agent had handed out.
    std::vector<bool> taken(m, false), served(n, false);
    std::vector<std::vector<bool>> sim_taken(n, std::vector<bool>(m, false));
    std::vector<int> sim_round(n, 0);
    for (int k = 0; k < run.count(); ++k) {
        for (int i = 0; i < n; ++i) {
            if (served[i]) continue;
            while (sim_round[i] < k &&
                   sim_round[i] < static_cast<int>(sims[i].filled.size())) {
                for (int g : sims[i].filled[sim_round[i]].goods.goods)
                    sim_taken[i][g] = true;
                ++sim_round[i];
            }
            for (int g = 0; g < m; ++g)
                if (taken[g] && !sim_taken[i][g]) res.prefix_invariant_held = false;
        }
        for (int g : run.filled[k].goods.goods) taken[g] = true;
        served[run.filled[k].agent] = true;
    }

    res.ordered.bundles.assign(n, Bundle{});
    for (const auto& bag : run.filled) res.ordered.bundles[bag.agent] = bag.goods;
    res.ordered.unallocated = run.leftover;

    Allocation orig = unorder_allocation(res.ordered, res.maps);
    auto strip = [&](Bundle& b) {
        std::erase_if(b.goods, [&](int g) { return g >= inst.m; });
    };
    for (auto& b : orig.bundles) strip(b);
    strip(orig.unallocated);
    res.allocation = std::move(orig);
    return res;
}

int cover_opt_exact(const std::vector<Value>& row, Value t, int good_cap) {
    const int m = static_cast<int>(row.size());
    if (m > good_cap)
        throw std::runtime_error("instance too large for exact bin covering");
    const unsigned full = (m == 0) ? 0u : ((1u << m) - 1u);
    std::vector<Value> sum(full + 1, 0);
    std::vector<int> f(full + 1, 0);
    for (unsigned S = 1; S <= full; ++S) {
        unsigned low = S & (~S + 1u);
        int g = std::countr_zero(low);
        sum[S] = sum[S ^ low] + row[g];
        int best = f[S ^ low];  // waste the lowest good
        // enumerate subsets of S containing the lowest good
        for (unsigned T = S; T; T = (T - 1) & S) {
            if (!(T & low)) continue;
            if (sum[T] >= t) best = std::max(best, 1 + f[S ^ T]);
        }
        f[S] = best;
    }
    return f[full];
}

double js_bound(double opt) {
    return opt - 2.35 * std::cbrt(opt) * std::cbrt(opt) - 1.0;
}

double js_epsilon(double total_value, double bin_size) {
    return std::cbrt(13.0 * bin_size / total_value);
}

long long approx_d(int ell, int n) {
    const long long d = (static_cast<long long>(2 * ell + 1) * n) / 2;
    const long long r = std::llround(std::cbrt(static_cast<double>(d)));
    if (r * r * r == d) return d + 15 * r * r + ell;
    const double two_thirds = std::cbrt(static_cast<double>(d)) *
                              std::cbrt(static_cast<double>(d));
    return d + static_cast<long long>(std::ceil(15.0 * two_thirds)) + ell;
}

EllApproxResult ell_approx_allocation(const Instance& inst, int ell,
                                      const CoverOracle& oracle) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    const int n = inst.n;
    const int d = ((2 * ell + 1) * n) / 2;
    const Instance padded =
        pad_with_dummies(inst, std::max(0, ell * n - inst.m));

    EllApproxResult res;
    res.d = d;
    res.shares.resize(n);
    std::vector<ScaledValuation> svs(n);
    for (int i = 0; i < n; ++i) {
        CoverShare cs = cover_share(padded.values[i], d, oracle);
        res.shares[i] = cs.value;

        ScaledValuation sv;
        sv.ell = ell;
        for (Value v : padded.values[i]) sv.values.emplace_back(v);
        for (const auto& bag : cs.witness.filled) sv.witness.push_back(bag.goods);
        if (cs.value == 0) {
            sv.degenerate = true;
            sv.x = 0;
        } else {
            if (cs.witness.count() != d)
                throw std::logic_error("cover witness must have d bundles");
            const Rational factor = Rational(1) / Rational(cs.value);
            for (auto& v : sv.values) v *= factor;
            // trim every bundle down to worth exactly 1
            for (auto& b : sv.witness) {
                Rational excess = row_value(sv.values, b) - Rational(1);
                if (excess < 0)
                    throw std::logic_error("cover witness bundle below share");
                std::vector<int> order = b.goods;
                std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
                    return sv.values[a] > sv.values[c];
                });
                for (int g : order) {
                    if (excess == 0) break;
                    Rational dec = std::min(sv.values[g], excess);
                    sv.values[g] -= dec;
                    excess -= dec;
                }
            }
            sv.x = Rational(ell - 1);
        }
        svs[i] = std::move(sv);
    }

    SolveResult lr =
        restricted_lone_divider(inst.m, padded.m, ell, std::move(svs));
    res.allocation = std::move(lr.allocation);
    return res;
}

}  // namespace ordmms
