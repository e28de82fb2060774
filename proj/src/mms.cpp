#include "ordmms/mms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ordmms {

namespace {

std::vector<Rational> row_of(const Instance& inst, int agent) {
    std::vector<Rational> row(inst.m);
    for (int g = 0; g < inst.m; ++g) row[g] = Rational(inst.values[agent][g]);
    return row;
}

// Depth-first assignment of goods (descending value) to d labeled parts.
// Symmetry breaking: a good never goes into a part whose current sum equals
// the sum of an earlier part.
class PartitionSolver {
  public:
    PartitionSolver(std::vector<int> goods, const std::vector<Rational>& row,
                    int ell, int d)
        : goods_(std::move(goods)), row_(row), ell_(ell), d_(d) {
        suffix_.assign(goods_.size() + 1, Rational(0));
        for (int t = static_cast<int>(goods_.size()) - 1; t >= 0; --t)
            suffix_[t] = suffix_[t + 1] + row_[goods_[t]];
        sums_.assign(d_, Rational(0));
        assign_.assign(goods_.size(), -1);
        best_value_ = -1;
    }

    void run() { dfs(0); }

    Rational best_value() const { return best_value_; }
    const std::vector<int>& best_assignment() const { return best_assign_; }

  private:
    Rational ell_smallest_sum() const {
        std::vector<Rational> s(sums_);
        std::nth_element(s.begin(), s.begin() + (ell_ - 1), s.end());
        Rational total(0);
        for (int p = 0; p < ell_; ++p) total += s[p];
        return total;
    }

    void dfs(int t) {
        if (t == static_cast<int>(goods_.size())) {
            Rational obj = ell_smallest_sum();
            if (obj > best_value_) {
                best_value_ = obj;
                best_assign_ = assign_;
            }
            return;
        }
        // Upper bound: all remaining value lands inside the current
        // ell-smallest parts.
        if (best_value_ >= 0 && ell_smallest_sum() + suffix_[t] <= best_value_)
            return;
        const Rational& v = row_[goods_[t]];
        for (int p = 0; p < d_; ++p) {
            bool symmetric = false;
            for (int q = 0; q < p; ++q) {
                if (sums_[q] == sums_[p]) {
                    symmetric = true;
                    break;
                }
            }
            if (symmetric) continue;
            sums_[p] += v;
            assign_[t] = p;
            dfs(t + 1);
            sums_[p] -= v;
            assign_[t] = -1;
        }
    }

    std::vector<int> goods_;
    const std::vector<Rational>& row_;
    int ell_;
    int d_;
    std::vector<Rational> suffix_;
    std::vector<Rational> sums_;
    std::vector<int> assign_;
    Rational best_value_;
    std::vector<int> best_assign_;
};

}  // namespace

Rational row_value(const std::vector<Rational>& row, const Bundle& b) {
    Rational sum(0);
    for (int g : b.goods) sum += row[g];
    return sum;
}

MMSWitness mms_exact_row(const std::vector<Rational>& row, int ell, int d,
                         int good_cap) {
    if (ell < 1 || d < ell) throw std::invalid_argument("require d >= ell >= 1");
    const int m = static_cast<int>(row.size());

    std::vector<int> nonzero;
    for (int g = 0; g < m; ++g)
        if (row[g] != 0) nonzero.push_back(g);
    if (static_cast<int>(nonzero.size()) > good_cap)
        throw std::runtime_error("instance too large for exact MMS");
    std::stable_sort(nonzero.begin(), nonzero.end(),
                     [&](int a, int b) { return row[a] > row[b]; });

    PartitionSolver solver(nonzero, row, ell, d);
    solver.run();

    MMSWitness w;
    w.value = solver.best_value();
    w.partition.assign(d, Bundle{});
    for (size_t t = 0; t < nonzero.size(); ++t)
        w.partition[solver.best_assignment()[t]].add(nonzero[t]);
    for (int g = 0; g < m; ++g)
        if (row[g] == 0) w.partition[0].add(g);
    return w;
}

MMSWitness mms_exact(const Instance& inst, int agent, int ell, int d,
                     int good_cap) {
    return mms_exact_row(row_of(inst, agent), ell, d, good_cap);
}

std::pair<Rational, Rational> mms_bounds(const Instance& inst, int agent,
                                         int ell, int d, int good_cap) {
    Rational lower =
        ell * mms_exact(inst, agent, 1, d, good_cap).value;
    Rational upper =
        ell * mms_exact(inst, agent, 1, d - ell + 1, good_cap).value;
    return {lower, upper};
}

MMSWitness greedy_lower_bound_row(const std::vector<Rational>& row, int ell,
                                  int d) {
    if (ell < 1 || d < 1) throw std::invalid_argument("require d, ell >= 1");
    const int m = static_cast<int>(row.size());
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return row[a] > row[b]; });

    MMSWitness w;
    w.partition.assign(d, Bundle{});
    std::vector<Rational> sums(d, Rational(0));
    for (int g : idx) {
        int lightest = 0;
        for (int p = 1; p < d; ++p)
            if (sums[p] < sums[lightest]) lightest = p;
        sums[lightest] += row[g];
        w.partition[lightest].add(g);
    }
    std::sort(sums.begin(), sums.end());
    w.value = 0;
    for (int p = 0; p < std::min(ell, d); ++p) w.value += sums[p];
    return w;
}

MMSWitness greedy_lower_bound(const Instance& inst, int agent, int ell, int d) {
    return greedy_lower_bound_row(row_of(inst, agent), ell, d);
}

ScaledValuation scale_to_mms(const Instance& inst, int agent, int ell, int d,
                             const MMSWitness& witness) {
    if (static_cast<int>(witness.partition.size()) != d)
        throw std::invalid_argument("witness must have exactly d bundles");
    ScaledValuation sv;
    sv.ell = ell;
    sv.witness = witness.partition;
    sv.values = row_of(inst, agent);

    if (witness.value == 0) {
        sv.degenerate = true;
        sv.x = 0;
        return sv;
    }

    const Rational factor = Rational(ell) / witness.value;
    for (auto& v : sv.values) v *= factor;

    std::vector<Rational> bv(d);
    for (int j = 0; j < d; ++j) bv[j] = row_value(sv.values, sv.witness[j]);
    std::vector<Rational> sorted(bv);
    std::sort(sorted.begin(), sorted.end());
    sv.x = 0;
    for (int j = 0; j + 1 < ell; ++j) sv.x += sorted[j];
    const Rational target = Rational(ell) - sv.x;

    for (int j = 0; j < d; ++j) {
        if (bv[j] <= target) continue;
        Rational excess = bv[j] - target;
        std::vector<int> order = sv.witness[j].goods;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return sv.values[a] > sv.values[b];
        });
        for (int g : order) {
            if (excess == 0) break;
            Rational dec = std::min(sv.values[g], excess);
            sv.values[g] -= dec;
            excess -= dec;
        }
    }
    return sv;
}

Rational proportional_share(const Instance& inst, int agent) {
    Rational total(0);
    for (Value v : inst.values[agent]) total += Rational(v);
    return total / inst.n;
}

}  // namespace ordmms
