#include "ordmms/lone_divider.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "ordmms/matching.hpp"

namespace ordmms {

bool is_l_balanced(const Bundle& b, const BalancedGroups& groups) {
    if (b.empty()) return false;
    std::vector<int> count(groups.ell, 0);
    for (int g : b.goods) {
        int l = groups.group_of(g);
        if (l >= 0) ++count[l];
    }
    const int limit = std::min(b.size(), groups.ell);
    for (int l = 0; l < groups.ell; ++l) {
        if (count[l] != (l < limit ? 1 : 0)) return false;
    }
    return true;
}

Rational waste(const ScaledValuation& sv, const Bundle& b) {
    return row_value(sv.values, b) - sv.ell;
}

namespace {

// Executes steps 0-3 for one divider. Positions are the divider's ordered
// positions; sv.values must be non-increasing.
class PartitionBuilder {
  public:
    PartitionBuilder(const ScaledValuation& sv, const DividerState& state,
                     const BalancedGroups& groups, DividerTrace* trace)
        : sv_(sv),
          groups_(groups),
          trace_(trace),
          allocated_(state.allocated),
          ell_(groups.ell),
          n_(groups.n),
          m_(static_cast<int>(sv.values.size())),
          k_(static_cast<int>(state.allocated.size())),
          need_(groups.n - static_cast<int>(state.allocated.size())) {
        if (m_ < ell_ * n_)
            throw ContractViolation("instance not padded to m >= ell*n");
        rem_.assign(m_, false);
        for (int p : state.remaining.goods) rem_[p] = true;
        grp_.resize(ell_);
        for (int p = 0; p < m_; ++p) {
            if (!rem_[p]) continue;
            int l = groups_.group_of(p);
            if (l >= 0)
                grp_[l].push_back(p);
            else
                non_group_.insert(p);
        }
        for (int l = 0; l < ell_; ++l) {
            if (static_cast<int>(grp_[l].size()) != need_)
                throw ContractViolation(
                    "allocated bundles must hold exactly one good per group");
        }
    }

    std::vector<Bundle> build() {
        if (sv_.degenerate) {
            canonical();
            return finalize();
        }
        half_ = (Rational(ell_) - sv_.x) / 2;
        step0();
        if (built() < need_) {
            int h = 0;
            while (h < m_ && sv_.values[h] > half_) ++h;
            if (h <= ell_ * n_ || 2 * kprime_ >= n_) {
                case_id_ = (h <= ell_ * n_) ? 1 : 2;
                plain_bag_filling();
            } else {
                case_id_ = 3;
                step1();
                step2();
                step3();
            }
        }
        return finalize();
    }

  private:
    int built() const { return static_cast<int>(bundles_.size()); }

    const Rational& val(int p) const { return sv_.values[p]; }

    void consume(int p) {
        rem_[p] = false;
        int l = groups_.group_of(p);
        if (l >= 0) {
            auto& v = grp_[l];
            v.erase(std::find(v.begin(), v.end(), p));
        } else {
            non_group_.erase(p);
        }
    }

    void record(int step, Bundle b, const Rational& value) {
        if (trace_)
            trace_->bags.push_back({step, b, value - Rational(ell_)});
        bundles_.push_back(std::move(b));
    }

    // Any valid balanced partition works for an all-zero valuation.
    void canonical() {
        while (built() < need_) {
            Bundle b;
            for (int l = 0; l < ell_; ++l) {
                int p = grp_[l].front();
                consume(p);
                b.add(p);
            }
            record(3, b, Rational(ell_));
        }
    }

    // Extract top l-tuples (one good per group) while they reach ell.
    void step0() {
        while (built() < need_) {
            Bundle b;
            Rational v(0);
            for (int l = 0; l < ell_; ++l) {
                b.add(grp_[l].front());
                v += val(grp_[l].front());
            }
            if (v < ell_) break;
            for (int g : b.goods) consume(g);
            record(0, b, v);
        }
        kprime_ = k_ + built();
    }

    // Cases #1 and #2: seed with the top remaining good of each group, fill
    // with goods outside the groups in ascending order of value.
    void plain_bag_filling() {
        while (built() < need_) {
            Bundle b;
            Rational v(0);
            seed_from_group_tops(b, v);
            fill_from_non_group(b, v);
            record(3, b, v);
        }
    }

    void seed_from_group_tops(Bundle& b, Rational& v) {
        for (int l = 0; l < ell_; ++l) {
            if (grp_[l].empty())
                throw ContractViolation("no group goods left to seed a bag");
            int p = grp_[l].front();
            consume(p);
            b.add(p);
            v += val(p);
        }
    }

    void fill_from_non_group(Bundle& b, Rational& v) {
        while (v < ell_) {
            if (non_group_.empty())
                throw ContractViolation("bag-filling ran out of goods");
            int p = *non_group_.rbegin();
            consume(p);
            b.add(p);
            v += val(p);
        }
    }

    // Case #3 step 1: seed with the lowest-valued remaining good per group,
    // fill with high-value goods outside the groups (ascending value).
    void step1() {
        std::vector<int> hminus;
        for (int p : non_group_)
            if (val(p) > half_) hminus.push_back(p);
        size_t hi = hminus.size();
        while (hi > 0 && built() < need_) {
            Bundle b;
            Rational v(0);
            std::vector<int> seeds;
            for (int l = 0; l < ell_; ++l) {
                if (grp_[l].empty())
                    throw ContractViolation("no group goods left in step 1");
                int p = grp_[l].back();
                consume(p);
                b.add(p);
                v += val(p);
                seeds.push_back(p);
            }
            int closing = -1;
            while (v < ell_ && hi > 0) {
                int p = hminus[--hi];
                consume(p);
                b.add(p);
                v += val(p);
                closing = p;
            }
            if (v >= ell_) {
                record(1, b, v);
                ++s_;
                for (int p : seeds) p_plus_.push_back(p);
                p_minus_.push_back(closing);
            } else {
                incomplete_ = b;
                incomplete_v_ = v;
                have_incomplete_ = true;
            }
        }
        if (trace_) trace_->s = s_;
    }

    int witness_index_of(int p) const {
        for (size_t j = 0; j < sv_.witness.size(); ++j)
            if (sv_.witness[j].contains(p)) return static_cast<int>(j);
        throw ContractViolation("good missing from witness partition");
    }

    // Case #3 step 2: fill bags with the remainder sets of the high-value
    // goods consumed by the k unacceptable bundles and by step 1.
    void step2() {
        std::vector<int> indices;
        for (const Bundle& b : allocated_)
            for (int p : b.goods)
                if (groups_.group_of(p) >= 0)
                    indices.push_back(witness_index_of(p));
        for (int p : p_plus_) indices.push_back(witness_index_of(p));
        for (int p : p_minus_) indices.push_back(witness_index_of(p));
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()),
                      indices.end());
        std::deque<int> rs(indices.begin(), indices.end());

        while (built() < need_) {
            Bundle b;
            Rational v(0);
            if (have_incomplete_) {
                b = incomplete_;
                v = incomplete_v_;
                have_incomplete_ = false;
            } else if (!grp_[0].empty()) {
                for (int l = 0; l < ell_; ++l) {
                    int p = grp_[l].back();
                    consume(p);
                    b.add(p);
                    v += val(p);
                }
            } else {
                break;
            }
            while (v < ell_ && !rs.empty()) {
                int j = rs.front();
                rs.pop_front();
                for (int g : sv_.witness[j].goods) {
                    if (!rem_[g]) continue;
                    consume(g);
                    b.add(g);
                    v += val(g);
                }
            }
            if (v >= ell_) {
                record(2, b, v);
            } else {
                incomplete_ = b;
                incomplete_v_ = v;
                have_incomplete_ = true;
                break;  // remainder sets exhausted; hand over to step 3
            }
        }
    }

    // Case #3 step 3: plain bag-filling for whatever is still missing.
    void step3() {
        while (built() < need_) {
            Bundle b;
            Rational v(0);
            if (have_incomplete_) {
                b = incomplete_;
                v = incomplete_v_;
                have_incomplete_ = false;
            } else {
                seed_from_group_tops(b, v);
            }
            fill_from_non_group(b, v);
            record(3, b, v);
        }
    }

    std::vector<Bundle> finalize() {
        for (int l = 0; l < ell_; ++l)
            if (!grp_[l].empty())
                throw ContractViolation("group goods left unallocated");
        if (!bundles_.empty()) {
            for (int p = 0; p < m_; ++p)
                if (rem_[p]) bundles_.back().add(p);
        }
        if (trace_) {
            trace_->k = k_;
            trace_->kprime = kprime_;
            trace_->case_id = case_id_;
        }
        return bundles_;
    }

    const ScaledValuation& sv_;
    const BalancedGroups& groups_;
    DividerTrace* trace_;
    std::vector<Bundle> allocated_;
    int ell_;
    int n_;
    int m_;
    int k_;
    int need_;
    int kprime_ = 0;
    int case_id_ = 0;
    int s_ = 0;
    Rational half_;
    std::vector<bool> rem_;
    std::vector<std::vector<int>> grp_;  // remaining positions, ascending
    std::set<int> non_group_;
    std::vector<Bundle> bundles_;
    Bundle incomplete_;
    Rational incomplete_v_;
    bool have_incomplete_ = false;
    std::vector<int> p_plus_;
    std::vector<int> p_minus_;
};

}  // namespace

std::vector<Bundle> balanced_partition(const ScaledValuation& sv,
                                       const DividerState& state,
                                       const BalancedGroups& groups,
                                       DividerTrace* trace) {
    PartitionBuilder builder(sv, state, groups, trace);
    return builder.build();
}

Allocation lone_divider(const std::vector<std::vector<Rational>>& values,
                        const std::vector<Rational>& thresholds, int m,
                        const DividerStrategy& strategy) {
    const int n = static_cast<int>(values.size());
    Allocation out;
    out.bundles.assign(n, Bundle{});

    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);
    DividerState state;
    for (int g = 0; g < m; ++g) state.remaining.add(g);

    while (!active.empty()) {
        const int divider = active.front();
        auto parts = strategy(divider, state);
        if (static_cast<int>(parts.size()) != static_cast<int>(active.size()))
            throw ContractViolation("divider returned wrong bundle count");

        AcceptabilityGraph g(static_cast<int>(active.size()),
                             static_cast<int>(parts.size()));
        for (size_t ai = 0; ai < active.size(); ++ai)
            for (size_t j = 0; j < parts.size(); ++j)
                g.edge[ai][j] =
                    row_value(values[active[ai]], parts[j]) >= thresholds[active[ai]];

        auto matched = envy_free_matching(g);
        if (matched.empty())
            throw ContractViolation("no nonempty envy-free matching");

        std::vector<int> still_active;
        std::vector<bool> is_matched(active.size(), false);
        for (auto [ai, j] : matched) {
            is_matched[ai] = true;
            out.bundles[active[ai]] = parts[j];
            state.allocated.push_back(parts[j]);
            for (int good : parts[j].goods) state.remaining.remove(good);
        }
        for (size_t ai = 0; ai < active.size(); ++ai)
            if (!is_matched[ai]) still_active.push_back(active[ai]);
        active = std::move(still_active);
    }
    out.unallocated = state.remaining;
    return out;
}

SolveResult restricted_lone_divider(int original_m, int padded_m, int ell,
                                    std::vector<ScaledValuation> svs) {
    const int n = static_cast<int>(svs.size());
    const int m = padded_m;
    const BalancedGroups groups{ell, n};

    SolveResult res;
    res.d = 0;
    res.padded_m = m;
    res.maps.perm.resize(n);
    res.shares.resize(n);

    std::vector<ScaledValuation> ordered_sv(n);
    std::vector<std::vector<Rational>> ordered_values(n);
    std::vector<Rational> thresholds(n);
    for (int i = 0; i < n; ++i) {
        ScaledValuation sv = std::move(svs[i]);
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
            return sv.values[a] > sv.values[b];
        });
        std::vector<int> inv(m);
        for (int p = 0; p < m; ++p) inv[perm[p]] = p;

        ScaledValuation ord = sv;
        for (int p = 0; p < m; ++p) ord.values[p] = sv.values[perm[p]];
        for (auto& b : ord.witness) {
            Bundle t;
            for (int g : b.goods) t.add(inv[g]);
            b = t;
        }
        ordered_values[i] = ord.values;
        ordered_sv[i] = std::move(ord);
        res.maps.perm[i] = std::move(perm);
        thresholds[i] = ordered_sv[i].degenerate ? Rational(0) : Rational(ell);
    }

    auto strategy = [&](int divider, const DividerState& state) {
        return balanced_partition(ordered_sv[divider], state, groups);
    };
    res.ordered = lone_divider(ordered_values, thresholds, m, strategy);

    Allocation orig = unorder_allocation(res.ordered, res.maps);
    auto strip = [&](Bundle& b) {
        std::erase_if(b.goods, [&](int g) { return g >= original_m; });
    };
    for (auto& b : orig.bundles) strip(b);
    strip(orig.unallocated);
    res.allocation = std::move(orig);
    return res;
}

SolveResult solve_ordinal(const Instance& inst, int ell, bool greedy_thresholds,
                          int good_cap) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    const int n = inst.n;
    const int d = ((2 * ell + 1) * n) / 2;
    const Instance padded =
        pad_with_dummies(inst, std::max(0, ell * n - inst.m));

    std::vector<ScaledValuation> svs(n);
    std::vector<Rational> shares(n);
    for (int i = 0; i < n; ++i) {
        MMSWitness w = greedy_thresholds
                           ? greedy_lower_bound(padded, i, ell, d)
                           : mms_exact(padded, i, ell, d, good_cap);
        shares[i] = w.value;
        svs[i] = scale_to_mms(padded, i, ell, d, w);
    }
    SolveResult res =
        restricted_lone_divider(inst.m, padded.m, ell, std::move(svs));
    res.d = d;
    res.shares = std::move(shares);
    return res;
}

}  // namespace ordmms
