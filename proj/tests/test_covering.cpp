#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ordmms/covering.hpp"
#include "ordmms/fixtures.hpp"
#include "ordmms/mms.hpp"

using namespace ordmms;

namespace {

Instance identical(int n, std::vector<Value> row) {
    Instance inst;
    inst.n = n;
    inst.m = static_cast<int>(row.size());
    inst.values.assign(n, std::move(row));
    return inst;
}

std::vector<Rational> rationals(std::vector<Value> v) {
    std::vector<Rational> out;
    for (Value x : v) out.emplace_back(x);
    return out;
}

std::mt19937_64 g_rng(41);

std::vector<Value> random_row(int m, Value hi) {
    std::vector<Value> row(m);
    for (auto& v : row) v = g_rng() % (hi + 1);
    return row;
}

}  // namespace

TEST_CASE("bidirectional bag filling reproduces the circled allocation") {
    Instance inst = fixture("example-5.1");
    CoverResult r = bidirectional_bag_filling(inst, rationals({9, 11, 10}));
    REQUIRE(r.count() == 3);
    CHECK(r.filled[0].agent == 0);
    CHECK(r.filled[0].goods == Bundle{{0}});
    CHECK(r.filled[1].agent == 1);
    CHECK(r.filled[1].goods == Bundle{{1, 4, 5}});
    CHECK(r.filled[2].agent == 2);
    CHECK(r.filled[2].goods == Bundle{{2, 3}});
    CHECK(r.leftover.empty());
}

TEST_CASE("unidirectional bag filling strands the third agent") {
    Instance inst = fixture("example-5.1");
    CoverResult r = unidirectional_bag_filling(inst, rationals({9, 11, 10}));
    REQUIRE(r.count() == 2);
    CHECK(r.filled[0].goods == Bundle{{0}});
    CHECK(r.filled[1].agent == 1);
    CHECK(r.filled[1].goods == Bundle{{1, 2}});
    CHECK(r.leftover == Bundle{{3, 4, 5}});
}

TEST_CASE("bag filling demands non-increasing rows") {
    Instance inst = identical(1, {1, 5});
    CHECK_THROWS(bidirectional_bag_filling(inst, rationals({3})));
}

TEST_CASE("bbfs matches the worked thresholds") {
    Instance inst = fixture("example-5.1");
    CHECK(bbfs(inst.values[0], 3).value == 9);
    CHECK(bbfs(inst.values[1], 3).value == 11);
    CHECK(bbfs(inst.values[2], 3).value == 10);

    // the t=9 simulation for agent 1
    CoverShare cs = bbfs(inst.values[0], 3);
    REQUIRE(cs.witness.count() == 3);
    CHECK(cs.witness.filled[0].goods == Bundle{{0}});
    CHECK(cs.witness.filled[1].goods == Bundle{{1, 5}});
    CHECK(cs.witness.filled[2].goods == Bundle{{2, 3, 4}});
}

TEST_CASE("bbfs with one agent is the total value") {
    CHECK(bbfs({5, 4, 1}, 1).value == 10);
    CHECK(bbfs({0, 0}, 2).value == 0);
}

TEST_CASE("bbfs dominates the exact 1-out-of-ceil(3n/2) share") {
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(g_rng() % 3);
        const int m = n + static_cast<int>(g_rng() % 7);
        auto row = random_row(m, 9);
        Instance inst = identical(1, row);
        const int d = (3 * n + 1) / 2;
        CHECK(Rational(bbfs(row, n).value) >= mms_exact(inst, 0, 1, d).value);
    }
}

TEST_CASE("closing goods are minimal: dropping one breaks the threshold") {
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(g_rng() % 3);
        const int m = n + static_cast<int>(g_rng() % 8);
        Instance inst;
        inst.n = n;
        inst.m = m;
        inst.values.assign(n, {});
        for (auto& row : inst.values) {
            row = random_row(m, 9);
            std::sort(row.begin(), row.end(), std::greater<>());
        }
        std::vector<Rational> th(n);
        for (int i = 0; i < n; ++i) th[i] = Rational(1 + g_rng() % 20);
        for (const auto& bag :
             bidirectional_bag_filling(inst, th).filled) {
            if (bag.goods.size() < 2) continue;
            // fills arrive in ascending value, so the closing good is the
            // lowest-position non-seed good
            int closing = -1;
            for (int g : bag.goods.goods)
                if (g != bag.seed) {
                    closing = g;
                    break;
                }
            Bundle without = bag.goods;
            without.remove(closing);
            CHECK(Rational(bundle_value(inst, bag.agent, without)) <
                  th[bag.agent]);
        }
    }
}

TEST_CASE("bbfs_allocation reproduces the worked example end to end") {
    Instance inst = fixture("example-5.1");
    BBFSAllocationResult res = bbfs_allocation(inst);
    CHECK(res.thresholds == std::vector<Value>{9, 11, 10});
    CHECK(res.allocation.bundles[0] == Bundle{{0}});
    CHECK(res.allocation.bundles[1] == Bundle{{1, 4, 5}});
    CHECK(res.allocation.bundles[2] == Bundle{{2, 3}});
    CHECK(res.prefix_invariant_held);
}

TEST_CASE("bbfs_allocation serves everyone at their share on random inputs") {
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(g_rng() % 3);
        const int m = 1 + static_cast<int>(g_rng() % 10);
        Instance inst;
        inst.n = n;
        inst.m = m;
        inst.values.assign(n, {});
        for (auto& row : inst.values) row = random_row(m, 9);
        BBFSAllocationResult res = bbfs_allocation(inst);
        CHECK(res.prefix_invariant_held);
        for (int i = 0; i < n; ++i)
            CHECK(bundle_value(inst, i, res.allocation.bundles[i]) >=
                  res.thresholds[i]);
    }
}

TEST_CASE("identical agents each reach the common bbfs share") {
    auto row = random_row(10, 9);
    Instance inst = identical(3, row);
    BBFSAllocationResult res = bbfs_allocation(inst);
    const Value share = bbfs(row, 3).value;
    for (int i = 0; i < 3; ++i)
        CHECK(bundle_value(inst, i, res.allocation.bundles[i]) >= share);
}

TEST_CASE("cover_opt_exact") {
    CHECK(cover_opt_exact({8, 7, 6, 5, 4}, 15) == 2);
    CHECK(cover_opt_exact({8, 7, 6, 5, 4}, 0) == 5);
    CHECK(cover_opt_exact({8, 7, 6, 5, 4}, 31) == 0);
    CHECK(cover_opt_exact({8, 7, 6, 5, 4}, 30) == 1);
    CHECK_THROWS(cover_opt_exact(std::vector<Value>(15, 1), 1));
}

TEST_CASE("cover_opt_exact upper-bounds any bag filling count") {
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(g_rng() % 10);
        auto row = random_row(m, 9);
        const Value t = 1 + static_cast<Value>(g_rng() % 15);
        std::sort(row.begin(), row.end(), std::greater<>());
        Instance clones = identical(m, row);
        const int filled =
            bidirectional_bag_filling(clones,
                                      std::vector<Rational>(m, Rational(t)))
                .count();
        CHECK(filled <= cover_opt_exact(row, t));
    }
}

TEST_CASE("bound formulas") {
    CHECK(js_bound(1000) == doctest::Approx(764.0));
    CHECK(js_epsilon(13.0 * 7.0, 7.0) == doctest::Approx(1.0));
    CHECK(approx_d(2, 4) == 82);
    CHECK(approx_d(1, 2) == 36);    // d=3: 3 + ceil(15*3^(2/3)) + 1
    CHECK(approx_d(1, 18) == 163);  // d=27 is a perfect cube: 27 + 15*9 + 1
}

TEST_CASE("cover_share basics and the linear audit") {
    CHECK(cover_share({4, 3, 2}, 1, bidirectional_bag_filling).value == 9);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = 1 + static_cast<int>(g_rng() % 7);
        auto row = random_row(m, 9);
        for (int d = 1; d <= 4; ++d) {
            CoverShare fast = cover_share(row, d, bidirectional_bag_filling);
            CoverShare slow =
                cover_share_linear(row, d, bidirectional_bag_filling);
            CHECK(fast.value == slow.value);
            // weakly decreasing in d
            if (d > 1)
                CHECK(fast.value <=
                      cover_share(row, d - 1, bidirectional_bag_filling).value);
            // never exceeds the exact 1-out-of-d share
            Instance inst = identical(1, row);
            CHECK(Rational(fast.value) <= mms_exact(inst, 0, 1, d).value);
        }
    }
}

TEST_CASE("cover_share witness covers all goods") {
    auto row = random_row(9, 9);
    CoverShare cs = cover_share(row, 3, bidirectional_bag_filling);
    std::vector<bool> seen(9, false);
    for (const auto& bag : cs.witness.filled)
        for (int g : bag.goods.goods) {
            CHECK(!seen[g]);
            seen[g] = true;
        }
    for (int g : cs.witness.leftover.goods) {
        CHECK(!seen[g]);
        seen[g] = true;
    }
    CHECK(std::count(seen.begin(), seen.end(), false) == 0);
    if (cs.value > 0) CHECK(cs.witness.leftover.empty());
}

TEST_CASE("ell_approx_allocation: ten unit goods, two agents, ell=2") {
    Instance inst = identical(2, std::vector<Value>(10, 1));
    EllApproxResult res =
        ell_approx_allocation(inst, 2, bidirectional_bag_filling);
    CHECK(res.d == 5);
    CHECK(res.shares == std::vector<Value>{2, 2});
    for (int i = 0; i < 2; ++i)
        CHECK(bundle_value(inst, i, res.allocation.bundles[i]) >= 4);
}

TEST_CASE("ell_approx_allocation guarantees ell times the share") {
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(g_rng() % 2);
        const int m = n + static_cast<int>(g_rng() % 8);
        Instance inst;
        inst.n = n;
        inst.m = m;
        inst.values.assign(n, {});
        for (auto& row : inst.values) row = random_row(m, 9);
        EllApproxResult res =
            ell_approx_allocation(inst, 2, bidirectional_bag_filling);
        for (int i = 0; i < n; ++i)
            CHECK(bundle_value(inst, i, res.allocation.bundles[i]) >=
                  2 * res.shares[i]);
    }
}

TEST_CASE("ell_approx_allocation tolerates all-zero instances") {
    Instance inst = identical(2, {0, 0, 0, 0});
    EllApproxResult res =
        ell_approx_allocation(inst, 2, bidirectional_bag_filling);
    CHECK(res.shares == std::vector<Value>{0, 0});
}
