#include "ordmms/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace ordmms {

Bundle::Bundle(std::vector<int> g) : goods(std::move(g)) {
    std::sort(goods.begin(), goods.end());
    goods.erase(std::unique(goods.begin(), goods.end()), goods.end());
}

bool Bundle::contains(int g) const {
    return std::binary_search(goods.begin(), goods.end(), g);
}

void Bundle::add(int g) {
    auto it = std::lower_bound(goods.begin(), goods.end(), g);
    if (it == goods.end() || *it != g) goods.insert(it, g);
}

void Bundle::remove(int g) {
    auto it = std::lower_bound(goods.begin(), goods.end(), g);
    if (it != goods.end() && *it == g) goods.erase(it);
}

bool Bundle::disjoint_with(const Bundle& other) const {
    auto a = goods.begin();
    auto b = other.goods.begin();
    while (a != goods.end() && b != other.goods.end()) {
        if (*a < *b)
            ++a;
        else if (*b < *a)
            ++b;
        else
            return false;
    }
    return true;
}

Bundle Bundle::unite(const Bundle& other) const {
    Bundle out;
    std::set_union(goods.begin(), goods.end(), other.goods.begin(),
                   other.goods.end(), std::back_inserter(out.goods));
    return out;
}

bool Instance::valid() const {
    if (n < 1 || m < 0) return false;
    if (static_cast<int>(values.size()) != n) return false;
    for (const auto& row : values) {
        if (static_cast<int>(row.size()) != m) return false;
        for (Value v : row)
            if (v < 0) return false;
    }
    return true;
}

std::pair<Instance, OrderingMaps> order_instance(const Instance& inst) {
    Instance out = inst;
    OrderingMaps maps;
    maps.perm.resize(inst.n);
    for (int i = 0; i < inst.n; ++i) {
        std::vector<int> idx(inst.m);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return inst.values[i][a] > inst.values[i][b];
        });
        for (int j = 0; j < inst.m; ++j) out.values[i][j] = inst.values[i][idx[j]];
        maps.perm[i] = std::move(idx);
    }
    return {out, maps};
}

Allocation unorder_allocation(const Allocation& alloc, const OrderingMaps& maps) {
    const int n = static_cast<int>(alloc.bundles.size());
    int m = 0;
    for (const auto& p : maps.perm) m = std::max(m, static_cast<int>(p.size()));

    // owner[pos] = agent holding that ordered position, or -1
    std::vector<int> owner(m, -1);
    for (int i = 0; i < n; ++i) {
        for (int p : alloc.bundles[i].goods) {
            if (owner[p] != -1) throw std::invalid_argument("overlapping bundles");
            owner[p] = i;
        }
    }

    std::vector<bool> taken(m, false);
    std::vector<int> cursor(n, 0);  // next candidate in perm[i]
    Allocation out;
    out.bundles.assign(n, Bundle{});
    for (int pos = 0; pos < m; ++pos) {
        int i = owner[pos];
        if (i < 0) continue;
        int& c = cursor[i];
        while (taken[maps.perm[i][c]]) ++c;
        int g = maps.perm[i][c];
        taken[g] = true;
        out.bundles[i].add(g);
    }
    for (int g = 0; g < m; ++g)
        if (!taken[g]) out.unallocated.add(g);
    return out;
}

Instance pad_with_dummies(const Instance& inst, int count) {
    Instance out = inst;
    out.m += count;
    for (auto& row : out.values) row.resize(out.m, 0);
    return out;
}

Value bundle_value(const Instance& inst, int agent, const Bundle& b) {
    Value sum = 0;
    for (int g : b.goods) sum += inst.values[agent][g];
    return sum;
}

Instance instance_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Instance inst;
    inst.n = j.at("n").get<int>();
    inst.m = j.at("m").get<int>();
    inst.values = j.at("values").get<std::vector<std::vector<Value>>>();
    if (!inst.valid()) throw std::invalid_argument("malformed instance");
    return inst;
}

std::string instance_to_json(const Instance& inst) {
    nlohmann::json j;
    j["n"] = inst.n;
    j["m"] = inst.m;
    j["values"] = inst.values;
    return j.dump();
}

std::string allocation_to_json(const Allocation& alloc) {
    nlohmann::json j;
    j["bundles"] = nlohmann::json::array();
    for (const auto& b : alloc.bundles) j["bundles"].push_back(b.goods);
    j["unallocated"] = alloc.unallocated.goods;
    return j.dump();
}

}  // namespace ordmms
