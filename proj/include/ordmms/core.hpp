#ifndef ORDMMS_CORE_HPP
#define ORDMMS_CORE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ordmms {

using Value = long;  // 64-bit here; keeps gmpxx constructors unambiguous

/// A set of good indices, kept sorted and duplicate-free.
struct Bundle {
    std::vector<int> goods;

    Bundle() = default;
    explicit Bundle(std::vector<int> g);

    bool empty() const { return goods.empty(); }
    int size() const { return static_cast<int>(goods.size()); }
    bool contains(int g) const;
    void add(int g);
    void remove(int g);
    bool disjoint_with(const Bundle& other) const;
    Bundle unite(const Bundle& other) const;

    bool operator==(const Bundle&) const = default;
};

/// n agents, m goods, non-negative integer valuations.
struct Instance {
    int n = 0;
    int m = 0;
    std::vector<std::vector<Value>> values;  // values[i][g]

    Value value(int agent, int good) const { return values[agent][good]; }
    bool valid() const;
};

struct Allocation {
    std::vector<Bundle> bundles;  // one per agent
    Bundle unallocated;
};

/// Per-agent permutations: perm[i][j] is the original index of agent i's
/// j-th most valuable good.
struct OrderingMaps {
    std::vector<std::vector<int>> perm;
};

/// Sorts every agent's row in non-increasing order. Equal values keep
/// ascending original index.
std::pair<Instance, OrderingMaps> order_instance(const Instance& inst);

/// Maps an allocation of the ordered instance back to original goods via a
/// picking sequence: positions 0..m-1 are processed in order, and the agent
/// holding a position picks its highest-ranked remaining original good.
Allocation unorder_allocation(const Allocation& alloc, const OrderingMaps& maps);

/// Appends `count` zero-valued goods.
Instance pad_with_dummies(const Instance& inst, int count);

Value bundle_value(const Instance& inst, int agent, const Bundle& b);

// ---- JSON I/O ----
// Instance files: {"n": int, "m": int, "values": [[int,...],...]}
Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& inst);
std::string allocation_to_json(const Allocation& alloc);

}  // namespace ordmms

#endif
