#include "ordmms/fixtures.hpp"

#include <stdexcept>

namespace ordmms {

namespace {

Instance identical(int n, std::vector<Value> row) {
    Instance inst;
    inst.n = n;
    inst.m = static_cast<int>(row.size());
    inst.values.assign(n, row);
    return inst;
}

}  // namespace

Instance fixture(const std::string& name) {
    if (name == "example-3.2") {
        std::vector<Value> row;
        for (int i = 0; i < 5; ++i) row.push_back(999);
        for (int i = 0; i < 5; ++i) row.push_back(1);
        return identical(4, row);
    }
    if (name == "example-4.7") {
        // eleven {1-eps, eps} pairs, one {1-12eps, 12eps}, one {1/2, 1/2}
        std::vector<Value> row;
        for (int i = 0; i < 11; ++i) {
            row.push_back(999);
            row.push_back(1);
        }
        row.push_back(988);
        row.push_back(12);
        row.push_back(500);
        row.push_back(500);
        return identical(6, row);
    }
    if (name == "appendix-B") {
        std::vector<Value> row(30, 999);
        row.push_back(30);
        return identical(20, row);
    }
    if (name == "example-5.1") {
        Instance inst;
        inst.n = 3;
        inst.m = 6;
        inst.values = {{10, 8, 6, 3, 2, 1},
                       {12, 7, 6, 5, 4, 2},
                       {9, 8, 7, 4, 3, 1}};
        return inst;
    }
    throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
    return {"example-3.2", "example-4.7", "appendix-B", "example-5.1"};
}

}  // namespace ordmms
