#include "ordmms.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <json.hpp>

#include "ordmms/core.hpp"
#include "ordmms/covering.hpp"
#include "ordmms/experiments.hpp"
#include "ordmms/fixtures.hpp"
#include "ordmms/lone_divider.hpp"
#include "ordmms/mms.hpp"
#include "ordmms/responsive.hpp"

using nlohmann::json;

struct ordmms_instance {
    ordmms::Instance inst;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const ordmms::ContractViolation& e) {
        return fail(ORDMMS_ERR_CONTRACT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ORDMMS_ERR_INVALID, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(ORDMMS_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ORDMMS_ERR_NOMEM, "out of memory");
    } catch (const std::exception& e) {
        const std::string what = e.what();
        if (what.find("too large") != std::string::npos)
            return fail(ORDMMS_ERR_TOO_LARGE, what);
        return fail(ORDMMS_ERR_CONTRACT, what);
    }
}

int emit(const std::string& text, char** out) {
    *out = dup_string(text);
    return *out ? ORDMMS_OK : fail(ORDMMS_ERR_NOMEM, "out of memory");
}

json bundle_json(const ordmms::Bundle& b) { return json(b.goods); }

json allocation_json(const ordmms::Instance& inst,
                     const ordmms::Allocation& alloc) {
    json j;
    j["bundles"] = json::array();
    j["values"] = json::array();
    for (int i = 0; i < inst.n; ++i) {
        j["bundles"].push_back(bundle_json(alloc.bundles[i]));
        j["values"].push_back(ordmms::bundle_value(inst, i, alloc.bundles[i]));
    }
    j["unallocated"] = bundle_json(alloc.unallocated);
    return j;
}

ordmms::Distribution parse_dist(const std::string& spec) {
    const auto next = [&](size_t& pos) {
        size_t colon = spec.find(':', pos);
        std::string tok = spec.substr(pos, colon - pos);
        pos = colon == std::string::npos ? spec.size() : colon + 1;
        return tok;
    };
    size_t pos = 0;
    const std::string kind = next(pos);
    if (kind == "uniform") {
        long long lo = std::stoll(next(pos));
        long long hi = std::stoll(next(pos));
        return ordmms::Distribution::uniform(lo, hi);
    }
    if (kind == "geometric")
        return ordmms::Distribution::geometric(std::stoll(next(pos)));
    throw std::invalid_argument("unknown distribution: " + spec);
}

}  // namespace

extern "C" {

const char* ordmms_last_error(void) { return g_last_error.c_str(); }

void ordmms_string_free(char* s) { std::free(s); }

int ordmms_instance_create(int n, int m, const int64_t* values,
                           ordmms_instance** out) {
    return guarded([&] {
        if (!values || !out || n < 1 || m < 0)
            return fail(ORDMMS_ERR_INVALID, "bad instance arguments");
        auto* h = new ordmms_instance;
        h->inst.n = n;
        h->inst.m = m;
        h->inst.values.assign(n, std::vector<ordmms::Value>(m));
        for (int i = 0; i < n; ++i)
            for (int g = 0; g < m; ++g)
                h->inst.values[i][g] = values[static_cast<size_t>(i) * m + g];
        if (!h->inst.valid()) {
            delete h;
            return fail(ORDMMS_ERR_INVALID, "values must be non-negative");
        }
        *out = h;
        return ORDMMS_OK;
    });
}

int ordmms_instance_from_json(const char* text, ordmms_instance** out) {
    return guarded([&] {
        if (!text || !out) return fail(ORDMMS_ERR_INVALID, "null argument");
        auto* h = new ordmms_instance;
        try {
            h->inst = ordmms::instance_from_json(text);
        } catch (...) {
            delete h;
            throw;
        }
        *out = h;
        return ORDMMS_OK;
    });
}

int ordmms_instance_to_json(const ordmms_instance* inst, char** json_out) {
    return guarded([&] {
        if (!inst || !json_out) return fail(ORDMMS_ERR_INVALID, "null argument");
        return emit(ordmms::instance_to_json(inst->inst), json_out);
    });
}

int ordmms_fixture(const char* name, ordmms_instance** out) {
    return guarded([&] {
        if (!name || !out) return fail(ORDMMS_ERR_INVALID, "null argument");
        auto* h = new ordmms_instance;
        try {
            h->inst = ordmms::fixture(name);
        } catch (...) {
            delete h;
            throw;
        }
        *out = h;
        return ORDMMS_OK;
    });
}

int ordmms_fixture_names(char** json_out) {
    return guarded([&] {
        if (!json_out) return fail(ORDMMS_ERR_INVALID, "null argument");
        return emit(json(ordmms::fixture_names()).dump(), json_out);
    });
}

void ordmms_instance_free(ordmms_instance* inst) { delete inst; }

int ordmms_instance_n(const ordmms_instance* inst) {
    return inst ? inst->inst.n : -1;
}

int ordmms_instance_m(const ordmms_instance* inst) {
    return inst ? inst->inst.m : -1;
}

int ordmms_mms(const ordmms_instance* inst, int agent, int ell, int d,
               int good_cap, int64_t* num, int64_t* den) {
    return guarded([&] {
        if (!inst || !num || !den) return fail(ORDMMS_ERR_INVALID, "null argument");
        if (agent < 0 || agent >= inst->inst.n)
            return fail(ORDMMS_ERR_INVALID, "agent out of range");
        ordmms::MMSWitness w =
            ordmms::mms_exact(inst->inst, agent, ell, d, good_cap);
        if (!w.value.get_num().fits_slong_p() ||
            !w.value.get_den().fits_slong_p())
            return fail(ORDMMS_ERR_TOO_LARGE, "share does not fit in 64 bits");
        *num = w.value.get_num().get_si();
        *den = w.value.get_den().get_si();
        return ORDMMS_OK;
    });
}

int ordmms_solve(const ordmms_instance* inst, int ell, int greedy_thresholds,
                 int good_cap, char** json_out) {
    return guarded([&] {
        if (!inst || !json_out) return fail(ORDMMS_ERR_INVALID, "null argument");
        ordmms::SolveResult res = ordmms::solve_ordinal(
            inst->inst, ell, greedy_thresholds != 0, good_cap);
        json j = allocation_json(inst->inst, res.allocation);
        j["ell"] = ell;
        j["d"] = res.d;
        j["shares"] = json::array();
        for (const auto& s : res.shares)
            j["shares"].push_back(ordmms::to_string(s));
        return emit(j.dump(2) + "\n", json_out);
    });
}

int ordmms_bbfs(const ordmms_instance* inst, char** json_out) {
    return guarded([&] {
        if (!inst || !json_out) return fail(ORDMMS_ERR_INVALID, "null argument");
        ordmms::BBFSAllocationResult res = ordmms::bbfs_allocation(inst->inst);
        json j = allocation_json(inst->inst, res.allocation);
        j["thresholds"] = json(res.thresholds);
        j["prefix_invariant_held"] = res.prefix_invariant_held;
        return emit(j.dump(2) + "\n", json_out);
    });
}

int ordmms_verify_responsive(int d, int* ok) {
    return guarded([&] {
        if (!ok) return fail(ORDMMS_ERR_INVALID, "null argument");
        *ok = ordmms::verify_counterexample(d) ? 1 : 0;
        return ORDMMS_OK;
    });
}

int ordmms_simulate(const char* experiment, const char* dist_spec, int trials,
                    uint64_t seed, const int* ns, int ns_len, const int* ms,
                    int ms_len, const int* ells, int ells_len, char** csv_out,
                    char** svg_out) {
    return guarded([&] {
        if (!experiment || !dist_spec || !csv_out || !ns || !ms)
            return fail(ORDMMS_ERR_INVALID, "null argument");
        if (trials < 1 || ns_len < 1 || ms_len < 1)
            return fail(ORDMMS_ERR_INVALID, "empty grid or no trials");
        const ordmms::Distribution dist = parse_dist(dist_spec);
        const std::vector<int> vns(ns, ns + ns_len), vms(ms, ms + ms_len);

        ordmms::ExperimentReport rep;
        const std::string kind = experiment;
        if (kind == "ordinal") {
            if (!ells || ells_len < 1)
                return fail(ORDMMS_ERR_INVALID, "ordinal experiment needs ells");
            rep = ordmms::experiment_ordinal(
                vns, vms, std::vector<int>(ells, ells + ells_len), dist,
                trials, seed);
        } else if (kind == "thresholds-individual") {
            rep = ordmms::experiment_thresholds(
                vns, vms, dist, trials, seed,
                ordmms::ThresholdMode::individual);
        } else if (kind == "thresholds-common") {
            rep = ordmms::experiment_thresholds(
                vns, vms, dist, trials, seed, ordmms::ThresholdMode::common);
        } else {
            return fail(ORDMMS_ERR_INVALID, "unknown experiment: " + kind);
        }
        int rc = emit(rep.to_csv(), csv_out);
        if (rc != ORDMMS_OK) return rc;
        if (svg_out) {
            rc = emit(rep.to_svg(), svg_out);
            if (rc != ORDMMS_OK) {
                ordmms_string_free(*csv_out);
                *csv_out = nullptr;
                return rc;
            }
        }
        return ORDMMS_OK;
    });
}

}  // extern "C"
