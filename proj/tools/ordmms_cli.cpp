#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordmms.h"

namespace {

using nlohmann::json;

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { ordmms_string_free(s); }
};

struct InstanceGuard {
    ordmms_instance* h = nullptr;
    ~InstanceGuard() { ordmms_instance_free(h); }
};

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(1);
}

void check(int rc) {
    if (rc != ORDMMS_OK) die(ordmms_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) die("cannot write " + path);
    out << text;
}

ordmms_instance* load_instance(const std::string& in, const std::string& fix) {
    ordmms_instance* h = nullptr;
    if (!fix.empty()) {
        check(ordmms_fixture(fix.c_str(), &h));
    } else if (!in.empty()) {
        const std::string text = read_file(in);
        check(ordmms_instance_from_json(text.c_str(), &h));
    } else {
        die("provide --in <file> or --fixture <name>");
    }
    return h;
}

// flattens an allocation-style JSON object into n,m,param,metric,value rows
std::string allocation_csv(const std::string& text) {
    const json j = json::parse(text);
    std::string out = "agent,goods,value\n";
    const auto& bundles = j.at("bundles");
    const auto& values = j.at("values");
    for (size_t i = 0; i < bundles.size(); ++i) {
        out += std::to_string(i) + ",\"";
        for (size_t k = 0; k < bundles[i].size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(bundles[i][k].get<int>());
        }
        out += "\"," + values[i].dump() + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordinal maximin-share solver"};
    app.require_subcommand(1);

    std::string in_path, out_path, format = "json", fixture_name;
    std::uint64_t seed = 1;
    app.add_option("--in", in_path, "instance JSON file")->configurable(false);
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--fixture", fixture_name, "named built-in instance");
    app.fallthrough();

    auto* c_mms = app.add_subcommand("mms", "exact l-out-of-d maximin share");
    int agent = 0, ell = 1, d_opt = 0, good_cap = 14;
    c_mms->add_option("--agent", agent);
    c_mms->add_option("--ell", ell);
    c_mms->add_option("--d", d_opt, "defaults to floor((ell+1/2)*n)");
    c_mms->add_option("--good-cap", good_cap);

    auto* c_solve =
        app.add_subcommand("solve", "l-out-of-floor((l+1/2)n) MMS allocation");
    int s_ell = 1, s_cap = 14;
    bool s_greedy = false;
    c_solve->add_option("--ell", s_ell);
    c_solve->add_option("--good-cap", s_cap);
    c_solve->add_flag("--greedy", s_greedy,
                      "greedy thresholds instead of exact MMS");

    auto* c_bbfs =
        app.add_subcommand("bbfs", "1-out-of-ceil(3n/2) MMS allocation");

    auto* c_sim = app.add_subcommand("simulate", "random-instance experiments");
    std::string experiment = "thresholds-individual", dist = "uniform:0:1000";
    std::string svg_path;
    int trials = 100;
    std::vector<int> ns{3, 4, 5, 6}, ms{6, 12, 24, 48}, ells{1, 2};
    c_sim->add_option("--experiment", experiment,
                      "ordinal|thresholds-individual|thresholds-common");
    c_sim->add_option("--dist", dist, "uniform:LO:HI or geometric:MEAN");
    c_sim->add_option("--trials", trials);
    c_sim->add_option("--ns", ns, "agent counts")->delimiter(',');
    c_sim->add_option("--ms", ms, "good counts")->delimiter(',');
    c_sim->add_option("--ells", ells, "ell values (ordinal)")->delimiter(',');
    c_sim->add_option("--svg", svg_path, "also write an SVG plot");

    auto* c_resp =
        app.add_subcommand("verify-responsive", "check the two-agent limit");
    int resp_d = 2;
    c_resp->add_option("--d", resp_d);

    auto* c_fix = app.add_subcommand("fixtures", "list or dump fixtures");

    CLI11_PARSE(app, argc, argv);

    if (c_mms->parsed()) {
        InstanceGuard g{load_instance(in_path, fixture_name)};
        const int n = ordmms_instance_n(g.h);
        const int d = d_opt > 0 ? d_opt : ((2 * ell + 1) * n) / 2;
        int64_t num = 0, den = 1;
        check(ordmms_mms(g.h, agent, ell, d, good_cap, &num, &den));
        std::string text = std::to_string(num);
        if (den != 1) text += "/" + std::to_string(den);
        write_output(out_path, text + "\n");
    } else if (c_solve->parsed()) {
        InstanceGuard g{load_instance(in_path, fixture_name)};
        StringGuard s;
        check(ordmms_solve(g.h, s_ell, s_greedy ? 1 : 0, s_cap, &s.s));
        write_output(out_path, format == "csv" ? allocation_csv(s.s) : s.s);
    } else if (c_bbfs->parsed()) {
        InstanceGuard g{load_instance(in_path, fixture_name)};
        StringGuard s;
        check(ordmms_bbfs(g.h, &s.s));
        write_output(out_path, format == "csv" ? allocation_csv(s.s) : s.s);
    } else if (c_sim->parsed()) {
        StringGuard csv, svg;
        check(ordmms_simulate(
            experiment.c_str(), dist.c_str(), trials, seed, ns.data(),
            static_cast<int>(ns.size()), ms.data(),
            static_cast<int>(ms.size()), ells.data(),
            static_cast<int>(ells.size()), &csv.s,
            svg_path.empty() ? nullptr : &svg.s));
        write_output(out_path, csv.s);
        if (!svg_path.empty()) write_output(svg_path, svg.s);
    } else if (c_resp->parsed()) {
        int ok = 0;
        check(ordmms_verify_responsive(resp_d, &ok));
        if (!ok) {
            std::cout << "refuted\n";
            return 1;
        }
        write_output(out_path, "verified\n");
    } else if (c_fix->parsed()) {
        if (fixture_name.empty()) {
            StringGuard s;
            check(ordmms_fixture_names(&s.s));
            write_output(out_path, std::string(s.s) + "\n");
        } else {
            InstanceGuard g{load_instance("", fixture_name)};
            StringGuard s;
            check(ordmms_instance_to_json(g.h, &s.s));
            write_output(out_path, std::string(s.s) + "\n");
        }
    }
    return 0;
}
