// Command-line front end for the mmset shared library: build the second-row
// varieties, persist them, run the Mazzocca-Melone verification suite, and
// compute residues. Talks to the engine exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmset/mmset.h"

namespace {

// exit-code contract: 0 all pass, 1 check failure, 2 usage/parse, 3 unsupported
int exit_code_for(mmset_status st) {
    switch (st) {
        case MMSET_OK: return 0;
        case MMSET_ERR_CHECK: return 1;
        case MMSET_ERR_USAGE: return 2;
        case MMSET_ERR_UNSUPPORTED: return 3;
        case MMSET_ERR_IO: return 2;
        case MMSET_ERR_INTERNAL: return 2;
    }
    return 2;
}

int fail_with(mmset_status st) {
    std::cerr << "error: " << mmset_last_error() << "\n";
    return exit_code_for(st);
}

struct VarietyHandle {
    mmset_variety* v = nullptr;
    ~VarietyHandle() { mmset_variety_free(v); }
};

struct ReportHandle {
    mmset_report* r = nullptr;
    ~ReportHandle() { mmset_report_free(r); }
};

void print_summary(const mmset_variety* v) {
    long long lines = mmset_variety_lines(v);
    std::cout << "family=" << mmset_variety_family(v) << " q=" << mmset_variety_q(v)
              << " d=" << mmset_variety_d(v) << " N=" << mmset_variety_ambient_dim(v)
              << " points=" << mmset_variety_points(v) << " lines=";
    if (lines < 0)
        std::cout << "n/a";
    else
        std::cout << lines;
    std::cout << " symps=" << mmset_variety_symps(v) << "\n";
}

bool write_text_file(const std::string& path, const char* data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) return false;
    os << data;
    return static_cast<bool>(os);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mmset: exact Freudenthal-Tits second-row varieties over GF(q) "
                 "with Mazzocca-Melone axiom verification"};
    app.require_subcommand(1);

    // ---- build ----
    auto* build = app.add_subcommand("build", "construct a variety and write it to a file");
    std::string family, out_path;
    int p = 2, ext = 1;
    int n = -1, m = -1, kk = -1, ll = -1;
    build->add_option("--family", family,
                      "veronese | segre | grassmann | halfspin | e6")->required();
    build->add_option("--p", p, "field characteristic (prime)");
    build->add_option("--ext", ext, "field extension degree, q = p^ext");
    build->add_option("--n", n, "veronese source dimension");
    build->add_option("--m", m, "grassmann source dimension");
    build->add_option("--k", kk, "segre left dimension");
    build->add_option("--l", ll, "segre right dimension");
    build->add_option("--out", out_path, "output file")->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run verification checks on a stored variety");
    std::string in_path, report_path, format = "text", checks;
    uint64_t seed = 0, samples = 0, quadrangle_samples = 0, wrinkle_samples = 0;
    bool seed_given = false, exhaustive_mm2 = false;
    int workers = 0;
    verify->add_option("--in", in_path, "variety file")->required();
    verify->add_option("--seed", seed, "PRNG seed (required when any check samples)")
        ->each([&](const std::string&) { seed_given = true; });
    verify->add_option("--samples", samples, "pair/point sample count for large sets");
    verify->add_option("--quadrangle-samples", quadrangle_samples, "quadrangle sample count");
    verify->add_option("--wrinkle-samples", wrinkle_samples, "wrinkle sample count");
    verify->add_option("--workers", workers, "worker threads (0 = hardware)");
    verify->add_option("--out", report_path, "write the JSON report to this path");
    verify->add_option("--format", format, "stdout format: json | text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--checks", checks,
                       "comma-separated: structure,mm1,mm2,mm3,quadrangle,subspace,lemma1,wrinkles");
    verify->add_flag("--exhaustive-mm2", exhaustive_mm2, "force MM2 over all symp pairs");

    // ---- residue ----
    auto* residue = app.add_subcommand("residue", "compute the residue at a point");
    std::string res_in, res_out, res_format = "json";
    long long point_index = 0;
    residue->add_option("--in", res_in, "variety file")->required();
    residue->add_option("--point", point_index, "base point index")->required();
    residue->add_option("--out", res_out, "output file for the residue variety");
    residue->add_option("--format", res_format, "summary format: json | text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (build->parsed()) {
        std::vector<int> params;
        if (family == "veronese") {
            if (n < 0)
                return std::cerr << "error: veronese needs --n\n", 2;
            params = {n};
        } else if (family == "segre") {
            if (kk < 0 || ll < 0)
                return std::cerr << "error: segre needs --k and --l\n", 2;
            params = {kk, ll};
        } else if (family == "grassmann") {
            if (m < 0)
                return std::cerr << "error: grassmann needs --m\n", 2;
            params = {m};
        } else if (family != "halfspin" && family != "e6") {
            return std::cerr << "error: unknown family " << family << "\n", 2;
        }
        VarietyHandle h;
        mmset_status st = mmset_build(family.c_str(), params.data(),
                                      static_cast<int>(params.size()), p, ext, &h.v);
        if (st != MMSET_OK) return fail_with(st);
        st = mmset_save(h.v, out_path.c_str());
        if (st != MMSET_OK) return fail_with(st);
        print_summary(h.v);
        return 0;
    }

    if (verify->parsed()) {
        VarietyHandle h;
        mmset_status st = mmset_load(in_path.c_str(), &h.v);
        if (st != MMSET_OK) return fail_with(st);
        mmset_verify_options opt;
        mmset_verify_options_init(&opt);
        opt.seed = seed;
        opt.seed_given = seed_given ? 1 : 0;
        opt.workers = workers;
        opt.pair_samples = samples;
        opt.point_samples = samples;
        opt.sympair_samples = samples;
        opt.quadrangle_samples = quadrangle_samples;
        opt.wrinkle_samples = wrinkle_samples;
        opt.exhaustive_mm2 = exhaustive_mm2 ? 1 : 0;
        opt.checks = checks.empty() ? nullptr : checks.c_str();
        ReportHandle rep;
        st = mmset_verify(h.v, &opt, &rep.r);
        if (st != MMSET_OK) return fail_with(st);
        char* json = mmset_report_json(rep.r);
        if (!report_path.empty() && !write_text_file(report_path, json)) {
            mmset_string_free(json);
            std::cerr << "error: cannot write " << report_path << "\n";
            return 2;
        }
        if (format == "json") {
            std::cout << json << "\n";
        } else {
            char* text = mmset_report_text(rep.r);
            std::cout << text;
            mmset_string_free(text);
        }
        mmset_string_free(json);
        return mmset_report_all_pass(rep.r) ? 0 : 1;
    }

    if (residue->parsed()) {
        VarietyHandle h;
        mmset_status st = mmset_load(res_in.c_str(), &h.v);
        if (st != MMSET_OK) return fail_with(st);
        VarietyHandle res;
        char* summary = nullptr;
        st = mmset_residue(h.v, point_index, &res.v, &summary);
        if (st != MMSET_OK) return fail_with(st);
        if (res.v && !res_out.empty()) {
            st = mmset_save(res.v, res_out.c_str());
            if (st != MMSET_OK) {
                mmset_string_free(summary);
                return fail_with(st);
            }
        }
        if (res_format == "text" && res.v) print_summary(res.v);
        std::cout << summary << "\n";
        mmset_string_free(summary);
        return 0;
    }

    return 2;
}
