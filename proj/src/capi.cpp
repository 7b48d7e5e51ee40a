#include "mmset/mmset.h"

#include <cstring>
#include <map>
#include <string>

#include "serialize.hpp"
#include "verify.hpp"

using namespace mmset;

struct mmset_variety {
    var::MMSet set;
};

struct mmset_report {
    report::Report rep;
};

namespace {

thread_local std::string g_last_error;

mmset_status fail(mmset_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Constructor preconditions surface as invalid_argument: a well-formed request
// outside the supported ranges, i.e. the "unsupported configuration" class.
template <typename Fn>
mmset_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ser::ParseError& e) {
        return fail(MMSET_ERR_USAGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(MMSET_ERR_UNSUPPORTED, e.what());
    } catch (const std::domain_error& e) {
        return fail(MMSET_ERR_UNSUPPORTED, e.what());
    } catch (const std::exception& e) {
        return fail(MMSET_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

verify::Policy policy_from(const mmset_verify_options* opt) {
    verify::Policy p;
    if (!opt) return p;
    p.seed = opt->seed;
    p.workers = opt->workers < 0 ? 0 : static_cast<unsigned>(opt->workers);
    if (opt->pair_samples) p.pair_samples = opt->pair_samples;
    if (opt->point_samples) p.point_samples = opt->point_samples;
    if (opt->sympair_samples) p.sympair_samples = opt->sympair_samples;
    if (opt->quadrangle_samples) p.quadrangle_samples = opt->quadrangle_samples;
    if (opt->wrinkle_samples) p.wrinkle_samples = opt->wrinkle_samples;
    if (opt->exhaustive_point_limit) p.exhaustive_point_limit = opt->exhaustive_point_limit;
    p.force_exhaustive_mm2 = opt->exhaustive_mm2 != 0;
    if (opt->checks && *opt->checks) {
        std::string csv = opt->checks;
        size_t pos = 0;
        while (pos < csv.size()) {
            size_t comma = csv.find(',', pos);
            if (comma == std::string::npos) comma = csv.size();
            std::string name = csv.substr(pos, comma - pos);
            if (!name.empty()) p.checks.push_back(name);
            pos = comma + 1;
        }
    }
    return p;
}

// expected residue family of the classification, when the tower step is known
const var::MMSet* expected_residue(const var::MMSet& parent, var::MMSet& storage) {
    const gf::Field& F = *parent.F;
    if (parent.family == "e6") {
        storage = var::half_spin(F);
        return &storage;
    }
    if (parent.family == "halfspin" || parent.family == "residue:e6") {
        storage = var::grassmann_lines(4, F);
        return &storage;
    }
    if (parent.family == "grassmann" && !parent.params.empty()) {
        if (parent.params[0] == 5) {
            storage = var::segre(1, 3, F);
            return &storage;
        }
        if (parent.params[0] == 4) {
            storage = var::segre(1, 2, F);
            return &storage;
        }
    }
    return nullptr;
}

report::ordered_json counts_json(const var::MMSet& set) {
    report::ordered_json j;
    j["points"] = set.size();
    if (set.lines_enumerated) {
        j["lines"] = set.lines.size();
        report::ordered_json hist = report::ordered_json::object();
        std::map<uint32_t, uint64_t> per;
        for (uint32_t n : set.line_counts_per_point()) ++per[n];
        for (auto [lines, count] : per) hist[std::to_string(lines)] = count;
        j["lines_per_point"] = hist;
    } else {
        j["lines"] = nullptr;
    }
    j["symps"] = set.symps.size();
    j["d"] = set.d;
    j["N"] = set.N;
    return j;
}

}  // namespace

extern "C" {

const char* mmset_version(void) { return "1.0.0"; }

const char* mmset_last_error(void) { return g_last_error.c_str(); }

void mmset_string_free(char* s) { std::free(s); }

mmset_status mmset_build(const char* family, const int* params, int nparams, int p, int k,
                         mmset_variety** out) {
    if (!family || !out || nparams < 0 || (nparams > 0 && !params))
        return fail(MMSET_ERR_USAGE, "null argument");
    *out = nullptr;
    std::string fam = family;
    return guarded([&]() -> mmset_status {
        const gf::Field& F = gf::field(p, k);
        var::MMSet set;
        if (fam == "veronese") {
            if (nparams != 1) return fail(MMSET_ERR_USAGE, "veronese takes one parameter n");
            set = var::veronese(params[0], F);
        } else if (fam == "segre") {
            if (nparams != 2) return fail(MMSET_ERR_USAGE, "segre takes parameters k, l");
            set = var::segre(params[0], params[1], F);
        } else if (fam == "grassmann") {
            if (nparams != 1) return fail(MMSET_ERR_USAGE, "grassmann takes one parameter m");
            set = var::grassmann_lines(params[0], F);
        } else if (fam == "halfspin") {
            if (nparams != 0) return fail(MMSET_ERR_USAGE, "halfspin takes no parameters");
            set = var::half_spin(F);
        } else if (fam == "e6") {
            if (nparams != 0) return fail(MMSET_ERR_USAGE, "e6 takes no parameters");
            set = var::e6_variety(F);
        } else {
            return fail(MMSET_ERR_USAGE, "unknown family: " + fam);
        }
        *out = new mmset_variety{std::move(set)};
        return MMSET_OK;
    });
}

mmset_status mmset_load(const char* path, mmset_variety** out) {
    if (!path || !out) return fail(MMSET_ERR_USAGE, "null argument");
    *out = nullptr;
    return guarded([&]() -> mmset_status {
        *out = new mmset_variety{ser::load_file(path)};
        return MMSET_OK;
    });
}

mmset_status mmset_save(const mmset_variety* v, const char* path) {
    if (!v || !path) return fail(MMSET_ERR_USAGE, "null argument");
    return guarded([&]() -> mmset_status {
        try {
            ser::save_file(v->set, path);
        } catch (const std::runtime_error& e) {
            return fail(MMSET_ERR_IO, e.what());
        }
        return MMSET_OK;
    });
}

void mmset_variety_free(mmset_variety* v) { delete v; }

int mmset_variety_q(const mmset_variety* v) { return v->set.F->q(); }
int mmset_variety_d(const mmset_variety* v) { return v->set.d; }
int mmset_variety_ambient_dim(const mmset_variety* v) { return v->set.N; }
long long mmset_variety_points(const mmset_variety* v) {
    return static_cast<long long>(v->set.size());
}
long long mmset_variety_lines(const mmset_variety* v) {
    return v->set.lines_enumerated ? static_cast<long long>(v->set.lines.size()) : -1;
}
long long mmset_variety_symps(const mmset_variety* v) {
    return static_cast<long long>(v->set.symps.size());
}
const char* mmset_variety_family(const mmset_variety* v) { return v->set.family.c_str(); }

void mmset_verify_options_init(mmset_verify_options* opt) {
    if (!opt) return;
    std::memset(opt, 0, sizeof(*opt));
}

int mmset_verify_will_sample(const mmset_variety* v, const mmset_verify_options* opt) {
    verify::Policy p = policy_from(opt);
    const var::MMSet& set = v->set;
    if (!p.exhaustive_for(set)) return 1;
    std::vector<std::string> names =
        p.checks.empty()
            ? std::vector<std::string>{"structure", "mm1", "mm2", "mm3", "quadrangle", "wrinkles"}
            : p.checks;
    for (const auto& name : names) {
        if (name == "mm2") {
            uint64_t nsymps = set.symps.size();
            if (!p.force_exhaustive_mm2 && nsymps * (nsymps - 1) / 2 > 600000) return 1;
        }
        if (name == "quadrangle" && !(set.lines_enumerated && set.size() <= 100) &&
            !(set.lines_enumerated && set.lines.size() < 4))
            return 1;
        if (name == "lemma1" && !(set.lines_enumerated && set.size() <= 100)) return 1;
        if (name == "subspace" && set.size() * set.symps.size() > 2'000'000) return 1;
    }
    return 0;
}

mmset_status mmset_verify(const mmset_variety* v, const mmset_verify_options* opt,
                          mmset_report** out) {
    if (!v || !out) return fail(MMSET_ERR_USAGE, "null argument");
    *out = nullptr;
    return guarded([&]() -> mmset_status {
        if (opt && !opt->seed_given && mmset_verify_will_sample(v, opt))
            return fail(MMSET_ERR_USAGE,
                        "sampled checks require an explicit seed for reproducibility");
        verify::Policy p = policy_from(opt);
        *out = new mmset_report{verify::run_checks(v->set, p)};
        return MMSET_OK;
    });
}

int mmset_report_all_pass(const mmset_report* r) { return r->rep.all_pass() ? 1 : 0; }

char* mmset_report_json(const mmset_report* r) { return dup_string(r->rep.to_json().dump(2)); }

char* mmset_report_text(const mmset_report* r) { return dup_string(r->rep.to_text()); }

void mmset_report_free(mmset_report* r) { delete r; }

mmset_status mmset_residue(const mmset_variety* v, long long point_index, mmset_variety** out,
                           char** summary_json) {
    if (!v || !out) return fail(MMSET_ERR_USAGE, "null argument");
    *out = nullptr;
    if (summary_json) *summary_json = nullptr;
    return guarded([&]() -> mmset_status {
        if (point_index < 0 || point_index >= static_cast<long long>(v->set.size()))
            return fail(MMSET_ERR_USAGE, "base point index out of range");
        auto res = verify::residue_at(v->set, static_cast<uint32_t>(point_index));
        report::ordered_json summary;
        summary["schema_version"] = 1;
        summary["basepoint"] = point_index;
        summary["parent"] = verify::set_header(v->set, verify::Policy{});
        if (res.degenerate) {
            summary["status"] = "degenerate";
            summary["reason"] = res.reason;
        } else {
            summary["status"] = "ok";
            summary["residue"] = counts_json(res.set);
            var::MMSet storage;
            const var::MMSet* expected = expected_residue(v->set, storage);
            if (expected) {
                summary["expected_family"] = expected->family;
                summary["expected_params"] = expected->params;
                summary["expected"] = counts_json(*expected);
                summary["counts_match"] =
                    counts_json(res.set) == counts_json(*expected);
            } else {
                summary["expected_family"] = nullptr;
            }
            *out = new mmset_variety{std::move(res.set)};
        }
        if (summary_json) *summary_json = dup_string(summary.dump(2));
        return MMSET_OK;
    });
}

mmset_status mmset_recognize(const mmset_variety* v, char** record_json) {
    if (!v || !record_json) return fail(MMSET_ERR_USAGE, "null argument");
    *record_json = nullptr;
    return guarded([&]() -> mmset_status {
        auto R = verify::recognize_grassmann(v->set);
        report::ordered_json j = R.record.to_json();
        j["ok"] = R.ok;
        *record_json = dup_string(j.dump(2));
        return R.ok ? MMSET_OK : MMSET_ERR_CHECK;
    });
}

}  // extern "C"
