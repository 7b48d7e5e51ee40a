#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "mmset/mmset.h"

namespace {

struct TempPath {
    std::string path;
    explicit TempPath(const char* name) : path(std::string("/tmp/mmset_capi_") + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("build, query, save, load through the C API") {
    mmset_variety* v = nullptr;
    int params[] = {2};
    REQUIRE(mmset_build("veronese", params, 1, 2, 1, &v) == MMSET_OK);
    CHECK(mmset_variety_q(v) == 2);
    CHECK(mmset_variety_d(v) == 1);
    CHECK(mmset_variety_ambient_dim(v) == 5);
    CHECK(mmset_variety_points(v) == 7);
    CHECK(mmset_variety_symps(v) == 7);
    CHECK(std::string(mmset_variety_family(v)) == "veronese");

    TempPath file("veronese.mmset");
    REQUIRE(mmset_save(v, file.path.c_str()) == MMSET_OK);
    mmset_variety* loaded = nullptr;
    REQUIRE(mmset_load(file.path.c_str(), &loaded) == MMSET_OK);
    CHECK(mmset_variety_points(loaded) == 7);
    CHECK(mmset_variety_lines(loaded) == 0);  // the Veronese surface has no singular lines
    mmset_variety_free(loaded);
    mmset_variety_free(v);
}

TEST_CASE("verification through the C API: report JSON and pass flag") {
    mmset_variety* v = nullptr;
    int params[] = {2, 2};
    REQUIRE(mmset_build("segre", params, 2, 2, 1, &v) == MMSET_OK);
    mmset_verify_options opt;
    mmset_verify_options_init(&opt);
    opt.seed = 11;
    opt.seed_given = 1;
    mmset_report* rep = nullptr;
    REQUIRE(mmset_verify(v, &opt, &rep) == MMSET_OK);
    CHECK(mmset_report_all_pass(rep) == 1);
    char* json = mmset_report_json(rep);
    auto parsed = nlohmann::json::parse(json);
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["all_pass"] == true);
    CHECK(parsed["header"]["family"] == "segre");
    CHECK(parsed["header"]["N"] == 8);
    bool saw_mm3 = false;
    for (const auto& rec : parsed["checks"])
        if (rec["name"] == "mm3") {
            saw_mm3 = true;
            CHECK(rec["tangent_dim_histogram"]["4"] == 49);
        }
    CHECK(saw_mm3);
    mmset_string_free(json);
    char* text = mmset_report_text(rep);
    CHECK(std::string(text).find("ALL CHECKS PASSED") != std::string::npos);
    mmset_string_free(text);
    mmset_report_free(rep);
    mmset_variety_free(v);
}

TEST_CASE("error codes: unsupported configuration vs usage errors") {
    mmset_variety* v = nullptr;
    CHECK(mmset_build("e6", nullptr, 0, 3, 1, &v) == MMSET_ERR_UNSUPPORTED);
    CHECK(v == nullptr);
    CHECK(std::string(mmset_last_error()).find("q=2") != std::string::npos);

    CHECK(mmset_build("frobnicate", nullptr, 0, 2, 1, &v) == MMSET_ERR_USAGE);
    int bad_params[] = {9};
    CHECK(mmset_build("veronese", bad_params, 1, 2, 1, &v) == MMSET_ERR_UNSUPPORTED);
    CHECK(mmset_build("veronese", bad_params, 1, 4, 1, &v) == MMSET_ERR_UNSUPPORTED);  // p not prime

    CHECK(mmset_load("/nonexistent/path.mmset", &v) == MMSET_ERR_USAGE);
}

TEST_CASE("residue through the C API with tower comparison") {
    mmset_variety* v = nullptr;
    int params[] = {5};
    REQUIRE(mmset_build("grassmann", params, 1, 2, 1, &v) == MMSET_OK);
    mmset_variety* res = nullptr;
    char* summary = nullptr;
    REQUIRE(mmset_residue(v, 0, &res, &summary) == MMSET_OK);
    REQUIRE(res != nullptr);
    CHECK(mmset_variety_d(res) == 2);
    CHECK(mmset_variety_points(res) == 45);
    auto parsed = nlohmann::json::parse(summary);
    CHECK(parsed["status"] == "ok");
    CHECK(parsed["expected_family"] == "segre");
    CHECK(parsed["counts_match"] == true);
    mmset_string_free(summary);
    mmset_variety_free(res);
    mmset_variety_free(v);
}

TEST_CASE("degenerate residue is reported, not fabricated") {
    mmset_variety* v = nullptr;
    int params[] = {3};
    REQUIRE(mmset_build("grassmann", params, 1, 2, 1, &v) == MMSET_OK);  // non-proper
    mmset_variety* res = nullptr;
    char* summary = nullptr;
    REQUIRE(mmset_residue(v, 0, &res, &summary) == MMSET_OK);
    CHECK(res == nullptr);
    auto parsed = nlohmann::json::parse(summary);
    CHECK(parsed["status"] == "degenerate");
    mmset_string_free(summary);
    mmset_variety_free(v);
}

TEST_CASE("recognition through the C API") {
    mmset_variety* v = nullptr;
    int params[] = {4};
    REQUIRE(mmset_build("grassmann", params, 1, 2, 1, &v) == MMSET_OK);
    char* record = nullptr;
    REQUIRE(mmset_recognize(v, &record) == MMSET_OK);
    auto parsed = nlohmann::json::parse(record);
    CHECK(parsed["ok"] == true);
    CHECK(parsed["dimension"] == 4);
    mmset_string_free(record);
    mmset_variety_free(v);
}

TEST_CASE("sampled verification without an explicit seed is rejected") {
    mmset_variety* v = nullptr;
    REQUIRE(mmset_build("halfspin", nullptr, 0, 2, 1, &v) == MMSET_OK);
    mmset_verify_options opt;
    mmset_verify_options_init(&opt);
    // halfspin over GF(2) has 2295 points: exhaustive pair scans, but the
    // quadrangle check samples, so a seed is demanded
    CHECK(mmset_verify_will_sample(v, &opt) == 1);
    mmset_report* rep = nullptr;
    CHECK(mmset_verify(v, &opt, &rep) == MMSET_ERR_USAGE);
    CHECK(rep == nullptr);
    opt.seed = 3;
    opt.seed_given = 1;
    opt.quadrangle_samples = 500;  // keep the test quick
    opt.wrinkle_samples = 100;
    REQUIRE(mmset_verify(v, &opt, &rep) == MMSET_OK);
    CHECK(mmset_report_all_pass(rep) == 1);
    mmset_report_free(rep);
    mmset_variety_free(v);
}
