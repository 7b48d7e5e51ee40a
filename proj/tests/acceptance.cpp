// Acceptance suite: builds every supported variety over GF(2) (plus the
// GF(3) cross-checks), runs the full verification battery, and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <memory>

#include "serialize.hpp"
#include "verify.hpp"

using namespace mmset;
using gf::field;
using report::Status;
using var::MMSet;

namespace {

struct Harness {
    bool all_ok = true;
    void line(int criterion, bool ok, const std::string& msg) {
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, msg.c_str());
        std::fflush(stdout);
        if (!ok) all_ok = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<int, uint64_t> histogram_of(const report::CheckRecord& mm3) {
    std::map<int, uint64_t> h;
    for (auto& [k, v] : mm3.details["tangent_dim_histogram"].items())
        h[std::stoi(k)] = v.get<uint64_t>();
    return h;
}

struct TowerCounts {
    uint64_t points, lines, symps;
    std::map<uint32_t, uint64_t> per_point;
    bool operator==(const TowerCounts&) const = default;
};

TowerCounts tower_counts(const MMSet& set) {
    TowerCounts c{set.size(), set.lines.size(), set.symps.size(), {}};
    for (uint32_t n : set.line_counts_per_point()) ++c.per_point[n];
    return c;
}

std::string show(const TowerCounts& c) {
    return "|X|=" + std::to_string(c.points) + " |lines|=" + std::to_string(c.lines) +
           " |symps|=" + std::to_string(c.symps);
}

}  // namespace

int main() {
    Harness H;
    const auto& F2 = field(2, 1);
    const auto& F3 = field(3, 1);
    verify::Policy policy;
    policy.seed = 2024;
    auto tstart = std::chrono::steady_clock::now();

    // ---- constructions ----
    auto t0 = std::chrono::steady_clock::now();
    auto v2 = var::veronese(2, F2);
    auto s12 = var::segre(1, 2, F2);
    auto s13 = var::segre(1, 3, F2);
    auto s22 = var::segre(2, 2, F2);
    auto g4 = var::grassmann_lines(4, F2);
    auto g5 = var::grassmann_lines(5, F2);
    auto d55 = var::half_spin(F2);
    std::printf("-- built the seven small varieties in %.1fs\n", seconds_since(t0));
    t0 = std::chrono::steady_clock::now();
    auto e6 = var::e6_variety(F2);
    std::printf("-- built the E6 variety in %.1fs: points=%zu symps=%zu N=%d\n",
                seconds_since(t0), e6.size(), e6.symps.size(), e6.N);

    std::map<std::string, const MMSet*> sets{
        {"V2", &v2},   {"S12", &s12}, {"S13", &s13}, {"S22", &s22},
        {"G41", &g4},  {"G51", &g5},  {"D55", &d55}, {"E6", &e6}};

    // shared verification runs (structure, mm1, mm2, mm3, quadrangle, wrinkles
    // plus the lemma checks), exhaustive below 10^4 points, sampled above
    std::map<std::string, report::Report> reports;
    verify::Policy full = policy;
    full.checks = {"structure", "mm1", "mm2", "mm3", "quadrangle", "subspace", "lemma1", "wrinkles"};
    for (auto& [name, set] : sets) {
        t0 = std::chrono::steady_clock::now();
        reports.emplace(name, verify::run_checks(*set, full));
        std::printf("-- verified %s in %.1fs\n", name.c_str(), seconds_since(t0));
    }
    auto record = [&](const std::string& set, const std::string& check) -> const report::CheckRecord& {
        for (const auto& rec : reports.at(set).records)
            if (rec.name == check) return rec;
        throw std::logic_error("missing record " + check);
    };

    // ---- criterion 1: Severi numerics ----
    {
        bool ok = true;
        std::string detail;
        struct Want {
            const char* name;
            int N, twod;
        } wants[] = {{"V2", 5, 2}, {"S22", 8, 4}, {"G51", 14, 8}, {"E6", 26, 16}};
        for (const auto& w : wants) {
            const MMSet& set = *sets.at(w.name);
            auto hist = histogram_of(record(w.name, "mm3"));
            bool constant = hist.size() == 1 && hist.begin()->first == w.twod;
            if (set.N != w.N || !constant) ok = false;
            detail += std::string(w.name) + "(N=" + std::to_string(set.N) +
                      ",dimT=" + std::to_string(hist.begin()->first) + ") ";
        }
        H.line(1, ok, "Severi family N = 5, 8, 14, 26 and dim T_x = 2d everywhere: " + detail);
    }

    // ---- criterion 2: non-Severi members ----
    {
        bool ok = true;
        std::string detail;
        struct Want {
            const char* name;
            int N;
        } wants[] = {{"S12", 5}, {"S13", 7}, {"G41", 9}, {"D55", 15}};
        for (const auto& w : wants) {
            const MMSet& set = *sets.at(w.name);
            if (set.N != w.N) ok = false;
            for (const char* check : {"structure", "mm1", "mm2", "mm3"}) {
                const auto& rec = record(w.name, check);
                if (rec.status != Status::pass || !rec.exhaustive) ok = false;
            }
            detail += std::string(w.name) + "(N=" + std::to_string(set.N) + ") ";
        }
        H.line(2, ok, "non-Severi N = 5, 7, 9, 15 with exhaustive MM axioms: " + detail);
    }

    // ---- criterion 3: MM axiom suite, zero violations ----
    {
        bool ok = true;
        std::string detail;
        for (auto& [name, set] : sets) {
            for (const char* check : {"mm1", "mm2", "mm3"}) {
                const auto& rec = record(name, check);
                if (rec.failed()) ok = false;
                if (set->size() <= 10000 && !rec.exhaustive && std::string(check) != "mm2")
                    ok = false;
            }
            const auto& mm1 = record(name, "mm1");
            if (mm1.details["nonunique_noncollinear_pairs"].get<uint64_t>() != 0) ok = false;
        }
        // E6 sampling floors: at least 1e5 pairs and points
        if (record("E6", "mm1").details["pairs_checked"].get<uint64_t>() < 100000) ok = false;
        if (record("E6", "mm3").details["points_checked"].get<uint64_t>() < 100000) ok = false;
        detail = "E6 sampled pairs=" +
                 record("E6", "mm1").details["pairs_checked"].dump() +
                 " points=" + record("E6", "mm3").details["points_checked"].dump();
        H.line(3, ok, "MM1 (with symp uniqueness), MM2, MM3: zero violations; " + detail);
    }

    // ---- criterion 4: lemma suite ----
    {
        bool ok = true;
        uint64_t quadric_records = 0;
        for (int q : {2, 3}) {
            const auto& F = field(q, 1);
            for (int d = 1; d <= 8; ++d) {
                auto Q = quad::build_quadric(F, quad::split_form(F, d));
                quad::QuadricLemmaPolicy qp;
                qp.exhaustive = d + 1 <= 5;
                qp.samples = 10000;
                qp.seed = policy.seed + d;
                for (const auto& rec : quad::check_quadric_lemmas(F, Q, qp)) {
                    ++quadric_records;
                    if (rec.failed()) ok = false;
                }
            }
        }
        for (auto& [name, set] : sets) {
            for (const char* check : {"quadrangle", "subspace", "lemma1"}) {
                const auto& rec = record(name, check);
                if (rec.failed()) ok = false;
            }
        }
        H.line(4, ok,
               "quadrangle, subspace, lemma1 and the three quadric lemmas pass (" +
                   std::to_string(quadric_records) + " quadric lemma records, d = 1..8, q = 2,3)");
    }

    // ---- criterion 5: smoothness ----
    {
        bool ok = true;
        for (auto& [name, set] : sets) {
            const auto& rec = record(name, "wrinkles");
            if (rec.failed()) ok = false;
            if (set->size() <= 10000 && !rec.exhaustive) ok = false;
            if (set->size() > 10000 && rec.details["points_checked"].get<uint64_t>() < 1000)
                ok = false;
        }
        H.line(5, ok, "find_wrinkles empty everywhere (exhaustive small, >= 10^3 sampled large)");
    }

    // ---- criterion 6: residue tower ----
    {
        bool ok = true;
        std::string detail;
        t0 = std::chrono::steady_clock::now();
        auto cmp = [&](const MMSet& parent, uint32_t p, const MMSet& expected,
                       const char* label) -> const MMSet* {
            static std::vector<std::unique_ptr<MMSet>> keep;
            auto res = verify::residue_at(parent, p);
            if (res.degenerate) {
                ok = false;
                detail += std::string(label) + "(degenerate) ";
                return nullptr;
            }
            auto a = tower_counts(res.set), b = tower_counts(expected);
            bool match = a == b && res.set.d == expected.d;
            if (!match) ok = false;
            detail += std::string(label) + "(" + (match ? "match " + show(a) : "MISMATCH") + ") ";
            keep.push_back(std::make_unique<MMSet>(std::move(res.set)));
            return keep.back().get();
        };
        const MMSet* e6res = cmp(e6, 0, d55, "E6->D55");
        cmp(d55, 0, g4, "D55->G41");
        cmp(g5, 0, s13, "G51->S13");
        cmp(g4, 0, s12, "G41->S12");
        if (e6res) cmp(*e6res, 0, g4, "E6->D55->G41");  // split types descend 8 -> 6 -> 4
        H.line(6, ok, "residue tower counts match in " +
                          std::to_string(seconds_since(t0)).substr(0, 5) + "s: " + detail);
    }

    // ---- criterion 7: recognition at d = 4 ----
    {
        auto R5 = verify::recognize_grassmann(g5);
        auto R4 = verify::recognize_grassmann(g4);
        bool ok = R5.ok && R5.dimension == 5 && R4.ok && R4.dimension == 4;
        H.line(7, ok,
               "projective-space recognition: G51 dim " + std::to_string(R5.dimension) +
                   " (63 points), G41 dim " + std::to_string(R4.dimension));
    }

    // ---- criterion 8: oracle cross-checks ----
    {
        bool ok = true;
        std::string detail;
        for (const char* name : {"S22", "G51"}) {
            const MMSet& set = *sets.at(name);
            auto fam = var::closure_symp_family(set, set.d);
            std::set<std::string> ctor, closure;
            for (const auto& s : set.symps) ctor.insert(s.space.key());
            for (const auto& s : fam.spans) closure.insert(s.key());
            if (ctor != closure) ok = false;
            detail += std::string(name) + "(closure " + (ctor == closure ? "==" : "!=") +
                      " constructor, " + std::to_string(closure.size()) + " symps) ";
        }
        // sampled closure agreement on the half-spin variety
        {
            std::set<std::string> ctor;
            for (const auto& s : d55.symps) ctor.insert(s.space.key());
            util::Rng rng(policy.seed ^ 0xd55);
            int sampled = 0;
            bool agree = true;
            while (sampled < 200) {
                uint32_t a = static_cast<uint32_t>(rng.below(d55.size()));
                uint32_t b = static_cast<uint32_t>(rng.below(d55.size()));
                if (a == b || d55.collinear(a, b)) continue;
                ++sampled;
                if (!ctor.count(verify::symp_from_pair(d55, a, b).key())) agree = false;
            }
            if (!agree) ok = false;
            detail += std::string("D55(200 sampled closures ") + (agree ? "in" : "NOT in") +
                      " constructor family) ";
        }
        t0 = std::chrono::steady_clock::now();
        uint64_t dual_points = 0;
        bool agree = var::e6_evaluators_agree(F2, &dual_points);
        if (!agree || dual_points != e6.size()) ok = false;
        detail += "E6 evaluators " + std::string(agree ? "agree" : "DISAGREE") + " on 2^27 scan (" +
                  std::to_string(dual_points) + " points, " +
                  std::to_string(seconds_since(t0)).substr(0, 5) + "s)";
        H.line(8, ok, "oracle cross-checks: " + detail);
    }

    // ---- criterion 9: negative controls ----
    {
        bool ok = true;
        std::string detail;
        verify::Policy np = policy;

        // deleted symp: MM1 loses a pair, witness re-verifies
        {
            MMSet corrupted = s22;
            corrupted.symps.erase(corrupted.symps.begin());
            corrupted.symps_by_point.assign(corrupted.size(), {});
            for (uint32_t s = 0; s < corrupted.symps.size(); ++s)
                for (uint32_t pid : corrupted.symps[s].point_ids)
                    corrupted.symps_by_point[pid].push_back(s);
            auto rec = verify::check_mm1(corrupted, np);
            bool witness_ok = rec.failed() && !rec.witnesses.empty();
            if (witness_ok) {
                lin::Vector x(rec.witnesses[0]["x"].begin(), rec.witnesses[0]["x"].end());
                lin::Vector y(rec.witnesses[0]["y"].begin(), rec.witnesses[0]["y"].end());
                for (const auto& s : corrupted.symps)
                    if (s.space.contains(F2, x) && s.space.contains(F2, y)) witness_ok = false;
            }
            if (!witness_ok) ok = false;
            detail += std::string("deleted-symp->MM1(") + (witness_ok ? "fails+witness" : "BAD") + ") ";
        }
        // deleted point: structure invariant fails with a witness
        {
            MMSet corrupted = s22;
            corrupted.points.erase(corrupted.points.begin() + 7);
            var::finalize_points(corrupted);
            auto rec = var::validate_structure(corrupted);
            bool good = rec.failed() && !rec.witnesses.empty();
            if (!good) ok = false;
            detail += std::string("deleted-point->structure(") + (good ? "fails+witness" : "BAD") + ") ";
        }
        // fabricated extra symp: uniqueness breaks and wrinkles appear on a
        // doctored quadric
        {
            MMSet corrupted = s22;
            corrupted.symps.push_back(corrupted.symps.front());
            corrupted.symps_by_point.assign(corrupted.size(), {});
            for (uint32_t s = 0; s < corrupted.symps.size(); ++s)
                for (uint32_t pid : corrupted.symps[s].point_ids)
                    corrupted.symps_by_point[pid].push_back(s);
            auto rec = verify::check_mm1(corrupted, np);
            bool good = rec.failed() &&
                        rec.details["nonunique_noncollinear_pairs"].get<uint64_t>() > 0;

            MMSet quadric_set = var::segre(1, 1, F2);
            var::SympRec fake = quadric_set.symps[0];
            lin::Mat g(4, 4);
            g.at(0, 2) = 1;
            g.at(1, 3) = 1;
            fake.form = quad::QuadraticForm(F2, std::move(g));
            fake.packed_bsym.clear();
            fake.packed_span.clear();
            quadric_set.symps.push_back(fake);
            quadric_set.symps_by_point.assign(quadric_set.size(), {});
            for (uint32_t s = 0; s < quadric_set.symps.size(); ++s)
                for (uint32_t pid : quadric_set.symps[s].point_ids)
                    quadric_set.symps_by_point[pid].push_back(s);
            bool wrinkles_appear = false;
            for (uint32_t i = 0; i < quadric_set.size(); ++i)
                if (!verify::find_wrinkles(quadric_set, i).empty()) wrinkles_appear = true;
            if (!good || !wrinkles_appear) ok = false;
            detail += std::string("extra-symp->uniqueness+wrinkles(") +
                      (good && wrinkles_appear ? "fails as designed" : "BAD") + ")";
        }
        H.line(9, ok, "negative controls produce the designated failures: " + detail);
    }

    // supplementary GF(3) cross-check: the half-spin point count matches the
    // one-class maximal-isotropic product formula
    {
        t0 = std::chrono::steady_clock::now();
        auto hs3 = var::half_spin(F3);
        uint64_t expected = (3 + 1) * (9 + 1) * (27 + 1) * (81 + 1);
        bool ok = hs3.size() == expected && hs3.N == 15 &&
                  !var::validate_structure(hs3).failed();
        std::printf("[%s] supplementary: half-spin over GF(3) has %zu points (formula %llu), "
                    "%zu symps, built in %.1fs\n",
                    ok ? "PASS" : "FAIL", hs3.size(),
                    static_cast<unsigned long long>(expected), hs3.symps.size(),
                    seconds_since(t0));
        if (!ok) H.all_ok = false;
    }

    std::printf("-- total acceptance time %.1fs\n", seconds_since(tstart));
    return H.all_ok ? 0 : 1;
}
