#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "quadric.hpp"

using namespace mmset;
using namespace mmset::quad;
using gf::field;
using lin::Vector;

namespace {

// Independent point-count oracles for split quadrics.
uint64_t hyperbolic_count(int n, int q) {  // ambient P^(2n-1)
    auto qp = [&](int e) { uint64_t r = 1; while (e--) r *= q; return r; };
    return (qp(n - 1) + 1) * (qp(n) - 1) / (q - 1);
}
uint64_t parabolic_count(int n, int q) {  // ambient P^(2n)
    auto qp = [&](int e) { uint64_t r = 1; while (e--) r *= q; return r; };
    return (qp(n) - 1) * (qp(n) + 1) / (q - 1);
}

}  // namespace

TEST_CASE("split_form examples: point counts and Witt indices") {
    const auto& F2 = field(2, 1);
    auto conic = build_quadric(F2, split_form(F2, 1));
    CHECK(conic.points.size() == 3);  // q+1 points of a conic
    CHECK(conic.kind == QuadricKind::parabolic);

    auto h3 = build_quadric(F2, split_form(F2, 2));
    CHECK(h3.points.size() == 9);  // (q+1)^2
    CHECK(h3.witt == 2);
    CHECK(h3.kind == QuadricKind::hyperbolic);

    auto h9 = build_quadric(F2, split_form(F2, 8));
    CHECK(h9.witt == 5);
    CHECK(h9.points.size() == hyperbolic_count(5, 2));
}

TEST_CASE("point-count formulas hold for all built split quadrics") {
    for (int q : {2, 3}) {
        const auto& F = field(q, 1);
        for (int d = 1; d <= 6; ++d) {
            auto Q = build_quadric(F, split_form(F, d));
            if (Q.kind == QuadricKind::hyperbolic)
                CHECK(Q.points.size() == hyperbolic_count(Q.witt, q));
            else
                CHECK(Q.points.size() == parabolic_count(Q.witt, q));
        }
    }
}

TEST_CASE("witt_index(split_form(d)) == floor((d+2)/2) across fields") {
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        const auto& F = field(p, k);
        for (int d = 1; d <= 8; ++d)
            CHECK(witt_index(F, split_form(F, d)) == (d + 2) / 2);
    }
}

TEST_CASE("witt_index special cases") {
    const auto& F2 = field(2, 1);
    const auto& F3 = field(3, 1);
    CHECK(witt_index(F2, split_form(F2, 4)) == 3);  // Klein quadric has planes
    // anisotropic binary form x^2 + y^2 over GF(3): no nonzero zeros, by scan
    lin::Mat g(2, 2);
    g.at(0, 0) = 1;
    g.at(1, 1) = 1;
    QuadraticForm aniso(F3, g);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a || b) CHECK(aniso.eval(F3, Vector{(uint8_t)a, (uint8_t)b}) != 0);
    CHECK(witt_index(F3, aniso) == 0);
    for (int q : {2, 3, 5, 7}) {
        const auto& F = field(q, 1);
        CHECK(witt_index(F, split_form(F, 1)) == 1);  // conics have points but no lines
    }
}

TEST_CASE("witt_index rejects singular forms") {
    const auto& F = field(3, 1);
    lin::Mat g(3, 3);
    g.at(0, 1) = 1;  // x0 x1 in three variables: radical = e2
    QuadraticForm degenerate(F, g);
    CHECK(!check_nonsingular(F, degenerate).nonsingular);
    CHECK_THROWS_AS(witt_index(F, degenerate), std::domain_error);
}

TEST_CASE("tangent space of the conic x0^2 + x1 x2 over GF(3) at (0,1,0)") {
    const auto& F = field(3, 1);
    auto conic = build_quadric(F, split_form(F, 1));
    auto t = tangent_space(F, conic, Vector{0, 1, 0});
    // the line x2 = 0
    CHECK(t.projdim() == 1);
    for (const auto& p : lin::enumerate_points(F, t)) CHECK(p[2] == 0);
    CHECK_THROWS_AS(tangent_space(F, conic, Vector{1, 1, 0}), std::invalid_argument);
}

TEST_CASE("hyperbolic P3 tangent plane meets the quadric in two lines through x") {
    const auto& F = field(2, 1);
    auto Q = build_quadric(F, split_form(F, 2));
    for (const auto& x : Q.points) {
        auto t = tangent_space(F, Q, x);
        std::vector<Vector> section;
        for (const auto& y : Q.points)
            if (t.contains(F, y)) section.push_back(y);
        // cone over x: 1 + 2q points forming two lines through x
        CHECK(section.size() == 1 + 2 * 2);
        std::set<std::string> lines;
        for (const auto& y : section) {
            if (y == x) continue;
            lines.insert(lin::span_of(F, {x, y}).key());
        }
        CHECK(lines.size() == 2);
    }
}

TEST_CASE("char-2 conic: the three tangent lines are concurrent (nucleus)") {
    const auto& F = field(2, 1);
    auto conic = build_quadric(F, split_form(F, 1));
    REQUIRE(conic.points.size() == 3);
    auto common = tangent_space(F, conic, conic.points[0]);
    for (size_t i = 1; i < conic.points.size(); ++i)
        common = lin::intersect(F, common, tangent_space(F, conic, conic.points[i]));
    REQUIRE(common.projdim() == 0);
    Vector nucleus(common.basis.row(0).begin(), common.basis.row(0).end());
    CHECK(nucleus == Vector{1, 0, 0});  // dual to the x0^2 term of the split conic
    CHECK(conic.form.eval(F, nucleus) != 0);
}

TEST_CASE("tangent sections are cones over the touch point (ambient <= P5)") {
    for (int q : {2, 3}) {
        const auto& F = field(q, 1);
        for (int d : {2, 3, 4}) {
            auto Q = build_quadric(F, split_form(F, d));
            for (const auto& x : Q.points) {
                auto t = tangent_space(F, Q, x);
                for (const auto& y : Q.points) {
                    if (y == x || !t.contains(F, y)) continue;
                    // the full line through x and y lies on the quadric
                    auto line = lin::span_of(F, {x, y});
                    lin::for_each_point(F, line, [&](const Vector& z) {
                        CHECK(Q.form.eval(F, z) == 0);
                    });
                }
            }
        }
    }
}

TEST_CASE("maximal singular subspaces of hyperbolic quadrics over GF(2)") {
    const auto& F = field(2, 1);

    auto h3 = build_quadric(F, split_form(F, 2));
    auto ms3 = max_singular_subspaces(F, h3);
    CHECK(ms3.all.size() == 6);  // 2(q+1) generators
    CHECK(ms3.plus.size() == 3);
    CHECK(ms3.minus.size() == 3);
    for (const auto& L : ms3.all) {
        CHECK(L.projdim() == 1);
        lin::for_each_point(F, L, [&](const Vector& v) { CHECK(h3.form.eval(F, v) == 0); });
    }

    auto h7 = build_quadric(F, split_form(F, 6));
    auto ms7 = max_singular_subspaces(F, h7);
    CHECK(ms7.all.size() == 270);  // 2 * (2+1)(4+1)(8+1)
    CHECK(ms7.plus.size() == 135);
    CHECK(ms7.minus.size() == 135);

    auto h9 = build_quadric(F, split_form(F, 8));
    auto ms9 = max_singular_subspaces(F, h9);
    CHECK(ms9.all.size() == 2 * 2295);  // 2 * (2+1)(4+1)(8+1)(16+1)
}

TEST_CASE("hyperbolic classes: same class iff even codimension, exhaustive on P7(GF(2))") {
    const auto& F = field(2, 1);
    auto Q = build_quadric(F, split_form(F, 6));
    auto ms = max_singular_subspaces(F, Q);
    auto klass = [&](const lin::Subspace& s) {
        for (const auto& p : ms.plus)
            if (p == s) return 0;
        return 1;
    };
    for (const auto& a : ms.all)
        for (const auto& b : ms.all) {
            int codim = a.basis.rows - lin::intersect(F, a, b).basis.rows;
            CHECK(((codim % 2 == 0) == (klass(a) == klass(b))));
        }
}

TEST_CASE("maximal singular subspaces of parabolic quadrics") {
    for (int q : {2, 3}) {
        const auto& F = field(q, 1);
        auto p4 = build_quadric(F, split_form(F, 3));  // parabolic in P4, witt 2
        auto ms = max_singular_subspaces(F, p4);
        CHECK(ms.all.size() == static_cast<size_t>((q + 1) * (q * q + 1)));
        for (const auto& L : ms.all) {
            CHECK(L.projdim() == 1);
            lin::for_each_point(F, L, [&](const Vector& v) { CHECK(p4.form.eval(F, v) == 0); });
        }
    }
}

TEST_CASE("quadric lemmas, exhaustive on small split quadrics") {
    const auto& F2 = field(2, 1);
    QuadricLemmaPolicy ex{true, 0, 0};

    auto h3 = build_quadric(F2, split_form(F2, 2));
    for (const auto& rec : check_quadric_lemmas(F2, h3, ex)) {
        CHECK(rec.status == report::Status::pass);
        if (rec.name == "quadric_lemma_noncollinear_pair")
            CHECK(rec.details["subspaces_checked"] == 15);  // all planes of P3
    }

    auto p4 = build_quadric(F2, split_form(F2, 3));
    bool saw_unique_tangent = false;
    for (const auto& rec : check_quadric_lemmas(F2, p4, ex)) {
        CHECK(rec.status == report::Status::pass);
        if (rec.name == "quadric_lemma_unique_tangent_space") saw_unique_tangent = true;
    }
    CHECK(saw_unique_tangent);

    auto conic3 = build_quadric(field(3, 1), split_form(field(3, 1), 1));
    for (const auto& rec : check_quadric_lemmas(field(3, 1), conic3, ex))
        CHECK(rec.status == report::Status::pass);
}

TEST_CASE("quadric lemmas, sampled on hyperbolic P5(GF(3))") {
    const auto& F = field(3, 1);
    auto Q = build_quadric(F, split_form(F, 4));
    QuadricLemmaPolicy sampled{false, 1000, 12345};
    for (const auto& rec : check_quadric_lemmas(F, Q, sampled)) {
        CHECK(rec.status != report::Status::fail);
        if (rec.name == "quadric_lemma_line_missing_subspace")
            CHECK(rec.details["subspaces_checked"] == 1000);
    }
}

TEST_CASE("split_form rejects d < 1") {
    const auto& F = field(2, 1);
    CHECK_THROWS_AS(split_form(F, 0), std::invalid_argument);
}

TEST_CASE("projection of the 9-point hyperbolic quadric from an external point is at most 2-to-1") {
    const auto& F = field(2, 1);
    auto Q = build_quadric(F, split_form(F, 2));
    REQUIRE(Q.points.size() == 9);
    for (const auto& center_pt : lin::enumerate_points(F, lin::full_space(F, 4))) {
        if (Q.form.eval(F, center_pt) == 0) continue;  // external points only
        auto center = lin::point_subspace(F, center_pt);
        // any screen plane complementary to the center
        lin::Subspace screen;
        bool found = false;
        lin::for_each_subspace(F, 4, 3, [&](const lin::Subspace& s) {
            if (!found && !s.contains(F, center_pt)) {
                screen = s;
                found = true;
            }
        });
        REQUIRE(found);
        std::map<uint64_t, int> fibers;
        for (const auto& x : Q.points)
            ++fibers[lin::point_key(F, lin::project_from(F, center, screen, x))];
        for (auto [key, count] : fibers) CHECK(count <= 2);
    }
}
