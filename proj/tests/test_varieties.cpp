#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gf2bits.hpp"
#include "variety.hpp"

using namespace mmset;
using namespace mmset::var;
using gf::field;
using lin::Vector;

TEST_CASE("veronese varieties: counts, spans, structure") {
    const auto& F2 = field(2, 1);
    auto v2 = veronese(2, F2);
    CHECK(v2.size() == 7);
    CHECK(v2.N == 5);
    CHECK(v2.symps.size() == 7);
    CHECK(v2.d == 1);
    CHECK(!validate_structure(v2).failed());

    auto v2_3 = veronese(2, field(3, 1));
    CHECK(v2_3.size() == 13);
    CHECK(v2_3.N == 5);
    CHECK(!validate_structure(v2_3).failed());

    auto v1 = veronese(1, F2);  // a single conic: non-proper
    CHECK(v1.symps.size() == 1);
    CHECK(!v1.proper());
    CHECK(v1.N == 2);

    auto v3 = veronese(3, F2);
    CHECK(v3.size() == 15);
    CHECK(v3.N == 9);
    CHECK(!validate_structure(v3).failed());

    CHECK_THROWS_AS(veronese(0, F2), std::invalid_argument);
    CHECK_THROWS_AS(veronese(4, F2), std::invalid_argument);
}

TEST_CASE("segre varieties: counts and spans") {
    const auto& F2 = field(2, 1);
    auto s22 = segre(2, 2, F2);
    CHECK(s22.size() == 49);
    CHECK(s22.N == 8);
    CHECK(s22.d == 2);
    CHECK(!validate_structure(s22).failed());

    auto s12 = segre(1, 2, F2);
    CHECK(s12.size() == 21);
    CHECK(s12.N == 5);

    auto s13 = segre(1, 3, field(3, 1));
    CHECK(s13.size() == 160);  // 4 * 40
    CHECK(s13.N == 7);

    auto s11 = segre(1, 1, F2);  // one hyperbolic quadric: non-proper
    CHECK(s11.size() == 9);
    CHECK(!s11.proper());

    CHECK_THROWS_AS(segre(2, 3, F2), std::invalid_argument);
    CHECK_THROWS_AS(segre(2, 1, F2), std::invalid_argument);
}

TEST_CASE("line Grassmannians: counts and spans") {
    const auto& F2 = field(2, 1);
    auto g5 = grassmann_lines(5, F2);
    CHECK(g5.size() == 651);
    CHECK(g5.N == 14);
    CHECK(g5.symps.size() == 651);
    CHECK(g5.d == 4);
    CHECK(!validate_structure(g5).failed());

    auto g4 = grassmann_lines(4, F2);
    CHECK(g4.size() == 155);
    CHECK(g4.N == 9);

    auto g3 = grassmann_lines(3, F2);  // the Klein quadric itself
    CHECK(g3.size() == 35);
    CHECK(g3.N == 5);
    CHECK(!g3.proper());

    CHECK_THROWS_AS(grassmann_lines(1, F2), std::invalid_argument);
    CHECK_THROWS_AS(grassmann_lines(6, F2), std::invalid_argument);
}

TEST_CASE("pure spinors of the split coordinate subspaces") {
    const auto& F = field(2, 1);
    auto S = make_spinor_space(F);
    // U_0 is annihilated by contractions alone: the empty wedge
    Vector s0 = pure_spinor(S, S.u0);
    CHECK(s0[0] == 1);
    for (int i = 1; i < 16; ++i) CHECK(s0[i] == 0);
    // U_inf is annihilated by wedges alone: the top wedge (degree 5, odd half)
    Vector sinf = pure_spinor(S, S.uinf);
    CHECK(sinf[15] == 1);
    for (int i = 0; i < 15; ++i) CHECK(sinf[i] == 0);
}

TEST_CASE("pure spinor map is injective on a full class (q=2)") {
    const auto& F = field(2, 1);
    auto S = make_spinor_space(F);
    auto maximals = quad::hyperbolic_class(F, S.witt, 10, true);
    CHECK(maximals.size() == 2295);  // (2+1)(4+1)(8+1)(16+1)
    std::set<uint64_t> keys;
    for (const auto& U : maximals) keys.insert(lin::point_key(F, pure_spinor(S, U)));
    CHECK(keys.size() == 2295);
}

TEST_CASE("pure_spinor rejects non-maximal input") {
    const auto& F = field(2, 1);
    auto S = make_spinor_space(F);
    CHECK_THROWS_AS(pure_spinor(S, lin::span_of(F, {Vector{1, 0, 0, 0, 0, 0, 0, 0, 0, 0}})),
                    std::invalid_argument);
    // maximal dimension but not isotropic: kernel degenerates
    lin::SpanBuilder sb(F, 10);
    for (int i = 0; i < 5; ++i) {
        Vector v(10, 0);
        v[i] = 1;  // e0..e4 span is isotropic; swap one to break it
        sb.insert(std::move(v));
    }
    auto bad = sb.take();
    bad.basis.at(0, 1) = 1;  // now contains e0+e1 with Q != 0
    CHECK_THROWS_AS(pure_spinor(S, bad), std::domain_error);
}

TEST_CASE("half-spin variety over GF(2)") {
    const auto& F = field(2, 1);
    auto hs = half_spin(F);
    CHECK(hs.size() == 2295);
    CHECK(hs.N == 15);
    CHECK(hs.d == 6);
    // one symp per point of the parent hyperbolic quadric in P^9
    CHECK(hs.symps.size() == 527);  // (2^4+1)(2^5-1)
    CHECK(!validate_structure(hs).failed());
    CHECK(hs.lines_enumerated);
    // each symp meets X in a hyperbolic quadric of P^7
    for (const auto& s : hs.symps) {
        CHECK(s.space.projdim() == 7);
        CHECK(s.point_ids.size() == 135);  // (2^3+1)(2^4-1)
    }
    CHECK_THROWS_AS(half_spin(field(5, 1)), std::invalid_argument);
}

TEST_CASE("e6 derivative functional: frozen examples") {
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {5, 1}}) {
        const auto& F = field(p, k);
        Vector zero(27, 0);
        CHECK(e6_derivative(F, zero) == Vector(27, 0));

        Vector e11(27, 0);
        e11[0] = 1;  // [E_11, 0, 0]
        CHECK(e6_derivative(F, e11) == Vector(27, 0));

        Vector id1(27, 0);
        id1[0] = id1[4] = id1[8] = 1;  // [I_3, 0, 0]
        Vector expect(27, 0);
        expect[0] = expect[4] = expect[8] = 1;  // y -> Tr(y(1))
        CHECK(e6_derivative(F, id1) == expect);
    }
}

TEST_CASE("the two cubic-form evaluators agree on random triples") {
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {7, 1}}) {
        const auto& F = field(p, k);
        util::Rng rng(0xe6);
        for (int t = 0; t < 200; ++t) {
            Vector x(27);
            for (auto& c : x) c = static_cast<uint8_t>(rng.below(F.q()));
            CHECK(e6_derivative(F, x) == e6_derivative_dual(F, x));
        }
    }
}

TEST_CASE("e6_variety rejects q != 2") {
    CHECK_THROWS_AS(e6_variety(field(3, 1)), std::invalid_argument);
}

TEST_CASE("symp spans regenerate from pair closures on S22 and G51 (GF(2))") {
    const auto& F = field(2, 1);
    for (auto* set : {new MMSet(segre(2, 2, F)), new MMSet(grassmann_lines(5, F))}) {
        auto fam = closure_symp_family(*set, set->d);
        std::set<std::string> constructor_spans, closure_spans;
        for (const auto& s : set->symps) constructor_spans.insert(s.space.key());
        for (const auto& s : fam.spans) closure_spans.insert(s.key());
        CHECK(constructor_spans == closure_spans);
        delete set;
    }
}
