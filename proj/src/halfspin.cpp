#include <bit>
#include <map>
#include <stdexcept>

#include "variety.hpp"

namespace mmset::var {

namespace {

constexpr int kRank = 5;  // parent hyperbolic space has dimension 2*kRank

// Spinor coordinates: the exterior algebra of U_inf with basis indexed by
// subsets of {0..4} in colex order, which on bitmasks is plain numeric order.
// Even subsets form S+, odd subsets S-.
struct SpinorBasis {
    std::vector<uint32_t> even_subsets, odd_subsets;  // bitmask, increasing
    std::array<int, 32> position{};                   // subset -> index in its half

    SpinorBasis() {
        for (uint32_t s = 0; s < 32; ++s) {
            if (std::popcount(s) % 2 == 0) {
                position[s] = static_cast<int>(even_subsets.size());
                even_subsets.push_back(s);
            } else {
                position[s] = static_cast<int>(odd_subsets.size());
                odd_subsets.push_back(s);
            }
        }
    }
};

const SpinorBasis& spinor_basis() {
    static SpinorBasis b;
    return b;
}

// sign (-1)^{#{s in S : s < i}} as a field element multiplier
uint8_t crossing_sign(const Field& F, uint32_t subset, int i, uint8_t value) {
    int crossings = std::popcount(subset & ((uint32_t(1) << i) - 1));
    return crossings % 2 == 0 ? value : F.neg(value);
}

// Clifford action of u = u0 + uinf on a half-spinor space, as a matrix from
// the `from_even` half to the other half. u is given in parent coordinates
// where a_i = u[2i] spans U_0 and b_i = u[2i+1] spans U_inf.
lin::Mat clifford_matrix(const Field& F, const Vector& u, bool from_even) {
    const auto& B = spinor_basis();
    const auto& src = from_even ? B.even_subsets : B.odd_subsets;
    lin::Mat M(16, 16);
    for (int col = 0; col < 16; ++col) {
        uint32_t S = src[col];
        // contraction by u0: sum over i in S of (+/-) a_i e_{S \ i}
        for (int i = 0; i < kRank; ++i) {
            if (!((S >> i) & 1)) continue;
            uint8_t a = u[2 * i];
            if (!a) continue;
            uint32_t T = S & ~(uint32_t(1) << i);
            int row = B.position[T];
            M.at(row, col) = F.add(M.at(row, col), crossing_sign(F, S, i, a));
        }
        // wedge by uinf: sum over i not in S of (+/-) b_i e_{S u i}
        for (int i = 0; i < kRank; ++i) {
            if ((S >> i) & 1) continue;
            uint8_t b = u[2 * i + 1];
            if (!b) continue;
            uint32_t T = S | (uint32_t(1) << i);
            int row = B.position[T];
            M.at(row, col) = F.add(M.at(row, col), crossing_sign(F, S, i, b));
        }
    }
    return M;
}

}  // namespace

SpinorSpace make_spinor_space(const Field& F) {
    SpinorSpace S;
    S.F = &F;
    S.parent = quad::split_form(F, 2 * kRank - 2);  // hyperbolic on P^9
    lin::SpanBuilder u0(F, 2 * kRank), uinf(F, 2 * kRank);
    for (int i = 0; i < kRank; ++i) {
        Vector e(2 * kRank, 0), f(2 * kRank, 0);
        e[2 * i] = 1;
        f[2 * i + 1] = 1;
        S.witt.pairs.emplace_back(e, f);
        u0.insert(e);
        uinf.insert(f);
    }
    S.u0 = u0.take();
    S.uinf = uinf.take();
    return S;
}

Vector pure_spinor(const SpinorSpace& S, const Subspace& U) {
    const Field& F = *S.F;
    if (U.basis.rows != kRank) throw std::invalid_argument("pure_spinor needs a maximal subspace");
    // s_U has wedge degrees of the parity of dim(U cap U_inf)
    int j = lin::intersect(F, U, S.uinf).basis.rows;
    bool in_even = j % 2 == 0;
    std::vector<Vector> constraints;
    for (int r = 0; r < kRank; ++r) {
        Vector u(U.basis.row(r).begin(), U.basis.row(r).end());
        lin::Mat M = clifford_matrix(F, u, in_even);
        for (int row = 0; row < 16; ++row)
            constraints.emplace_back(M.row(row).begin(), M.row(row).end());
    }
    Subspace kernel = lin::subspace_kernel(F, lin::full_space(F, 16), constraints);
    if (kernel.basis.rows != 1)
        throw std::domain_error("joint Clifford kernel is not a line: input is not maximal isotropic");
    return Vector(kernel.basis.row(0).begin(), kernel.basis.row(0).end());
}

MMSet half_spin(const Field& F) {
    if (F.q() != 2 && F.q() != 3)
        throw std::invalid_argument("half_spin supported for q in {2, 3}");
    SpinorSpace S = make_spinor_space(F);
    MMSet set;
    set.F = &F;
    set.family = "halfspin";
    set.params = {};
    set.d = 6;
    set.ncols = 16;

    // the class of U_inf; spinors of this class land in S+
    auto maximals = quad::hyperbolic_class(F, S.witt, 2 * kRank, true);
    std::vector<Vector> spinors;
    spinors.reserve(maximals.size());
    std::map<uint64_t, uint32_t> spinor_index;
    for (const auto& U : maximals) {
        Vector s = pure_spinor(S, U);
        uint64_t key = lin::point_key(F, s);
        if (!spinor_index.emplace(key, static_cast<uint32_t>(spinors.size())).second)
            throw std::logic_error("pure spinor map is not injective");
        spinors.push_back(s);
        set.points.push_back(std::move(s));
    }
    finalize_points(set);

    // incidences: parent point key -> indices of maximals through it
    std::map<uint64_t, std::vector<uint32_t>> through;
    for (uint32_t ui = 0; ui < maximals.size(); ++ui)
        lin::for_each_point(F, maximals[ui], [&](const Vector& v) {
            through[lin::point_key(F, lin::normalized(F, v))].push_back(ui);
        });

    // one symp per parent quadric point: span of the spinors of the maximals
    // through it, meeting X in a hyperbolic quadric of P^7
    auto parent = quad::build_quadric(F, S.parent);
    std::vector<Subspace> spans;
    spans.reserve(parent.points.size());
    for (const auto& v : parent.points) {
        auto it = through.find(lin::point_key(F, v));
        if (it == through.end()) throw std::logic_error("parent point lies on no maximal");
        lin::SpanBuilder sb(F, 16);
        for (uint32_t ui : it->second) sb.insert(spinors[ui]);
        spans.push_back(sb.take());
    }
    maybe_enumerate_lines(set);
    attach_symps(set, std::move(spans));
    return set;
}

}  // namespace mmset::var
