#include <array>
#include <stdexcept>

#include "variety.hpp"

#include "gf2bits.hpp"

namespace mmset::var {

// The 27-dimensional space of matrix triples x = [x(1), x(2), x(3)] carries
// the cubic form d(x) = det x(1) + det x(2) + det x(3) - Tr(x(1) x(2) x(3)).
// Coordinate layout: index 9s + 3r + c for slot s, row r, column c.
//
// The derivative functional expands to
//   D_s = adj(x(s)) - x(s+1) x(s+2)   (slots cyclic),
// with the coefficient of y(s)[r][c] equal to D_s[c][r]; the variety point
// test is D_1 = D_2 = D_3 = 0.

namespace {

using Mat3 = std::array<std::array<uint8_t, 3>, 3>;

std::array<Mat3, 3> unpack_triple(const Vector& x) {
    std::array<Mat3, 3> m{};
    for (int s = 0; s < 3; ++s)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m[s][r][c] = x[9 * s + 3 * r + c];
    return m;
}

Mat3 adjugate(const Field& F, const Mat3& a) {
    Mat3 adj{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // cofactor C_{ji}: minor deleting row j, column i, with sign
            int r1 = (j + 1) % 3, r2 = (j + 2) % 3;
            int c1 = (i + 1) % 3, c2 = (i + 2) % 3;
            if (r1 > r2) std::swap(r1, r2);
            if (c1 > c2) std::swap(c1, c2);
            uint8_t minor = F.sub(F.mul(a[r1][c1], a[r2][c2]), F.mul(a[r1][c2], a[r2][c1]));
            adj[i][j] = ((i + j) % 2 == 0) ? minor : F.neg(minor);
        }
    return adj;
}

Mat3 matmul(const Field& F, const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            uint8_t s = 0;
            for (int t = 0; t < 3; ++t) s = F.add(s, F.mul(a[r][t], b[t][c]));
            out[r][c] = s;
        }
    return out;
}

}  // namespace

Vector e6_derivative(const Field& F, const Vector& x27) {
    if (x27.size() != 27) throw std::invalid_argument("triple vector must have 27 coordinates");
    auto m = unpack_triple(x27);
    Vector coeffs(27, 0);
    for (int s = 0; s < 3; ++s) {
        Mat3 adj = adjugate(F, m[s]);
        Mat3 prod = matmul(F, m[(s + 1) % 3], m[(s + 2) % 3]);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                coeffs[9 * s + 3 * r + c] = F.sub(adj[c][r], prod[c][r]);
    }
    return coeffs;
}

namespace {

// F[t]/(t^2) arithmetic for the expansion oracle
struct Dual {
    uint8_t a = 0, b = 0;  // a + b t
};

Dual dmul(const Field& F, Dual x, Dual y) {
    return {F.mul(x.a, y.a), F.add(F.mul(x.a, y.b), F.mul(x.b, y.a))};
}
Dual dadd(const Field& F, Dual x, Dual y) { return {F.add(x.a, y.a), F.add(x.b, y.b)}; }
Dual dsub(const Field& F, Dual x, Dual y) { return {F.sub(x.a, y.a), F.sub(x.b, y.b)}; }

using DMat3 = std::array<std::array<Dual, 3>, 3>;

// permutation-sum determinant (Leibniz over S3)
Dual det_leibniz(const Field& F, const DMat3& m) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                        {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    Dual pos{}, neg{};
    for (int p = 0; p < 6; ++p) {
        Dual term = dmul(F, dmul(F, m[0][perms[p][0]], m[1][perms[p][1]]), m[2][perms[p][2]]);
        if (p < 3)
            pos = dadd(F, pos, term);
        else
            neg = dadd(F, neg, term);
    }
    return dsub(F, pos, neg);
}

Dual trace_triple(const Field& F, const DMat3& a, const DMat3& b, const DMat3& c) {
    Dual t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) t = dadd(F, t, dmul(F, dmul(F, a[i][j], b[j][k]), c[k][i]));
    return t;
}

Dual cubic_dual(const Field& F, const std::array<DMat3, 3>& m) {
    Dual v = det_leibniz(F, m[0]);
    v = dadd(F, v, det_leibniz(F, m[1]));
    v = dadd(F, v, det_leibniz(F, m[2]));
    return dsub(F, v, trace_triple(F, m[0], m[1], m[2]));
}

}  // namespace

Vector e6_derivative_dual(const Field& F, const Vector& x27) {
    if (x27.size() != 27) throw std::invalid_argument("triple vector must have 27 coordinates");
    Vector coeffs(27, 0);
    for (int idx = 0; idx < 27; ++idx) {
        std::array<DMat3, 3> m{};
        for (int s = 0; s < 3; ++s)
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    int pos = 9 * s + 3 * r + c;
                    m[s][r][c] = {x27[pos], static_cast<uint8_t>(pos == idx ? 1 : 0)};
                }
        coeffs[idx] = cubic_dual(F, m).b;  // t-coefficient of d(x + t e_idx)
    }
    return coeffs;
}

namespace {

// GF(2) fast paths on packed coordinates. With the big-endian key convention,
// coordinate i is bit (26 - i) of the key; entry (s, r, c) is bit
// 26 - (9s + 3r + c).

inline uint32_t entry_bit(uint32_t key, int s, int r, int c) {
    return (key >> (26 - (9 * s + 3 * r + c))) & 1;
}

bool e6_zero_adj_gf2(uint32_t key) {
    for (int s = 0; s < 3; ++s) {
        int s1 = (s + 1) % 3, s2 = (s + 2) % 3;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                // adj(m_s)[c][r] = minor of m_s deleting row r, column c (mod 2)
                int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
                int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
                uint32_t minor = (entry_bit(key, s, r1, c1) & entry_bit(key, s, r2, c2)) ^
                                 (entry_bit(key, s, r1, c2) & entry_bit(key, s, r2, c1));
                uint32_t prod = 0;
                for (int t = 0; t < 3; ++t)
                    prod ^= entry_bit(key, s1, c, t) & entry_bit(key, s2, t, r);
                if (minor ^ prod) return false;
            }
    }
    return true;
}

struct Dual2 {
    uint32_t a = 0, b = 0;
};
inline Dual2 d2mul(Dual2 x, Dual2 y) { return {x.a & y.a, (x.a & y.b) ^ (x.b & y.a)}; }
inline Dual2 d2add(Dual2 x, Dual2 y) { return {x.a ^ y.a, x.b ^ y.b}; }

bool e6_zero_dual_gf2(uint32_t key) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                        {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int idx = 0; idx < 27; ++idx) {
        Dual2 m[3][3][3];
        for (int s = 0; s < 3; ++s)
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    m[s][r][c] = {entry_bit(key, s, r, c),
                                  (9 * s + 3 * r + c) == idx ? 1u : 0u};
        Dual2 v{};
        for (int s = 0; s < 3; ++s)
            for (auto& perm : perms)
                v = d2add(v, d2mul(d2mul(m[s][0][perm[0]], m[s][1][perm[1]]), m[s][2][perm[2]]));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    v = d2add(v, d2mul(d2mul(m[0][i][j], m[1][j][k]), m[2][k][i]));
        if (v.b) return false;
    }
    return true;
}

}  // namespace

bool e6_evaluators_agree(const Field& F, uint64_t* points_out) {
    if (F.q() != 2) throw std::invalid_argument("dual-scan comparison runs at q = 2");
    unsigned workers = util::effective_workers(0);
    std::vector<uint64_t> counts(workers, 0);
    std::vector<char> agrees(workers, 1);
    util::parallel_for((uint64_t(1) << 27) - 1, workers, [&](uint64_t b, uint64_t e, unsigned t) {
        uint64_t local = 0;
        bool ok = true;
        for (uint64_t i = b; i < e; ++i) {
            uint32_t v = static_cast<uint32_t>(i + 1);
            bool a = e6_zero_adj_gf2(v);
            if (a != e6_zero_dual_gf2(v)) ok = false;
            if (a) ++local;
        }
        counts[t] = local;
        agrees[t] = ok ? 1 : 0;
    });
    uint64_t points = 0;
    bool agree = true;
    for (unsigned t = 0; t < workers; ++t) {
        points += counts[t];
        agree = agree && agrees[t];
    }
    if (points_out) *points_out = points;
    return agree;
}

MMSet e6_variety(const Field& F, unsigned workers) {
    if (F.q() != 2) throw std::invalid_argument("e6 supported only for q=2");
    MMSet set;
    set.F = &F;
    set.family = "e6";
    set.params = {};
    set.d = 8;
    set.ncols = 27;
    unsigned w = util::effective_workers(workers);
    std::vector<std::vector<Vector>> chunks(w);
    util::parallel_for((uint64_t(1) << 27) - 1, w, [&](uint64_t b, uint64_t e, unsigned t) {
        for (uint64_t i = b; i < e; ++i) {
            uint32_t v = static_cast<uint32_t>(i + 1);
            if (e6_zero_adj_gf2(v)) chunks[t].push_back(lin::unpack_gf2(v, 27));
        }
    });
    for (auto& chunk : chunks)
        for (auto& pt : chunk) set.points.push_back(std::move(pt));
    finalize_points(set);

    std::vector<Subspace> spans;
    {
        ClosureFamily fam = closure_symp_family(set, set.d);
        spans = std::move(fam.spans);
    }
    attach_symps(set, std::move(spans));
    return set;
}

}  // namespace mmset::var
