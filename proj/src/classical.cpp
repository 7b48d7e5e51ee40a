#include <set>
#include <stdexcept>

#include "variety.hpp"

namespace mmset::var {

namespace {

std::vector<Vector> projective_points(const Field& F, int ncols) {
    return lin::enumerate_points(F, lin::full_space(F, ncols));
}

}  // namespace

MMSet veronese(int n, const Field& F) {
    if (n < 1 || n > 3) throw std::invalid_argument("veronese supports 1 <= n <= 3");
    MMSet set;
    set.F = &F;
    set.family = "veronese";
    set.params = {n};
    set.d = 1;
    set.ncols = (n + 1) * (n + 2) / 2;

    auto image = [&](const Vector& x) {
        Vector v;
        v.reserve(set.ncols);
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) v.push_back(F.mul(x[i], x[j]));
        return lin::normalized(F, v);
    };

    auto src = projective_points(F, n + 1);
    std::set<uint64_t> seen;
    for (const auto& x : src) {
        Vector v = image(x);
        if (!seen.insert(lin::point_key(F, v)).second)
            throw std::logic_error("veronese map is not injective");
        set.points.push_back(std::move(v));
    }
    finalize_points(set);

    // one symp per line of the source space: the image of a line is a conic
    std::vector<Subspace> spans;
    lin::for_each_subspace(F, n + 1, 2, [&](const Subspace& L) {
        lin::SpanBuilder sb(F, set.ncols);
        lin::for_each_point(F, L, [&](const Vector& x) { sb.insert(image(x)); });
        spans.push_back(sb.take());
    });
    maybe_enumerate_lines(set);
    attach_symps(set, std::move(spans));
    return set;
}

MMSet segre(int k, int l, const Field& F) {
    if (k < 1 || k > l || k + l > 4) throw std::invalid_argument("segre supports 1 <= k <= l, k+l <= 4");
    MMSet set;
    set.F = &F;
    set.family = "segre";
    set.params = {k, l};
    set.d = 2;
    set.ncols = (k + 1) * (l + 1);

    auto image = [&](const Vector& x, const Vector& y) {
        Vector v;
        v.reserve(set.ncols);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= l; ++j) v.push_back(F.mul(x[i], y[j]));
        return lin::normalized(F, v);
    };

    auto left = projective_points(F, k + 1);
    auto right = projective_points(F, l + 1);
    std::set<uint64_t> seen;
    for (const auto& x : left)
        for (const auto& y : right) {
            Vector v = image(x, y);
            if (!seen.insert(lin::point_key(F, v)).second)
                throw std::logic_error("segre map is not injective");
            set.points.push_back(std::move(v));
        }
    finalize_points(set);

    // symps: products of a line in each factor, each a hyperbolic quadric in P^3
    std::vector<Subspace> spans;
    lin::for_each_subspace(F, k + 1, 2, [&](const Subspace& L1) {
        auto pts1 = lin::enumerate_points(F, L1);
        lin::for_each_subspace(F, l + 1, 2, [&](const Subspace& L2) {
            lin::SpanBuilder sb(F, set.ncols);
            for (const auto& x : pts1)
                lin::for_each_point(F, L2, [&](const Vector& y) { sb.insert(image(x, y)); });
            spans.push_back(sb.take());
        });
    });
    maybe_enumerate_lines(set);
    attach_symps(set, std::move(spans));
    return set;
}

namespace {

Vector pluecker_image(const gf::Field& F, const Subspace& line, int m, int ncols) {
    Vector v;
    v.reserve(ncols);
    const auto& b = line.basis;
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            v.push_back(F.sub(F.mul(b.at(0, i), b.at(1, j)), F.mul(b.at(0, j), b.at(1, i))));
    return lin::normalized(F, v);
}

}  // namespace

MMSet grassmann_lines(int m, const Field& F) {
    if (m < 2 || m > 5) throw std::invalid_argument("grassmann_lines supports 2 <= m <= 5");
    MMSet set;
    set.F = &F;
    set.family = "grassmann";
    set.params = {m};
    set.d = 4;
    set.ncols = (m + 1) * m / 2;

    std::set<uint64_t> seen;
    lin::for_each_subspace(F, m + 1, 2, [&](const Subspace& L) {
        Vector v = pluecker_image(F, L, m, set.ncols);
        if (!seen.insert(lin::point_key(F, v)).second)
            throw std::logic_error("pluecker map is not injective");
        set.points.push_back(std::move(v));
    });
    finalize_points(set);

    // one symp per solid W: the lines inside W form a Klein quadric in a 5-space
    std::vector<Subspace> spans;
    lin::for_each_subspace(F, m + 1, 4, [&](const Subspace& W) {
        lin::SpanBuilder sb(F, set.ncols);
        // lines of W = rank-2 subspaces in W coordinates, mapped to the ambient
        lin::for_each_subspace(F, 4, 2, [&](const Subspace& inner) {
            lin::SpanBuilder lineb(F, m + 1);
            for (int r = 0; r < 2; ++r) {
                Vector row(m + 1, 0);
                for (int c = 0; c < m + 1; ++c) {
                    uint8_t s = 0;
                    for (int t = 0; t < 4; ++t)
                        s = F.add(s, F.mul(inner.basis.at(r, t), W.basis.at(t, c)));
                    row[c] = s;
                }
                lineb.insert(std::move(row));
            }
            sb.insert(pluecker_image(F, lineb.take(), m, set.ncols));
        });
        spans.push_back(sb.take());
    });
    maybe_enumerate_lines(set);
    attach_symps(set, std::move(spans));
    return set;
}

}  // namespace mmset::var
