#include <set>

#include "verify.hpp"

namespace mmset::verify {

using lin::Subspace;
using lin::Vector;

namespace {

// First hyperplane of `space` not containing `point`, hyperplanes ordered by
// the key of their defining functional in basis coordinates. A fixed order
// makes residues reproducible; different choices give projectively
// equivalent results.
Subspace canonical_hyperplane_avoiding(const gf::Field& F, const Subspace& space,
                                       const Vector& point) {
    int t = space.basis.rows;
    Vector pc = space.coords_of(F, point);
    uint64_t total = 1;
    for (int i = 0; i < t; ++i) total *= F.q();
    for (uint64_t key = 1; key < total; ++key) {
        Vector w = lin::key_to_vector(F, key, t);
        // normalized functionals only, one per hyperplane
        int first = 0;
        while (w[first] == 0) ++first;
        if (w[first] != 1) continue;
        uint8_t dot = 0;
        for (int i = 0; i < t; ++i) dot = F.add(dot, F.mul(w[i], pc[i]));
        if (dot == 0) continue;  // would contain the point
        Subspace ker = lin::functional_kernel(F, w);
        lin::SpanBuilder sb(F, space.basis.cols);
        for (int r = 0; r < ker.basis.rows; ++r) {
            Vector amb(space.basis.cols, 0);
            for (int i = 0; i < t; ++i) {
                uint8_t c = ker.basis.at(r, i);
                if (!c) continue;
                for (int col = 0; col < space.basis.cols; ++col)
                    amb[col] = F.add(amb[col], F.mul(c, space.basis.at(i, col)));
            }
            sb.insert(std::move(amb));
        }
        return sb.take();
    }
    throw std::logic_error("no hyperplane avoids the point");
}

}  // namespace

ResidueResult residue_at(const MMSet& set, uint32_t p) {
    const gf::Field& F = *set.F;
    if (set.d < 3) throw std::invalid_argument("residue requires split type >= 3");
    if (p >= set.size()) throw std::invalid_argument("base point index out of range");
    ResidueResult res;
    res.basepoint = p;
    if (!set.proper()) {
        res.degenerate = true;
        res.reason = "set is not proper";
        return res;
    }
    auto nbrs = set.neighbors(p);
    if (nbrs.empty() || set.symps_through(p).empty()) {
        res.degenerate = true;
        res.reason = "base point lies on no singular line";
        return res;
    }
    res.tangent = tangent_space_at(set, p);
    res.screen = canonical_hyperplane_avoiding(F, res.tangent, set.points[p]);

    // X_p: cut each singular line through p with the screen
    std::vector<Vector> xp;
    std::set<uint64_t> seen;
    for (uint32_t y : nbrs) {
        Subspace line = lin::span_of(F, {set.points[p], set.points[y]});
        Subspace hit = lin::intersect(F, line, res.screen);
        if (hit.basis.rows != 1) throw std::logic_error("line through base point misses the screen");
        Vector v(hit.basis.row(0).begin(), hit.basis.row(0).end());
        if (seen.insert(lin::point_key(F, v)).second) xp.push_back(std::move(v));
    }

    // Xi_p: cut each symp tangent space at p with the screen
    std::vector<Subspace> sections;
    std::set<std::string> section_keys;
    for (uint32_t s : set.symps_through(p)) {
        const auto& rec = set.symps[s];
        Vector local = rec.space.coords_of(F, set.points[p]);
        Vector w = rec.form.polar_functional(F, local);
        Subspace ker = lin::functional_kernel(F, w);
        lin::SpanBuilder tb(F, set.ncols);
        for (int r = 0; r < ker.basis.rows; ++r) {
            Vector amb(set.ncols, 0);
            for (int i = 0; i < ker.basis.cols; ++i) {
                uint8_t c = ker.basis.at(r, i);
                if (!c) continue;
                for (int col = 0; col < set.ncols; ++col)
                    amb[col] = F.add(amb[col], F.mul(c, rec.space.basis.at(i, col)));
            }
            tb.insert(std::move(amb));
        }
        Subspace section = lin::intersect(F, tb.take(), res.screen);
        if (section_keys.insert(section.key()).second) sections.push_back(std::move(section));
    }

    // re-coordinatise everything to the span of the residue
    lin::SpanBuilder base(F, set.ncols);
    for (const auto& v : xp) base.insert(v);
    for (const auto& s : sections)
        for (int r = 0; r < s.basis.rows; ++r)
            base.insert(Vector(s.basis.row(r).begin(), s.basis.row(r).end()));
    Subspace B = base.take();

    MMSet out;
    out.F = &F;
    out.family = "residue:" + set.family;
    out.params = set.params;
    out.params.push_back(static_cast<int>(p));
    out.d = set.d - 2;
    out.ncols = B.basis.rows;
    for (const auto& v : xp) out.points.push_back(B.coords_of(F, v));
    var::finalize_points(out);
    std::vector<Subspace> local_spans;
    for (const auto& s : sections) {
        lin::SpanBuilder sb(F, out.ncols);
        for (int r = 0; r < s.basis.rows; ++r)
            sb.insert(B.coords_of(F, Vector(s.basis.row(r).begin(), s.basis.row(r).end())));
        local_spans.push_back(sb.take());
    }
    var::maybe_enumerate_lines(out);
    var::attach_symps(out, std::move(local_spans));
    res.set = std::move(out);
    return res;
}

}  // namespace mmset::verify
