#include "variety.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gf2bits.hpp"

namespace mmset::var {

namespace {

// Families above this many (symp, point) incidences keep only spans.
constexpr uint64_t kSympPointStorageLimit = 50'000'000;

// Full line tables are quadratic in |X|; larger sets use local probes instead.
constexpr size_t kLineEnumerationLimit = 5000;

}  // namespace

void maybe_enumerate_lines(MMSet& set) {
    if (set.size() <= kLineEnumerationLimit) enumerate_lines(set);
}

bool MMSet::contains_key(uint64_t key) const {
    if (!bitset_.empty()) return (bitset_[key >> 6] >> (key & 63)) & 1;
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    return it != keys.end() && *it == key;
}

int64_t MMSet::index_of_key(uint64_t key) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return -1;
    return it - keys.begin();
}

bool MMSet::collinear(uint32_t i, uint32_t j) const {
    if (i == j) return false;
    if (gf2()) return contains_key(keys[i] ^ keys[j]);
    const Vector &x = points[i], &y = points[j];
    Vector z(ncols);
    for (int lam = 1; lam < F->q(); ++lam) {
        for (int c = 0; c < ncols; ++c)
            z[c] = F->add(x[c], F->mul(static_cast<uint8_t>(lam), y[c]));
        if (!contains_key(lin::point_key(*F, lin::normalized(*F, z)))) return false;
    }
    return true;
}

std::vector<uint32_t> MMSet::line_ids(uint32_t i, uint32_t j) const {
    std::vector<uint32_t> ids{i, j};
    const Vector &x = points[i], &y = points[j];
    Vector z(ncols);
    for (int lam = 1; lam < F->q(); ++lam) {
        for (int c = 0; c < ncols; ++c)
            z[c] = F->add(x[c], F->mul(static_cast<uint8_t>(lam), y[c]));
        int64_t idx = index_of_key(lin::point_key(*F, lin::normalized(*F, z)));
        if (idx < 0) throw std::logic_error("line_ids on a non-singular line");
        ids.push_back(static_cast<uint32_t>(idx));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::vector<uint32_t> MMSet::neighbors(uint32_t i) const {
    std::vector<uint32_t> out;
    for (uint32_t j = 0; j < size(); ++j)
        if (j != i && collinear(i, j)) out.push_back(j);
    return out;
}

std::vector<uint32_t> MMSet::symp_point_ids(uint32_t symp) const {
    if (symp_points_stored) return symps[symp].point_ids;
    std::vector<uint32_t> ids;
    lin::for_each_point(*F, symps[symp].space, [&](const Vector& v) {
        int64_t idx = index_of_key(lin::point_key(*F, lin::normalized(*F, v)));
        if (idx >= 0) ids.push_back(static_cast<uint32_t>(idx));
    });
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<uint32_t> MMSet::line_counts_per_point() const {
    std::vector<uint32_t> counts(size(), 0);
    for (const auto& L : lines)
        for (uint32_t id : L.point_ids) ++counts[id];
    return counts;
}

void finalize_points(MMSet& set) {
    const Field& F = *set.F;
    for (auto& p : set.points) p = lin::normalized(F, std::move(p));
    std::sort(set.points.begin(), set.points.end(),
              [&](const Vector& a, const Vector& b) { return lin::point_key(F, a) < lin::point_key(F, b); });
    set.points.erase(std::unique(set.points.begin(), set.points.end()), set.points.end());
    set.keys.clear();
    set.keys.reserve(set.points.size());
    for (const auto& p : set.points) set.keys.push_back(lin::point_key(F, p));
    if (set.gf2() && set.ncols <= 27) {
        set.bitset_.assign((uint64_t(1) << set.ncols) / 64 + 1, 0);
        for (uint64_t k : set.keys) set.bitset_[k >> 6] |= uint64_t(1) << (k & 63);
    } else {
        set.bitset_.clear();
    }
    lin::SpanBuilder sb(F, set.ncols);
    for (const auto& p : set.points) sb.insert(p);
    set.N = sb.rank() - 1;
}

void enumerate_lines(MMSet& set) {
    set.lines.clear();
    uint32_t n = static_cast<uint32_t>(set.size());
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            if (!set.collinear(i, j)) continue;
            auto ids = set.line_ids(i, j);
            // record each line once, at its two least point ids
            if (ids[0] == i && ids[1] == j) set.lines.push_back({std::move(ids)});
        }
    set.lines_enumerated = true;
}

namespace {

// products c_i c_j (i <= j) of a coefficient vector, in gram coordinate order
Vector product_coords(const Field& F, const Vector& c) {
    int k = static_cast<int>(c.size());
    Vector out;
    out.reserve(k * (k + 1) / 2);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) out.push_back(F.mul(c[i], c[j]));
    return out;
}

quad::QuadraticForm form_from_coeffs(const Field& F, const Vector& coeffs, int k) {
    lin::Mat g(k, k);
    int idx = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) g.at(i, j) = coeffs[idx++];
    return quad::QuadraticForm(F, std::move(g));
}

// table of GF(2) coefficient products c_i c_j (i <= j) per k-bit mask, cached
// per rank since symp fitting runs once per symp of very large families
const std::vector<uint64_t>& gf2_product_table(int k) {
    static std::map<int, std::vector<uint64_t>> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<uint64_t> prod(uint64_t(1) << k, 0);
    for (uint32_t mask = 1; mask < (uint32_t(1) << k); ++mask) {
        uint64_t pv = 0;
        int idx = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) {
                if (((mask >> i) & 1) && ((mask >> j) & 1)) pv |= uint64_t(1) << idx;
                ++idx;
            }
        prod[mask] = pv;
    }
    return cache.emplace(k, std::move(prod)).first->second;
}

SympFit fit_symp_gf2(const MMSet& set, const Subspace& span) {
    const Field& F = *set.F;
    SympFit fit;
    int k = span.basis.rows;
    int ncoef = k * (k + 1) / 2;
    auto rows = lin::pack_subspace(span);
    const std::vector<uint64_t>& prod = gf2_product_table(k);
    std::vector<uint32_t> on_masks;
    std::vector<uint32_t> ids;
    lin::for_each_gf2_combo(rows, [&](uint64_t bits, uint32_t mask) {
        int64_t idx = set.index_of_key(bits);
        if (idx >= 0) {
            on_masks.push_back(mask);
            ids.push_back(static_cast<uint32_t>(idx));
        }
    });
    // nullspace of the product rows = candidate gram coefficient vectors
    lin::BitRref sys;
    for (uint32_t m : on_masks) {
        sys.insert(prod[m]);
        if (sys.rank() >= ncoef - 1) break;
    }
    // free coordinates of the system kernel
    std::vector<uint64_t> kernel;
    {
        uint64_t pivot_mask = 0;
        for (uint64_t r : sys.rows) pivot_mask |= uint64_t(1) << (63 - std::countl_zero(r));
        for (int b = 0; b < ncoef; ++b) {
            if ((pivot_mask >> b) & 1) continue;
            uint64_t v = uint64_t(1) << b;
            for (uint64_t r : sys.rows) {
                if ((r >> b) & 1) {
                    uint64_t p = uint64_t(1) << (63 - std::countl_zero(r));
                    v |= p;
                }
            }
            kernel.push_back(v);
        }
    }
    if (kernel.empty()) {
        fit.error = "no quadratic form vanishes on the section";
        return fit;
    }
    if (kernel.size() > 16) {
        fit.error = "degenerate section: form space too large";
        return fit;
    }
    int valid = 0;
    std::sort(on_masks.begin(), on_masks.end());
    std::vector<uint64_t> candidate_masks;
    lin::for_each_gf2_combo(kernel, [&](uint64_t gm, uint32_t) { candidate_masks.push_back(gm); });
    for (uint64_t gm : candidate_masks) {
        bool zero_set_matches = true;
        for (uint32_t mask = 1; mask < (uint32_t(1) << k) && zero_set_matches; ++mask) {
            bool on = std::binary_search(on_masks.begin(), on_masks.end(), mask);
            bool zero = (std::popcount(prod[mask] & gm) & 1) == 0;
            if (on != zero) zero_set_matches = false;
        }
        if (!zero_set_matches) continue;
        Vector coeffs(ncoef);
        for (int b = 0; b < ncoef; ++b) coeffs[b] = static_cast<uint8_t>((gm >> b) & 1);
        auto form = form_from_coeffs(F, coeffs, k);
        if (!quad::check_nonsingular(F, form).nonsingular) continue;
        if (quad::witt_index(F, form) != (k) / 2) continue;  // split in P^(k-1)
        fit.form = form;
        ++valid;
    }
    if (valid != 1) {
        fit.error = valid == 0 ? "no nonsingular split form matches the section"
                               : "section quadric is not unique";
        return fit;
    }
    std::sort(ids.begin(), ids.end());
    fit.point_ids = std::move(ids);
    fit.ok = true;
    return fit;
}

}  // namespace

SympFit fit_symp(const MMSet& set, const Subspace& span) {
    const Field& F = *set.F;
    if (set.gf2() && span.basis.rows <= 16) return fit_symp_gf2(set, span);
    SympFit fit;
    int k = span.basis.rows;
    int ncoef = k * (k + 1) / 2;
    std::vector<Vector> on_coefs;
    std::vector<uint32_t> ids;
    // coefficient tuples double as span coordinates of the section points
    lin::SpanBuilder sys(F, ncoef);
    {
        Vector coef(k, 0);
        for (int lead = 0; lead < k; ++lead) {
            std::fill(coef.begin(), coef.end(), 0);
            coef[lead] = 1;
            while (true) {
                Vector pt(set.ncols, 0);
                for (int r = lead; r < k; ++r) {
                    if (!coef[r]) continue;
                    for (int c = 0; c < set.ncols; ++c)
                        pt[c] = F.add(pt[c], F.mul(coef[r], span.basis.at(r, c)));
                }
                int64_t idx = set.index_of_key(lin::point_key(F, lin::normalized(F, pt)));
                if (idx >= 0) {
                    on_coefs.push_back(coef);
                    ids.push_back(static_cast<uint32_t>(idx));
                    if (sys.rank() < ncoef - 1) sys.insert(product_coords(F, coef));
                }
                int pos = k - 1;
                while (pos > lead) {
                    if (coef[pos] + 1 < F.q()) {
                        ++coef[pos];
                        break;
                    }
                    coef[pos] = 0;
                    --pos;
                }
                if (pos == lead) break;
            }
        }
    }
    if (on_coefs.empty()) {
        fit.error = "section contains no points";
        return fit;
    }
    std::vector<Vector> constraints;
    for (int r = 0; r < sys.m.rows; ++r)
        constraints.emplace_back(sys.m.row(r).begin(), sys.m.row(r).end());
    Subspace kernel = lin::subspace_kernel(F, lin::full_space(F, ncoef), constraints);
    if (kernel.basis.rows == 0) {
        fit.error = "no quadratic form vanishes on the section";
        return fit;
    }
    if (kernel.basis.rows > 4) {
        fit.error = "degenerate section: form space too large";
        return fit;
    }
    int valid = 0;
    std::set<uint32_t> on_set_keys;  // span coordinates keyed
    for (const auto& c : on_coefs)
        on_set_keys.insert(static_cast<uint32_t>(lin::point_key(F, lin::normalized(F, c))));
    lin::for_each_point(F, kernel, [&](const Vector& coeffs) {
        auto form = form_from_coeffs(F, coeffs, k);
        // zero set must be exactly the section
        bool match = true;
        lin::for_each_point(F, lin::full_space(F, k), [&](const Vector& c) {
            if (!match) return;
            bool zero = form.eval(F, c) == 0;
            bool on = on_set_keys.count(static_cast<uint32_t>(lin::point_key(F, c))) > 0;
            if (zero != on) match = false;
        });
        if (!match) return;
        if (!quad::check_nonsingular(F, form).nonsingular) return;
        if (quad::witt_index(F, form) != k / 2) return;
        fit.form = form;
        ++valid;
    });
    if (valid != 1) {
        fit.error = valid == 0 ? "no nonsingular split form matches the section"
                               : "section quadric is not unique";
        return fit;
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    fit.point_ids = std::move(ids);
    fit.ok = true;
    return fit;
}

void attach_symps(MMSet& set, std::vector<Subspace> spans, bool strict) {
    set.symps.clear();
    set.symps.reserve(spans.size());
    uint64_t incidences = 0;
    for (auto& span : spans) {
        if (span.basis.rows != set.d + 2)
            throw std::invalid_argument("symp span is not a (d+1)-space");
        SympFit fit = fit_symp(set, span);
        if (!fit.ok) {
            if (strict) throw std::runtime_error("symp attachment failed: " + fit.error);
            // keep the record; the structure check refits and reports it
            fit.form = quad::QuadraticForm(*set.F, lin::Mat(set.d + 2, set.d + 2));
            fit.point_ids = [&] {
                std::vector<uint32_t> ids;
                lin::for_each_point(*set.F, span, [&](const lin::Vector& v) {
                    int64_t idx = set.index_of_key(lin::point_key(*set.F, lin::normalized(*set.F, v)));
                    if (idx >= 0) ids.push_back(static_cast<uint32_t>(idx));
                });
                std::sort(ids.begin(), ids.end());
                return ids;
            }();
        }
        incidences += fit.point_ids.size();
        SympRec rec{std::move(span), std::move(fit.form), std::move(fit.point_ids), {}, {}};
        if (set.gf2() && set.ncols <= 32 && rec.form.ncols <= 16) {
            for (int r = 0; r < rec.space.basis.rows; ++r) {
                uint32_t bits = 0;
                for (int c = 0; c < set.ncols; ++c) bits = (bits << 1) | rec.space.basis.at(r, c);
                rec.packed_span.push_back(bits);
            }
            for (int r = 0; r < rec.form.ncols; ++r) {
                uint16_t bits = 0;
                for (int c = 0; c < rec.form.ncols; ++c)
                    bits |= static_cast<uint16_t>(rec.form.bsym.at(r, c) & 1) << c;
                rec.packed_bsym.push_back(bits);
            }
        }
        set.symps.push_back(std::move(rec));
    }
    set.symps_by_point.assign(set.size(), {});
    for (uint32_t s = 0; s < set.symps.size(); ++s)
        for (uint32_t pid : set.symps[s].point_ids) set.symps_by_point[pid].push_back(s);
    set.symp_points_stored = incidences <= kSympPointStorageLimit;
    if (!set.symp_points_stored)
        for (auto& rec : set.symps) {
            rec.point_ids.clear();
            rec.point_ids.shrink_to_fit();
        }
}

ClosureFamily closure_symp_family(const MMSet& set, int d) {
    const Field& F = *set.F;
    uint32_t n = static_cast<uint32_t>(set.size());
    ClosureFamily fam;
    fam.incidence.assign(n, {});
    std::vector<uint32_t> stamp(n, UINT32_MAX);
    bool use_bits = set.gf2() && set.ncols <= 32;

    std::vector<uint32_t> nbrs;
    bool have_nbrs = false;
    for (uint32_t x = 0; x < n; ++x) {
        // cover pairs already handled: only ids beyond the scan position matter
        for (uint32_t sid : fam.incidence[x]) {
            const auto& ids = fam.point_ids[sid];
            for (auto it = std::upper_bound(ids.begin(), ids.end(), x); it != ids.end(); ++it)
                stamp[*it] = x;
        }
        have_nbrs = false;
        for (uint32_t y = x + 1; y < n; ++y) {
            if (stamp[y] == x) continue;
            if (set.collinear(x, y)) continue;
            if (!have_nbrs) {
                nbrs = set.neighbors(x);
                have_nbrs = true;
            }
            // closure of the pair
            Subspace span;
            std::vector<uint32_t> ids;
            if (use_bits) {
                lin::BitRref sb;
                sb.insert(set.keys[x]);
                sb.insert(set.keys[y]);
                for (uint32_t z : nbrs)
                    if (set.contains_key(set.keys[z] ^ set.keys[y])) sb.insert(set.keys[z]);
                span = sb.to_subspace(set.ncols);
            } else {
                lin::SpanBuilder sb(F, set.ncols);
                sb.insert(set.points[x]);
                sb.insert(set.points[y]);
                for (uint32_t z : nbrs)
                    if (set.collinear(z, y)) sb.insert(set.points[z]);
                span = sb.take();
            }
            if (span.basis.rows != d + 2)
                throw std::runtime_error("pair closure is not a (d+1)-space");
            lin::for_each_point(F, span, [&](const Vector& v) {
                int64_t idx = set.index_of_key(lin::point_key(F, lin::normalized(F, v)));
                if (idx >= 0) ids.push_back(static_cast<uint32_t>(idx));
            });
            std::sort(ids.begin(), ids.end());
            uint32_t sid = static_cast<uint32_t>(fam.spans.size());
            for (uint32_t pid : ids) {
                if (pid > x) stamp[pid] = x;
                fam.incidence[pid].push_back(sid);
            }
            fam.spans.push_back(std::move(span));
            fam.point_ids.push_back(std::move(ids));
        }
    }
    return fam;
}

report::CheckRecord validate_structure(const MMSet& set) {
    using report::Status;
    const Field& F = *set.F;
    report::CheckRecord rec;
    rec.name = "structure";
    rec.exhaustive = true;
    rec.status = Status::pass;
    auto fail = [&](report::ordered_json j) {
        rec.status = Status::fail;
        if (rec.witnesses.size() < 8) rec.witnesses.push_back(std::move(j));
    };

    lin::SpanBuilder sb(F, set.ncols);
    for (const auto& p : set.points) sb.insert(p);
    if (sb.rank() - 1 != set.N)
        fail({{"invariant", "span"}, {"expected_N", set.N}, {"actual", sb.rank() - 1}});

    for (const auto& L : set.lines) {
        if (L.point_ids.size() != static_cast<size_t>(F.q() + 1)) {
            fail({{"invariant", "line_size"}, {"line", L.point_ids}});
            continue;
        }
        auto s = lin::span_of(F, {set.points[L.point_ids[0]], set.points[L.point_ids[1]]});
        bool inside = true;
        lin::for_each_point(F, s, [&](const Vector& v) {
            if (!set.contains_key(lin::point_key(F, lin::normalized(F, v)))) inside = false;
        });
        if (!inside) fail({{"invariant", "line_in_X"}, {"line", report::subspace_json(s)}});
    }

    uint64_t checked = 0;
    for (uint32_t si = 0; si < set.symps.size(); ++si) {
        const auto& rec_s = set.symps[si];
        ++checked;
        if (rec_s.space.basis.rows != set.d + 2) {
            fail({{"invariant", "symp_dim"}, {"symp", si}});
            continue;
        }
        SympFit fit = fit_symp(set, rec_s.space);
        if (!fit.ok) {
            fail({{"invariant", "symp_split_quadric"}, {"symp", si}, {"error", fit.error}});
            continue;
        }
        if (set.symp_points_stored && fit.point_ids != rec_s.point_ids)
            fail({{"invariant", "symp_point_set"}, {"symp", si}});
        if (!(fit.form == rec_s.form))
            fail({{"invariant", "symp_form"}, {"symp", si}});
    }
    rec.details["points"] = set.size();
    rec.details["lines"] = set.lines.size();
    rec.details["symps_checked"] = checked;
    return rec;
}

}  // namespace mmset::var
