#include <algorithm>
#include <set>

#include "gf2bits.hpp"
#include "verify.hpp"

namespace mmset::verify {

using lin::Subspace;
using lin::Vector;
using report::Status;

namespace {

// ids of symps containing both points (incidence lists are sorted)
std::vector<uint32_t> common_symps(const MMSet& set, uint32_t x, uint32_t y) {
    const auto &a = set.symps_through(x), &b = set.symps_through(y);
    std::vector<uint32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// tangent hyperplane of a symp at one of its points, as ambient rows
void symp_tangent_rows(const MMSet& set, uint32_t symp, const Vector& point,
                       const std::function<void(Vector)>& sink) {
    const gf::Field& F = *set.F;
    const auto& rec = set.symps[symp];
    Vector local = rec.space.coords_of(F, point);
    Vector w = rec.form.polar_functional(F, local);
    // kernel of <w, .> in span coordinates, pushed to the ambient
    Subspace ker = lin::functional_kernel(F, w);
    for (int r = 0; r < ker.basis.rows; ++r) {
        Vector amb(set.ncols, 0);
        for (int i = 0; i < ker.basis.cols; ++i) {
            uint8_t c = ker.basis.at(r, i);
            if (!c) continue;
            for (int col = 0; col < set.ncols; ++col)
                amb[col] = F.add(amb[col], F.mul(c, rec.space.basis.at(i, col)));
        }
        sink(std::move(amb));
    }
}

std::vector<std::pair<uint32_t, uint32_t>> sample_point_pairs(const MMSet& set, uint64_t count,
                                                              uint64_t seed) {
    util::Rng rng(seed);
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    pairs.reserve(count);
    uint64_t n = set.size();
    while (pairs.size() < count) {
        uint32_t a = static_cast<uint32_t>(rng.below(n));
        uint32_t b = static_cast<uint32_t>(rng.below(n));
        if (a == b) continue;
        pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    return pairs;
}

report::ordered_json pair_witness(const MMSet& set, uint32_t x, uint32_t y, const char* why) {
    return {{"reason", why},
            {"x", report::vector_json(set.points[x])},
            {"y", report::vector_json(set.points[y])}};
}

}  // namespace

Subspace tangent_space_at(const MMSet& set, uint32_t point) {
    const gf::Field& F = *set.F;
    if (set.gf2() && set.ncols <= 32) {
        lin::BitRref acc;
        uint64_t key = set.keys[point];
        for (uint32_t s : set.symps_through(point)) {
            const auto& rec = set.symps[s];
            if (rec.packed_span.empty()) {
                symp_tangent_rows(set, s, set.points[point],
                                  [&](Vector row) { acc.insert(lin::pack_gf2(row)); });
                continue;
            }
            // local coordinates of the point against the packed RREF rows
            int k = static_cast<int>(rec.packed_span.size());
            uint64_t rem = key;
            uint32_t coords = 0;
            for (int r = 0; r < k; ++r) {
                uint64_t pivot = uint64_t(1) << (63 - std::countl_zero(uint64_t(rec.packed_span[r])));
                if (rem & pivot) {
                    rem ^= rec.packed_span[r];
                    coords |= uint32_t(1) << r;
                }
            }
            // polar functional of the point in span coordinates
            uint16_t w = 0;
            for (int r = 0; r < k; ++r)
                if ((coords >> r) & 1) w ^= rec.packed_bsym[r];
            if (!w) continue;
            int piv = std::countr_zero(static_cast<unsigned>(w));
            for (int j = 0; j < k; ++j) {
                if (j == piv) continue;
                uint64_t row = rec.packed_span[j];
                if ((w >> j) & 1) row ^= rec.packed_span[piv];
                acc.insert(row);
            }
        }
        return acc.to_subspace(set.ncols);
    }
    lin::SpanBuilder acc(F, set.ncols);
    for (uint32_t s : set.symps_through(point))
        symp_tangent_rows(set, s, set.points[point], [&](Vector row) { acc.insert(std::move(row)); });
    return acc.take();
}

std::vector<uint32_t> find_wrinkles(const MMSet& set, uint32_t point) {
    const gf::Field& F = *set.F;
    std::vector<uint32_t> out;
    Subspace tx = tangent_space_at(set, point);
    if (tx.basis.rows == 0) return out;
    if (set.gf2() && set.ncols <= 32) {
        auto rows = lin::pack_subspace(tx);
        uint64_t self = set.keys[point];
        lin::for_each_gf2_combo(rows, [&](uint64_t bits, uint32_t) {
            if (bits == self) return;
            int64_t idx = set.index_of_key(bits);
            if (idx < 0) return;
            if (!set.contains_key(bits ^ self)) out.push_back(static_cast<uint32_t>(idx));
        });
    } else {
        lin::for_each_point(F, tx, [&](const Vector& v) {
            int64_t idx = set.index_of_key(lin::point_key(F, lin::normalized(F, v)));
            if (idx < 0 || idx == static_cast<int64_t>(point)) return;
            if (!set.collinear(point, static_cast<uint32_t>(idx)))
                out.push_back(static_cast<uint32_t>(idx));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subspace symp_from_pair(const MMSet& set, uint32_t x, uint32_t y) {
    const gf::Field& F = *set.F;
    if (set.d < 2) throw std::invalid_argument("symp_from_pair requires split type >= 2");
    if (x == y || set.collinear(x, y))
        throw std::invalid_argument("symp_from_pair requires a non-collinear pair");
    if (set.gf2() && set.ncols <= 32) {
        lin::BitRref sb;
        sb.insert(set.keys[x]);
        sb.insert(set.keys[y]);
        for (uint32_t z : set.neighbors(x))
            if (set.contains_key(set.keys[z] ^ set.keys[y])) sb.insert(set.keys[z]);
        return sb.to_subspace(set.ncols);
    }
    lin::SpanBuilder sb(F, set.ncols);
    sb.insert(set.points[x]);
    sb.insert(set.points[y]);
    for (uint32_t z : set.neighbors(x))
        if (set.collinear(z, y)) sb.insert(set.points[z]);
    return sb.take();
}

CheckRecord check_mm1(const MMSet& set, const Policy& policy) {
    CheckRecord rec;
    rec.name = "mm1";
    rec.exhaustive = policy.exhaustive_for(set);
    uint64_t pairs = 0, noncollinear = 0, uncovered = 0, nonunique = 0;
    auto probe = [&](uint32_t i, uint32_t j) {
        ++pairs;
        auto ids = common_symps(set, i, j);
        if (ids.empty()) {
            ++uncovered;
            if (rec.witnesses.size() < 8) rec.witnesses.push_back(pair_witness(set, i, j, "pair lies in no symp"));
            return;
        }
        if (!set.collinear(i, j)) {
            ++noncollinear;
            if (ids.size() != 1) {
                ++nonunique;
                if (rec.witnesses.size() < 8)
                    rec.witnesses.push_back(pair_witness(set, i, j, "non-collinear pair in several symps"));
            }
        }
    };
    if (rec.exhaustive) {
        uint32_t n = static_cast<uint32_t>(set.size());
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = i + 1; j < n; ++j) probe(i, j);
    } else {
        uint64_t seed = util::derive_seed(policy.seed, "mm1");
        rec.details["seed"] = seed;
        for (auto [i, j] : sample_point_pairs(set, policy.pair_samples, seed)) probe(i, j);
    }
    rec.details["pairs_checked"] = pairs;
    rec.details["noncollinear_pairs"] = noncollinear;
    rec.details["uncovered_pairs"] = uncovered;
    rec.details["nonunique_noncollinear_pairs"] = nonunique;
    rec.status = (uncovered || nonunique) ? Status::fail
                                          : (rec.exhaustive ? Status::pass : Status::sampled_pass);
    return rec;
}

CheckRecord check_mm2(const MMSet& set, const Policy& policy) {
    const gf::Field& F = *set.F;
    CheckRecord rec;
    rec.name = "mm2";
    uint64_t nsymps = set.symps.size();
    uint64_t all_pairs = nsymps * (nsymps - 1) / 2;
    rec.exhaustive = policy.force_exhaustive_mm2 || all_pairs <= 600000;
    uint64_t pairs = 0, violations = 0;
    std::map<int, uint64_t> meet_histogram;
    auto probe = [&](uint32_t a, uint32_t b) {
        ++pairs;
        Subspace meet = lin::intersect(F, set.symps[a].space, set.symps[b].space);
        ++meet_histogram[meet.projdim()];
        if (meet.basis.rows == 0) return;
        lin::for_each_point(F, meet, [&](const Vector& v) {
            if (!set.contains_key(lin::point_key(F, lin::normalized(F, v)))) {
                ++violations;
                if (rec.witnesses.size() < 8)
                    rec.witnesses.push_back({{"reason", "intersection point outside X"},
                                             {"symps", {a, b}},
                                             {"point", report::vector_json(v)}});
            }
        });
    };
    if (rec.exhaustive) {
        for (uint32_t a = 0; a < nsymps; ++a)
            for (uint32_t b = a + 1; b < nsymps; ++b) probe(a, b);
    } else {
        uint64_t seed = util::derive_seed(policy.seed, "mm2");
        rec.details["seed"] = seed;
        util::Rng rng(seed);
        for (uint64_t t = 0; t < policy.sympair_samples; ++t) {
            uint32_t a = static_cast<uint32_t>(rng.below(nsymps));
            uint32_t b = static_cast<uint32_t>(rng.below(nsymps));
            if (a == b) continue;
            probe(a, b);
        }
    }
    rec.details["symp_pairs_checked"] = pairs;
    rec.details["violations"] = violations;
    report::ordered_json mh = report::ordered_json::object();
    for (auto [dim, count] : meet_histogram) mh[std::to_string(dim)] = count;
    rec.details["intersection_dim_histogram"] = mh;
    rec.status = violations ? Status::fail : (rec.exhaustive ? Status::pass : Status::sampled_pass);
    return rec;
}

CheckRecord check_mm3(const MMSet& set, const Policy& policy) {
    CheckRecord rec;
    rec.name = "mm3";
    rec.exhaustive = policy.exhaustive_for(set);
    std::map<int, uint64_t> histogram;
    uint64_t checked = 0, violations = 0;
    auto probe = [&](uint32_t i) {
        ++checked;
        int dim = tangent_space_at(set, i).projdim();
        ++histogram[dim];
        if (dim > 2 * set.d) {
            ++violations;
            if (rec.witnesses.size() < 8)
                rec.witnesses.push_back({{"reason", "tangent space exceeds 2d"},
                                         {"x", report::vector_json(set.points[i])},
                                         {"dim", dim}});
        }
    };
    if (rec.exhaustive) {
        for (uint32_t i = 0; i < set.size(); ++i) probe(i);
    } else {
        uint64_t seed = util::derive_seed(policy.seed, "mm3");
        rec.details["seed"] = seed;
        util::Rng rng(seed);
        for (uint64_t t = 0; t < policy.point_samples; ++t)
            probe(static_cast<uint32_t>(rng.below(set.size())));
    }
    rec.details["points_checked"] = checked;
    rec.details["violations"] = violations;
    report::ordered_json hist = report::ordered_json::object();
    for (auto [dim, count] : histogram) hist[std::to_string(dim)] = count;
    rec.details["tangent_dim_histogram"] = hist;
    rec.details["bound"] = 2 * set.d;
    rec.status = violations ? Status::fail : (rec.exhaustive ? Status::pass : Status::sampled_pass);
    return rec;
}

namespace {

// evaluates one quadrangle: four singular lines, consecutive ones sharing a
// point, with diagonal points x (on L1^L2) and z (on L3^L4) non-collinear;
// passes iff exactly one symp contains all four lines entirely
bool quadrangle_in_unique_symp(const MMSet& set, const std::array<std::vector<uint32_t>, 4>& lines,
                               uint32_t p1, uint32_t p3) {
    auto candidates = common_symps(set, p1, p3);
    int hits = 0;
    for (uint32_t s : candidates) {
        const gf::Field& F = *set.F;
        bool all = true;
        for (const auto& L : lines) {
            for (uint32_t pid : L)
                if (!set.symps[s].space.contains(F, set.points[pid])) {
                    all = false;
                    break;
                }
            if (!all) break;
        }
        if (all) ++hits;
    }
    return hits == 1;
}

}  // namespace

CheckRecord check_quadrangle(const MMSet& set, const Policy& policy) {
    CheckRecord rec;
    rec.name = "quadrangle";
    uint64_t checked = 0, violations = 0;
    auto report_violation = [&](uint32_t p1, uint32_t p3) {
        ++violations;
        if (rec.witnesses.size() < 8)
            rec.witnesses.push_back(pair_witness(set, p1, p3, "quadrangle not in a unique symp"));
    };

    if (set.lines_enumerated && set.lines.size() < 4) {
        rec.status = Status::skipped;
        rec.details["reason"] = "fewer than four singular lines";
        return rec;
    }

    if (set.lines_enumerated && set.size() <= 100) {
        rec.exhaustive = true;
        // all closed quadrangles of singular lines with p1, p3 non-collinear
        std::vector<std::vector<uint32_t>> lines_at(set.size());
        for (uint32_t li = 0; li < set.lines.size(); ++li)
            for (uint32_t pid : set.lines[li].point_ids) lines_at[pid].push_back(li);
        auto& L = set.lines;
        for (uint32_t p1 = 0; p1 < set.size(); ++p1)
            for (uint32_t l2 : lines_at[p1])
                for (uint32_t p2 : L[l2].point_ids)
                    for (uint32_t l3 : lines_at[p2])
                        for (uint32_t p3 : L[l3].point_ids) {
                            if (p3 == p1 || set.collinear(p1, p3)) continue;
                            for (uint32_t l4 : lines_at[p3])
                                for (uint32_t p4 : L[l4].point_ids) {
                                    if (p4 == p3 || p4 == p1) continue;
                                    if (!set.collinear(p4, p1)) continue;
                                    uint32_t l1 = 0;
                                    bool found = false;
                                    for (uint32_t cand : lines_at[p4])
                                        for (uint32_t pid : L[cand].point_ids)
                                            if (pid == p1) {
                                                l1 = cand;
                                                found = true;
                                            }
                                    if (!found) continue;
                                    ++checked;
                                    std::array<std::vector<uint32_t>, 4> quad{
                                        L[l1].point_ids, L[l2].point_ids, L[l3].point_ids,
                                        L[l4].point_ids};
                                    if (!quadrangle_in_unique_symp(set, quad, p1, p3))
                                        report_violation(p1, p3);
                                }
                        }
    } else {
        rec.exhaustive = false;
        uint64_t seed = util::derive_seed(policy.seed, "quadrangle");
        rec.details["seed"] = seed;
        util::Rng rng(seed);
        uint64_t attempts = 0;
        while (checked < policy.quadrangle_samples && attempts < policy.quadrangle_samples * 40) {
            ++attempts;
            uint32_t p1 = static_cast<uint32_t>(rng.below(set.size()));
            auto nb1 = set.neighbors(p1);
            if (nb1.empty()) continue;
            uint32_t p2 = nb1[rng.below(nb1.size())];
            auto nb2 = set.neighbors(p2);
            uint32_t p3 = nb2[rng.below(nb2.size())];
            if (p3 == p1 || set.collinear(p1, p3)) continue;
            // p4: common neighbour of the diagonal pair
            std::vector<uint32_t> common;
            for (uint32_t z : nb1)
                if (z != p2 && set.collinear(z, p3)) common.push_back(z);
            if (common.empty()) continue;
            uint32_t p4 = common[rng.below(common.size())];
            std::array<std::vector<uint32_t>, 4> quad{
                set.line_ids(p1, p2), set.line_ids(p2, p3), set.line_ids(p3, p4),
                set.line_ids(p4, p1)};
            ++checked;
            if (!quadrangle_in_unique_symp(set, quad, p1, p3)) report_violation(p1, p3);
        }
    }
    rec.details["quadrangles_checked"] = checked;
    rec.details["violations"] = violations;
    rec.status = violations ? Status::fail : (rec.exhaustive ? Status::pass : Status::sampled_pass);
    return rec;
}

CheckRecord check_subspace_lemma(const MMSet& set, const Policy& policy) {
    const gf::Field& F = *set.F;
    CheckRecord rec;
    rec.name = "subspace";
    uint64_t incidences = static_cast<uint64_t>(set.size()) * set.symps.size();
    rec.exhaustive = incidences <= 2'000'000;
    uint64_t checked = 0, violations = 0;
    auto probe = [&](uint32_t p, uint32_t symp) {
        if (set.symps[symp].space.contains(F, set.points[p])) return;
        ++checked;
        std::vector<uint32_t> coll;
        for (uint32_t pid : set.symp_point_ids(symp))
            if (set.collinear(p, pid)) coll.push_back(pid);
        if (coll.empty()) return;
        std::vector<Vector> pts;
        for (uint32_t pid : coll) pts.push_back(set.points[pid]);
        Subspace span = lin::span_of(F, pts);
        // the collinear set must be every point of its span, and singular
        bool ok = static_cast<size_t>((lin::gaussian_binomial(span.basis.rows, 1, F.q()))) == coll.size();
        if (ok) {
            lin::for_each_point(F, span, [&](const Vector& v) {
                if (!set.contains_key(lin::point_key(F, lin::normalized(F, v)))) ok = false;
            });
        }
        if (!ok) {
            ++violations;
            if (rec.witnesses.size() < 8)
                rec.witnesses.push_back({{"reason", "collinear trace is not a singular subspace"},
                                         {"p", report::vector_json(set.points[p])},
                                         {"symp", symp}});
        }
    };
    if (rec.exhaustive) {
        for (uint32_t p = 0; p < set.size(); ++p)
            for (uint32_t s = 0; s < set.symps.size(); ++s) probe(p, s);
    } else {
        uint64_t seed = util::derive_seed(policy.seed, "subspace_lemma");
        rec.details["seed"] = seed;
        util::Rng rng(seed);
        for (uint64_t t = 0; t < policy.point_samples / 10; ++t)
            probe(static_cast<uint32_t>(rng.below(set.size())),
                  static_cast<uint32_t>(rng.below(set.symps.size())));
    }
    rec.details["pairs_checked"] = checked;
    rec.details["violations"] = violations;
    rec.status = violations ? Status::fail : (rec.exhaustive ? Status::pass : Status::sampled_pass);
    return rec;
}

namespace {

// random singular subspace of rank `rank` by repeated extension; empty on failure
std::vector<uint32_t> random_singular_subspace(const MMSet& set, int rank, util::Rng& rng) {
    const gf::Field& F = *set.F;
    uint32_t start = static_cast<uint32_t>(rng.below(set.size()));
    std::vector<uint32_t> ids{start};
    lin::SpanBuilder sb(F, set.ncols);
    sb.insert(set.points[start]);
    auto nbrs = set.neighbors(start);
    for (int attempts = 0; sb.rank() < rank && attempts < 60; ++attempts) {
        if (nbrs.empty()) break;
        uint32_t z = nbrs[rng.below(nbrs.size())];
        bool joint = true;
        for (uint32_t pid : ids)
            if (pid != start && !set.collinear(z, pid)) {
                joint = false;
                break;
            }
        if (!joint) continue;
        lin::SpanBuilder trial = sb;
        if (!trial.insert(set.points[z])) continue;
        // the whole extended span must lie in X
        bool singular = true;
        lin::for_each_point(F, trial.take(), [&](const Vector& v) {
            if (!set.contains_key(lin::point_key(F, lin::normalized(F, v)))) singular = false;
        });
        if (!singular) continue;
        sb.insert(set.points[z]);
        ids.push_back(z);
    }
    if (sb.rank() != rank) return {};
    return ids;
}

}  // namespace

CheckRecord check_lemma1(const MMSet& set, const Policy& policy) {
    const gf::Field& F = *set.F;
    CheckRecord rec;
    rec.name = "lemma1";
    uint64_t checked = 0, violations = 0;

    auto verdict = [&](const Subspace& A, const Subspace& B) {
        ++checked;
        Subspace join = lin::span_join(F, A, B);
        bool join_singular = true;
        lin::for_each_point(F, join, [&](const Vector& v) {
            if (!set.contains_key(lin::point_key(F, lin::normalized(F, v)))) join_singular = false;
        });
        if (join_singular) return;
        // otherwise a symp must contain both
        Vector a0(A.basis.row(0).begin(), A.basis.row(0).end());
        int64_t ai = set.index_of_key(lin::point_key(F, lin::normalized(F, a0)));
        // pick a point of B outside A for the incidence lookup
        int64_t bi = -1;
        lin::for_each_point(F, B, [&](const Vector& v) {
            if (bi >= 0 || A.contains(F, v)) return;
            bi = set.index_of_key(lin::point_key(F, lin::normalized(F, v)));
        });
        if (ai < 0 || bi < 0) {
            ++violations;
            return;
        }
        for (uint32_t s : common_symps(set, static_cast<uint32_t>(ai), static_cast<uint32_t>(bi)))
            if (set.symps[s].space.contains_subspace(F, join)) return;
        ++violations;
        if (rec.witnesses.size() < 8)
            rec.witnesses.push_back({{"reason", "k-space pair in no symp and no singular (k+1)-space"},
                                     {"A", report::subspace_json(A)},
                                     {"B", report::subspace_json(B)}});
    };

    if (set.lines_enumerated && set.size() <= 100) {
        rec.exhaustive = true;
        auto by_dim = singular_subspaces_by_dim(set);
        for (size_t dim = 1; dim < by_dim.size(); ++dim) {
            const auto& level = by_dim[dim];
            for (size_t a = 0; a < level.size(); ++a)
                for (size_t b = a + 1; b < level.size(); ++b)
                    if (lin::intersect(F, level[a], level[b]).basis.rows ==
                        level[a].basis.rows - 1)
                        verdict(level[a], level[b]);
        }
    } else {
        rec.exhaustive = false;
        uint64_t seed = util::derive_seed(policy.seed, "lemma1");
        rec.details["seed"] = seed;
        util::Rng rng(seed);
        uint64_t target = policy.quadrangle_samples;
        uint64_t attempts = 0;
        while (checked < target && attempts < target * 50) {
            ++attempts;
            int rank = 2 + static_cast<int>(rng.below(2));  // singular lines and planes
            auto a_ids = random_singular_subspace(set, rank, rng);
            if (a_ids.empty()) continue;
            std::vector<Vector> apts;
            for (uint32_t pid : a_ids) apts.push_back(set.points[pid]);
            Subspace A = lin::span_of(F, apts);
            // B: shares a hyperplane of A, extended by a different direction
            std::vector<Vector> hpts(apts.begin() + 1, apts.end());
            if (hpts.empty()) continue;
            auto nbrs = set.neighbors(a_ids[1]);
            if (nbrs.empty()) continue;
            uint32_t z = nbrs[rng.below(nbrs.size())];
            bool joint = true;
            for (size_t i = 1; i < a_ids.size(); ++i)
                if (a_ids[i] != z && !set.collinear(z, a_ids[i])) joint = false;
            if (!joint || A.contains(F, set.points[z])) continue;
            hpts.push_back(set.points[z]);
            Subspace B = lin::span_of(F, hpts);
            if (B.basis.rows != A.basis.rows) continue;
            bool b_singular = true;
            lin::for_each_point(F, B, [&](const Vector& v) {
                if (!set.contains_key(lin::point_key(F, lin::normalized(F, v)))) b_singular = false;
            });
            if (!b_singular) continue;
            if (lin::intersect(F, A, B).basis.rows != A.basis.rows - 1) continue;
            verdict(A, B);
        }
    }
    rec.details["pairs_checked"] = checked;
    rec.details["violations"] = violations;
    rec.status = violations ? Status::fail : (rec.exhaustive ? Status::pass : Status::sampled_pass);
    return rec;
}

CheckRecord check_wrinkles(const MMSet& set, const Policy& policy) {
    CheckRecord rec;
    rec.name = "wrinkles";
    rec.exhaustive = policy.exhaustive_for(set);
    uint64_t checked = 0, violations = 0;
    auto probe = [&](uint32_t i) {
        ++checked;
        auto w = find_wrinkles(set, i);
        if (!w.empty()) {
            ++violations;
            if (rec.witnesses.size() < 8)
                rec.witnesses.push_back({{"reason", "point has wrinkles"},
                                         {"x", report::vector_json(set.points[i])},
                                         {"wrinkle", report::vector_json(set.points[w[0]])},
                                         {"count", w.size()}});
        }
    };
    if (rec.exhaustive) {
        for (uint32_t i = 0; i < set.size(); ++i) probe(i);
    } else {
        uint64_t seed = util::derive_seed(policy.seed, "wrinkles");
        rec.details["seed"] = seed;
        util::Rng rng(seed);
        for (uint64_t t = 0; t < policy.wrinkle_samples; ++t)
            probe(static_cast<uint32_t>(rng.below(set.size())));
    }
    rec.details["points_checked"] = checked;
    rec.details["violations"] = violations;
    rec.status = violations ? Status::fail : (rec.exhaustive ? Status::pass : Status::sampled_pass);
    return rec;
}

report::ordered_json set_header(const MMSet& set, const Policy& policy) {
    report::ordered_json h;
    h["family"] = set.family;
    h["params"] = set.params;
    h["p"] = set.F->p();
    h["k"] = set.F->k();
    h["q"] = set.F->q();
    h["modulus"] = set.F->modulus();
    h["d"] = set.d;
    h["N"] = set.N;
    h["points"] = set.size();
    if (set.lines_enumerated)
        h["lines"] = set.lines.size();
    else
        h["lines"] = nullptr;
    h["symps"] = set.symps.size();
    h["proper"] = set.proper();
    h["seed"] = policy.seed;
    return h;
}

Report run_checks(const MMSet& set, const Policy& policy) {
    Report rep;
    rep.header = set_header(set, policy);
    std::vector<std::string> names =
        policy.checks.empty()
            ? std::vector<std::string>{"structure", "mm1", "mm2", "mm3", "quadrangle", "wrinkles"}
            : policy.checks;
    for (const auto& name : names) {
        if (name == "structure")
            rep.records.push_back(var::validate_structure(set));
        else if (name == "mm1")
            rep.records.push_back(check_mm1(set, policy));
        else if (name == "mm2")
            rep.records.push_back(check_mm2(set, policy));
        else if (name == "mm3")
            rep.records.push_back(check_mm3(set, policy));
        else if (name == "quadrangle")
            rep.records.push_back(check_quadrangle(set, policy));
        else if (name == "subspace")
            rep.records.push_back(check_subspace_lemma(set, policy));
        else if (name == "lemma1")
            rep.records.push_back(check_lemma1(set, policy));
        else if (name == "wrinkles")
            rep.records.push_back(check_wrinkles(set, policy));
        else
            throw std::invalid_argument("unknown check: " + name);
    }
    return rep;
}

}  // namespace mmset::verify
