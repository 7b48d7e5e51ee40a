#include <map>
#include <set>

#include "verify.hpp"

namespace mmset::verify {

using lin::Subspace;
using lin::Vector;
using report::Status;

std::vector<std::vector<Subspace>> singular_subspaces_by_dim(const MMSet& set) {
    const gf::Field& F = *set.F;
    if (!set.lines_enumerated)
        throw std::invalid_argument("singular subspace enumeration needs the line table");
    std::vector<std::vector<Subspace>> by_dim(2);
    std::vector<std::vector<uint32_t>> level_ids;
    for (const auto& L : set.lines) {
        by_dim[1].push_back(lin::span_of(F, {set.points[L.point_ids[0]], set.points[L.point_ids[1]]}));
        level_ids.push_back(L.point_ids);
    }
    while (!by_dim.back().empty()) {
        const auto& level = by_dim.back();
        std::vector<Subspace> next;
        std::vector<std::vector<uint32_t>> next_ids;
        std::set<std::string> seen;
        for (size_t si = 0; si < level.size(); ++si) {
            const auto& ids = level_ids[si];
            for (uint32_t z : set.neighbors(ids[0])) {
                bool joint = true;
                for (uint32_t pid : ids)
                    if (pid == z || (pid != ids[0] && !set.collinear(z, pid))) {
                        joint = false;
                        break;
                    }
                if (!joint || level[si].contains(F, set.points[z])) continue;
                Subspace trial = lin::span_join(F, level[si], lin::point_subspace(F, set.points[z]));
                std::vector<uint32_t> trial_ids;
                bool singular = true;
                lin::for_each_point(F, trial, [&](const Vector& v) {
                    int64_t idx = set.index_of_key(lin::point_key(F, lin::normalized(F, v)));
                    if (idx < 0)
                        singular = false;
                    else
                        trial_ids.push_back(static_cast<uint32_t>(idx));
                });
                if (!singular) continue;
                if (!seen.insert(trial.key()).second) continue;
                std::sort(trial_ids.begin(), trial_ids.end());
                next.push_back(std::move(trial));
                next_ids.push_back(std::move(trial_ids));
            }
        }
        by_dim.push_back(std::move(next));
        level_ids = std::move(next_ids);
    }
    by_dim.pop_back();  // drop the empty level
    return by_dim;
}

GrassmannRecognition recognize_grassmann(const MMSet& set) {
    const gf::Field& F = *set.F;
    if (set.d != 4) throw std::invalid_argument("recognition applies to split type 4 only");
    GrassmannRecognition R;
    R.record.name = "recognize_grassmann";
    R.record.exhaustive = true;
    auto fail = [&](report::ordered_json j) {
        R.record.status = Status::fail;
        if (R.record.witnesses.size() < 8) R.record.witnesses.push_back(std::move(j));
    };

    auto by_dim = singular_subspaces_by_dim(set);
    int maxdim = static_cast<int>(by_dim.size()) - 1;
    if (maxdim != 3 && maxdim != 4) {
        R.record.status = Status::fail;
        R.record.details["reason"] = "maximal singular dimension is not 3 or 4";
        R.record.details["maximal_dim"] = maxdim;
        return R;
    }
    R.f = maxdim;
    const auto& type1 = by_dim[R.f];
    const auto& planes = by_dim[2];

    // Type 3: singular planes not contained in a singular 3-space
    std::vector<Subspace> type3;
    for (const auto& pi : planes) {
        bool inside = false;
        for (const auto& big : by_dim[3])
            if (big.contains_subspace(F, pi)) {
                inside = true;
                break;
            }
        if (!inside) type3.push_back(pi);
    }
    R.type1_count = type1.size();
    R.type2_count = set.size();
    R.type3_count = type3.size();

    // (a) two Type-1 elements meet in a unique point of X
    uint64_t type1_pairs = 0;
    for (size_t a = 0; a < type1.size(); ++a)
        for (size_t b = a + 1; b < type1.size(); ++b) {
            ++type1_pairs;
            Subspace meet = lin::intersect(F, type1[a], type1[b]);
            if (meet.basis.rows != 1)
                fail({{"reason", "two singular f-spaces do not meet in a point"},
                      {"a", report::subspace_json(type1[a])},
                      {"b", report::subspace_json(type1[b])}});
        }

    // (b) every singular line inside an f-space lies in exactly one Type-3 plane
    uint64_t lines_checked = 0;
    for (const auto& L : set.lines) {
        Subspace line = lin::span_of(F, {set.points[L.point_ids[0]], set.points[L.point_ids[1]]});
        bool in_type1 = false;
        for (const auto& big : type1)
            if (big.contains_subspace(F, line)) {
                in_type1 = true;
                break;
            }
        if (!in_type1) continue;
        ++lines_checked;
        int count = 0;
        for (const auto& pi : type3)
            if (pi.contains_subspace(F, line)) ++count;
        if (count != 1)
            fail({{"reason", "line not on a unique maximal singular plane"},
                  {"line", report::subspace_json(line)},
                  {"count", count}});
    }

    // (c) points and incident f-spaces of a Type-3 plane form PG(2, q)
    for (const auto& pi : type3) {
        std::map<std::string, int> line_hits;
        for (const auto& big : type1) {
            Subspace meet = lin::intersect(F, big, pi);
            if (meet.basis.rows == 2) ++line_hits[meet.key()];
            if (meet.basis.rows > 2)
                fail({{"reason", "f-space contains a maximal singular plane"},
                      {"plane", report::subspace_json(pi)}});
        }
        uint64_t expected_lines = lin::gaussian_binomial(3, 2, F.q());
        if (line_hits.size() != expected_lines)
            fail({{"reason", "plane residue is not a projective plane"},
                  {"plane", report::subspace_json(pi)},
                  {"incident_lines", line_hits.size()}});
        for (auto& [key, count] : line_hits)
            if (count != 1)
                fail({{"reason", "plane line lies in several f-spaces"},
                      {"plane", report::subspace_json(pi)}});
    }

    // dimension certificate: counts match PG(f+1, q)
    uint64_t expected_type1 = lin::gaussian_binomial(R.f + 2, 1, F.q());
    uint64_t expected_type2 = lin::gaussian_binomial(R.f + 2, 2, F.q());
    if (R.type1_count != expected_type1)
        fail({{"reason", "Type-1 count differs from the point count of PG(f+1,q)"},
              {"count", R.type1_count},
              {"expected", expected_type1}});
    if (R.type2_count != expected_type2)
        fail({{"reason", "point count differs from the line count of PG(f+1,q)"},
              {"count", R.type2_count},
              {"expected", expected_type2}});

    R.dimension = R.f + 1;
    R.record.details["f"] = R.f;
    R.record.details["dimension"] = R.dimension;
    R.record.details["type1"] = R.type1_count;
    R.record.details["type2"] = R.type2_count;
    R.record.details["type3"] = R.type3_count;
    R.record.details["type1_pairs_checked"] = type1_pairs;
    R.record.details["lines_checked"] = lines_checked;
    if (R.record.status != Status::fail) {
        R.record.status = Status::pass;
        R.ok = true;
    }
    return R;
}

}  // namespace mmset::verify
