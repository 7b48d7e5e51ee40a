#pragma once

#include <optional>

#include "report.hpp"
#include "variety.hpp"

namespace mmset::verify {

using report::CheckRecord;
using report::Report;
using var::MMSet;

struct Policy {
    uint64_t seed = 0;
    unsigned workers = 1;
    // exhaustive pair/point scans below this size, seeded sampling above
    uint64_t exhaustive_point_limit = 10000;
    uint64_t pair_samples = 100000;
    uint64_t point_samples = 100000;
    uint64_t sympair_samples = 100000;
    uint64_t quadrangle_samples = 10000;
    uint64_t wrinkle_samples = 1000;
    bool force_exhaustive_mm2 = false;
    std::vector<std::string> checks;  // empty = default suite

    bool exhaustive_for(const MMSet& set) const { return set.size() <= exhaustive_point_limit; }
};

// T_x: span of the tangent hyperplanes T_x(xi) over all symps through x.
lin::Subspace tangent_space_at(const MMSet& set, uint32_t point);

// Points y of X cap T_x whose joining line with x is not singular.
std::vector<uint32_t> find_wrinkles(const MMSet& set, uint32_t point);

// Closure span of a non-collinear pair: span({x,y} u common neighbours).
// Requires d >= 2; throws on collinear input.
lin::Subspace symp_from_pair(const MMSet& set, uint32_t x, uint32_t y);

CheckRecord check_mm1(const MMSet& set, const Policy& policy);
CheckRecord check_mm2(const MMSet& set, const Policy& policy);
CheckRecord check_mm3(const MMSet& set, const Policy& policy);
CheckRecord check_quadrangle(const MMSet& set, const Policy& policy);
CheckRecord check_subspace_lemma(const MMSet& set, const Policy& policy);
CheckRecord check_lemma1(const MMSet& set, const Policy& policy);
CheckRecord check_wrinkles(const MMSet& set, const Policy& policy);

// Default suite: structure, mm1, mm2, mm3, quadrangle, wrinkles.
Report run_checks(const MMSet& set, const Policy& policy);
report::ordered_json set_header(const MMSet& set, const Policy& policy);

// Residue at a point: X_p = singular lines through p cut by a hyperplane C_p
// of T_p missing p, with the symp tangent sections as the new family. The
// result is re-coordinatised to its own span and descends the split type by 2.
struct ResidueResult {
    bool degenerate = false;
    std::string reason;
    uint32_t basepoint = 0;
    lin::Subspace tangent;  // T_p in parent coordinates
    lin::Subspace screen;   // C_p in parent coordinates
    MMSet set;
};
ResidueResult residue_at(const MMSet& set, uint32_t p);

// All singular subspaces grouped by projective dimension (index = dim);
// requires the line table.
std::vector<std::vector<lin::Subspace>> singular_subspaces_by_dim(const MMSet& set);

// Point-line-plane recognition for split type 4: certifies that the singular
// f-spaces (f in {3,4}), points, and maximal singular planes of X form a
// projective space of dimension f+1.
struct GrassmannRecognition {
    bool ok = false;
    int f = 0;
    int dimension = 0;
    uint64_t type1_count = 0, type2_count = 0, type3_count = 0;
    CheckRecord record;
};
GrassmannRecognition recognize_grassmann(const MMSet& set);

}  // namespace mmset::verify
