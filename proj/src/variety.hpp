#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadric.hpp"
#include "report.hpp"

namespace mmset::var {

using gf::Field;
using lin::Subspace;
using lin::Vector;

// A symp record: the (d+1)-space spanned by a quadratic space, the split
// quadratic form fitted on its span coordinates, and the ids of the variety
// points on it (dropped for very large families and recomputed on demand).
struct SympRec {
    Subspace space;
    quad::QuadraticForm form;            // in span-basis coordinates
    std::vector<uint32_t> point_ids;     // sorted; empty when not stored
    // packed GF(2) caches for the tangent hot path (empty for q != 2)
    std::vector<uint32_t> packed_span;   // basis rows, coordinate i at bit ncols-1-i
    std::vector<uint16_t> packed_bsym;   // polar form rows in span coordinates
};

struct LineRec {
    std::vector<uint32_t> point_ids;  // sorted, q+1 entries
};

// Candidate Mazzocca-Melone set: point set X with its singular lines and
// symp family. Points are key-sorted; membership is O(1) for GF(2) ambients
// via a bit table and O(log |X|) otherwise.
class MMSet {
  public:
    const Field* F = nullptr;
    std::string family;
    std::vector<int> params;
    int ncols = 0;  // coordinate length
    int N = -1;     // projective dimension of span(X)
    int d = 0;      // split type

    std::vector<Vector> points;  // normalized, sorted by key
    std::vector<uint64_t> keys;  // parallel to points

    std::vector<LineRec> lines;
    bool lines_enumerated = false;

    std::vector<SympRec> symps;
    bool symp_points_stored = true;
    std::vector<std::vector<uint32_t>> symps_by_point;

    bool gf2() const { return F->q() == 2; }
    size_t size() const { return points.size(); }
    bool proper() const { return symps.size() > 1; }

    bool contains_key(uint64_t key) const;
    int64_t index_of_key(uint64_t key) const;  // -1 when absent

    bool collinear(uint32_t i, uint32_t j) const;
    // ids of the q+1 points on the singular line through i and j
    std::vector<uint32_t> line_ids(uint32_t i, uint32_t j) const;
    std::vector<uint32_t> neighbors(uint32_t i) const;
    std::vector<uint32_t> symp_point_ids(uint32_t symp) const;
    const std::vector<uint32_t>& symps_through(uint32_t point) const { return symps_by_point[point]; }

    // number of singular lines through each point (uses the line table)
    std::vector<uint32_t> line_counts_per_point() const;

  private:
    std::vector<uint64_t> bitset_;  // q == 2 membership table
    friend void finalize_points(MMSet&);
};

// Sorts/normalizes the point list, builds keys and the membership structure,
// and computes N = projdim span(X).
void finalize_points(MMSet& set);

// Exhaustive singular-line table; quadratic in |X|, so callers gate on size.
void enumerate_lines(MMSet& set);
void maybe_enumerate_lines(MMSet& set);

struct SympFit {
    bool ok = false;
    quad::QuadraticForm form;
    std::vector<uint32_t> point_ids;
    std::string error;
};

// Fit the unique nonsingular split form on span coordinates whose zero set is
// exactly X cap span. Fails when no such form exists or it is not unique.
SympFit fit_symp(const MMSet& set, const Subspace& span);

// Attach a symp family given as spans: fits forms, stores point ids (unless
// the family is too large), and builds the point->symp incidence lists.
// Strict mode throws on a fit failure (constructors); lenient mode keeps the
// record with a zero form so validate_structure can report the witness
// (used when loading files that may be corrupted).
void attach_symps(MMSet& set, std::vector<Subspace> spans, bool strict = true);

// Symp family generated by closure over non-collinear pairs:
// span({x,y} u {z : z collinear with both}), deduplicated by span. Every pair
// is covered by construction; throws if some closure is not a (d+1)-space.
struct ClosureFamily {
    std::vector<Subspace> spans;
    std::vector<std::vector<uint32_t>> point_ids;
    std::vector<std::vector<uint32_t>> incidence;
};
ClosureFamily closure_symp_family(const MMSet& set, int d);

// Full MMSet invariant check: X spans an N-space, every stored line lies in
// X, every symp is a split quadric in a (d+1)-space whose points are exactly
// X cap span. Failures carry witnesses.
report::CheckRecord validate_structure(const MMSet& set);

// Constructors for the classical varieties.
MMSet veronese(int n, const Field& F);                 // d = 1, n <= 3
MMSet segre(int k, int l, const Field& F);             // d = 2, 1 <= k <= l, k+l <= 4
MMSet grassmann_lines(int m, const Field& F);          // d = 4, 2 <= m <= 5
MMSet half_spin(const Field& F);                       // d = 6, q in {2,3}
MMSet e6_variety(const Field& F, unsigned workers = 0);  // d = 8, q = 2

// Half-spin support types and maps.
struct SpinorSpace {
    const Field* F;
    quad::QuadraticForm parent;            // hyperbolic form on P^9
    quad::WittBasis witt;                  // pairs (e_i, f_i); U_inf = span(f_i)
    Subspace u0, uinf;
    int half_dim = 16;                     // 2^(n-1), n = 5
};
SpinorSpace make_spinor_space(const Field& F);

// Pure spinor of a maximal isotropic subspace: the unique projective point of
// the matching half-spinor space killed by every Clifford action phi_u, u in U.
// Throws when the joint kernel is not a line.
Vector pure_spinor(const SpinorSpace& S, const Subspace& U);

// Cubic form machinery for the 27-dimensional space of matrix triples.
// Coordinates: index 9s + 3r + c for slot s, row r, column c.
Vector e6_derivative(const Field& F, const Vector& x27);
// Independent evaluator: expands d(x + t y) over F[t]/(t^2) with a
// permutation-sum determinant; used as the cross-check oracle.
Vector e6_derivative_dual(const Field& F, const Vector& x27);
// Full 2^27 scan at q = 2 comparing the two evaluators point by point;
// reports the point count of the common zero locus.
bool e6_evaluators_agree(const Field& F, uint64_t* points_out);

}  // namespace mmset::var
