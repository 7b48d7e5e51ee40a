#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"
#include "util.hpp"

namespace mmset::lin {

using gf::Field;

// Homogeneous coordinate vector over GF(q); length = ambient vector dimension.
using Vector = std::vector<uint8_t>;

bool is_zero(const Vector& v);

// Canonical projective representative: first nonzero coordinate scaled to 1.
// Two points are equal iff their normalized vectors are equal.
Vector normalized(const Field& F, Vector v);

// Mixed-radix key, big-endian in the coordinates, so lexicographic order on
// coordinate vectors equals numeric order on keys. Requires q^ncols < 2^64.
uint64_t point_key(const Field& F, const Vector& v);
Vector key_to_vector(const Field& F, uint64_t key, int ncols);

// Dense row-major matrix over GF(q).
struct Mat {
    int rows = 0, cols = 0;
    std::vector<uint8_t> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    std::span<const uint8_t> row(int r) const { return {a.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)}; }
    void append_row(const Vector& v);
    bool operator==(const Mat&) const = default;
};

// Reduce a matrix in place to reduced row echelon form; returns the rank and
// drops zero rows. Pivots are 1, strictly increasing, and alone in their
// column, so equal row spaces produce byte-identical matrices.
int rref_in_place(const Field& F, Mat& m);

// Projective subspace in canonical RREF basis. rows == 0 encodes the empty
// subspace (projective dimension -1).
struct Subspace {
    Mat basis;

    int projdim() const { return basis.rows - 1; }
    int ncols() const { return basis.cols; }
    bool empty() const { return basis.rows == 0; }
    bool contains(const Field& F, const Vector& v) const;
    bool contains_subspace(const Field& F, const Subspace& s) const;
    // Coordinates of v in the basis rows; v must lie in the subspace.
    Vector coords_of(const Field& F, const Vector& v) const;
    std::string key() const;  // hashable canonical form
    bool operator==(const Subspace&) const = default;
};

// Online RREF accumulator for building spans row by row.
struct SpanBuilder {
    const Field* F;
    Mat m;
    std::vector<int> pivots;

    SpanBuilder(const Field& f, int cols) : F(&f), m(0, cols) {}
    // Returns true if the row increased the rank.
    bool insert(Vector v);
    int rank() const { return m.rows; }
    Subspace take();
};

Subspace empty_subspace(int ncols);
Subspace full_space(const Field& F, int ncols);
Subspace span_of(const Field& F, const std::vector<Vector>& pts);
Subspace span_join(const Field& F, const Subspace& a, const Subspace& b);
Subspace point_subspace(const Field& F, const Vector& p);

// Zassenhaus intersection of row spaces; inputs must share an ambient.
Subspace intersect(const Field& F, const Subspace& a, const Subspace& b);

// All (q^rank - 1)/(q - 1) normalized points; throws on the empty subspace.
std::vector<Vector> enumerate_points(const Field& F, const Subspace& s);
// Streaming variant used on hot paths.
void for_each_point(const Field& F, const Subspace& s, const std::function<void(const Vector&)>& fn);

// Unique point of `screen` on span(center, x). Preconditions: center and
// screen are complementary (disjoint, spanning) and x is outside center.
Vector project_from(const Field& F, const Subspace& center, const Subspace& screen, const Vector& x);

// Kernel of the linear functional v -> <w, v> as a subspace (a hyperplane when
// w != 0 on the given space).
Subspace functional_kernel(const Field& F, const Vector& w);

// Solution space of hom. system rows * x^T = 0 restricted to a subspace: the
// set {v in s : <r, v> = 0 for all rows r}.
Subspace subspace_kernel(const Field& F, const Subspace& s, const std::vector<Vector>& constraints);

// Enumerate every rank-`rank` RREF matrix over GF(q) with `ncols` columns,
// i.e. every (rank-1)-dimensional projective subspace exactly once.
void for_each_subspace(const Field& F, int ncols, int rank, const std::function<void(const Subspace&)>& fn);
uint64_t gaussian_binomial(int n, int k, int q);

Subspace random_subspace(const Field& F, int ncols, int rank, util::Rng& rng);

}  // namespace mmset::lin
