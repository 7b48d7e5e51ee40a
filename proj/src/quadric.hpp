#pragma once

#include <optional>
#include <vector>

#include "linalg.hpp"
#include "report.hpp"

namespace mmset::quad {

using gf::Field;
using lin::Mat;
using lin::Subspace;
using lin::Vector;

// Quadratic form Q(x) = sum_{i<=j} gram[i][j] x_i x_j, stored upper-triangular.
// The Gram matrix is NOT symmetrized: in characteristic 2 the form cannot be
// recovered from its polar form, so the triangular coefficients are the data.
struct QuadraticForm {
    int ncols = 0;
    Mat gram;  // upper triangular
    Mat bsym;  // cached polarization matrix G + G^T, f(x,y) = x^T bsym y

    QuadraticForm() = default;
    QuadraticForm(const Field& F, Mat upper);

    uint8_t eval(const Field& F, const Vector& x) const;
    uint8_t bilinear(const Field& F, const Vector& x, const Vector& y) const;
    // f(x, .) as a row vector
    Vector polar_functional(const Field& F, const Vector& x) const;
    bool operator==(const QuadraticForm&) const = default;
};

struct NonsingularityReport {
    bool nonsingular = false;
    int radical_dim = 0;           // radical of the polar form
    bool radical_has_singular_point = false;
};

// Nonsingularity criteria: odd characteristic requires a trivial radical; in
// characteristic 2 the radical must contain no singular point and must be
// trivial when the vector dimension is even.
NonsingularityReport check_nonsingular(const Field& F, const QuadraticForm& q);

// Standard split form in P^(d+1). d odd gives the parabolic
// x0^2 + x1 x2 + ... + x_d x_{d+1}; d even the hyperbolic
// x0 x1 + ... + x_d x_{d+1}. Witt index floor((d+2)/2). Throws for d < 1.
QuadraticForm split_form(const Field& F, int d);

// Hyperbolic pairs (e_i, f_i) plus an anisotropic complement; in these
// coordinates Q = sum a_i b_i + Q(rest).
struct WittBasis {
    std::vector<std::pair<Vector, Vector>> pairs;
    std::vector<Vector> rest;
};

WittBasis witt_decompose(const Field& F, const QuadraticForm& q);
int witt_index(const Field& F, const QuadraticForm& q);  // throws on singular forms

enum class QuadricKind { hyperbolic, parabolic, other };

struct Quadric {
    QuadraticForm form;
    std::vector<Vector> points;  // all singular projective points, key-sorted
    int witt = 0;
    QuadricKind kind = QuadricKind::other;

    int ambient_projdim() const { return form.ncols - 1; }
    bool split() const { return kind != QuadricKind::other; }
};

Quadric build_quadric(const Field& F, QuadraticForm q);

// Restriction of a form to the row space of `basis` (coordinates = rows).
QuadraticForm restrict_form(const Field& F, const QuadraticForm& q, const Mat& basis);

// Tangent hyperplane {y : f(x,y) = 0}; throws if x is not on the quadric or
// the polar functional vanishes identically.
Subspace tangent_space(const Field& F, const Quadric& q, const Vector& x);

// All maximal totally singular subspaces. For hyperbolic quadrics they are
// returned split into the two classes (same class iff the intersection has
// even codimension in each); `plus` is the class containing the
// lexicographically least subspace.
struct MaxSingular {
    std::vector<Subspace> all;
    std::vector<Subspace> plus, minus;  // populated for hyperbolic quadrics
};
MaxSingular max_singular_subspaces(const Field& F, const Quadric& q);

// One class of maximal singular subspaces of a hyperbolic form relative to a
// fixed Witt basis: the class of U_inf = span(f_i) (`same_class_as_uinf`),
// or the other one. Used directly by the half-spin construction.
std::vector<Subspace> hyperbolic_class(const Field& F, const WittBasis& wb, int ncols,
                                       bool same_class_as_uinf);

// All singular lines of the quadric.
std::vector<Subspace> singular_lines(const Field& F, const Quadric& q);

struct QuadricLemmaPolicy {
    bool exhaustive = true;
    uint64_t samples = 10000;
    uint64_t seed = 0;
};

// Executable forms of the three quadric lemmas: (a) every (n+1)-space
// contains a non-collinear pair of quadric points, (b) through every singular
// (n-1)-space of a parabolic quadric there is exactly one n-space meeting it
// in nothing more, (c) every (m-2)-subspace is missed by some line of the
// quadric (ambient P^m, m >= 3).
std::vector<report::CheckRecord> check_quadric_lemmas(const Field& F, const Quadric& q,
                                                      const QuadricLemmaPolicy& policy);

}  // namespace mmset::quad
