#include "linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmset::lin {

bool is_zero(const Vector& v) {
    for (uint8_t c : v)
        if (c) return false;
    return true;
}

Vector normalized(const Field& F, Vector v) {
    for (uint8_t c : v) {
        if (c == 0) continue;
        if (c != 1) {
            uint8_t s = F.inv(c);
            for (auto& x : v) x = F.mul(x, s);
        }
        return v;
    }
    throw std::invalid_argument("cannot normalize the zero vector");
}

uint64_t point_key(const Field& F, const Vector& v) {
    uint64_t key = 0;
    for (uint8_t c : v) key = key * F.q() + c;
    return key;
}

Vector key_to_vector(const Field& F, uint64_t key, int ncols) {
    Vector v(ncols, 0);
    for (int i = ncols - 1; i >= 0; --i) {
        v[i] = static_cast<uint8_t>(key % F.q());
        key /= F.q();
    }
    return v;
}

void Mat::append_row(const Vector& v) {
    if (rows == 0 && cols == 0) cols = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("row length mismatch");
    a.insert(a.end(), v.begin(), v.end());
    ++rows;
}

int rref_in_place(const Field& F, Mat& m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        uint8_t s = F.inv(m.at(rank, col));
        if (s != 1)
            for (int c = col; c < m.cols; ++c) m.at(rank, c) = F.mul(m.at(rank, c), s);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            uint8_t f = m.at(r, col);
            if (!f) continue;
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(rank, c)));
        }
        ++rank;
    }
    m.a.resize(static_cast<size_t>(rank) * m.cols);
    m.rows = rank;
    return rank;
}

bool Subspace::contains(const Field& F, const Vector& v) const {
    if (static_cast<int>(v.size()) != basis.cols) throw std::invalid_argument("ambient mismatch");
    Vector w = v;
    for (int r = 0; r < basis.rows; ++r) {
        int p = 0;
        while (basis.at(r, p) == 0) ++p;
        uint8_t f = w[p];
        if (!f) continue;
        for (int c = p; c < basis.cols; ++c) w[c] = F.sub(w[c], F.mul(f, basis.at(r, c)));
    }
    return is_zero(w);
}

bool Subspace::contains_subspace(const Field& F, const Subspace& s) const {
    for (int r = 0; r < s.basis.rows; ++r) {
        Vector row(s.basis.row(r).begin(), s.basis.row(r).end());
        if (!contains(F, row)) return false;
    }
    return true;
}

Vector Subspace::coords_of(const Field& F, const Vector& v) const {
    Vector w = v, c(basis.rows, 0);
    for (int r = 0; r < basis.rows; ++r) {
        int p = 0;
        while (basis.at(r, p) == 0) ++p;
        c[r] = w[p];
        if (!c[r]) continue;
        for (int j = p; j < basis.cols; ++j) w[j] = F.sub(w[j], F.mul(c[r], basis.at(r, j)));
    }
    if (!is_zero(w)) throw std::invalid_argument("vector not in subspace");
    return c;
}

std::string Subspace::key() const {
    std::string k;
    k.reserve(basis.a.size() + 2);
    k.push_back(static_cast<char>(basis.rows));
    k.push_back(static_cast<char>(basis.cols));
    k.append(basis.a.begin(), basis.a.end());
    return k;
}

bool SpanBuilder::insert(Vector v) {
    for (size_t r = 0; r < pivots.size(); ++r) {
        uint8_t f = v[pivots[r]];
        if (!f) continue;
        for (int c = pivots[r]; c < m.cols; ++c)
            v[c] = F->sub(v[c], F->mul(f, m.at(static_cast<int>(r), c)));
    }
    int p = -1;
    for (int c = 0; c < m.cols; ++c)
        if (v[c]) {
            p = c;
            break;
        }
    if (p < 0) return false;
    uint8_t s = F->inv(v[p]);
    if (s != 1)
        for (int c = p; c < m.cols; ++c) v[c] = F->mul(v[c], s);
    // clear the new pivot column in existing rows
    for (size_t r = 0; r < pivots.size(); ++r) {
        uint8_t f = m.at(static_cast<int>(r), p);
        if (!f) continue;
        for (int c = p; c < m.cols; ++c)
            m.at(static_cast<int>(r), c) = F->sub(m.at(static_cast<int>(r), c), F->mul(f, v[c]));
    }
    // insert keeping pivot columns increasing
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < p) ++pos;
    m.a.insert(m.a.begin() + static_cast<long>(pos) * m.cols, v.begin(), v.end());
    ++m.rows;
    pivots.insert(pivots.begin() + static_cast<long>(pos), p);
    return true;
}

Subspace SpanBuilder::take() {
    Subspace s;
    s.basis = std::move(m);
    return s;
}

Subspace empty_subspace(int ncols) {
    Subspace s;
    s.basis = Mat(0, ncols);
    return s;
}

Subspace full_space(const Field& F, int ncols) {
    (void)F;
    Subspace s;
    s.basis = Mat(ncols, ncols);
    for (int i = 0; i < ncols; ++i) s.basis.at(i, i) = 1;
    return s;
}

Subspace span_of(const Field& F, const std::vector<Vector>& pts) {
    if (pts.empty()) throw std::invalid_argument("span of empty set needs an ambient");
    SpanBuilder b(F, static_cast<int>(pts[0].size()));
    for (const auto& p : pts) {
        if (p.size() != pts[0].size()) throw std::invalid_argument("mixed ambient dimensions");
        b.insert(p);
    }
    return b.take();
}

Subspace span_join(const Field& F, const Subspace& a, const Subspace& b) {
    if (a.ncols() != b.ncols()) throw std::invalid_argument("mixed ambient dimensions");
    SpanBuilder sb(F, a.ncols());
    for (int r = 0; r < a.basis.rows; ++r) sb.insert(Vector(a.basis.row(r).begin(), a.basis.row(r).end()));
    for (int r = 0; r < b.basis.rows; ++r) sb.insert(Vector(b.basis.row(r).begin(), b.basis.row(r).end()));
    return sb.take();
}

Subspace point_subspace(const Field& F, const Vector& p) {
    SpanBuilder b(F, static_cast<int>(p.size()));
    b.insert(p);
    return b.take();
}

Subspace intersect(const Field& F, const Subspace& a, const Subspace& b) {
    if (a.ncols() != b.ncols()) throw std::invalid_argument("mixed ambient dimensions");
    int n = a.ncols();
    // Zassenhaus: rref of [A|A; B|0], rows with zero left half span a cap b.
    Mat z(a.basis.rows + b.basis.rows, 2 * n);
    for (int r = 0; r < a.basis.rows; ++r)
        for (int c = 0; c < n; ++c) {
            z.at(r, c) = a.basis.at(r, c);
            z.at(r, n + c) = a.basis.at(r, c);
        }
    for (int r = 0; r < b.basis.rows; ++r)
        for (int c = 0; c < n; ++c) z.at(a.basis.rows + r, c) = b.basis.at(r, c);
    rref_in_place(F, z);
    SpanBuilder sb(F, n);
    for (int r = 0; r < z.rows; ++r) {
        bool left_zero = true;
        for (int c = 0; c < n; ++c)
            if (z.at(r, c)) {
                left_zero = false;
                break;
            }
        if (!left_zero) continue;
        Vector v(n);
        for (int c = 0; c < n; ++c) v[c] = z.at(r, n + c);
        sb.insert(std::move(v));
    }
    return sb.take();
}

void for_each_point(const Field& F, const Subspace& s, const std::function<void(const Vector&)>& fn) {
    int k = s.basis.rows;
    if (k <= 0) throw std::invalid_argument("cannot enumerate the empty subspace");
    int n = s.basis.cols;
    Vector coef(k, 0), pt(n, 0);
    // normalized coefficient tuples: first nonzero entry equals 1
    for (int lead = 0; lead < k; ++lead) {
        std::fill(coef.begin(), coef.end(), 0);
        coef[lead] = 1;
        while (true) {
            std::fill(pt.begin(), pt.end(), 0);
            for (int r = lead; r < k; ++r) {
                if (!coef[r]) continue;
                for (int c = 0; c < n; ++c)
                    pt[c] = F.add(pt[c], F.mul(coef[r], s.basis.at(r, c)));
            }
            fn(pt);
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

std::vector<Vector> enumerate_points(const Field& F, const Subspace& s) {
    std::vector<Vector> out;
    for_each_point(F, s, [&](const Vector& v) { out.push_back(v); });
    return out;
}

Vector project_from(const Field& F, const Subspace& center, const Subspace& screen, const Vector& x) {
    if (center.ncols() != screen.ncols() || static_cast<int>(x.size()) != center.ncols())
        throw std::invalid_argument("mixed ambient dimensions");
    if (!intersect(F, center, screen).empty())
        throw std::invalid_argument("center and screen must be disjoint");
    if (span_join(F, center, screen).basis.rows != center.ncols())
        throw std::invalid_argument("center and screen must span the ambient space");
    if (center.contains(F, x)) throw std::invalid_argument("point lies in the projection center");
    Subspace line = span_join(F, center, point_subspace(F, x));
    Subspace hit = intersect(F, line, screen);
    if (hit.basis.rows != 1) throw std::logic_error("projection did not produce a point");
    return Vector(hit.basis.row(0).begin(), hit.basis.row(0).end());
}

Subspace functional_kernel(const Field& F, const Vector& w) {
    int n = static_cast<int>(w.size());
    Mat row(1, n);
    for (int c = 0; c < n; ++c) row.at(0, c) = w[c];
    rref_in_place(F, row);
    if (row.rows == 0) return full_space(F, n);
    int p = 0;
    while (row.at(0, p) == 0) ++p;
    SpanBuilder sb(F, n);
    for (int c = 0; c < n; ++c) {
        if (c == p) continue;
        Vector v(n, 0);
        v[c] = 1;
        v[p] = F.neg(row.at(0, c));
        sb.insert(std::move(v));
    }
    return sb.take();
}

Subspace subspace_kernel(const Field& F, const Subspace& s, const std::vector<Vector>& constraints) {
    // express constraints in basis coordinates, solve there, map back
    int k = s.basis.rows, n = s.basis.cols;
    Mat sys(static_cast<int>(constraints.size()), k);
    for (size_t i = 0; i < constraints.size(); ++i) {
        for (int r = 0; r < k; ++r) {
            uint8_t dot = 0;
            for (int c = 0; c < n; ++c)
                dot = F.add(dot, F.mul(constraints[i][c], s.basis.at(r, c)));
            sys.at(static_cast<int>(i), r) = dot;
        }
    }
    rref_in_place(F, sys);
    std::vector<int> pivcols;
    {
        int c = 0;
        for (int r = 0; r < sys.rows; ++r) {
            while (c < k && sys.at(r, c) == 0) ++c;
            pivcols.push_back(c);
        }
    }
    SpanBuilder sb(F, n);
    for (int free = 0; free < k; ++free) {
        if (std::find(pivcols.begin(), pivcols.end(), free) != pivcols.end()) continue;
        Vector coef(k, 0);
        coef[free] = 1;
        for (int r = 0; r < sys.rows; ++r) coef[pivcols[r]] = F.neg(sys.at(r, free));
        Vector v(n, 0);
        for (int r = 0; r < k; ++r) {
            if (!coef[r]) continue;
            for (int c = 0; c < n; ++c) v[c] = F.add(v[c], F.mul(coef[r], s.basis.at(r, c)));
        }
        sb.insert(std::move(v));
    }
    return sb.take();
}

namespace {

// For a fixed pivot-column set, the free entries of an RREF matrix are the
// positions (row, col) with col > pivot(row) and col not a pivot column.
void emit_rref_for_pivots(const Field& F, int ncols, const std::vector<int>& pivots, Mat& m,
                          const std::function<void(const Subspace&)>& fn) {
    int rank = static_cast<int>(pivots.size());
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < rank; ++r)
        for (int c = pivots[r] + 1; c < ncols; ++c)
            if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                free_pos.emplace_back(r, c);
    std::fill(m.a.begin(), m.a.end(), 0);
    for (int r = 0; r < rank; ++r) m.at(r, pivots[r]) = 1;
    std::vector<uint8_t> vals(free_pos.size(), 0);
    while (true) {
        for (size_t i = 0; i < free_pos.size(); ++i) m.at(free_pos[i].first, free_pos[i].second) = vals[i];
        Subspace s;
        s.basis = m;
        fn(s);
        size_t pos = vals.size();
        while (pos > 0) {
            if (vals[pos - 1] + 1 < F.q()) {
                ++vals[pos - 1];
                break;
            }
            vals[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
}

void pivot_sets_rec(const Field& F, int ncols, int rank, int next_col, std::vector<int>& pivots,
                    Mat& m, const std::function<void(const Subspace&)>& fn) {
    if (static_cast<int>(pivots.size()) == rank) {
        emit_rref_for_pivots(F, ncols, pivots, m, fn);
        return;
    }
    int placed = static_cast<int>(pivots.size());
    for (int p = next_col; p <= ncols - (rank - placed); ++p) {
        pivots.push_back(p);
        pivot_sets_rec(F, ncols, rank, p + 1, pivots, m, fn);
        pivots.pop_back();
    }
}

}  // namespace

void for_each_subspace(const Field& F, int ncols, int rank, const std::function<void(const Subspace&)>& fn) {
    if (rank == 0) {
        fn(empty_subspace(ncols));
        return;
    }
    if (rank > ncols) return;
    Mat m(rank, ncols);
    std::vector<int> pivots;
    pivot_sets_rec(F, ncols, rank, 0, pivots, m, fn);
}

uint64_t gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    // evaluate prod (q^(n-i)-1)/(q^(k-i)-1) exactly in integers
    auto qpow = [&](int e) {
        uint64_t r = 1;
        for (int i = 0; i < e; ++i) r *= static_cast<uint64_t>(q);
        return r;
    };
    uint64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= qpow(n - i) - 1;
        den *= qpow(k - i) - 1;
    }
    return num / den;
}

Subspace random_subspace(const Field& F, int ncols, int rank, util::Rng& rng) {
    SpanBuilder sb(F, ncols);
    while (sb.rank() < rank) {
        Vector v(ncols);
        for (auto& c : v) c = static_cast<uint8_t>(rng.below(F.q()));
        if (is_zero(v)) continue;
        sb.insert(std::move(v));
    }
    return sb.take();
}

}  // namespace mmset::lin
