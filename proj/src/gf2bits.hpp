#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "linalg.hpp"

namespace mmset::lin {

// Packed GF(2) rows for ambient dimensions up to 64: coordinate i maps to bit
// (ncols-1-i), so the packed value of a normalized point equals its point_key.

inline uint64_t pack_gf2(const Vector& v) {
    uint64_t b = 0;
    for (uint8_t c : v) b = (b << 1) | c;
    return b;
}

inline Vector unpack_gf2(uint64_t bits, int ncols) {
    Vector v(ncols);
    for (int i = 0; i < ncols; ++i) v[i] = static_cast<uint8_t>((bits >> (ncols - 1 - i)) & 1);
    return v;
}

// Online RREF over GF(2) on packed rows. Rows are kept fully reduced and
// sorted by descending pivot bit, which unpacks to the canonical RREF basis.
struct BitRref {
    std::vector<uint64_t> rows;

    uint64_t reduce(uint64_t v) const {
        for (uint64_t r : rows) {
            uint64_t pivot = uint64_t(1) << (63 - std::countl_zero(r));
            if (v & pivot) v ^= r;
        }
        return v;
    }

    bool contains(uint64_t v) const { return reduce(v) == 0; }

    bool insert(uint64_t v) {
        v = reduce(v);
        if (!v) return false;
        uint64_t pivot = uint64_t(1) << (63 - std::countl_zero(v));
        for (uint64_t& r : rows)
            if (r & pivot) r ^= v;
        auto it = rows.begin();
        while (it != rows.end() && *it > v) ++it;
        rows.insert(it, v);
        return true;
    }

    int rank() const { return static_cast<int>(rows.size()); }

    Subspace to_subspace(int ncols) const {
        Subspace s;
        s.basis = Mat(static_cast<int>(rows.size()), ncols);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < ncols; ++c)
                s.basis.at(static_cast<int>(r), c) =
                    static_cast<uint8_t>((rows[r] >> (ncols - 1 - c)) & 1);
        return s;
    }
};

inline std::vector<uint64_t> pack_subspace(const Subspace& s) {
    std::vector<uint64_t> rows;
    rows.reserve(s.basis.rows);
    for (int r = 0; r < s.basis.rows; ++r) {
        uint64_t b = 0;
        for (int c = 0; c < s.basis.cols; ++c) b = (b << 1) | s.basis.at(r, c);
        rows.push_back(b);
    }
    return rows;
}

// Visit every nonzero XOR combination of the rows exactly once (Gray code);
// fn receives the combined bits and the coefficient mask (bit i = row i used).
inline void for_each_gf2_combo(const std::vector<uint64_t>& rows,
                               const std::function<void(uint64_t, uint32_t)>& fn) {
    uint32_t n = static_cast<uint32_t>(rows.size());
    uint64_t acc = 0;
    uint32_t prev = 0;
    for (uint64_t g = 1; g < (uint64_t(1) << n); ++g) {
        uint32_t gray = static_cast<uint32_t>(g ^ (g >> 1));
        acc ^= rows[std::countr_zero(gray ^ prev)];
        prev = gray;
        fn(acc, gray);
    }
}

}  // namespace mmset::lin
