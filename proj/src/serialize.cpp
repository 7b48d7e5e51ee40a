#include "serialize.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace mmset::ser {

namespace {

template <typename T>
void put(std::ostream& os, T v) {
    unsigned char buf[sizeof(T)];
    for (size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    unsigned char buf[sizeof(T)];
    is.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (!is) throw ParseError("unexpected end of file");
    T v = 0;
    for (size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
    return v;
}

void put_bytes(std::ostream& os, const uint8_t* data, size_t n) {
    os.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n));
}

void get_bytes(std::istream& is, uint8_t* data, size_t n) {
    is.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(n));
    if (!is) throw ParseError("unexpected end of file");
}

}  // namespace

void save(const var::MMSet& set, std::ostream& os) {
    os.write(kMagic, sizeof(kMagic));
    put<uint32_t>(os, kSchemaVersion);
    put<uint8_t>(os, static_cast<uint8_t>(set.F->p()));
    put<uint8_t>(os, static_cast<uint8_t>(set.F->k()));
    put<uint8_t>(os, static_cast<uint8_t>(set.d));
    put<uint8_t>(os, set.lines_enumerated ? 1 : 0);
    put<uint16_t>(os, static_cast<uint16_t>(set.ncols));
    put<uint32_t>(os, static_cast<uint32_t>(set.N));
    put<uint8_t>(os, static_cast<uint8_t>(set.family.size()));
    os.write(set.family.data(), static_cast<std::streamsize>(set.family.size()));
    put<uint8_t>(os, static_cast<uint8_t>(set.params.size()));
    for (int p : set.params) put<uint32_t>(os, static_cast<uint32_t>(p));
    put<uint8_t>(os, static_cast<uint8_t>(set.F->modulus().size()));
    put_bytes(os, set.F->modulus().data(), set.F->modulus().size());
    put<uint64_t>(os, set.size());
    put<uint64_t>(os, set.lines_enumerated ? set.lines.size() : 0);
    put<uint64_t>(os, set.symps.size());
    for (const auto& pt : set.points) put_bytes(os, pt.data(), pt.size());
    if (set.lines_enumerated)
        for (const auto& L : set.lines) {
            put<uint32_t>(os, L.point_ids[0]);
            put<uint32_t>(os, L.point_ids[1]);
        }
    for (const auto& s : set.symps)
        put_bytes(os, s.space.basis.a.data(), s.space.basis.a.size());
    if (!os) throw std::runtime_error("write failure");
}

void save_file(const var::MMSet& set, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    save(set, os);
}

var::MMSet load(std::istream& is) {
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw ParseError("not a variety container (bad magic)");
    if (get<uint32_t>(is) != kSchemaVersion) throw ParseError("unsupported schema version");
    int p = get<uint8_t>(is);
    int k = get<uint8_t>(is);
    int d = get<uint8_t>(is);
    uint8_t flags = get<uint8_t>(is);
    int ncols = get<uint16_t>(is);
    int N = static_cast<int>(get<uint32_t>(is));
    if (!gf::is_prime(p)) throw ParseError("header characteristic is not prime");
    const gf::Field* F;
    try {
        F = &gf::field(p, k);
    } catch (const std::exception& e) {
        throw ParseError(std::string("unsupported field: ") + e.what());
    }
    var::MMSet set;
    set.F = F;
    set.d = d;
    set.ncols = ncols;
    uint8_t flen = get<uint8_t>(is);
    set.family.resize(flen);
    is.read(set.family.data(), flen);
    uint8_t nparams = get<uint8_t>(is);
    for (int i = 0; i < nparams; ++i) set.params.push_back(static_cast<int>(get<uint32_t>(is)));
    uint8_t mlen = get<uint8_t>(is);
    std::vector<uint8_t> modulus(mlen);
    if (mlen) get_bytes(is, modulus.data(), mlen);
    if (modulus != F->modulus()) throw ParseError("modulus does not match the canonical field tables");
    uint64_t npoints = get<uint64_t>(is);
    uint64_t nlines = get<uint64_t>(is);
    uint64_t nsymps = get<uint64_t>(is);
    if (npoints == 0) throw ParseError("empty point set");
    if (d < 1 || ncols < d + 2) throw ParseError("inconsistent split type and ambient");

    set.points.reserve(npoints);
    for (uint64_t i = 0; i < npoints; ++i) {
        lin::Vector v(ncols);
        get_bytes(is, v.data(), ncols);
        for (uint8_t c : v)
            if (c >= F->q()) throw ParseError("coordinate out of field range");
        set.points.push_back(std::move(v));
    }
    var::finalize_points(set);
    if (set.size() != npoints) throw ParseError("points are not distinct normalized representatives");
    if (set.N != N) throw ParseError("header span dimension does not match the points");

    if (flags & 1) {
        for (uint64_t i = 0; i < nlines; ++i) {
            uint32_t a = get<uint32_t>(is), b = get<uint32_t>(is);
            if (a >= npoints || b >= npoints || a == b) throw ParseError("line index out of range");
            if (!set.collinear(a, b)) throw ParseError("stored line is not singular");
            set.lines.push_back({set.line_ids(a, b)});
        }
        set.lines_enumerated = true;
    }

    std::vector<lin::Subspace> spans;
    spans.reserve(nsymps);
    for (uint64_t i = 0; i < nsymps; ++i) {
        lin::Mat m(d + 2, ncols);
        get_bytes(is, m.a.data(), m.a.size());
        lin::Mat copy = m;
        if (lin::rref_in_place(*F, copy) != d + 2 || !(copy == m))
            throw ParseError("symp basis is not a canonical full-rank RREF matrix");
        lin::Subspace s;
        s.basis = std::move(m);
        spans.push_back(std::move(s));
    }
    var::attach_symps(set, std::move(spans), /*strict=*/false);
    return set;
}

var::MMSet load_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ParseError("cannot open: " + path);
    return load(is);
}

}  // namespace mmset::ser
