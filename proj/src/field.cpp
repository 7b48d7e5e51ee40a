#include "field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace mmset::gf {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Dense polynomial arithmetic over GF(p), coefficients little-endian.
using Poly = std::vector<uint8_t>;

Poly idx_to_poly(int idx, int p, int k) {
    Poly c(k, 0);
    for (int i = 0; i < k; ++i) {
        c[i] = static_cast<uint8_t>(idx % p);
        idx /= p;
    }
    return c;
}

int poly_to_idx(const Poly& c, int p) {
    int idx = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) idx = idx * p + c[i];
    return idx;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    for (auto& v : prod) v %= p;
    // reduce by the monic modulus of degree k
    int k = static_cast<int>(mod.size()) - 1;
    for (int d = static_cast<int>(prod.size()) - 1; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i <= k; ++i) {
            int t = prod[d - k + i] - c * mod[i];
            prod[d - k + i] = ((t % p) + p) % p;
        }
    }
    Poly r(k, 0);
    for (int i = 0; i < k; ++i) r[i] = static_cast<uint8_t>(prod[i]);
    return r;
}

bool poly_has_root(const Poly& m, int p) {
    int k = static_cast<int>(m.size()) - 1;
    for (int x = 0; x < p; ++x) {
        int v = 0, xp = 1;
        for (int i = 0; i <= k; ++i) {
            v = (v + m[i] * xp) % p;
            xp = (xp * x) % p;
        }
        if (v == 0) return true;
    }
    return false;
}

// First (lexicographically in c_0, c_1, ...) monic irreducible of degree k over
// GF(p). For k <= 3 irreducibility is equivalent to having no root, which
// covers every supported field. The fixed search order pins the modulus choice
// (x^2+x+1 for GF(4), x^3+x+1 for GF(8), x^2+1 for GF(9)).
Poly find_modulus(int p, int k) {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
        Poly m = idx_to_poly(idx, p, k);
        m.push_back(1);
        if (m[0] == 0) continue;  // reducible: divisible by t
        if (!poly_has_root(m, p)) return m;
    }
    throw std::runtime_error("no irreducible modulus found");
}

}  // namespace

Field::Field(int p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > kMaxQ) throw std::invalid_argument("field order must be <= 9");
    q_ = static_cast<int>(q);

    if (k_ == 1) {
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                add_[a * kMaxQ + b] = static_cast<uint8_t>((a + b) % p_);
                mul_[a * kMaxQ + b] = static_cast<uint8_t>((a * b) % p_);
            }
    } else {
        Poly mod = find_modulus(p_, k_);
        modulus_ = mod;
        for (int a = 0; a < q_; ++a) {
            Poly pa = idx_to_poly(a, p_, k_);
            for (int b = 0; b < q_; ++b) {
                Poly pb = idx_to_poly(b, p_, k_);
                Poly s(k_, 0);
                for (int i = 0; i < k_; ++i) s[i] = static_cast<uint8_t>((pa[i] + pb[i]) % p_);
                add_[a * kMaxQ + b] = static_cast<uint8_t>(poly_to_idx(s, p_));
                mul_[a * kMaxQ + b] =
                    static_cast<uint8_t>(poly_to_idx(poly_mul_mod(pa, pb, mod, p_), p_));
            }
        }
    }

    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            if (add_[a * kMaxQ + b] == 0) neg_[a] = static_cast<uint8_t>(b);
            if (a != 0 && mul_[a * kMaxQ + b] == 1) inv_[a] = static_cast<uint8_t>(b);
        }
        uint8_t f = static_cast<uint8_t>(a);
        for (int i = 1; i < p_; ++i) f = mul_[f * kMaxQ + a];
        frob_[a] = f;
    }

    // A failed inverse would mean the modulus was not irreducible after all.
    for (int a = 1; a < q_; ++a)
        if (mul_[a * kMaxQ + inv_[a]] != 1) throw std::runtime_error("field tables inconsistent");
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

uint8_t Field::pow(uint8_t a, uint64_t e) const {
    uint8_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

const Field& field(int p, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, Field*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, new Field(p, k)).first;
    return *it->second;
}

}  // namespace mmset::gf
