#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace mmset::gf {

// GF(q) for q = p^k <= 9. Elements are indices in [0, q): 0 and 1 are the
// field's zero and one; for k > 1 the index encodes the polynomial basis,
// index = sum c_i p^i for the residue class sum c_i t^i mod the modulus.
// All arithmetic goes through lookup tables; everything downstream assumes
// these operations are branch-free and cheap.
class Field {
  public:
    static constexpr int kMaxQ = 9;

    Field(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    // Modulus polynomial coefficients c_0..c_k over GF(p); empty when k == 1.
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * kMaxQ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * kMaxQ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * kMaxQ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;  // throws on a == 0
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
    uint8_t frob(uint8_t a) const { return frob_[a]; }  // a -> a^p

    uint8_t pow(uint8_t a, uint64_t e) const;

  private:
    int p_, k_, q_;
    std::vector<uint8_t> modulus_;
    std::array<uint8_t, kMaxQ * kMaxQ> add_{}, mul_{};
    std::array<uint8_t, kMaxQ> neg_{}, inv_{}, frob_{};
};

// Cached field instances; references stay valid for the program lifetime.
const Field& field(int p, int k);

bool is_prime(int p);

}  // namespace mmset::gf
