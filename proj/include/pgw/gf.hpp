#pragma once
// Exact arithmetic in GF(p^m).
//
// Elements are 8-byte handles interpreted against a thread-local current
// field, installed with FieldScope. Small fields (q up to 2^22) use
// log/Zech tables; larger ones use nibble-packed polynomial residues.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace pgw {

class Field;

struct Fq {
    uint64_t v = 0;
    static Fq zero() { return Fq{0}; }
    static Fq one() { return Fq{1}; }
    static Fq of(long long n);
    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }
    friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
    friend bool operator!=(Fq a, Fq b) { return a.v != b.v; }
};

class Field {
public:
    // Field with the lexicographically smallest monic irreducible modulus
    // (coefficients compared from degree 0 upward).
    static std::shared_ptr<const Field> create(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    uint64_t order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    bool table_mode() const { return table_; }
    Fq primitive() const { return prim_; }
    const std::vector<uint64_t>& group_order_primes() const { return primes_; }

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;
    Fq pow(Fq a, uint64_t e) const;

    Fq from_int(long long n) const;
    Fq from_coeffs(const std::vector<int>& c) const;
    std::vector<int> coeffs(Fq a) const;
    uint64_t code(Fq a) const;       // sum c_i p^i
    Fq from_code(uint64_t c) const;

    // discrete log base primitive(); a must be nonzero
    uint64_t log(Fq a) const;
    Fq exp(uint64_t k) const;

    std::string describe() const;    // e.g. "GF(3^4) mod t^4+2t^3+2"

private:
    Field() = default;
    uint64_t pmul(uint64_t a, uint64_t b) const;
    uint64_t padd(uint64_t a, uint64_t b) const;
    uint64_t pneg(uint64_t a) const;
    uint64_t ppow(uint64_t a, uint64_t e) const;
    uint64_t pack(const std::vector<int>& c) const;
    uint64_t pack_code(uint64_t code) const;
    uint64_t unpack_code(uint64_t packed) const;
    uint64_t plog(uint64_t a) const;

    int p_ = 0, m_ = 0;
    uint64_t q_ = 0;
    std::vector<int> modulus_;
    bool table_ = false;
    Fq prim_;
    std::vector<uint64_t> primes_;
    uint64_t prim_packed_ = 0;
    // table mode
    std::vector<uint32_t> exp_code_;  // log -> dense code
    std::vector<uint32_t> log_;       // dense code -> log
    std::vector<uint32_t> zech_;      // k -> 1 + log(1 + g^k), or 0
};

// Installs a field as current for this thread; restores the previous one.
class FieldScope {
public:
    explicit FieldScope(std::shared_ptr<const Field> f);
    ~FieldScope();
    FieldScope(const FieldScope&) = delete;
    FieldScope& operator=(const FieldScope&) = delete;

private:
    std::shared_ptr<const Field> prev_;
};

const Field& field();
std::shared_ptr<const Field> field_ptr();

inline Fq operator+(Fq a, Fq b) { return field().add(a, b); }
inline Fq operator-(Fq a, Fq b) { return field().sub(a, b); }
inline Fq operator-(Fq a) { return field().neg(a); }
inline Fq operator*(Fq a, Fq b) { return field().mul(a, b); }
inline Fq operator/(Fq a, Fq b) { return field().mul(a, field().inv(b)); }
inline Fq& operator+=(Fq& a, Fq b) { return a = a + b; }
inline Fq& operator-=(Fq& a, Fq b) { return a = a - b; }
inline Fq& operator*=(Fq& a, Fq b) { return a = a * b; }
inline Fq inv(Fq a) { return field().inv(a); }
inline Fq pow(Fq a, uint64_t e) { return field().pow(a, e); }
// signed exponent; a must be nonzero when e < 0
Fq pow_signed(Fq a, long long e);

Fq frobenius(Fq a);
Fq inv_frobenius(Fq a);

// all x with x^n = 1
std::vector<Fq> mu_n(uint64_t n);
// all x with x^n = c; n may be negative (then c must be nonzero)
std::vector<Fq> solve_power(long long n, Fq c);
bool in_prime_field(Fq a);

Fq random_fq(std::mt19937_64& rng);
Fq random_nonzero(std::mt19937_64& rng);
// uniform element of the subfield GF(p^k); k must divide m
Fq random_subfield(std::mt19937_64& rng, int k, bool nonzero = false);

// residue polynomial in t, e.g. "2t^3+t+1"; no spaces
std::string to_string(Fq a);
Fq parse_scalar(const std::string& s);

uint64_t gcd_u64(uint64_t a, uint64_t b);

}  // namespace pgw
