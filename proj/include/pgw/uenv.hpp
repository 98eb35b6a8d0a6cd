#pragma once
// Restricted enveloping algebras on truncated PBW bases: the commutative
// u(h) and the ordered algebra u(h)<z> with [z, r] = rho_z(r) and
// z^p = lambda z - Theta. Elements are sparse maps from monomial indices.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pgw/gf.hpp"
#include "pgw/rla.hpp"

namespace pgw {

using Mono = uint32_t;

// Sparse element; monomial index = sum_k e_k p^k with x_1 least significant.
struct Elem {
    std::map<Mono, Fq> c;

    static Elem scalar(Fq a);
    static Elem mono(Mono m, Fq a = Fq::one());
    bool is_zero() const { return c.empty(); }
    Fq coeff(Mono m) const;
    void add_term(Mono m, Fq a);
    Elem& operator+=(const Elem& o);
    Elem& operator-=(const Elem& o);
    friend Elem operator+(Elem a, const Elem& b) { return a += b; }
    friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
    friend Elem operator*(Fq s, const Elem& a);
    friend bool operator==(const Elem& a, const Elem& b) { return a.c == b.c; }
};

// Sparse tensor of fixed degree over an algebra with `base` monomials.
// Key = ((m_0 * base + m_1) * base + m_2) ...
struct Tensor {
    int deg = 2;
    uint64_t base = 0;
    std::map<uint64_t, Fq> c;

    Tensor() = default;
    Tensor(int d, uint64_t b) : deg(d), base(b) {}
    bool is_zero() const { return c.empty(); }
    void add_term(uint64_t key, Fq a);
    uint64_t key(const std::vector<Mono>& slots) const;
    std::vector<Mono> slots(uint64_t key) const;
    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Fq s, const Tensor& a);
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.deg == b.deg && a.c == b.c; }
    // true when no slot holds the empty monomial
    bool in_augmentation() const;
};

Tensor pure_tensor(const std::vector<Elem>& factors, uint64_t base);

// u(h) for abelian h with restriction matrix R.
class HAlgebra {
public:
    explicit HAlgebra(const Mat& R, std::vector<std::string> names = {});

    int n() const { return n_; }
    int p() const { return p_; }
    Mono dim() const { return dim_; }
    const Mat& R() const { return R_; }
    const std::vector<std::string>& names() const { return names_; }

    std::vector<int> exps(Mono m) const;
    Mono mono(const std::vector<int>& e) const;
    int degree(Mono m) const;
    Elem gen(int i) const;
    Elem from_vec(const Vec& v) const;  // linear combination of generators

    Elem mul(const Elem& a, const Elem& b) const;
    const std::vector<std::pair<Mono, Fq>>& mul_mono(Mono a, Mono b) const;
    Elem power(const Elem& a, int k) const;
    Tensor coproduct(const Elem& a) const;
    Fq counit(const Elem& a) const { return a.coeff(0); }
    Tensor tensor_mul(const Tensor& a, const Tensor& b) const;  // componentwise

    // rho as a derivation determined by rho(x_i) = sum_j M_ij x_j
    Elem rho(const Mat& M, const Elem& a) const;
    Tensor rho(const Mat& M, const Tensor& t) const;

private:
    void reduce_into(std::vector<int> e, Fq c, std::map<Mono, Fq>& out, int depth) const;
    int n_, p_;
    Mono dim_;
    Mat R_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::pair<Mono, Fq>>> table_;
};

// omega(r) = sum_i ((p-1)!/(i!(p-i)!)) r^i (x) r^{p-i}; r must lie in the span of generators
Tensor omega(const HAlgebra& h, const Elem& r);
// sum_i ((p-1)!/(i!(p-i)!)) r^i s^{p-i}
Elem omega_defect_primitive(const HAlgebra& h, const Elem& r, const Elem& s);
Fq omega_coeff(int i);

struct PlusSplit {
    Elem linear;
    Elem tail;
};
PlusSplit decompose_plus(const HAlgebra& h, const Elem& a);

// u(h)<z> with rho_z given by M, z^p = lambda z - theta (theta in u(h), rho(theta) = 0).
// Monomial index = hmono + zexp * dim(u(h)).
class TAlgebra {
public:
    TAlgebra(const AbelianType& T, Elem theta = {});

    const HAlgebra& h() const { return *h_; }
    std::shared_ptr<const HAlgebra> h_ptr() const { return h_; }
    const AbelianType& type() const { return T_; }
    const Elem& theta() const { return theta_; }
    Mono dim() const { return h_->dim() * static_cast<Mono>(h_->p()); }
    Mono hdim() const { return h_->dim(); }
    std::vector<std::string> names() const;

    Elem gen(int i) const;  // 0..n-1 for x_i, n for z
    Elem embed(const Elem& a) const { return a; }  // u(h) sits in zexp = 0
    Elem mul(const Elem& a, const Elem& b) const;
    const std::vector<std::pair<Mono, Fq>>& mul_mono(Mono a, Mono b) const;
    Elem power(const Elem& a, int k) const;
    // primitive z; the undeformed coproduct
    Tensor coproduct(const Elem& a) const;
    Tensor tensor_mul(const Tensor& a, const Tensor& b) const;

private:
    AbelianType T_;
    std::shared_ptr<const HAlgebra> h_;
    Elem theta_;
    std::vector<std::vector<Elem>> rho_pow_;  // rho^k of each h monomial
    mutable std::vector<std::vector<std::pair<Mono, Fq>>> cache_;
    mutable std::vector<char> cached_;
};

// Text round-trip: "c1*x^a*y^b + ..." with scalars as residue polynomials.
std::string elem_to_string(const Elem& a, const std::vector<std::string>& names, int p);
Elem elem_from_string(const std::string& s, const std::vector<std::string>& names, int p);
std::string tensor_to_string(const Tensor& t, const std::vector<std::string>& names, int p);
Tensor tensor_from_string(const std::string& s, const std::vector<std::string>& names, int p, int deg);
std::string mono_to_string(Mono m, const std::vector<std::string>& names, int p);

int binom_mod(int n, int k, int p);

}  // namespace pgw
