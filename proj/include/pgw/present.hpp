#pragma once
// Algebras given by ordered generators g_0 < g_1 < ..., p-th power rules
// g_i^p = r_i and brackets [g_i, g_j] = c_ij (i < j), on the truncated PBW
// basis. Products are computed by rewriting into ordered monomials; the
// result is only an algebra when the rules are consistent, which the
// associativity check of the resulting Hopf algebra certifies.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pgw/hopf.hpp"
#include "pgw/pbw.hpp"
#include "pgw/uenv.hpp"

namespace pgw {

struct Presentation {
    std::vector<std::string> names;
    std::vector<Elem> pth_power;                  // r_i, in ordered monomials
    std::map<std::pair<int, int>, Elem> bracket;  // (i, j) with i < j; absent means 0
};

class PresentedAlgebra {
public:
    explicit PresentedAlgebra(Presentation pres);

    int ngens() const { return static_cast<int>(pres_.names.size()); }
    int p() const { return p_; }
    Mono dim() const { return dim_; }
    const std::vector<std::string>& names() const { return pres_.names; }

    std::vector<int> exps(Mono m) const;
    Mono mono(const std::vector<int>& e) const;
    Elem gen(int i) const;
    Elem mono_elem(const std::vector<int>& e) const { return Elem::mono(mono(e)); }

    Elem mul(const Elem& a, const Elem& b) const;
    const std::vector<std::pair<Mono, Fq>>& mul_mono(Mono a, Mono b) const;
    Elem power(const Elem& a, int k) const;
    Tensor tensor_mul(const Tensor& a, const Tensor& b) const;
    Tensor tensor(const Elem& a, const Elem& b) const { return pure_tensor({a, b}, dim_); }
    // a (x) 1 + 1 (x) a
    Tensor primitive_part(const Elem& a) const;
    // sum_i ((p-1)!/(i!(p-i)!)) r^i (x) r^{p-i}
    Tensor omega(const Elem& r) const;

private:
    const Elem& mul_gen(Mono m, int g) const;
    Elem mul_elem_gen(const Elem& a, int g) const;
    Elem bracket_of(int i, int j) const;  // [g_i, g_j] for any i, j

    Presentation pres_;
    int p_;
    Mono dim_;
    mutable std::vector<Elem> gen_cache_;
    mutable std::vector<char> gen_state_;  // 0 unknown, 1 in progress, 2 done
    mutable std::vector<std::vector<std::pair<Mono, Fq>>> table_;
    mutable std::vector<char> table_done_;
};

// Hopf algebra with Delta(g_i) = g_i (x) 1 + 1 (x) g_i + psi_i.
HopfAlgebra hopf_from_presentation(const PresentedAlgebra& A, const std::vector<Tensor>& psi);

// Semisimplicity by the integral criterion: the left integral is not killed by the counit.
bool is_semisimple(const HopfAlgebra& H);

// Algebra map determined by generator images, evaluated on the PBW basis of H
// (generators of H are its `generators` entries, in order).
std::vector<Terms> map_from_generators(const HopfAlgebra& H, const HopfAlgebra& K, const std::vector<Terms>& images);

}  // namespace pgw
