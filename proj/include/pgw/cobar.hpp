#pragma once
// Low-degree cobar complex of u(h) on the augmentation ideal, its
// cohomology, cohomology coordinates, and the operator Phi_z.

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "pgw/linalg.hpp"
#include "pgw/rla.hpp"
#include "pgw/uenv.hpp"

namespace pgw {

// (a_ij for i<j in lexicographic order, then b_k)
using Coords = std::vector<Fq>;

struct CohomologyDims {
    size_t rank_d1 = 0, rank_d2 = 0;
    size_t dim_h1 = 0, dim_h2 = 0;
    bool reps_are_cocycles = false;
    size_t reps_rank = 0;  // rank of the classes x_i(x)x_j, omega(x_k) modulo coboundaries
};

class Cobar {
public:
    explicit Cobar(std::shared_ptr<const HAlgebra> h);

    const HAlgebra& h() const { return *h_; }
    std::shared_ptr<const HAlgebra> h_ptr() const { return h_; }
    int n() const { return h_->n(); }

    Tensor d1(const Elem& r) const;
    Tensor d2(const Tensor& t) const;
    std::optional<Elem> coboundary_witness(const Tensor& t) const;
    bool is_coboundary(const Tensor& t) const;

    CohomologyDims cohomology() const;  // brute-force ranks
    // chi_P = sum a_ij x_i(x)x_j + omega(sum b_k x_k)
    Tensor chi(const Coords& P) const;
    // requires d2(t) = 0; also returns a witness s with t = chi_P + d1(s) when asked
    Coords class_coords(const Tensor& t, Elem* witness = nullptr) const;

    Tensor tensor_of(const SparseVec& v, int deg) const;
    static SparseVec to_sparse(const Tensor& t);

private:
    std::shared_ptr<const HAlgebra> h_;
    Echelon d1_{true};          // columns d1(m), m = 1..dim-1
    Echelon classes_{true};     // d1 columns then the class representatives
    std::vector<Tensor> reps_;
};

// Phi_z on degree 1 (u(h)^+) and on tensors of any degree (componentwise p-th power)
Elem phi_z(const AbelianType& T, const HAlgebra& h, const Elem& s);
Tensor phi_z(const AbelianType& T, const HAlgebra& h, const Tensor& t);

struct IdentityReport {
    std::string name;
    int checked = 0;
    int failed = 0;
};

// Cobar identities on random samples; returns one record per identity
std::vector<IdentityReport> verify_cobar_identities(const AbelianType& T, const Cobar& C, std::mt19937_64& rng,
                                                    int samples);

Elem random_plus(const HAlgebra& h, std::mt19937_64& rng, int terms = 4);
Elem random_linear(const HAlgebra& h, std::mt19937_64& rng);
Tensor random_plus2(const HAlgebra& h, std::mt19937_64& rng, int terms = 4);

}  // namespace pgw
