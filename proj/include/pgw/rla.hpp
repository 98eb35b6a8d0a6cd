#pragma once
// Restricted Lie algebras by structure constants, algebraic representations
// of a one-dimensional algebra on an abelian one, and the semiproduct.

#include <random>
#include <string>
#include <vector>

#include "pgw/gf.hpp"

namespace pgw {

using Vec = std::vector<Fq>;
using Mat = std::vector<Vec>;  // row-major

Mat mat_zero(int n);
Mat mat_identity(int n);
Mat mat_unit(int n, int i, int j);  // e_ij, zero-based
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, Fq c);
Mat mat_pow(const Mat& a, int e);
Mat mat_transpose(const Mat& a);
Mat mat_frobenius(const Mat& a);  // entrywise p-th power
bool mat_is_zero(const Mat& a);
Fq det2(const Mat& a);
Mat inv2(const Mat& a);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, Fq c);
bool vec_is_zero(const Vec& a);
// row vector times matrix: (v M)_j = sum_i v_i M_ij
Vec vec_mat(const Vec& v, const Mat& m);

struct RestrictedLie {
    int dim = 0;
    std::vector<Fq> c;             // [x_i, x_j] = sum_k c[(i*dim + j)*dim + k] x_k
    std::vector<Vec> pmap_basis;   // x_i^[p]

    Vec bracket(const Vec& a, const Vec& b) const;
    bool is_abelian() const;
    Vec basis(int i) const;
};

RestrictedLie abelian_lie(const Mat& R);

Vec pmap(const RestrictedLie& L, const Vec& v);
// s_1..s_{p-1} with i*s_i the coefficient of t^{i-1} in a (ad(t a + x))^{p-1}
std::vector<Vec> jacobson_si(const RestrictedLie& L, const Vec& a, const Vec& x);

struct AbelianType {
    std::string label;
    Fq lambda;
    Mat R;  // x_i^[p] = sum_j R_ij x_j
    Mat M;  // rho_z(x_i) = sum_j M_ij x_j
    int n() const { return static_cast<int>(R.size()); }
};

// rho_z applied to a vector of h
Vec rho_apply(const AbelianType& T, const Vec& v);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// conditions (i)-(iv) of an algebraic representation of k z on h
std::vector<Check> check_algebraic_rep(const AbelianType& T);
bool is_algebraic_rep(const AbelianType& T);

RestrictedLie semiproduct(const AbelianType& T);

// antisymmetry, Jacobi, and the three restricted axioms on basis and random pairs
std::vector<Check> check_restricted_axioms(const RestrictedLie& L, std::mt19937_64& rng, int samples);

// true iff the p-map has no nonzero kernel element (abelian L)
bool torus_check(const RestrictedLie& L);

}  // namespace pgw
