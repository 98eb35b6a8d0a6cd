#pragma once
// The p^3-dimensional connected Hopf algebras of the A, B, C and T tables,
// built from their relations on generators x < y < z.

#include <optional>
#include <string>
#include <vector>

#include "pgw/hopf.hpp"
#include "pgw/orbits.hpp"
#include "pgw/pd.hpp"
#include "pgw/present.hpp"

namespace pgw {

HopfAlgebra build_A(int i);              // A1..A4
HopfAlgebra build_A_lambda(Fq lambda);   // A(lambda)
HopfAlgebra build_B(int i);              // B1..B3
HopfAlgebra build_C(int i);              // C1..C15
HopfAlgebra build_C_lambda_delta(Fq lambda, Fq delta);  // needs lambda^{p-1} = delta = +-1
// T-table row: x_i^p by the restriction, z^p = lambda z - Theta, [z, x_i] = rho(x_i), psi(z) = chi
HopfAlgebra build_T_row(const TypeContext& ctx, const PDDatum& D);

// sum_{i=1}^{p-1} (-1)^{i-1} (p-i)^{-1} x^i, as coefficients of x^1..x^{p-1}
std::vector<Fq> b2_f_coeffs();

struct ListedFlags {
    bool commutative = false, semisimple = false, local = false;
};

struct AppendixRow {
    std::string table;  // "A", "B", "C", "T"
    std::string name;   // "A1", "A(lambda)", "T5 (xi,0,1)"
    std::string param;  // parameter value, empty for single rows
    std::optional<ListedFlags> flags;  // listed for A, B, C
    size_t prim_dim = 0;               // dim P(H)
    bool uP_commutative = true;
    HopfAlgebra H;
};

// Eight deterministic parameters: 0 (unless nonzero), 1, and powers of the
// field generator (a non-square), distinct in the current field.
std::vector<Fq> sample_params(bool nonzero);

// All rows at the current field: A1..A4, A(lambda) sampled, B1..B3,
// C1..C15, C(lambda, delta) for every admissible lambda, and the T rows of
// every representative with families sampled.
std::vector<AppendixRow> build_appendix_tables();
std::vector<AppendixRow> build_T_rows();

struct BuiltT {
    std::string name;
    std::string param;
    TypeEntry entry;
    Point point;
    PDDatum datum;
};
// representative data for every T row (families sampled), in table order
std::vector<BuiltT> t_row_data();

// Algebra row by id: "A1".."A4", "B1".."B3", "C1".."C15"
std::optional<HopfAlgebra> build_named_row(const std::string& id);

// dimension of the subalgebra generated by P(H), and whether it is commutative
struct PrimBucket {
    size_t dim_prim = 0;
    size_t dim_uP = 0;
    bool uP_commutative = true;
};
PrimBucket prim_bucket(const HopfAlgebra& H);

}  // namespace pgw
