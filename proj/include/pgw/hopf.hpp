#pragma once
// Finite-dimensional Hopf algebras by sparse structure constants: axiom
// checks, primitive space, connected/local/semisimple predicates, and a
// text file format.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pgw/gf.hpp"
#include "pgw/linalg.hpp"

namespace pgw {

using Terms = std::vector<std::pair<uint32_t, Fq>>;     // sparse element
using Terms2 = std::vector<std::pair<uint64_t, Fq>>;    // sparse tensor, key j*dim+k

struct HopfAlgebra {
    uint32_t dim = 0;
    int p = 0, m = 0;
    std::vector<std::string> labels;
    std::vector<Terms> mult;      // index i*dim+j
    std::vector<Terms2> comult;   // index i
    uint32_t unit = 0;
    std::vector<Fq> counit;
    std::vector<Terms> antipode;  // image of basis element i
    std::vector<uint32_t> generators;  // optional: basis indices generating the algebra

    const Terms& mul_basis(uint32_t i, uint32_t j) const { return mult[static_cast<size_t>(i) * dim + j]; }
    Terms mul(const Terms& a, const Terms& b) const;
    Terms power(const Terms& a, int k) const;
    Terms2 comul(const Terms& a) const;
    Terms apply_antipode(const Terms& a) const;
    Fq eps(const Terms& a) const;
    Terms basis(uint32_t i) const { return {{i, Fq::one()}}; }
    Terms one() const { return basis(unit); }
};

// sparse helpers
Terms terms_add(const Terms& a, const Terms& b, Fq scale = Fq::one());
Terms terms_scale(const Terms& a, Fq s);
Terms terms_normalize(std::vector<std::pair<uint32_t, Fq>> raw);

struct AxiomReport {
    bool pass = true;
    std::vector<std::pair<std::string, bool>> items;
    std::string first_failure;
    bool generator_reduced = false;
};

// All axiom families on the full basis, or, with use_generators and a generating
// set whose words span H, the left factor ranging over generators only.
AxiomReport check_hopf_axioms(const HopfAlgebra& H, bool use_generators = false);

struct PrimitiveSpace {
    std::vector<Terms> basis;
    std::vector<std::vector<Fq>> bracket;  // [b_i,b_j] coordinates, index i*n+j
    std::vector<std::vector<Fq>> pmap;     // b_i^p coordinates
    bool closed = true;
};

PrimitiveSpace primitive_space(const HopfAlgebra& H);
bool is_commutative(const HopfAlgebra& H);
bool is_cocommutative(const HopfAlgebra& H);
bool is_local(const HopfAlgebra& H);
bool is_connected(const HopfAlgebra& H);
// requires is_connected(H)
bool is_semisimple_connected(const HopfAlgebra& H);
bool is_torus(const PrimitiveSpace& P);

struct InvariantVector {
    uint32_t dim = 0;
    bool commutative = false, cocommutative = false, local = false, semisimple = false;
    size_t dim_prim = 0;
    size_t pmap_rank = 0;      // dim(P^[p] + [P,P]) - dim [P,P]
    size_t derived_dim = 0;    // dim [P,P]
    size_t central_pkernel = 0;  // dim ker(p-map) on the center of P
    size_t center_dim = 0;       // dim Z(H)
    size_t center_ss_rank = 0;   // rank of z -> z^{p^N} on Z(H), p^N >= dim H
    size_t aug2_dim = 0;         // dim (H^+)^2
    size_t commutator_dim = 0;   // dim span{ab - ba}
    size_t aug_nil_index = 0;    // least k with (H^+)^k = 0, or 0
    // ad(N) on P(H) for N = {w : [w, P(H)] in P(H)}: its dimension, and for a
    // line spanned by A on a plane, det A / tr(A)^2 ("tr0" or "nil" when tr A = 0)
    size_t normalizer_action_dim = 0;
    std::string normalizer_action;
    // dimP, prank, derived, zker, center, zss, aug2, comm_span, nil, ad(N) of the dual H*
    std::vector<size_t> dual;
    bool operator==(const InvariantVector& o) const = default;
    std::string to_string() const;
};

InvariantVector invariant_vector(const HopfAlgebra& H);
// H* on the dual basis; needs the counit to be the coordinate of the unit basis vector
HopfAlgebra dual_hopf(const HopfAlgebra& H);

// Hopf algebra file: "p m dim", labels, mult/comult/unit/counit/antipode blocks
void write_hopf(std::ostream& os, const HopfAlgebra& H);
HopfAlgebra read_hopf(std::istream& is);
std::string hopf_to_string(const HopfAlgebra& H);
HopfAlgebra hopf_from_string(const std::string& s);

// Verifies that a linear map f (images of basis elements) is a Hopf algebra isomorphism H -> K.
bool is_hopf_isomorphism(const HopfAlgebra& H, const HopfAlgebra& K, const std::vector<Terms>& f, std::string* why = nullptr);

}  // namespace pgw
