#pragma once
// PD data (Theta, chi) for an abelian type, the deformed enveloping algebras
// u_z(h, Theta, chi), equivalence of data, permissibility over the algebraic
// closure, the sets A+ and B+, automorphisms of a type and their actions.

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pgw/cobar.hpp"
#include "pgw/hopf.hpp"
#include "pgw/types.hpp"

namespace pgw {

// (a, b, c) for x(x)y and omega(b x + c y); five-coordinate points carry
// Theta_P = a x + b y in front: (a, b, c, d, e)
using Point = std::vector<Fq>;

struct PDDatum {
    Elem theta;  // in u(h)^+
    Tensor chi;  // degree 2 over u(h)
};

struct PDCheck {
    bool chi_cocycle = false;
    bool chi_not_coboundary = false;
    bool rho_theta_zero = false;
    bool phi_chi_is_d1_theta = false;
    bool theta_in_plus = false;
    bool pass() const {
        return chi_cocycle && chi_not_coboundary && rho_theta_zero && phi_chi_is_d1_theta && theta_in_plus;
    }
    std::string failures() const;
};

// Context for one type in the current field.
class TypeContext {
public:
    explicit TypeContext(const TypeEntry& e);

    const TypeEntry& entry() const { return e_; }
    const AbelianType& type() const { return T_; }
    const HAlgebra& h() const { return C_.h(); }
    const Cobar& cobar() const { return C_; }
    Elem x() const { return h().gen(0); }
    Elem y() const { return h().gen(1); }

    Elem rho(const Elem& a) const { return h().rho(T_.M, a); }
    Elem phi(const Elem& a) const { return phi_z(T_, h(), a); }
    Tensor phi(const Tensor& t) const { return phi_z(T_, h(), t); }
    Tensor chi3(const Point& P) const;  // P = (a, b, c)
    Tensor chi5(const Point& P) const;  // uses (c, d, e)
    Elem theta5(const Point& P) const;  // a x + b y

    PDCheck verify(const PDDatum& D) const;

private:
    TypeEntry e_;
    AbelianType T_;
    Cobar C_;
};

// Deformed algebra with primitive x_i and Delta(z) = z(x)1 + 1(x)z + chi.
// Throws when rho(Theta) != 0.
HopfAlgebra build_deformation(const TypeContext& ctx, const PDDatum& D);
HopfAlgebra build_u_T(const TypeContext& ctx);
// Delta(z)^p - lambda Delta(z) + Delta(Theta) = 0 in H (x) H
bool z_relation_holds(const TypeContext& ctx, const PDDatum& D);
// P(H) = span(x, y) and x_i^p = sum_j R_ij x_j in H, so x_i -> x_i is an
// isomorphism of restricted Lie algebras h -> P(H)
bool primitives_match_h(const HopfAlgebra& H, int n_h, const Mat& R, std::string* why = nullptr);

struct Equivalence {
    bool equivalent = false;
    Elem s;                 // chi' - chi = d1(s), Theta' - Theta = Phi(s)
    bool needs_closure = false;  // residual only in the closure image of Phi on h
};
// [(Theta, chi)] = [(Theta', chi')]: solves over the current field, then
// decides membership of the residual in the closure image of Phi on h.
Equivalence equiv_pd_data(const TypeContext& ctx, const PDDatum& D1, const PDDatum& D2);

// Permissibility decided over the algebraic closure: the image of Phi on h
// is a closed connected subgroup of ker rho whose dimension is n minus the
// linear growth rate of ker(Phi) over GF(p^j).
struct Permissibility {
    int ker_rho_dim = 0;
    int im_phi_dim = 0;
    bool im_matches_listed = false;
    bool ker_matches_listed = false;
    bool permissible = false;
    std::string field_used;
};
Permissibility permissibility(const TypeEntry& e);

// A+: (a,b,c) with Phi(chi_P) = d1(s), rho(s) = 0 for some s in u(h)^+.
std::optional<PDDatum> aplus_membership(const TypeContext& ctx, const Point& P);
// B+: (a,b,c,d,e) with Phi(chi_P) = d1(Psi), Psi in u(h)_{>=2},
// rho(Psi + Theta_P) = 0; the datum returned is (Psi + Theta_P, chi_P).
std::optional<PDDatum> bplus_membership(const TypeContext& ctx, const Point& P);

struct AutElement {
    Fq gamma;
    Mat G;  // phi(x_i) = sum_j G_ij x_j
};
bool is_aut(const TypeEntry& e, const AutElement& a);
AutElement aut_compose(const AutElement& outer, const AutElement& inner);  // outer after inner
AutElement aut_inverse(const AutElement& a);
AutElement aut_identity();
// textual parametrization of Aut(T)
std::string aut_family(const TypeEntry& e);
// all of Aut(T)(GF(q)); enumerates gamma and G over the current field
std::vector<AutElement> enumerate_aut(const TypeEntry& e);
AutElement random_aut(const TypeEntry& e, std::mt19937_64& rng);

Point act_A3(const AutElement& a, const Point& P);
Point act_A5(const AutElement& a, const Point& P);
// (gamma^p phi(Theta), gamma (phi(x)phi)(chi))
PDDatum transport_datum(const TypeContext& ctx, const AutElement& a, const PDDatum& D);
// x_i -> sum_j G_ij x_j, z -> gamma^{-1} z, as images of PBW basis vectors
std::vector<Terms> deformation_map(const TypeContext& ctx, const AutElement& a, const HopfAlgebra& target);

std::string point_to_string(const Point& P);

}  // namespace pgw
