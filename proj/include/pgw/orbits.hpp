#pragma once
// Orbit representatives of Aut(T) on A+ (permissible types, three
// coordinates) and on B+ (nonpermissible types, five coordinates; T9 uses
// the subgroup with G upper-triangular entry zero), normal forms with an
// explicit automorphism, and separating orbit invariants.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pgw/pd.hpp"

namespace pgw {

struct Representative {
    std::string name;     // e.g. "(xi,0,1)"
    Point base;           // coordinates with xi = 0
    int xi_index = -1;    // coordinate carrying the family parameter, -1 for a single point
    bool xi_nonzero = false;
    uint64_t modulus = 1; // xi ~ tau xi exactly for tau in mu_modulus
    std::string modulus_text;

    bool is_family() const { return xi_index >= 0; }
    Point at(Fq xi) const;
};

std::vector<Representative> representatives(const TypeEntry& e);

Point act(const TypeEntry& e, const AutElement& a, const Point& P);
// membership in A+ or B+ as appropriate
std::optional<PDDatum> admissible_datum(const TypeContext& ctx, const Point& P);
// restriction to the group acting on B+(T9)
bool in_acting_group(const TypeEntry& e, const AutElement& a);

struct NormalForm {
    int rep = -1;
    Fq xi;
    Point point;
    AutElement phi;  // act(phi, P) = point
};
// nullopt when a needed root is missing from the current field
std::optional<NormalForm> normal_form(const TypeEntry& e, const Point& P);

// Automorphism carrying rep(xi) to rep(tau xi), when tau is in mu_modulus.
std::optional<AutElement> ratio_aut(const TypeEntry& e, int rep, Fq xi, Fq tau);

// Invariant of the action: equal on an orbit, and distinct on the listed
// representatives (family members differ exactly when xi^modulus differs).
std::string orbit_invariant(const TypeEntry& e, const Point& P);

// Random point of the listed description of A+ or B+ with coordinates in
// the subfield GF(p^k); F_p-constrained coordinates are drawn from F_p.
Point random_admissible_point(const TypeEntry& e, std::mt19937_64& rng, int k);

enum class OrbitVerdict { Same, Different, Undecided };
struct OrbitAnswer {
    OrbitVerdict verdict = OrbitVerdict::Undecided;
    std::optional<AutElement> phi;  // act(phi, P) = Q when Same
    std::string reason;
};
OrbitAnswer orbit_same(const TypeEntry& e, const Point& P, const Point& Q);

}  // namespace pgw
