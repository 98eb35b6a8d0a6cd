#pragma once
// The rank-2 harness: type catalog, type table, orbit tables, PD
// constructions, appendix tables and their cross-checks, each producing
// named pass/fail records.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pgw/appendix.hpp"
#include "pgw/types.hpp"

namespace pgw {

struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string field;    // field the check ran in, e.g. "GF(3^2)"
    std::string witness;  // witness on success, counterexample on failure
    double seconds = 0;
};
using Checks = std::vector<CheckRecord>;

struct Outcome {
    Outcome(bool ok = false, std::string w = {}, std::string f = {})
        : pass(ok), witness(std::move(w)), field(std::move(f)) {}
    bool pass = false;
    std::string witness;
    std::string field;  // overrides the installed field in the record when set
};
// Runs fn with F installed; exceptions become failures carrying the message.
CheckRecord run_check(const std::string& name, const std::shared_ptr<const Field>& F, const std::function<Outcome()>& fn);
// "GF(p^m)"
std::string field_name(const Field& F);

// ---- type catalog

// Orbit invariant of (g, h, M) under M -> gamma G^{-1} M G over the closure:
// ranks of M against the kernel and image of the p-map of h, and for
// z^[p] = z the eigenvalues up to a common F_p^x factor.
std::string type_invariant(GKind g, HKind h, const Mat& M);

struct CatalogClass {
    GKind g;
    HKind h;
    Mat M;              // first member in enumeration order
    size_t members = 0; // F_p-points in the class
    std::string invariant;
    std::vector<std::string> labels;  // matching rows of the type table
};
// Enumerates M over F_p with R M = 0 and M^p = lambda M for each (g, h),
// merged by gamma G^{-1} M G over F_p. Needs the current field to be GF(p^m).
std::vector<CatalogClass> enumerate_rank2_types();

// The map P -> [Phi(chi_P)] in H^2 has F_p coefficients, so it is a 3x3
// matrix over F_p[F] with F the Frobenius. Its kernel over the closure is
// zero exactly when the determinant is c F^e with c != 0.
struct ObstructionRank {
    std::vector<Fq> det;  // coefficients of F^0, F^1, ...
    bool injective = false;
    std::string text;
};
ObstructionRank obstruction_rank(const TypeEntry& e);

// ---- suites; each installs the fields it needs

Checks catalog_checks(int p);
Checks cobar_checks(int p, uint64_t seed, int samples);
// Membership and pairwise checks run in GF(p^m); coverage escalates its
// field by doubling up to m_cap; moduli use the smallest field holding mu_n.
Checks orbit_checks(int p, int m, int m_cap, uint64_t seed, int coverage_points);
// Every row when spot is empty; otherwise the named rows ("T5 (xi,0,1)"),
// families at one generic parameter.
Checks pd_checks(int p, int m, const std::vector<std::string>& spot = {});
// T5 and T10 families, T8, T2 with Psi != 0, T14
std::vector<std::string> pd_spot_rows();
Checks appendix_checks(int p, int m);
Checks emptiness_checks(int p, int m, uint64_t seed, int samples);

// Smallest m such that GF(p^m) holds every root used by the orbit suite, or
// 0 when that exceeds the supported degree.
int orbit_field_degree(int p, int cap);

}  // namespace pgw
