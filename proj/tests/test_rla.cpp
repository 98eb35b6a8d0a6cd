#include "doctest.h"
#include "pgw/rla.hpp"
#include "pgw/types.hpp"

#include <random>

using namespace pgw;

TEST_CASE("listed types are algebraic representations") {
    for (int p : {3, 5}) {
        auto F = Field::create(p, 2);
        FieldScope scope(F);
        std::mt19937_64 rng(p);
        for (const auto& e : type_table(p)) {
            INFO(e.label);
            CHECK(is_algebraic_rep(e.type()));
            RestrictedLie L = semiproduct(e.type());
            for (const auto& c : check_restricted_axioms(L, rng, 30)) {
                INFO(c.name);
                CHECK(c.pass);
            }
        }
    }
}

TEST_CASE("rejected representations") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    // B with M = e12 sends x = x^[p] to y while rho_z(x^[p]) must vanish
    AbelianType bad{"bad", Fq::zero(), restriction_matrix(HKind::B), mat_unit(2, 0, 1)};
    CHECK_FALSE(is_algebraic_rep(bad));
    // z^[p] = 0 but M = e11 is not nilpotent
    AbelianType bad2{"bad2", Fq::zero(), mat_zero(2), mat_unit(2, 0, 0)};
    CHECK_FALSE(is_algebraic_rep(bad2));
    CHECK_THROWS(semiproduct(bad));
}

TEST_CASE("semiproduct structure") {
    auto F = Field::create(3, 1);
    FieldScope scope(F);
    RestrictedLie L = semiproduct(type_by_label("T5", 3).type());
    Vec z = L.basis(2), y = L.basis(1), x = L.basis(0);
    CHECK(L.bracket(z, y) == x);
    CHECK(vec_is_zero(L.bracket(z, x)));
    CHECK(pmap(L, x) == x);
    CHECK(vec_is_zero(pmap(L, z)));
}

TEST_CASE("torus check") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    CHECK(torus_check(abelian_lie(restriction_matrix(HKind::D))));
    CHECK_FALSE(torus_check(abelian_lie(restriction_matrix(HKind::A))));
    CHECK_FALSE(torus_check(abelian_lie(restriction_matrix(HKind::B))));
    CHECK_FALSE(torus_check(abelian_lie(restriction_matrix(HKind::C))));
}
