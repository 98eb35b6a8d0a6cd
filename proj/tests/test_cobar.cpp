#include "doctest.h"
#include "pgw/cobar.hpp"
#include "pgw/types.hpp"

#include <random>

using namespace pgw;

TEST_CASE("d1 examples") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    auto h = std::make_shared<HAlgebra>(mat_zero(2));
    Cobar C(h);
    Elem x = h->gen(0), y = h->gen(1);
    CHECK(C.d1(x).is_zero());
    Tensor xy = pure_tensor({x, y}, h->dim()), yx = pure_tensor({y, x}, h->dim());
    CHECK(C.d1(h->mul(x, y)) == Fq::of(-1) * (xy + yx));
    CHECK(C.d1(h->power(x, 2)) == Fq::of(-2) * pure_tensor({x, x}, h->dim()));
    CHECK_THROWS(C.d1(Elem::scalar(Fq::one())));
    CHECK(C.d2(xy).is_zero());
    CHECK(C.d2(omega(*h, x)).is_zero());
    auto w = C.coboundary_witness(Fq::of(-1) * (xy + yx));
    REQUIRE(w);
    CHECK(C.d1(*w) == Fq::of(-1) * (xy + yx));
    CHECK_FALSE(C.coboundary_witness(xy));
    CHECK(C.coboundary_witness(Tensor(2, h->dim()))->is_zero());
    CHECK(C.is_coboundary(pure_tensor({x, x}, h->dim())));
}

TEST_CASE("cohomology dimensions for every h kind") {
    for (int p : {3, 5}) {
        auto F = Field::create(p, 2);
        FieldScope scope(F);
        for (HKind k : {HKind::A, HKind::B, HKind::C, HKind::D}) {
            Cobar C(std::make_shared<HAlgebra>(restriction_matrix(k)));
            auto d = C.cohomology();
            CHECK(d.dim_h1 == 2);
            CHECK(d.dim_h2 == 3);
            CHECK(d.reps_are_cocycles);
            CHECK(d.reps_rank == 3);
        }
    }
    auto F = Field::create(3, 1);
    FieldScope scope(F);
    Mat one{{Fq::zero()}};
    Cobar C1(std::make_shared<HAlgebra>(one));
    CHECK(C1.cohomology().dim_h2 == 1);
}

TEST_CASE("class coordinates round trip") {
    auto F = Field::create(3, 4);
    FieldScope scope(F);
    std::mt19937_64 rng(9);
    for (HKind k : {HKind::A, HKind::B, HKind::C, HKind::D}) {
        auto h = std::make_shared<HAlgebra>(restriction_matrix(k));
        Cobar C(h);
        for (int s = 0; s < 50; ++s) {
            Coords P{random_fq(rng), random_fq(rng), random_fq(rng)};
            Tensor t = C.chi(P) + C.d1(random_plus(*h, rng));
            Elem w;
            CHECK(C.class_coords(t, &w) == P);
            CHECK(C.chi(P) + C.d1(w) == t);
        }
        Elem x = h->gen(0), y = h->gen(1);
        CHECK(C.class_coords(C.chi({Fq::one(), Fq::zero(), Fq::zero()})) == Coords{Fq::one(), Fq::zero(), Fq::zero()});
        CHECK(C.class_coords(omega(*h, x + y)) == Coords{Fq::zero(), Fq::one(), Fq::one()});
        CHECK_THROWS(C.class_coords(pure_tensor({h->power(x, 2), y}, h->dim())));
    }
}

TEST_CASE("Phi_z examples") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    {
        TypeEntry e = type_by_label("T5", 3);
        auto h = std::make_shared<HAlgebra>(e.type().R);
        Cobar C(h);
        Elem x = h->gen(0), y = h->gen(1);
        CHECK(phi_z(e.type(), *h, omega(*h, y)) == C.d1(h->mul(h->power(x, 2), y)));
        CHECK(phi_z(e.type(), *h, Tensor(2, h->dim())).is_zero());
    }
    {
        TypeEntry e = type_by_label("T(-1)", 3);
        auto h = std::make_shared<HAlgebra>(e.type().R);
        Cobar C(h);
        Tensor xy = pure_tensor({h->gen(0), h->gen(1)}, h->dim());
        CHECK(C.class_coords(phi_z(e.type(), *h, xy)) == Coords{Fq::of(-1), Fq::zero(), Fq::zero()});
    }
    {
        TypeEntry e = type_by_label("T3", 3);
        auto h = std::make_shared<HAlgebra>(e.type().R);
        std::mt19937_64 rng(1);
        for (int s = 0; s < 20; ++s) {
            Elem r = random_linear(*h, rng);
            // h^[p] = 0 for T3, so r^p vanishes in u(h)
            CHECK(h->power(r, 3).is_zero());
            CHECK(phi_z(e.type(), *h, r) == Fq::of(-1) * r);
            CHECK(h->rho(e.M, phi_z(e.type(), *h, r)).is_zero());
        }
    }
}

TEST_CASE("cobar identities on every type") {
    for (int p : {3, 5}) {
        auto F = Field::create(p, 2);
        FieldScope scope(F);
        std::mt19937_64 rng(100 + p);
        for (const auto& e : type_table(p)) {
            Cobar C(std::make_shared<HAlgebra>(e.type().R));
            for (const auto& r : verify_cobar_identities(e.type(), C, rng, p == 3 ? 100 : 10)) {
                INFO(e.label << " " << r.name);
                CHECK(r.failed == 0);
                CHECK(r.checked > 0);
            }
        }
    }
}

TEST_CASE("rho of omega special case on T5") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    TypeEntry e = type_by_label("T5", 3);
    auto h = std::make_shared<HAlgebra>(e.type().R);
    Cobar C(h);
    Elem x = h->gen(0), y = h->gen(1);
    CHECK(h->rho(e.M, omega(*h, y)) == C.d1(Fq::of(-1) * h->mul(h->power(y, 2), x)));
}
