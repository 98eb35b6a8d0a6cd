#include "doctest.h"
#include "pgw/types.hpp"
#include "pgw/uenv.hpp"

#include <random>

using namespace pgw;

namespace {

Elem random_elem(Mono dim, std::mt19937_64& rng, int terms = 5) {
    std::uniform_int_distribution<Mono> pick(0, dim - 1);
    Elem e;
    for (int i = 0; i < terms; ++i) e.add_term(pick(rng), random_fq(rng));
    return e;
}

}  // namespace

TEST_CASE("u(h) products reduce by the restriction map") {
    for (int p : {3, 5}) {
        auto F = Field::create(p, 2);
        FieldScope scope(F);
        HAlgebra h(restriction_matrix(HKind::C));
        CHECK(h.dim() == static_cast<Mono>(p * p));
        CHECK(h.power(h.gen(0), p) == h.gen(1));
        HAlgebra hb(restriction_matrix(HKind::B));
        CHECK(hb.power(hb.gen(0), p) == hb.gen(0));
        CHECK(hb.coproduct(hb.power(hb.gen(0), p)) == hb.coproduct(hb.gen(0)));
        std::mt19937_64 rng(p);
        for (HKind k : {HKind::A, HKind::B, HKind::C, HKind::D}) {
            HAlgebra hk(restriction_matrix(k));
            for (int s = 0; s < 200; ++s) {
                Elem a = random_elem(hk.dim(), rng), b = random_elem(hk.dim(), rng), c = random_elem(hk.dim(), rng);
                CHECK(hk.mul(hk.mul(a, b), c) == hk.mul(a, hk.mul(b, c)));
                CHECK(hk.mul(a, b) == hk.mul(b, a));
                if (s < 100) CHECK(hk.coproduct(hk.mul(a, b)) == hk.tensor_mul(hk.coproduct(a), hk.coproduct(b)));
            }
        }
    }
}

TEST_CASE("coproduct of x^2 and omega at p=3") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    HAlgebra h(mat_zero(2));
    Elem x = h.gen(0), x2 = h.power(x, 2);
    Tensor want = pure_tensor({x2, Elem::scalar(Fq::one())}, h.dim()) +
                  Fq::of(2) * pure_tensor({x, x}, h.dim()) + pure_tensor({Elem::scalar(Fq::one()), x2}, h.dim());
    CHECK(h.coproduct(x2) == want);
    Tensor w = pure_tensor({x, x2}, h.dim()) + pure_tensor({x2, x}, h.dim());
    CHECK(omega(h, x) == w);
    CHECK(omega(h, Elem{}).is_zero());
    CHECK_THROWS(omega(h, x2));
}

TEST_CASE("rho extends as a derivation") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    TypeEntry T5 = type_by_label("T5", 3);
    HAlgebra h(T5.type().R);
    Elem y = h.gen(1), x = h.gen(0);
    CHECK(h.rho(T5.M, h.power(y, 2)) == Fq::of(2) * h.mul(x, y));
    CHECK(h.rho(T5.M, x).is_zero());
    std::mt19937_64 rng(11);
    for (int s = 0; s < 50; ++s) {
        Elem a = random_elem(h.dim(), rng), b = random_elem(h.dim(), rng);
        Tensor t = pure_tensor({a, b}, h.dim());
        CHECK(h.rho(T5.M, t) == pure_tensor({h.rho(T5.M, a), b}, h.dim()) + pure_tensor({a, h.rho(T5.M, b)}, h.dim()));
    }
}

TEST_CASE("decompose_plus and text round trip") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    HAlgebra h(restriction_matrix(HKind::B));
    Elem x = h.gen(0), y = h.gen(1);
    auto s = decompose_plus(h, x + h.mul(x, y));
    CHECK(s.linear == x);
    CHECK(s.tail == h.mul(x, y));
    Elem theta = h.mul(h.power(x, 2), y) - y;
    auto s2 = decompose_plus(h, theta);
    CHECK(s2.linear == Fq::of(-1) * y);
    CHECK_THROWS(decompose_plus(h, Elem::scalar(Fq::one())));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        Elem a = random_elem(h.dim(), rng);
        CHECK(elem_from_string(elem_to_string(a, h.names(), 3), h.names(), 3) == a);
        Tensor t = pure_tensor({a, random_elem(h.dim(), rng)}, h.dim());
        CHECK(tensor_from_string(tensor_to_string(t, h.names(), 3), h.names(), 3, 2) == t);
    }
}

TEST_CASE("u(T) relations and associativity") {
    for (int p : {3, 5}) {
        auto F = Field::create(p, 2);
        FieldScope scope(F);
        std::mt19937_64 rng(p + 40);
        for (const auto& e : type_table(p)) {
            TAlgebra U(e.type());
            CHECK(U.dim() == static_cast<Mono>(p * p * p));
            Elem z = U.gen(2);
            for (int i = 0; i < 2; ++i) {
                Elem xi = U.gen(i);
                Elem comm = U.mul(z, xi) - U.mul(xi, z);
                CHECK(comm == U.h().from_vec(e.M[i]));
            }
            CHECK(U.power(z, p) == e.type().lambda * z);
            for (int s = 0; s < (p == 3 ? 60 : 10); ++s) {
                Elem a = random_elem(U.dim(), rng, 3), b = random_elem(U.dim(), rng, 3), c = random_elem(U.dim(), rng, 3);
                CHECK(U.mul(U.mul(a, b), c) == U.mul(a, U.mul(b, c)));
            }
        }
    }
}

TEST_CASE("u(T5) commutator z y - y z = x") {
    auto F = Field::create(3, 1);
    FieldScope scope(F);
    TAlgebra U(type_by_label("T5", 3).type());
    CHECK(U.mul(U.gen(2), U.gen(1)) - U.mul(U.gen(1), U.gen(2)) == U.gen(0));
}
