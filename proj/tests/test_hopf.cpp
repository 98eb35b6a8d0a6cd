#include "doctest.h"
#include "pgw/hopf.hpp"
#include "pgw/pbw.hpp"
#include "pgw/types.hpp"

#include <sstream>

using namespace pgw;

namespace {

// group algebra of Z/n with basis g^0..g^{n-1}
HopfAlgebra cyclic_group_algebra(uint32_t n) {
    HopfAlgebra H;
    H.dim = n;
    H.p = field().p();
    H.m = field().m();
    for (uint32_t i = 0; i < n; ++i) H.labels.push_back("g" + std::to_string(i));
    H.mult.resize(n * n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) H.mult[i * n + j] = {{(i + j) % n, Fq::one()}};
    for (uint32_t i = 0; i < n; ++i) H.comult.push_back({{static_cast<uint64_t>(i) * n + i, Fq::one()}});
    H.unit = 0;
    H.counit.assign(n, Fq::one());
    for (uint32_t i = 0; i < n; ++i) H.antipode.push_back({{(n - i) % n, Fq::one()}});
    H.generators = {1};
    return H;
}

}  // namespace

TEST_CASE("u(h) from PBW data is a Hopf algebra") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    for (HKind k : {HKind::A, HKind::B, HKind::C, HKind::D}) {
        HAlgebra h(restriction_matrix(k));
        HopfAlgebra H = hopf_from_pbw(pbw_of(h));
        CHECK(H.dim == 9);
        auto rep = check_hopf_axioms(H);
        INFO(hkind_char(k) << " " << rep.first_failure);
        CHECK(rep.pass);
        CHECK(check_hopf_axioms(H, true).pass);
        CHECK(is_commutative(H));
        CHECK(is_cocommutative(H));
        CHECK(is_connected(H));
        auto P = primitive_space(H);
        CHECK(P.basis.size() == 2);
        CHECK(P.closed);
        bool torus = k == HKind::D;
        CHECK(is_torus(P) == torus);
        CHECK(is_semisimple_connected(H) == torus);
        CHECK(is_local(H) == (k == HKind::A || k == HKind::C));
    }
}

TEST_CASE("u of a semiproduct") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    for (const char* label : {"T5", "T10", "T(1)", "T14"}) {
        TypeEntry e = type_by_label(label, 3);
        TAlgebra U(e.type());
        std::vector<Tensor> cop;
        for (int i = 0; i <= 2; ++i) cop.push_back(U.coproduct(U.gen(i)));
        HopfAlgebra H = hopf_from_pbw(pbw_of(U, cop));
        CHECK(H.dim == 27);
        auto rep = check_hopf_axioms(H);
        INFO(std::string(label) << " " << rep.first_failure);
        CHECK(rep.pass);
        CHECK(primitive_space(H).basis.size() == 3);
        CHECK(is_cocommutative(H));
        CHECK(is_commutative(H) == mat_is_zero(e.M));
    }
}

TEST_CASE("negative controls") {
    auto F = Field::create(3, 1);
    FieldScope scope(F);
    HAlgebra h(restriction_matrix(HKind::A));
    HopfAlgebra H = hopf_from_pbw(pbw_of(h));
    // break coassociativity of x while keeping the counit axiom
    HopfAlgebra bad = H;
    uint32_t x = 1, y = 3;
    bad.comult[x].push_back({static_cast<uint64_t>(y) * H.dim + y, Fq::one()});
    std::sort(bad.comult[x].begin(), bad.comult[x].end(), [](auto& a, auto& b) { return a.first < b.first; });
    auto rep = check_hopf_axioms(bad);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.first_failure.empty());

    HopfAlgebra bad2 = H;
    bad2.antipode[x] = {{x, Fq::one()}};
    CHECK_FALSE(check_hopf_axioms(bad2).pass);

    HopfAlgebra G = cyclic_group_algebra(3);
    CHECK(check_hopf_axioms(G).pass);
    CHECK_FALSE(is_connected(G));
    CHECK(is_local(G));
    CHECK(primitive_space(G).basis.empty());
    HopfAlgebra G2 = cyclic_group_algebra(2);
    CHECK(check_hopf_axioms(G2).pass);
    CHECK_FALSE(is_local(G2));
}

TEST_CASE("file round trip and isomorphism check") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    TypeEntry e = type_by_label("T5", 3);
    TAlgebra U(e.type());
    std::vector<Tensor> cop;
    for (int i = 0; i <= 2; ++i) cop.push_back(U.coproduct(U.gen(i)));
    HopfAlgebra H = hopf_from_pbw(pbw_of(U, cop));
    std::string s = hopf_to_string(H);
    HopfAlgebra K = hopf_from_string(s);
    CHECK(hopf_to_string(K) == s);
    CHECK(K.dim == H.dim);
    std::vector<Terms> id;
    for (uint32_t i = 0; i < H.dim; ++i) id.push_back(H.basis(i));
    std::string why;
    CHECK(is_hopf_isomorphism(H, K, id, &why));
    // swapping two basis vectors is not an algebra map here
    std::vector<Terms> sw = id;
    std::swap(sw[1], sw[3]);
    CHECK_FALSE(is_hopf_isomorphism(H, K, sw, &why));
    CHECK(invariant_vector(H) == invariant_vector(K));
    CHECK_THROWS(hopf_from_string("3 2 27\nlabels\n"));
}
