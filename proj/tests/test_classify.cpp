#include "doctest.h"
#include "pgw/appendix.hpp"
#include "pgw/classify.hpp"
#include "pgw/pd.hpp"

#include <deque>
#include <map>
#include <set>

using namespace pgw;

namespace {

uint64_t key(const Mat& M) {
    uint64_t k = 0;
    const uint64_t q = field().order();
    for (const auto& row : M)
        for (Fq a : row) k = k * q + field().code(a);
    return k;
}

Mat mat2(Fq a, Fq b, Fq c, Fq d) { return {{a, b}, {c, d}}; }

// Partition of the F_p-solutions of R M = 0, M^p = lambda M into orbits of
// M -> gamma G^{-1} M G with gamma, G over GF(q), by breadth-first search on generators.
std::map<uint64_t, size_t> orbit_partition(GKind g, HKind h) {
    const int p = field().p();
    const Mat R = restriction_matrix(h);
    const Fq xi = field().primitive(), o = Fq::one(), z = Fq::zero();
    std::vector<Mat> gens;
    for (const Mat& G : {mat2(xi, z, z, o), mat2(o, z, z, xi), mat2(xi, z, z, xi), mat2(o, o, z, o), mat2(o, xi, z, o),
                         mat2(o, z, o, o), mat2(o, z, xi, o)})
        if (mat_mul(G, R) == mat_mul(R, G)) gens.push_back(G);
    const Fq lam = gkind_lambda(g);
    std::vector<Mat> fp_sols;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    Mat M = mat2(Fq::of(a), Fq::of(b), Fq::of(c), Fq::of(d));
                    if (mat_is_zero(mat_mul(R, M)) && mat_pow(M, p) == mat_scale(M, lam)) fp_sols.push_back(M);
                }
    std::map<uint64_t, size_t> orbit_of;  // every reached matrix
    std::map<uint64_t, size_t> out;       // F_p-points only
    size_t next = 0;
    for (const Mat& M0 : fp_sols) {
        if (orbit_of.count(key(M0))) continue;
        const size_t id = next++;
        std::deque<Mat> todo{M0};
        orbit_of[key(M0)] = id;
        while (!todo.empty()) {
            Mat M = todo.front();
            todo.pop_front();
            std::vector<Mat> nbrs{mat_scale(M, xi)};
            for (const Mat& G : gens) nbrs.push_back(mat_mul(mat_mul(inv2(G), M), G));
            for (const Mat& N : nbrs)
                if (orbit_of.emplace(key(N), id).second) todo.push_back(N);
        }
    }
    for (const Mat& M : fp_sols) out[key(M)] = orbit_of.at(key(M));
    return out;
}

}  // namespace

TEST_CASE("catalog classes agree with brute-force orbits over GF(p^2)") {
    for (int p : {3, 5}) {
        FieldScope scope(Field::create(p, 2));
        auto classes = enumerate_rank2_types();
        CHECK(classes.size() == static_cast<size_t>(14 + (p + 3) / 2));
        size_t orbits = 0;
        for (GKind g : {GKind::N, GKind::S})
            for (HKind h : {HKind::A, HKind::B, HKind::C, HKind::D}) {
                auto part = orbit_partition(g, h);
                std::set<size_t> ids;
                for (const auto& [k, id] : part) ids.insert(id);
                orbits += ids.size();
                // two F_p-points share an orbit iff they share the catalog invariant
                std::map<size_t, std::string> inv_of_orbit;
                std::map<std::string, size_t> orbit_of_inv;
                for (const auto& [k, id] : part) {
                    Mat M(2, Vec(2));
                    uint64_t c = k;
                    const uint64_t q = field().order();
                    for (int i = 3; i >= 0; --i) {
                        M[static_cast<size_t>(i / 2)][static_cast<size_t>(i % 2)] = field().from_code(c % q);
                        c /= q;
                    }
                    const std::string inv = type_invariant(g, h, M);
                    INFO("p=" << p << " " << gkind_char(g) << hkind_char(h) << " " << inv);
                    auto [it1, new1] = inv_of_orbit.emplace(id, inv);
                    auto [it2, new2] = orbit_of_inv.emplace(inv, id);
                    CHECK(it1->second == inv);
                    CHECK(it2->second == id);
                }
            }
        CHECK(orbits == classes.size());
    }
}

TEST_CASE("every listed row lands in exactly one catalog class") {
    for (int p : {3, 5}) {
        FieldScope scope(Field::create(p, 1));
        std::map<std::string, int> hits;
        for (const auto& c : enumerate_rank2_types()) {
            CHECK_FALSE(c.labels.empty());
            for (const auto& l : c.labels) hits[l] += 1;
        }
        for (const auto& e : type_table(p)) CHECK(hits[e.label] == 1);
    }
}

TEST_CASE("T(zeta) and T(1/zeta) share a class, T(zeta) and T(zeta') otherwise do not") {
    const int p = 5;
    FieldScope scope(Field::create(p, 1));
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b) {
            auto ea = type_by_label(family_label(a, p), p), eb = type_by_label(family_label(b, p), p);
            const bool same = type_invariant(ea.g, ea.h, ea.M) == type_invariant(eb.g, eb.h, eb.M);
            CHECK(same == (a == b || (a * b) % p == 1));
        }
}

TEST_CASE("empty rows: no nonzero P over GF(p^2) kills the obstruction class") {
    const int p = 3;
    FieldScope scope(Field::create(p, 2));
    const uint64_t q = field().order();
    for (const std::string label : {"T3", "T11", "T13", "T(-1)"}) {
        TypeContext ctx(type_by_label(label, p));
        size_t zero_classes = 0;
        for (uint64_t a = 0; a < q; ++a)
            for (uint64_t b = 0; b < q; ++b)
                for (uint64_t c = 0; c < q; ++c) {
                    if (a == 0 && b == 0 && c == 0) continue;
                    Point P{field().from_code(a), field().from_code(b), field().from_code(c)};
                    Coords k = ctx.cobar().class_coords(ctx.phi(ctx.chi3(P)));
                    bool zero = true;
                    for (Fq x : k) zero = zero && x.is_zero();
                    zero_classes += zero ? 1 : 0;
                }
        INFO(label);
        CHECK(zero_classes == 0);
        auto r = obstruction_rank(ctx.entry());
        CHECK_MESSAGE(r.injective, r.text);
    }
}

TEST_CASE("rows with a kernel point have a non-monomial obstruction determinant") {
    const int p = 3;
    FieldScope scope(Field::create(p, 2));
    for (const std::string label : {"T1", "T2", "T5", "T10"}) {
        auto r = obstruction_rank(type_by_label(label, p));
        INFO(label << ": " << r.text);
        CHECK_FALSE(r.injective);
    }
}

TEST_CASE("orbit field degree") {
    // at p = 3, mu_4 and mu_8 lie in GF(3^2), mu_5 in GF(3^4), mu_7 in GF(3^6)
    CHECK(orbit_field_degree(3, 16) == 12);
    CHECK(orbit_field_degree(5, 16) == 0);
}

TEST_CASE("catalog and emptiness suites pass at p = 3") {
    for (const auto& c : catalog_checks(3)) {
        INFO(c.name << " :: " << c.witness);
        CHECK(c.pass);
    }
    auto e = emptiness_checks(3, 2, 1, 50);
    CHECK(e.size() == 4);
    for (const auto& c : e) {
        INFO(c.name << " :: " << c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("run_check turns exceptions into failures") {
    auto r = run_check("x", Field::create(3, 1), []() -> Outcome { throw std::runtime_error("boom"); });
    CHECK_FALSE(r.pass);
    CHECK(r.witness == "exception: boom");
    CHECK(r.field == "GF(3^1)");
    auto s = run_check("y", Field::create(3, 1), [] { return Outcome{true, "w", "GF(3^4)"}; });
    CHECK(s.pass);
    CHECK(s.field == "GF(3^4)");
}

TEST_CASE("ad of the normalizer of P(H) separates T(zeta) rows up to zeta -> 1/zeta") {
    const int p = 5;
    FieldScope scope(Field::create(p, 2));
    std::map<int, InvariantVector> byz;
    for (int z = 0; z < p - 1; ++z) {
        TypeContext ctx(type_by_label(family_label(z, p), p));
        auto D = aplus_membership(ctx, {Fq::one(), Fq::zero(), Fq::zero()});
        REQUIRE(D);
        byz[z] = invariant_vector(build_T_row(ctx, *D));
        INFO("zeta=" << z << " " << byz[z].to_string());
        CHECK(byz[z].normalizer_action_dim == 1);
        // rho = diag(1, zeta) up to scaling: det/tr^2 = zeta/(1+zeta)^2
        CHECK(byz[z].normalizer_action == to_string(Fq::of(z) * inv(Fq::of((1 + z) * (1 + z)))));
    }
    CHECK(byz[2] == byz[3]);
    CHECK_FALSE(byz[1] == byz[2]);
    CHECK_FALSE(byz[0] == byz[1]);
}
