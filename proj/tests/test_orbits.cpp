#include "doctest.h"
#include "pgw/orbits.hpp"

#include <set>

using namespace pgw;

namespace {

bool has_points(const TypeEntry& e) { return !(e.aplus_empty || e.index == 3 || e.index == 11 || e.index == 13); }

std::vector<Fq> field_elements() {
    std::vector<Fq> v;
    for (uint64_t c = 0; c < field().order(); ++c) v.push_back(field().from_code(c));
    return v;
}

}  // namespace

TEST_CASE("invariants are constant on orbits") {
    FieldScope scope(Field::create(3, 4));
    std::mt19937_64 rng(3);
    for (const auto& e : type_table(3)) {
        if (!has_points(e)) continue;
        TypeContext T(e);
        for (int s = 0; s < 60; ++s) {
            Point P = random_admissible_point(e, rng, 4);
            AutElement a = random_aut(e, rng);
            if (e.index == 9) a.G[0][1] = Fq::zero();
            REQUIRE(in_acting_group(e, a));
            Point Q = act(e, a, P);
            INFO(e.label << " " << point_to_string(P) << " -> " << point_to_string(Q));
            CHECK(orbit_invariant(e, P) == orbit_invariant(e, Q));
            CHECK(admissible_datum(T, P).has_value());
            CHECK(admissible_datum(T, Q).has_value());
        }
    }
}

TEST_CASE("listed representatives have distinct invariants") {
    FieldScope scope(Field::create(3, 12));
    std::mt19937_64 rng(4);
    for (const auto& e : type_table(3)) {
        auto reps = representatives(e);
        std::set<std::string> seen;
        for (const auto& r : reps) {
            if (r.is_family()) continue;
            CHECK(seen.insert(orbit_invariant(e, r.base)).second);
        }
        for (const auto& r : reps) {
            if (!r.is_family()) continue;
            for (int s = 0; s < 5; ++s) {
                Fq xi = random_nonzero(rng);
                INFO(e.label << " " << r.name);
                CHECK(seen.count(orbit_invariant(e, r.at(xi))) == 0);
            }
        }
    }
}

TEST_CASE("normal forms of random admissible points") {
    FieldScope scope(Field::create(3, 16));
    std::mt19937_64 rng(5);
    for (const auto& e : type_table(3)) {
        if (!has_points(e)) continue;
        for (int s = 0; s < 40; ++s) {
            Point P = random_admissible_point(e, rng, 2);
            auto nf = normal_form(e, P);
            INFO(e.label << " " << point_to_string(P));
            REQUIRE(nf);
            CHECK(in_acting_group(e, nf->phi));
            CHECK(act(e, nf->phi, P) == nf->point);
            CHECK(orbit_invariant(e, P) == orbit_invariant(e, nf->point));
        }
    }
}

TEST_CASE("family moduli") {
    FieldScope scope(Field::create(3, 12));
    std::mt19937_64 rng(6);
    for (const auto& e : type_table(3)) {
        auto reps = representatives(e);
        for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
            const auto& r = reps[i];
            if (!r.is_family()) continue;
            Fq xi = random_nonzero(rng);
            auto mu = mu_n(r.modulus);
            CHECK(mu.size() == r.modulus);
            for (Fq tau : mu) {
                auto phi = ratio_aut(e, i, xi, tau);
                INFO(e.label << " " << r.name << " tau=" << to_string(tau));
                REQUIRE(phi);
                auto ans = orbit_same(e, r.at(xi), r.at(tau * xi));
                CHECK(ans.verdict == OrbitVerdict::Same);
            }
            int negatives = 0;
            while (negatives < 6) {
                Fq tau = random_nonzero(rng);
                if (pow(tau, r.modulus).is_one()) continue;
                ++negatives;
                auto ans = orbit_same(e, r.at(xi), r.at(tau * xi));
                INFO(e.label << " " << r.name << " tau=" << to_string(tau) << " " << ans.reason);
                CHECK(ans.verdict == OrbitVerdict::Different);
                CHECK(orbit_invariant(e, r.at(xi)) != orbit_invariant(e, r.at(tau * xi)));
            }
        }
    }
}

TEST_CASE("orbits over GF(9) by brute force agree with orbit_same") {
    FieldScope scope(Field::create(3, 2));
    std::mt19937_64 rng(7);
    auto elems = field_elements();
    size_t decided = 0, total = 0;
    for (const auto& e : type_table(3)) {
        if (!has_points(e)) continue;
        std::vector<AutElement> group;
        for (const auto& a : enumerate_aut(e))
            if (in_acting_group(e, a)) group.push_back(a);
        // listed representatives, family members at every xi in GF(9)
        std::vector<Point> pts;
        for (const auto& r : representatives(e)) {
            if (!r.is_family()) {
                pts.push_back(r.base);
                continue;
            }
            for (Fq xi : elems)
                if (!(r.xi_nonzero && xi.is_zero())) pts.push_back(r.at(xi));
        }
        // a few random admissible points as well
        for (int s = 0; s < 6; ++s) pts.push_back(random_admissible_point(e, rng, 2));
        for (size_t i = 0; i < pts.size(); ++i) {
            std::set<std::vector<uint64_t>> orbit;
            for (const auto& a : group) {
                std::vector<uint64_t> key;
                for (Fq c : act(e, a, pts[i])) key.push_back(c.v);
                orbit.insert(key);
            }
            for (size_t j = 0; j < pts.size(); ++j) {
                std::vector<uint64_t> key;
                for (Fq c : pts[j]) key.push_back(c.v);
                bool brute = orbit.count(key) > 0;
                auto ans = orbit_same(e, pts[i], pts[j]);
                INFO(e.label << " " << point_to_string(pts[i]) << " vs " << point_to_string(pts[j]) << " " << ans.reason);
                // over GF(9) a Same answer is always realized; Different is certified by invariants
                if (ans.verdict == OrbitVerdict::Same) CHECK(brute);
                if (ans.verdict == OrbitVerdict::Different) CHECK_FALSE(brute);
                if (brute) CHECK(ans.verdict != OrbitVerdict::Different);
                ++total;
                if (ans.verdict != OrbitVerdict::Undecided) ++decided;
            }
        }
    }
    // T12 needs (p+1)-th roots that GF(9) lacks, so some pairs stay undecided there
    CHECK(decided * 10 >= total * 9);
}
