#include "doctest.h"
#include "pgw/linalg.hpp"

#include <random>

using namespace pgw;

TEST_CASE("echelon rank, solve and relations") {
    auto F = Field::create(5, 2);
    FieldScope scope(F);
    std::mt19937_64 rng(2);
    for (int s = 0; s < 20; ++s) {
        std::vector<std::vector<Fq>> base(3, std::vector<Fq>(6));
        for (auto& v : base)
            for (auto& c : v) c = random_fq(rng);
        // fourth and fifth vectors are combinations of the first three
        Fq a = random_fq(rng), b = random_fq(rng);
        std::vector<Fq> v4(6), v5(6);
        for (int i = 0; i < 6; ++i) {
            v4[i] = a * base[0][i] + b * base[2][i];
            v5[i] = base[1][i] - base[0][i];
        }
        std::vector<SparseVec> cols;
        for (auto& v : base) cols.push_back(sv_from_dense(v));
        cols.push_back(sv_from_dense(v4));
        cols.push_back(sv_from_dense(v5));
        CHECK(rank_of(cols) == 3);
        auto ker = kernel_of(cols);
        CHECK(ker.size() == 2);
        for (const auto& k : ker) {
            SparseVec acc;
            for (const auto& [i, c] : k) acc = sv_axpy(acc, c, cols[i]);
            CHECK(acc.empty());
        }
        Echelon e(true);
        for (auto& c : cols) e.insert(c);
        auto sol = e.solve(cols[3]);
        REQUIRE(sol);
        SparseVec acc;
        for (const auto& [i, c] : *sol) acc = sv_axpy(acc, c, cols[i]);
        CHECK(acc == cols[3]);
    }
}

TEST_CASE("F_p-linear map of an Artin-Schreier operator") {
    auto F = Field::create(3, 4);
    FieldScope scope(F);
    // x -> x^3 - x on GF(81): kernel F_3, image of F_3-dimension 3
    FpLinearMap f(1, 1, [](const std::vector<Fq>& v) { return std::vector<Fq>{frobenius(v[0]) - v[0]}; });
    CHECK(f.kernel_dim() == 1);
    CHECK(f.image_dim() == 3);
    std::mt19937_64 rng(4);
    for (int s = 0; s < 20; ++s) {
        Fq x = random_fq(rng);
        Fq w = frobenius(x) - x;
        auto sol = f.solve({w});
        REQUIRE(sol);
        CHECK(frobenius((*sol)[0]) - (*sol)[0] == w);
    }
    CHECK(f.image_span_dim() == 1);
}
