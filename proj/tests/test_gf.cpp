#include "doctest.h"
#include "pgw/gf.hpp"

#include <random>
#include <set>

using namespace pgw;

namespace {

// schoolbook product of residue polynomials reduced by the monic modulus
std::vector<int> naive_mul(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& mod, int p) {
    int m = static_cast<int>(mod.size()) - 1;
    std::vector<int> prod(2 * m, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int d = 2 * m - 1; d >= m; --d) {
        int c = prod[d];
        if (!c) continue;
        for (int k = 0; k <= m; ++k) prod[d - m + k] = ((prod[d - m + k] - c * mod[k]) % p + p) % p;
    }
    prod.resize(m);
    return prod;
}

std::vector<int> padded(std::vector<int> v, int m) {
    v.resize(m, 0);
    return v;
}

}  // namespace

TEST_CASE("field arithmetic agrees with schoolbook residues") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 5}, {5, 2}, {5, 4}, {3, 16}, {7, 3}}) {
        auto F = Field::create(p, m);
        FieldScope scope(F);
        std::mt19937_64 rng(p * 100 + m);
        for (int s = 0; s < 200; ++s) {
            Fq a = random_fq(rng), b = random_fq(rng);
            auto want = naive_mul(padded(F->coeffs(a), m), padded(F->coeffs(b), m), F->modulus(), p);
            CHECK(padded(F->coeffs(a * b), m) == want);
            std::vector<int> sum(m);
            auto ca = padded(F->coeffs(a), m), cb = padded(F->coeffs(b), m);
            for (int i = 0; i < m; ++i) sum[i] = (ca[i] + cb[i]) % p;
            CHECK(padded(F->coeffs(a + b), m) == sum);
            if (!a.is_zero()) CHECK((a * inv(a)).is_one());
            CHECK(parse_scalar(to_string(a)) == a);
            CHECK(inv_frobenius(frobenius(a)) == a);
        }
    }
}

TEST_CASE("primitive element has full order and moduli are irreducible") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 4}, {5, 2}, {3, 12}, {5, 4}}) {
        auto F = Field::create(p, m);
        FieldScope scope(F);
        uint64_t N = F->order() - 1;
        Fq g = F->primitive();
        for (uint64_t r : F->group_order_primes()) CHECK_FALSE(pow(g, N / r).is_one());
        CHECK(pow(g, N).is_one());
        // a reducible modulus would make some nonzero residue a zero divisor; the order check above fails then
        if (F->order() <= 6561) {
            std::set<uint64_t> seen;
            Fq x = Fq::one();
            for (uint64_t k = 0; k < N; ++k) {
                seen.insert(x.v);
                x = x * g;
            }
            CHECK(seen.size() == N);
        }
    }
}

TEST_CASE("GF(9) modulus and printing") {
    auto F = Field::create(3, 2);
    FieldScope scope(F);
    CHECK(F->modulus() == std::vector<int>{1, 0, 1});  // t^2 + 1
    Fq t = F->from_coeffs({0, 1});
    CHECK(to_string(t * t) == "2");
    CHECK(to_string(Fq::zero()) == "0");
    CHECK(to_string(Fq::of(2) * t + Fq::one()) == "2t+1");
}

TEST_CASE("roots of unity and power equations") {
    auto F = Field::create(3, 12);
    FieldScope scope(F);
    for (uint64_t n : {4u, 5u, 7u, 8u, 13u}) CHECK(mu_n(n).size() == n);
    CHECK(mu_n(11).size() == 1);
    std::mt19937_64 rng(7);
    for (int s = 0; s < 50; ++s) {
        Fq c = random_nonzero(rng);
        for (long long n : {2LL, 4LL, -3LL, 7LL}) {
            for (Fq x : solve_power(n, c)) CHECK(pow_signed(x, n) == c);
        }
        Fq y = random_nonzero(rng);
        auto sols = solve_power(8, pow(y, 8));
        CHECK(sols.size() == 8);
    }
    CHECK(solve_power(3, Fq::zero()) == std::vector<Fq>{Fq::zero()});
    CHECK_THROWS(solve_power(-1, Fq::zero()));
}

TEST_CASE("polynomial mode log and subfields") {
    auto F = Field::create(3, 16);
    FieldScope scope(F);
    CHECK_FALSE(F->table_mode());
    std::mt19937_64 rng(3);
    for (int s = 0; s < 20; ++s) {
        Fq a = random_nonzero(rng);
        CHECK(F->exp(F->log(a)) == a);
        Fq b = random_subfield(rng, 2);
        CHECK(pow(b, 9) == b);
    }
    CHECK(in_prime_field(Fq::of(2)));
}
