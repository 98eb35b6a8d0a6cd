#include "pgw/cobar.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgw {

namespace {

Fq factorial(int n) {
    Fq f = Fq::one();
    for (int k = 2; k <= n; ++k) f *= Fq::of(k);
    return f;
}

// componentwise p-th power of a tensor in the commutative algebra u(h)^{(x)d}
Tensor tensor_frobenius(const HAlgebra& h, const Tensor& t) {
    Tensor out(t.deg, t.base);
    for (const auto& [k, c] : t.c) {
        std::vector<Elem> factors;
        for (Mono m : t.slots(k)) factors.push_back(h.power(Elem::mono(m), h.p()));
        out += frobenius(c) * pure_tensor(factors, t.base);
    }
    return out;
}

Elem elem_frobenius(const HAlgebra& h, const Elem& s) {
    Elem out;
    for (const auto& [m, c] : s.c) out += frobenius(c) * h.power(Elem::mono(m), h.p());
    return out;
}

void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= total; ++k) {
        cur.push_back(k);
        compositions(parts, total - k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Cobar::Cobar(std::shared_ptr<const HAlgebra> h) : h_(std::move(h)) {
    const Mono dim = h_->dim();
    for (Mono m = 1; m < dim; ++m) {
        SparseVec col = to_sparse(d1(Elem::mono(m)));
        d1_.insert(col);
        classes_.insert(col);
    }
    const int n = h_->n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) reps_.push_back(pure_tensor({h_->gen(i), h_->gen(j)}, dim));
    for (int k = 0; k < n; ++k) reps_.push_back(omega(*h_, h_->gen(k)));
    for (const auto& r : reps_) classes_.insert(to_sparse(r));
}

SparseVec Cobar::to_sparse(const Tensor& t) { return sv_from_map(t.c); }

Tensor Cobar::tensor_of(const SparseVec& v, int deg) const {
    Tensor t(deg, h_->dim());
    for (const auto& [k, c] : v) t.add_term(k, c);
    return t;
}

Tensor Cobar::d1(const Elem& r) const {
    if (!r.coeff(0).is_zero()) throw std::invalid_argument("d1: element has a constant term");
    const Mono dim = h_->dim();
    Tensor t(2, dim);
    for (const auto& [m, c] : r.c) {
        t.add_term(0 * dim + m, c);
        t.add_term(static_cast<uint64_t>(m) * dim + 0, c);
    }
    t -= h_->coproduct(r);
    return t;
}

Tensor Cobar::d2(const Tensor& t) const {
    if (t.deg != 2) throw std::invalid_argument("d2 expects a degree-2 tensor");
    const Mono dim = h_->dim();
    Tensor out(3, dim);
    for (const auto& [k, c] : t.c) {
        Mono r = static_cast<Mono>(k / dim), s = static_cast<Mono>(k % dim);
        out.add_term(out.key({0, r, s}), c);
        out.add_term(out.key({r, s, 0}), -c);
        for (const auto& [kk, v] : h_->coproduct(Elem::mono(r)).c)
            out.add_term(kk * dim + s, -c * v);
        for (const auto& [kk, v] : h_->coproduct(Elem::mono(s)).c)
            out.add_term(static_cast<uint64_t>(r) * dim * dim + kk, c * v);
    }
    return out;
}

std::optional<Elem> Cobar::coboundary_witness(const Tensor& t) const {
    if (t.is_zero()) return Elem{};
    auto sol = d1_.solve(to_sparse(t));
    if (!sol) return std::nullopt;
    Elem s;
    for (const auto& [idx, c] : *sol) s.add_term(static_cast<Mono>(idx + 1), c);
    return s;
}

bool Cobar::is_coboundary(const Tensor& t) const { return d1_.contains(to_sparse(t)); }

CohomologyDims Cobar::cohomology() const {
    CohomologyDims out;
    const Mono dim = h_->dim();
    out.rank_d1 = d1_.rank();
    Echelon e2;
    for (Mono a = 1; a < dim; ++a)
        for (Mono b = 1; b < dim; ++b) {
            Tensor t(2, dim);
            t.add_term(static_cast<uint64_t>(a) * dim + b, Fq::one());
            e2.insert(to_sparse(d2(t)));
        }
    out.rank_d2 = e2.rank();
    size_t n1 = dim - 1;
    out.dim_h1 = n1 - out.rank_d1;
    out.dim_h2 = n1 * n1 - out.rank_d2 - out.rank_d1;
    out.reps_are_cocycles = true;
    for (const auto& r : reps_)
        if (!d2(r).is_zero()) out.reps_are_cocycles = false;
    out.reps_rank = classes_.rank() - d1_.rank();
    return out;
}

Tensor Cobar::chi(const Coords& P) const {
    const int n = h_->n();
    const size_t na = static_cast<size_t>(n * (n - 1) / 2);
    if (P.size() != na + static_cast<size_t>(n)) throw std::invalid_argument("chi: wrong number of coordinates");
    Tensor t(2, h_->dim());
    for (size_t r = 0; r < na; ++r) t += P[r] * reps_[r];
    Vec b(P.begin() + static_cast<long>(na), P.end());
    t += omega(*h_, h_->from_vec(b));
    return t;
}

Coords Cobar::class_coords(const Tensor& t, Elem* witness) const {
    if (!d2(t).is_zero()) throw std::invalid_argument("class_coords: not a 2-cocycle");
    auto sol = classes_.solve(to_sparse(t));
    if (!sol) throw std::logic_error("class_coords: cocycle outside the span of the class representatives");
    const size_t nd = h_->dim() - 1;
    const int n = h_->n();
    const size_t na = static_cast<size_t>(n * (n - 1) / 2);
    Coords P(na + static_cast<size_t>(n));
    for (const auto& [idx, c] : *sol)
        if (idx >= nd) P[idx - nd] = c;
    for (size_t k = na; k < P.size(); ++k) P[k] = inv_frobenius(P[k]);
    if (witness) {
        auto w = coboundary_witness(t - chi(P));
        if (!w) throw std::logic_error("class_coords: residual is not a coboundary");
        *witness = *w;
    }
    return P;
}

Elem phi_z(const AbelianType& T, const HAlgebra& h, const Elem& s) {
    Elem out = elem_frobenius(h, s);
    out -= T.lambda * s;
    Elem r = s;
    for (int k = 0; k < h.p() - 1; ++k) r = h.rho(T.M, r);
    return out + r;
}

Tensor phi_z(const AbelianType& T, const HAlgebra& h, const Tensor& t) {
    Tensor out = tensor_frobenius(h, t);
    out -= T.lambda * t;
    Tensor r = t;
    for (int k = 0; k < h.p() - 1; ++k) r = h.rho(T.M, r);
    return out + r;
}

Elem random_plus(const HAlgebra& h, std::mt19937_64& rng, int terms) {
    std::uniform_int_distribution<Mono> pick(1, h.dim() - 1);
    Elem e;
    for (int i = 0; i < terms; ++i) e.add_term(pick(rng), random_fq(rng));
    return e;
}

Elem random_linear(const HAlgebra& h, std::mt19937_64& rng) {
    Vec v(static_cast<size_t>(h.n()));
    for (auto& c : v) c = random_fq(rng);
    return h.from_vec(v);
}

Tensor random_plus2(const HAlgebra& h, std::mt19937_64& rng, int terms) {
    std::uniform_int_distribution<Mono> pick(1, h.dim() - 1);
    Tensor t(2, h.dim());
    for (int i = 0; i < terms; ++i) t.add_term(static_cast<uint64_t>(pick(rng)) * h.dim() + pick(rng), random_fq(rng));
    return t;
}

std::vector<IdentityReport> verify_cobar_identities(const AbelianType& T, const Cobar& C, std::mt19937_64& rng,
                                                    int samples) {
    const HAlgebra& h = C.h();
    const int p = h.p();
    std::vector<IdentityReport> out;
    auto record = [&](const std::string& name) -> IdentityReport& {
        for (auto& r : out)
            if (r.name == name) return r;
        out.push_back({name, 0, 0});
        return out.back();
    };
    auto tally = [&](const std::string& name, bool ok) {
        IdentityReport& r = record(name);
        ++r.checked;
        if (!ok) ++r.failed;
    };
    auto rho_pow = [&](const Elem& r, int k) {
        Elem v = r;
        for (int i = 0; i < k; ++i) v = h.rho(T.M, v);
        return v;
    };

    std::vector<std::vector<std::vector<int>>> comps(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
        std::vector<int> cur;
        compositions(p, i, cur, comps[static_cast<size_t>(i)]);
    }

    for (int s = 0; s < samples; ++s) {
        Elem a = random_plus(h, rng);
        Tensor t = random_plus2(h, rng);
        tally("rho_commutes_d1", h.rho(T.M, C.d1(a)) == C.d1(h.rho(T.M, a)));
        tally("rho_commutes_d2", h.rho(T.M, C.d2(t)) == C.d2(h.rho(T.M, t)));
        tally("phi_commutes_d1", phi_z(T, h, C.d1(a)) == C.d1(phi_z(T, h, a)));
        tally("phi_commutes_d2", phi_z(T, h, C.d2(t)) == C.d2(phi_z(T, h, t)));
        tally("rho_after_phi_zero", h.rho(T.M, phi_z(T, h, a)).is_zero());
        tally("d2_after_d1_zero", C.d2(C.d1(a)).is_zero());

        Elem r = random_linear(h, rng);
        Elem r2 = random_linear(h, rng);
        Tensor w = omega(h, r);
        Tensor lhs = w;
        for (int i = 0; i <= std::min(2, p - 1); ++i) {
            lhs = h.rho(T.M, lhs);
            Elem sum;
            for (const auto& c : comps[static_cast<size_t>(i)]) {
                Fq coef = factorial(i);
                Elem prod = Elem::scalar(Fq::one());
                for (int k = 0; k < p; ++k) {
                    coef = coef / factorial(c[static_cast<size_t>(k)]);
                    prod = h.mul(prod, rho_pow(r, c[static_cast<size_t>(k)] + (k == p - 1 ? 1 : 0)));
                }
                sum += coef * prod;
            }
            tally("rho_power_omega_i" + std::to_string(i), lhs == C.d1((-Fq::one()) * sum));
        }

        Fq alpha = random_fq(rng);
        tally("omega_semilinear", omega(h, alpha * r) == frobenius(alpha) * w);
        tally("omega_additivity_defect",
              w + omega(h, r2) - omega(h, r + r2) == C.d1(omega_defect_primitive(h, r, r2)));

        Elem rp = h.power(r, p) - inv_frobenius(T.lambda) * r;
        tally("phi_omega_class", C.is_coboundary(phi_z(T, h, w) - omega(h, rp)));

        const int n = h.n();
        const size_t na = static_cast<size_t>(n * (n - 1) / 2);
        Coords P(na + static_cast<size_t>(n));
        for (size_t k = 0; k < na; ++k) P[k] = random_fq(rng);
        Coords Q = C.class_coords(phi_z(T, h, C.chi(P)));
        bool zero_b = true;
        for (size_t k = na; k < Q.size(); ++k) zero_b = zero_b && Q[k].is_zero();
        tally("phi_preserves_wedge", zero_b);

        Coords B(na + static_cast<size_t>(n));
        for (size_t k = na; k < B.size(); ++k) B[k] = random_fq(rng);
        Coords QB = C.class_coords(phi_z(T, h, C.chi(B)));
        bool zero_a = true;
        for (size_t k = 0; k < na; ++k) zero_a = zero_a && QB[k].is_zero();
        tally("phi_preserves_omega", zero_a);
    }
    return out;
}

}  // namespace pgw
