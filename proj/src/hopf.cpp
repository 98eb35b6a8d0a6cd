#include "pgw/hopf.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pgw {

namespace {

// dense accumulator with a touched list
class Acc {
public:
    explicit Acc(size_t n) : v_(n), seen_(n, 0) {}
    void add(uint64_t k, Fq c) {
        if (c.is_zero()) return;
        if (!seen_[k]) {
            seen_[k] = 1;
            touched_.push_back(k);
        }
        v_[k] += c;
    }
    template <class Out>
    Out take() {
        std::sort(touched_.begin(), touched_.end());
        Out out;
        for (uint64_t k : touched_) {
            if (!v_[k].is_zero()) out.emplace_back(static_cast<typename Out::value_type::first_type>(k), v_[k]);
            v_[k] = Fq::zero();
            seen_[k] = 0;
        }
        touched_.clear();
        return out;
    }

private:
    std::vector<Fq> v_;
    std::vector<char> seen_;
    std::vector<uint64_t> touched_;
};

Terms2 tensor_mul(const HopfAlgebra& H, const Terms2& a, const Terms2& b, Acc& acc) {
    const uint64_t d = H.dim;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const Terms& left = H.mul_basis(static_cast<uint32_t>(ka / d), static_cast<uint32_t>(kb / d));
            if (left.empty()) continue;
            const Terms& right = H.mul_basis(static_cast<uint32_t>(ka % d), static_cast<uint32_t>(kb % d));
            Fq c = ca * cb;
            for (const auto& [l, cl] : left)
                for (const auto& [r, cr] : right) acc.add(l * d + r, c * cl * cr);
        }
    return acc.take<Terms2>();
}

std::string describe_triple(const HopfAlgebra& H, const std::string& what, std::vector<uint32_t> idx) {
    std::string s = what + " at (";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ", ";
        s += idx[i] < H.labels.size() ? H.labels[idx[i]] : std::to_string(idx[i]);
    }
    return s + ")";
}

// span of all words in the generators
bool generators_span(const HopfAlgebra& H) {
    if (H.generators.empty()) return false;
    Echelon e;
    std::vector<Terms> frontier{H.one()};
    e.insert({{H.unit, Fq::one()}});
    while (!frontier.empty()) {
        std::vector<Terms> next;
        for (const auto& w : frontier)
            for (uint32_t g : H.generators) {
                Terms v = H.mul(H.basis(g), w);
                SparseVec sv(v.begin(), v.end());
                if (e.insert(sv)) next.push_back(v);
            }
        frontier = std::move(next);
    }
    return e.rank() == H.dim;
}

size_t ideal_nilpotent_steps(const std::vector<SparseVec>& ideal_basis,
                             const std::function<SparseVec(const SparseVec&, const SparseVec&)>& mul, size_t dim,
                             bool* nilpotent) {
    std::vector<SparseVec> cur;
    {
        Echelon e;
        for (const auto& v : ideal_basis)
            if (e.insert(v)) cur.push_back(v);
    }
    size_t steps = 1;
    while (!cur.empty()) {
        Echelon e;
        std::vector<SparseVec> next;
        for (const auto& a : cur)
            for (const auto& b : ideal_basis) {
                SparseVec v = mul(a, b);
                if (!v.empty() && e.insert(v)) next.push_back(v);
            }
        if (next.size() >= cur.size()) {
            *nilpotent = false;
            return steps;
        }
        cur = std::move(next);
        ++steps;
        if (steps > dim + 1) break;
    }
    *nilpotent = cur.empty();
    return steps;
}

size_t rank_of_dense(const std::vector<std::vector<Fq>>& vs) {
    std::vector<SparseVec> sv;
    for (const auto& v : vs) sv.push_back(sv_from_dense(v));
    return rank_of(sv);
}

}  // namespace

Terms terms_normalize(std::vector<std::pair<uint32_t, Fq>> raw) {
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Terms out;
    for (const auto& [k, c] : raw) {
        if (!out.empty() && out.back().first == k)
            out.back().second += c;
        else
            out.emplace_back(k, c);
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    return out;
}

Terms terms_add(const Terms& a, const Terms& b, Fq scale) {
    SparseVec x(a.begin(), a.end()), y(b.begin(), b.end());
    SparseVec r = sv_axpy(x, scale, y);
    Terms out;
    for (const auto& [k, c] : r) out.emplace_back(static_cast<uint32_t>(k), c);
    return out;
}

Terms terms_scale(const Terms& a, Fq s) {
    if (s.is_zero()) return {};
    Terms out = a;
    for (auto& e : out) e.second = e.second * s;
    return out;
}

Terms HopfAlgebra::mul(const Terms& a, const Terms& b) const {
    Acc acc(dim);
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) {
            Fq c = ca * cb;
            for (const auto& [k, ck] : mul_basis(i, j)) acc.add(k, c * ck);
        }
    return acc.take<Terms>();
}

Terms HopfAlgebra::power(const Terms& a, int k) const {
    Terms out = one();
    for (int i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

Terms2 HopfAlgebra::comul(const Terms& a) const {
    Acc acc(static_cast<size_t>(dim) * dim);
    for (const auto& [i, c] : a)
        for (const auto& [k, v] : comult[i]) acc.add(k, c * v);
    return acc.take<Terms2>();
}

Terms HopfAlgebra::apply_antipode(const Terms& a) const {
    Acc acc(dim);
    for (const auto& [i, c] : a)
        for (const auto& [k, v] : antipode[i]) acc.add(k, c * v);
    return acc.take<Terms>();
}

Fq HopfAlgebra::eps(const Terms& a) const {
    Fq s = Fq::zero();
    for (const auto& [i, c] : a) s += c * counit[i];
    return s;
}

AxiomReport check_hopf_axioms(const HopfAlgebra& H, bool use_generators) {
    AxiomReport rep;
    const uint32_t d = H.dim;
    auto fail = [&](const std::string& what) {
        if (rep.first_failure.empty()) rep.first_failure = what;
    };
    if (H.mult.size() != static_cast<size_t>(d) * d || H.comult.size() != d || H.counit.size() != d ||
        H.antipode.size() != d) {
        rep.pass = false;
        rep.first_failure = "structure constant tables have the wrong size";
        return rep;
    }
    std::vector<uint32_t> left;
    if (use_generators && generators_span(H)) {
        left = H.generators;
        rep.generator_reduced = true;
    } else {
        for (uint32_t i = 0; i < d; ++i) left.push_back(i);
    }
    Acc acc(d);
    Acc acc2(static_cast<size_t>(d) * d);
    Acc acc3(static_cast<size_t>(d) * d * d);

    bool unit_ok = true;
    for (uint32_t i = 0; i < d && unit_ok; ++i) {
        if (H.mul_basis(H.unit, i) != H.basis(i) || H.mul_basis(i, H.unit) != H.basis(i)) {
            unit_ok = false;
            fail(describe_triple(H, "unit law", {i}));
        }
    }
    rep.items.push_back({"unit", unit_ok});

    bool assoc = true;
    for (uint32_t i : left) {
        for (uint32_t j = 0; j < d && assoc; ++j) {
            const Terms& ij = H.mul_basis(i, j);
            for (uint32_t k = 0; k < d; ++k) {
                for (const auto& [l, c] : ij)
                    for (const auto& [r, cr] : H.mul_basis(l, k)) acc.add(r, c * cr);
                Terms lhs = acc.take<Terms>();
                for (const auto& [l, c] : H.mul_basis(j, k))
                    for (const auto& [r, cr] : H.mul_basis(i, l)) acc.add(r, c * cr);
                Terms rhs = acc.take<Terms>();
                if (lhs != rhs) {
                    assoc = false;
                    fail(describe_triple(H, "associativity", {i, j, k}));
                    break;
                }
            }
        }
        if (!assoc) break;
    }
    rep.items.push_back({"associativity", assoc});

    bool counit_ok = true;
    for (uint32_t i = 0; i < d && counit_ok; ++i) {
        for (const auto& [k, c] : H.comult[i]) {
            acc.add(k % d, H.counit[k / d] * c);
        }
        Terms l = acc.take<Terms>();
        for (const auto& [k, c] : H.comult[i]) acc.add(k / d, H.counit[k % d] * c);
        Terms r = acc.take<Terms>();
        if (l != H.basis(i) || r != H.basis(i)) {
            counit_ok = false;
            fail(describe_triple(H, "counit law", {i}));
        }
    }
    rep.items.push_back({"counit", counit_ok});

    bool coassoc = true;
    for (uint32_t i = 0; i < d && coassoc; ++i) {
        for (const auto& [k, c] : H.comult[i]) {
            uint64_t a = k / d, b = k % d;
            for (const auto& [kk, cc] : H.comult[a]) acc3.add(kk * d + b, c * cc);
        }
        Terms2 l = acc3.take<Terms2>();
        for (const auto& [k, c] : H.comult[i]) {
            uint64_t a = k / d, b = k % d;
            for (const auto& [kk, cc] : H.comult[b]) acc3.add(a * d * d + kk, c * cc);
        }
        Terms2 r = acc3.take<Terms2>();
        if (l != r) {
            coassoc = false;
            fail(describe_triple(H, "coassociativity", {i}));
        }
    }
    rep.items.push_back({"coassociativity", coassoc});

    bool morph = H.comult[H.unit] == Terms2{{static_cast<uint64_t>(H.unit) * d + H.unit, Fq::one()}};
    if (!morph) fail("coproduct of the unit");
    for (uint32_t i : left) {
        if (!morph) break;
        for (uint32_t j = 0; j < d; ++j) {
            Terms2 l = H.comul(H.mul_basis(i, j));
            Terms2 r = tensor_mul(H, H.comult[i], H.comult[j], acc2);
            if (l != r) {
                morph = false;
                fail(describe_triple(H, "coproduct multiplicativity", {i, j}));
                break;
            }
        }
    }
    rep.items.push_back({"coproduct is an algebra map", morph});

    bool eps_ok = H.counit[H.unit].is_one();
    for (uint32_t i = 0; i < d && eps_ok; ++i)
        for (uint32_t j = 0; j < d; ++j)
            if (H.eps(H.mul_basis(i, j)) != H.counit[i] * H.counit[j]) {
                eps_ok = false;
                fail(describe_triple(H, "counit multiplicativity", {i, j}));
                break;
            }
    rep.items.push_back({"counit is an algebra map", eps_ok});

    bool anti = true;
    for (uint32_t i = 0; i < d && anti; ++i) {
        for (const auto& [k, c] : H.comult[i]) {
            uint32_t a = static_cast<uint32_t>(k / d), b = static_cast<uint32_t>(k % d);
            for (const auto& [s, cs] : H.antipode[a])
                for (const auto& [r, cr] : H.mul_basis(s, b)) acc.add(r, c * cs * cr);
        }
        Terms l = acc.take<Terms>();
        for (const auto& [k, c] : H.comult[i]) {
            uint32_t a = static_cast<uint32_t>(k / d), b = static_cast<uint32_t>(k % d);
            for (const auto& [s, cs] : H.antipode[b])
                for (const auto& [r, cr] : H.mul_basis(a, s)) acc.add(r, c * cs * cr);
        }
        Terms r = acc.take<Terms>();
        Terms want = terms_scale(H.one(), H.counit[i]);
        if (l != want || r != want) {
            anti = false;
            fail(describe_triple(H, "antipode law", {i}));
        }
    }
    rep.items.push_back({"antipode", anti});

    for (const auto& it : rep.items) rep.pass = rep.pass && it.second;
    return rep;
}

PrimitiveSpace primitive_space(const HopfAlgebra& H) {
    const uint64_t d = H.dim;
    std::vector<SparseVec> cols;
    for (uint32_t i = 0; i < H.dim; ++i) {
        SparseVec v(H.comult[i].begin(), H.comult[i].end());
        v = sv_axpy(v, -Fq::one(), SparseVec{{static_cast<uint64_t>(i) * d + H.unit, Fq::one()}});
        v = sv_axpy(v, -Fq::one(), SparseVec{{static_cast<uint64_t>(H.unit) * d + i, Fq::one()}});
        cols.push_back(v);
    }
    PrimitiveSpace P;
    for (const auto& k : kernel_of(cols)) {
        Terms t;
        for (const auto& [i, c] : k) t.emplace_back(static_cast<uint32_t>(i), c);
        P.basis.push_back(t);
    }
    const size_t n = P.basis.size();
    Echelon e(true);
    for (const auto& b : P.basis) e.insert(SparseVec(b.begin(), b.end()));
    auto coords = [&](const Terms& t) {
        std::vector<Fq> out(n);
        auto sol = e.solve(SparseVec(t.begin(), t.end()));
        if (!sol) {
            P.closed = false;
            return out;
        }
        for (const auto& [i, c] : *sol) out[i] = c;
        return out;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            P.bracket.push_back(coords(terms_add(H.mul(P.basis[i], P.basis[j]), H.mul(P.basis[j], P.basis[i]), -Fq::one())));
    for (size_t i = 0; i < n; ++i) P.pmap.push_back(coords(H.power(P.basis[i], H.p)));
    return P;
}

bool is_commutative(const HopfAlgebra& H) {
    for (uint32_t i = 0; i < H.dim; ++i)
        for (uint32_t j = i + 1; j < H.dim; ++j)
            if (H.mul_basis(i, j) != H.mul_basis(j, i)) return false;
    return true;
}

bool is_cocommutative(const HopfAlgebra& H) {
    const uint64_t d = H.dim;
    for (uint32_t i = 0; i < H.dim; ++i) {
        Terms2 flipped;
        for (const auto& [k, c] : H.comult[i]) flipped.emplace_back((k % d) * d + k / d, c);
        std::sort(flipped.begin(), flipped.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (flipped != H.comult[i]) return false;
    }
    return true;
}

namespace {

// number of nonzero powers of the augmentation ideal, 0 when it is not nilpotent
size_t augmentation_nil_index(const HopfAlgebra& H) {
    std::vector<SparseVec> ideal;
    for (uint32_t i = 0; i < H.dim; ++i) {
        if (i == H.unit) continue;
        SparseVec v{{i, Fq::one()}};
        v = sv_axpy(v, -H.counit[i], SparseVec{{H.unit, Fq::one()}});
        ideal.push_back(v);
    }
    bool nil = false;
    size_t steps = ideal_nilpotent_steps(
        ideal,
        [&](const SparseVec& a, const SparseVec& b) {
            Terms r = H.mul(Terms(a.begin(), a.end()), Terms(b.begin(), b.end()));
            return SparseVec(r.begin(), r.end());
        },
        H.dim, &nil);
    return nil ? steps : 0;
}

}  // namespace

bool is_local(const HopfAlgebra& H) { return augmentation_nil_index(H) > 0; }

bool is_connected(const HopfAlgebra& H) {
    // H* with (e^j e^k)(e_i) = coefficient of e_j (x) e_k in Delta(e_i); test nilpotency of {f : f(1) = 0}
    const uint64_t d = H.dim;
    std::vector<Terms> dual_mult(static_cast<size_t>(d) * d);
    for (uint32_t i = 0; i < H.dim; ++i)
        for (const auto& [k, c] : H.comult[i]) dual_mult[k].emplace_back(i, c);
    std::vector<SparseVec> ideal;
    for (uint32_t i = 0; i < H.dim; ++i)
        if (i != H.unit) ideal.push_back({{i, Fq::one()}});
    Acc acc(d);
    bool nil = false;
    ideal_nilpotent_steps(
        ideal,
        [&](const SparseVec& a, const SparseVec& b) {
            for (const auto& [j, cj] : a)
                for (const auto& [k, ck] : b)
                    for (const auto& [i, c] : dual_mult[j * d + k]) acc.add(i, cj * ck * c);
            Terms r = acc.take<Terms>();
            return SparseVec(r.begin(), r.end());
        },
        H.dim, &nil);
    return nil;
}

bool is_torus(const PrimitiveSpace& P) {
    for (const auto& b : P.bracket)
        for (Fq c : b)
            if (!c.is_zero()) return false;
    // the p-map is Frobenius-semilinear on an abelian P, so it is injective iff its basis images are independent
    return rank_of_dense(P.pmap) == P.basis.size();
}

bool is_semisimple_connected(const HopfAlgebra& H) {
    if (!is_connected(H)) throw std::invalid_argument("semisimplicity test needs a connected Hopf algebra");
    return is_torus(primitive_space(H));
}

namespace {

// center, its semisimple rank under iterated p-th powers, dim (H^+)^2 and dim [H,H]
void add_algebra_invariants(const HopfAlgebra& H, InvariantVector& v) {
    const uint64_t d = H.dim;
    std::vector<uint32_t> gens = H.generators;
    if (gens.empty())
        for (uint32_t i = 0; i < H.dim; ++i) gens.push_back(i);
    std::vector<SparseVec> cols;
    for (uint32_t i = 0; i < H.dim; ++i) {
        SparseVec col;
        for (size_t k = 0; k < gens.size(); ++k) {
            Terms c = terms_add(H.mul_basis(i, gens[k]), H.mul_basis(gens[k], i), -Fq::one());
            for (const auto& [j, a] : c) col.emplace_back(k * d + j, a);
        }
        cols.push_back(col);
    }
    auto center = kernel_of(cols);
    v.center_dim = center.size();
    int N = 0;
    for (uint64_t q = 1; q < d; q *= static_cast<uint64_t>(H.p)) ++N;
    Echelon ss;
    for (const auto& z : center) {
        Terms t(z.begin(), z.end());
        for (int k = 0; k < N; ++k) t = H.power(t, H.p);
        ss.insert(SparseVec(t.begin(), t.end()));
    }
    v.center_ss_rank = ss.rank();
    Echelon aug2, comm;
    for (uint32_t i = 0; i < H.dim; ++i) {
        Terms a = terms_add(H.basis(i), H.one(), -H.counit[i]);
        for (uint32_t j = 0; j < H.dim; ++j) {
            Terms b = terms_add(H.basis(j), H.one(), -H.counit[j]);
            Terms ab = H.mul(a, b);
            aug2.insert(SparseVec(ab.begin(), ab.end()));
            if (j > i) {
                Terms c = terms_add(H.mul_basis(i, j), H.mul_basis(j, i), -Fq::one());
                comm.insert(SparseVec(c.begin(), c.end()));
            }
        }
    }
    v.aug2_dim = aug2.rank();
    v.commutator_dim = comm.rank();
    v.aug_nil_index = augmentation_nil_index(H);
}

}  // namespace

namespace {

void add_normalizer_action(const HopfAlgebra& H, const PrimitiveSpace& P, const Echelon& prim, InvariantVector& v) {
    const size_t n = P.basis.size();
    if (n == 0) return;
    const uint64_t d = H.dim;
    auto bracket = [&](const Terms& a, const Terms& b) { return terms_add(H.mul(a, b), H.mul(b, a), -Fq::one()); };
    // w -> ([w, b_j] mod P)_j; its kernel is N
    std::vector<SparseVec> cols;
    for (uint32_t i = 0; i < H.dim; ++i) {
        SparseVec col;
        for (size_t j = 0; j < n; ++j) {
            Terms c = bracket(H.basis(i), P.basis[j]);
            for (const auto& [k, a] : prim.reduce(SparseVec(c.begin(), c.end()))) col.emplace_back(j * d + k, a);
        }
        cols.push_back(col);
    }
    std::vector<std::vector<Fq>> mats;
    for (const auto& w : kernel_of(cols)) {
        Terms wt;
        for (const auto& [i, c] : w) wt = terms_add(wt, H.basis(static_cast<uint32_t>(i)), c);
        std::vector<Fq> A(n * n);
        for (size_t j = 0; j < n; ++j) {
            Terms c = bracket(wt, P.basis[j]);
            auto sol = prim.solve(SparseVec(c.begin(), c.end()));
            if (!sol) throw std::logic_error("normalizer element leaves P(H)");
            for (const auto& [k, a] : *sol) A[j * n + k] = a;
        }
        mats.push_back(A);
    }
    v.normalizer_action_dim = rank_of_dense(mats);
    if (v.normalizer_action_dim != 1 || n != 2) return;
    for (const auto& A : mats) {
        if (std::all_of(A.begin(), A.end(), [](Fq a) { return a.is_zero(); })) continue;
        const Fq tr = A[0] + A[3], det = A[0] * A[3] - A[1] * A[2];
        if (!tr.is_zero()) v.normalizer_action = pgw::to_string(det * inv(tr * tr));
        else v.normalizer_action = det.is_zero() ? "nil" : "tr0";
        return;
    }
}

InvariantVector own_invariants(const HopfAlgebra& H) {
    InvariantVector v;
    v.dim = H.dim;
    v.commutative = is_commutative(H);
    v.cocommutative = is_cocommutative(H);
    v.local = is_local(H);
    PrimitiveSpace P = primitive_space(H);
    v.semisimple = is_connected(H) && is_torus(P);
    const size_t n = P.basis.size();
    v.dim_prim = n;
    v.derived_dim = rank_of_dense(P.bracket);
    std::vector<std::vector<Fq>> withp = P.bracket;
    for (const auto& r : P.pmap) withp.push_back(r);
    v.pmap_rank = rank_of_dense(withp) - v.derived_dim;
    // center: coordinates c with sum_i c_i [b_i, b_j] = 0 for all j
    std::vector<SparseVec> cols;
    for (size_t i = 0; i < n; ++i) {
        std::vector<Fq> col;
        for (size_t j = 0; j < n; ++j)
            for (Fq c : P.bracket[i * n + j]) col.push_back(c);
        cols.push_back(sv_from_dense(col));
    }
    std::vector<std::vector<Fq>> images;
    auto center = kernel_of(cols);
    Echelon e(true);
    for (const auto& b : P.basis) e.insert(SparseVec(b.begin(), b.end()));
    for (const auto& z : center) {
        Terms zt;
        for (const auto& [i, c] : z) zt = terms_add(zt, P.basis[i], c);
        Terms zp = H.power(zt, H.p);
        auto sol = e.solve(SparseVec(zp.begin(), zp.end()));
        std::vector<Fq> row(n);
        if (sol)
            for (const auto& [i, c] : *sol) row[i] = c;
        images.push_back(row);
    }
    v.central_pkernel = center.size() - rank_of_dense(images);
    add_normalizer_action(H, P, e, v);
    add_algebra_invariants(H, v);
    return v;
}

}  // namespace

HopfAlgebra dual_hopf(const HopfAlgebra& H) {
    const uint64_t d = H.dim;
    for (uint32_t i = 0; i < H.dim; ++i)
        if (H.counit[i] != (i == H.unit ? Fq::one() : Fq::zero()))
            throw std::invalid_argument("dual_hopf: counit is not the unit coordinate");
    HopfAlgebra D;
    D.dim = H.dim;
    D.p = H.p;
    D.m = H.m;
    for (const auto& l : H.labels) D.labels.push_back(l + "*");
    std::vector<std::vector<std::pair<uint32_t, Fq>>> mult(d * d);
    for (uint32_t k = 0; k < H.dim; ++k)
        for (const auto& [ij, c] : H.comult[k]) mult[ij].emplace_back(k, c);
    D.mult.resize(d * d);
    for (uint64_t ij = 0; ij < d * d; ++ij) D.mult[ij] = terms_normalize(std::move(mult[ij]));
    D.comult.assign(d, {});
    std::vector<std::map<uint64_t, Fq>> co(d);
    for (uint64_t ij = 0; ij < d * d; ++ij)
        for (const auto& [k, c] : H.mult[ij]) co[k][ij] += c;
    for (uint64_t k = 0; k < d; ++k)
        for (const auto& [ij, c] : co[k])
            if (!c.is_zero()) D.comult[k].emplace_back(ij, c);
    // unit of H* is the counit of H, a coordinate function; counit of H* evaluates at 1
    D.unit = H.unit;
    D.counit.assign(d, Fq::zero());
    D.counit[H.unit] = Fq::one();
    std::vector<std::vector<std::pair<uint32_t, Fq>>> anti(d);
    for (uint32_t i = 0; i < H.dim; ++i)
        for (const auto& [j, c] : H.antipode[i]) anti[j].emplace_back(i, c);
    D.antipode.resize(d);
    for (uint64_t j = 0; j < d; ++j) D.antipode[j] = terms_normalize(std::move(anti[j]));
    return D;
}

InvariantVector invariant_vector(const HopfAlgebra& H) {
    InvariantVector v = own_invariants(H);
    const InvariantVector w = own_invariants(dual_hopf(H));
    v.dual = {w.dim_prim, w.pmap_rank, w.derived_dim, w.central_pkernel, w.center_dim, w.center_ss_rank, w.aug2_dim,
              w.commutator_dim, w.aug_nil_index, w.normalizer_action_dim};
    return v;
}

std::string InvariantVector::to_string() const {
    std::ostringstream os;
    os << "dim=" << dim << " comm=" << commutative << " cocomm=" << cocommutative << " local=" << local
       << " ss=" << semisimple << " dimP=" << dim_prim << " prank=" << pmap_rank << " derived=" << derived_dim
       << " zker=" << central_pkernel << " center=" << center_dim << " zss=" << center_ss_rank << " aug2=" << aug2_dim
       << " comm_span=" << commutator_dim << " nil=" << aug_nil_index << " adN=" << normalizer_action_dim;
    if (!normalizer_action.empty()) os << ":" << normalizer_action;
    os << " dual=";
    for (size_t i = 0; i < dual.size(); ++i) os << (i ? "," : "") << dual[i];
    return os.str();
}

void write_hopf(std::ostream& os, const HopfAlgebra& H) {
    const uint64_t d = H.dim;
    os << H.p << ' ' << H.m << ' ' << H.dim << '\n';
    os << "labels";
    for (const auto& l : H.labels) os << ' ' << l;
    os << '\n';
    size_t nm = 0;
    for (const auto& t : H.mult) nm += t.size();
    os << "mult " << nm << '\n';
    for (uint64_t ij = 0; ij < H.mult.size(); ++ij)
        for (const auto& [k, c] : H.mult[ij]) os << ij / d << ' ' << ij % d << ' ' << k << ' ' << to_string(c) << '\n';
    size_t nc = 0;
    for (const auto& t : H.comult) nc += t.size();
    os << "comult " << nc << '\n';
    for (uint32_t i = 0; i < H.dim; ++i)
        for (const auto& [k, c] : H.comult[i]) os << i << ' ' << k / d << ' ' << k % d << ' ' << to_string(c) << '\n';
    os << "unit " << H.unit << '\n';
    size_t ne = 0;
    for (Fq c : H.counit) ne += !c.is_zero();
    os << "counit " << ne << '\n';
    for (uint32_t i = 0; i < H.dim; ++i)
        if (!H.counit[i].is_zero()) os << i << ' ' << to_string(H.counit[i]) << '\n';
    size_t ns = 0;
    for (const auto& t : H.antipode) ns += t.size();
    os << "antipode " << ns << '\n';
    for (uint32_t i = 0; i < H.dim; ++i)
        for (const auto& [j, c] : H.antipode[i]) os << i << ' ' << j << ' ' << to_string(c) << '\n';
    os << "generators " << H.generators.size();
    for (uint32_t g : H.generators) os << ' ' << g;
    os << '\n';
}

HopfAlgebra read_hopf(std::istream& is) {
    HopfAlgebra H;
    auto expect = [&](const std::string& word) {
        std::string w;
        if (!(is >> w) || w != word) throw std::runtime_error("hopf file: expected '" + word + "'");
    };
    if (!(is >> H.p >> H.m >> H.dim)) throw std::runtime_error("hopf file: bad header");
    auto F = Field::create(H.p, H.m);
    FieldScope scope(F);
    const uint64_t d = H.dim;
    expect("labels");
    H.labels.resize(H.dim);
    for (auto& l : H.labels)
        if (!(is >> l)) throw std::runtime_error("hopf file: missing label");
    H.mult.assign(static_cast<size_t>(d) * d, {});
    H.comult.assign(d, {});
    H.counit.assign(d, Fq::zero());
    H.antipode.assign(d, {});
    auto index = [&](uint64_t v, uint64_t bound) {
        if (v >= bound) throw std::runtime_error("hopf file: index out of range");
        return v;
    };
    size_t n;
    std::string c;
    expect("mult");
    is >> n;
    for (size_t t = 0; t < n; ++t) {
        uint64_t i, j, k;
        if (!(is >> i >> j >> k >> c)) throw std::runtime_error("hopf file: truncated mult block");
        H.mult[index(i, d) * d + index(j, d)].emplace_back(static_cast<uint32_t>(index(k, d)), parse_scalar(c));
    }
    expect("comult");
    is >> n;
    for (size_t t = 0; t < n; ++t) {
        uint64_t i, j, k;
        if (!(is >> i >> j >> k >> c)) throw std::runtime_error("hopf file: truncated comult block");
        H.comult[index(i, d)].emplace_back(index(j, d) * d + index(k, d), parse_scalar(c));
    }
    expect("unit");
    is >> H.unit;
    index(H.unit, d);
    expect("counit");
    is >> n;
    for (size_t t = 0; t < n; ++t) {
        uint64_t i;
        if (!(is >> i >> c)) throw std::runtime_error("hopf file: truncated counit block");
        H.counit[index(i, d)] = parse_scalar(c);
    }
    expect("antipode");
    is >> n;
    for (size_t t = 0; t < n; ++t) {
        uint64_t i, j;
        if (!(is >> i >> j >> c)) throw std::runtime_error("hopf file: truncated antipode block");
        H.antipode[index(i, d)].emplace_back(static_cast<uint32_t>(index(j, d)), parse_scalar(c));
    }
    expect("generators");
    is >> n;
    for (size_t t = 0; t < n; ++t) {
        uint64_t g;
        if (!(is >> g)) throw std::runtime_error("hopf file: truncated generators");
        H.generators.push_back(static_cast<uint32_t>(index(g, d)));
    }
    for (auto& t : H.mult) t = terms_normalize(t);
    for (auto& t : H.antipode) t = terms_normalize(t);
    for (auto& t : H.comult) {
        std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Terms2 out;
        for (const auto& [k, v] : t) {
            if (!out.empty() && out.back().first == k)
                out.back().second += v;
            else
                out.emplace_back(k, v);
            if (out.back().second.is_zero()) out.pop_back();
        }
        t = out;
    }
    return H;
}

std::string hopf_to_string(const HopfAlgebra& H) {
    std::ostringstream os;
    write_hopf(os, H);
    return os.str();
}

HopfAlgebra hopf_from_string(const std::string& s) {
    std::istringstream is(s);
    return read_hopf(is);
}

bool is_hopf_isomorphism(const HopfAlgebra& H, const HopfAlgebra& K, const std::vector<Terms>& f, std::string* why) {
    auto no = [&](const std::string& w) {
        if (why) *why = w;
        return false;
    };
    if (H.dim != K.dim || f.size() != H.dim) return no("dimension mismatch");
    {
        std::vector<SparseVec> cols;
        for (const auto& t : f) cols.push_back(SparseVec(t.begin(), t.end()));
        if (rank_of(cols) != H.dim) return no("map is not bijective");
    }
    if (f[H.unit] != K.one()) return no("unit not preserved");
    auto image = [&](const Terms& a) {
        Terms out;
        for (const auto& [i, c] : a) out = terms_add(out, f[i], c);
        return out;
    };
    for (uint32_t i = 0; i < H.dim; ++i)
        for (uint32_t j = 0; j < H.dim; ++j)
            if (image(H.mul_basis(i, j)) != K.mul(f[i], f[j])) return no(describe_triple(H, "multiplication", {i, j}));
    const uint64_t d = H.dim;
    Acc acc(static_cast<size_t>(d) * d);
    for (uint32_t i = 0; i < H.dim; ++i) {
        // (f (x) f) Delta(e_i)
        for (const auto& [k, c] : H.comult[i])
            for (const auto& [a, ca] : f[k / d])
                for (const auto& [b, cb] : f[k % d]) acc.add(static_cast<uint64_t>(a) * d + b, c * ca * cb);
        Terms2 l = acc.take<Terms2>();
        if (l != K.comul(f[i])) return no(describe_triple(H, "comultiplication", {i}));
        if (K.eps(f[i]) != H.counit[i]) return no(describe_triple(H, "counit", {i}));
    }
    return true;
}

}  // namespace pgw
