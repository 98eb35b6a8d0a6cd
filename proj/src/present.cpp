#include "pgw/present.hpp"

#include <stdexcept>

namespace pgw {

PresentedAlgebra::PresentedAlgebra(Presentation pres) : pres_(std::move(pres)), p_(field().p()) {
    const int n = ngens();
    if (static_cast<int>(pres_.pth_power.size()) != n) throw std::invalid_argument("one p-th power rule per generator");
    for (const auto& [ij, c] : pres_.bracket)
        if (ij.first >= ij.second || ij.second >= n) throw std::invalid_argument("brackets are keyed by (i, j) with i < j");
    dim_ = 1;
    for (int i = 0; i < n; ++i) dim_ *= static_cast<Mono>(p_);
    gen_cache_.assign(static_cast<size_t>(dim_) * n, {});
    gen_state_.assign(static_cast<size_t>(dim_) * n, 0);
    table_.assign(static_cast<size_t>(dim_) * dim_, {});
    table_done_.assign(static_cast<size_t>(dim_) * dim_, 0);
}

std::vector<int> PresentedAlgebra::exps(Mono m) const {
    std::vector<int> e(ngens());
    for (int i = 0; i < ngens(); ++i) {
        e[i] = static_cast<int>(m % p_);
        m /= p_;
    }
    return e;
}

Mono PresentedAlgebra::mono(const std::vector<int>& e) const {
    Mono m = 0, s = 1;
    for (int i = 0; i < ngens(); ++i) {
        m += static_cast<Mono>(e[i]) * s;
        s *= static_cast<Mono>(p_);
    }
    return m;
}

Elem PresentedAlgebra::gen(int i) const {
    std::vector<int> e(ngens(), 0);
    e[i] = 1;
    return mono_elem(e);
}

Elem PresentedAlgebra::bracket_of(int i, int j) const {
    if (i == j) return {};
    auto it = pres_.bracket.find({std::min(i, j), std::max(i, j)});
    if (it == pres_.bracket.end()) return {};
    return i < j ? it->second : Fq::of(-1) * it->second;
}

const Elem& PresentedAlgebra::mul_gen(Mono m, int g) const {
    const size_t key = static_cast<size_t>(m) * ngens() + g;
    if (gen_state_[key] == 2) return gen_cache_[key];
    if (gen_state_[key] == 1) throw std::runtime_error("rewriting rules do not terminate");
    gen_state_[key] = 1;
    std::vector<int> e = exps(m);
    int last = -1;
    for (int k = 0; k < ngens(); ++k)
        if (e[k] > 0) last = k;
    Elem out;
    if (last <= g) {
        if (e[g] + 1 < p_) {
            ++e[g];
            out = mono_elem(e);
        } else {
            e[g] = 0;
            out = mul(mono_elem(e), pres_.pth_power[g]);
        }
    } else {
        // w h g = w g h + w [h, g]
        --e[last];
        Mono w = mono(e);
        out = mul_elem_gen(mul_gen(w, g), last) + mul(Elem::mono(w), bracket_of(last, g));
    }
    gen_cache_[key] = std::move(out);
    gen_state_[key] = 2;
    return gen_cache_[key];
}

Elem PresentedAlgebra::mul_elem_gen(const Elem& a, int g) const {
    Elem out;
    for (const auto& [m, c] : a.c) out += c * mul_gen(m, g);
    return out;
}

Elem PresentedAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& [mb, cb] : b.c) {
        Elem cur = a;
        std::vector<int> e = exps(mb);
        for (int g = 0; g < ngens(); ++g)
            for (int k = 0; k < e[g]; ++k) cur = mul_elem_gen(cur, g);
        out += cb * cur;
    }
    return out;
}

const std::vector<std::pair<Mono, Fq>>& PresentedAlgebra::mul_mono(Mono a, Mono b) const {
    const size_t key = static_cast<size_t>(a) * dim_ + b;
    if (!table_done_[key]) {
        Elem r = mul(Elem::mono(a), Elem::mono(b));
        table_[key].assign(r.c.begin(), r.c.end());
        table_done_[key] = 1;
    }
    return table_[key];
}

Elem PresentedAlgebra::power(const Elem& a, int k) const {
    Elem out = Elem::scalar(Fq::one());
    for (int i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

Tensor PresentedAlgebra::tensor_mul(const Tensor& a, const Tensor& b) const {
    Tensor out(2, dim_);
    for (const auto& [ka, ca] : a.c)
        for (const auto& [kb, cb] : b.c) {
            const auto& l = mul_mono(static_cast<Mono>(ka / dim_), static_cast<Mono>(kb / dim_));
            const auto& r = mul_mono(static_cast<Mono>(ka % dim_), static_cast<Mono>(kb % dim_));
            for (const auto& [x, cx] : l)
                for (const auto& [y, cy] : r) out.add_term(static_cast<uint64_t>(x) * dim_ + y, ca * cb * cx * cy);
        }
    return out;
}

Tensor PresentedAlgebra::primitive_part(const Elem& a) const {
    Elem one = Elem::scalar(Fq::one());
    return tensor(a, one) + tensor(one, a);
}

Tensor PresentedAlgebra::omega(const Elem& r) const {
    Tensor t(2, dim_);
    for (int i = 1; i <= p_ - 1; ++i) t += omega_coeff(i) * tensor(power(r, i), power(r, p_ - i));
    return t;
}

HopfAlgebra hopf_from_presentation(const PresentedAlgebra& A, const std::vector<Tensor>& psi) {
    if (static_cast<int>(psi.size()) != A.ngens()) throw std::invalid_argument("one psi per generator");
    PBWData d;
    d.ngens = A.ngens();
    d.names = A.names();
    d.mul_mono = [&A](Mono a, Mono b) -> const std::vector<std::pair<Mono, Fq>>& { return A.mul_mono(a, b); };
    for (int i = 0; i < A.ngens(); ++i) d.gen_coproduct.push_back(A.primitive_part(A.gen(i)) + psi[i]);
    return hopf_from_pbw(d);
}

bool is_semisimple(const HopfAlgebra& H) {
    std::vector<uint32_t> acting = H.generators;
    if (acting.empty())
        for (uint32_t i = 0; i < H.dim; ++i) acting.push_back(i);
    const uint64_t d = H.dim;
    std::vector<SparseVec> cols;
    for (uint32_t i = 0; i < H.dim; ++i) {
        SparseVec col;
        for (size_t k = 0; k < acting.size(); ++k) {
            Terms t = terms_add(H.mul_basis(acting[k], i), H.basis(i), -H.counit[acting[k]]);
            for (const auto& [j, c] : t) col.emplace_back(k * d + j, c);
        }
        cols.push_back(col);
    }
    auto ints = kernel_of(cols);
    if (ints.size() != 1) throw std::logic_error("left integrals should form a line");
    Fq e = Fq::zero();
    for (const auto& [i, c] : ints[0]) e += c * H.counit[i];
    return !e.is_zero();
}

std::vector<Terms> map_from_generators(const HopfAlgebra& H, const HopfAlgebra& K, const std::vector<Terms>& images) {
    if (images.size() != H.generators.size()) throw std::invalid_argument("one image per generator");
    std::vector<Terms> f(H.dim);
    for (uint32_t m = 0; m < H.dim; ++m) {
        Terms cur = K.one();
        uint32_t r = m;
        for (size_t g = 0; g < images.size(); ++g) {
            int e = static_cast<int>(r % H.p);
            r /= H.p;
            for (int k = 0; k < e; ++k) cur = K.mul(cur, images[g]);
        }
        f[m] = cur;
    }
    return f;
}

}  // namespace pgw
