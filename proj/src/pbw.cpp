#include "pgw/pbw.hpp"

#include <stdexcept>

namespace pgw {

namespace {

Terms to_terms(const std::vector<std::pair<Mono, Fq>>& v) {
    Terms t;
    for (const auto& [m, c] : v) t.emplace_back(m, c);
    return terms_normalize(t);
}

}  // namespace

HopfAlgebra hopf_from_pbw(const PBWData& data) {
    const Field& F = field();
    const int p = F.p();
    uint32_t dim = 1;
    for (int i = 0; i < data.ngens; ++i) dim *= static_cast<uint32_t>(p);
    const uint64_t d = dim;
    HopfAlgebra H;
    H.dim = dim;
    H.p = p;
    H.m = F.m();
    H.unit = 0;
    H.mult.resize(d * d);
    for (uint32_t i = 0; i < dim; ++i)
        for (uint32_t j = 0; j < dim; ++j) H.mult[i * d + j] = to_terms(data.mul_mono(i, j));
    for (uint32_t i = 0; i < dim; ++i) H.labels.push_back(mono_to_string(i, data.names, p));
    uint32_t stride = 1;
    for (int g = 0; g < data.ngens; ++g) {
        H.generators.push_back(stride);
        stride *= static_cast<uint32_t>(p);
    }
    H.counit.assign(dim, Fq::zero());
    H.counit[0] = Fq::one();

    auto gen_terms = [&](int g) {
        Terms2 t;
        for (const auto& [k, c] : data.gen_coproduct[g].c) t.emplace_back(k, c);
        return t;
    };
    // the highest generator with a nonzero exponent and the monomial left after removing one factor of it
    auto split_last = [&](uint32_t m, int* g) {
        uint32_t s = 1, last_s = 0;
        int last = -1;
        for (int k = 0; k < data.ngens; ++k) {
            if ((m / s) % p) {
                last = k;
                last_s = s;
            }
            s *= static_cast<uint32_t>(p);
        }
        *g = last;
        return m - last_s;
    };

    H.comult.assign(dim, {});
    H.comult[0] = {{0, Fq::one()}};
    for (uint32_t m = 1; m < dim; ++m) {
        int g;
        uint32_t rest = split_last(m, &g);
        Terms2 dg = gen_terms(g);
        // Delta(rest) * Delta(g)
        std::map<uint64_t, Fq> acc;
        for (const auto& [ka, ca] : H.comult[rest])
            for (const auto& [kb, cb] : dg) {
                const Terms& l = H.mul_basis(static_cast<uint32_t>(ka / d), static_cast<uint32_t>(kb / d));
                const Terms& r = H.mul_basis(static_cast<uint32_t>(ka % d), static_cast<uint32_t>(kb % d));
                for (const auto& [a, cl] : l)
                    for (const auto& [b, cr] : r) acc[static_cast<uint64_t>(a) * d + b] += ca * cb * cl * cr;
            }
        for (const auto& [k, c] : acc)
            if (!c.is_zero()) H.comult[m].emplace_back(k, c);
    }

    H.antipode.assign(dim, {});
    H.antipode[0] = {{0, Fq::one()}};
    std::vector<Terms> gen_s(data.ngens);
    std::vector<char> gen_done(data.ngens, 0);
    for (uint32_t m = 1; m < dim; ++m) {
        int g;
        uint32_t rest = split_last(m, &g);
        if (!gen_done[g]) {
            uint32_t gi = H.generators[g];
            Terms s = {{gi, -Fq::one()}};
            for (const auto& [k, c] : H.comult[gi]) {
                uint32_t a = static_cast<uint32_t>(k / d), b = static_cast<uint32_t>(k % d);
                if ((a == gi && b == 0) || (a == 0 && b == gi)) continue;
                if (a >= gi) throw std::logic_error("antipode recursion needs left coproduct factors below the generator");
                s = terms_add(s, H.mul(H.antipode[a], H.basis(b)), -c);
            }
            gen_s[g] = s;
            gen_done[g] = 1;
            H.antipode[gi] = s;
        }
        if (m != H.generators[g]) H.antipode[m] = H.mul(gen_s[g], H.antipode[rest]);
    }
    return H;
}

PBWData pbw_of(const TAlgebra& U, const std::vector<Tensor>& gen_coproduct) {
    PBWData d;
    d.ngens = U.h().n() + 1;
    d.names = U.names();
    d.mul_mono = [&U](Mono a, Mono b) -> const std::vector<std::pair<Mono, Fq>>& { return U.mul_mono(a, b); };
    d.gen_coproduct = gen_coproduct;
    return d;
}

PBWData pbw_of(const HAlgebra& h) {
    PBWData d;
    d.ngens = h.n();
    d.names = h.names();
    d.mul_mono = [&h](Mono a, Mono b) -> const std::vector<std::pair<Mono, Fq>>& { return h.mul_mono(a, b); };
    for (int i = 0; i < h.n(); ++i) d.gen_coproduct.push_back(h.coproduct(h.gen(i)));
    return d;
}

}  // namespace pgw
