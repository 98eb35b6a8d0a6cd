#include "pgw/pd.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "pgw/linalg.hpp"
#include "pgw/pbw.hpp"

namespace pgw {

namespace {

Vec linear_coords(const HAlgebra& h, const Elem& a, bool* nonlinear = nullptr) {
    Vec v(static_cast<size_t>(h.n()));
    bool extra = false;
    for (const auto& [m, c] : a.c) {
        if (h.degree(m) != 1) {
            extra = true;
            continue;
        }
        auto e = h.exps(m);
        for (int i = 0; i < h.n(); ++i)
            if (e[i]) v[i] = c;
    }
    if (nonlinear) *nonlinear = extra;
    return v;
}

Vec phi_on_h(const AbelianType& T, const HAlgebra& h, const Vec& t) {
    return linear_coords(h, phi_z(T, h, h.from_vec(t)));
}

std::vector<Vec> listed_subspace(const std::string& s) {
    Fq o = Fq::one(), z = Fq::zero();
    if (s == "0") return {};
    if (s == "kx") return {{o, z}};
    if (s == "ky") return {{z, o}};
    if (s == "h") return {{o, z}, {z, o}};
    throw std::invalid_argument("unknown subspace " + s);
}

size_t span_rank(const std::vector<Vec>& vs) {
    std::vector<SparseVec> rows;
    for (const auto& v : vs) rows.push_back(sv_from_dense(v));
    return rank_of(rows);
}

// F_p-dimension of ker(Phi on h) over GF(p^j)
size_t phi_kernel_fp_dim(const std::string& label, int p, int j) {
    FieldScope scope(Field::create(p, j));
    TypeEntry e = type_by_label(label, p);
    AbelianType T = e.type();
    HAlgebra h(T.R);
    FpLinearMap L(h.n(), h.n(), [&](const Vec& t) { return phi_on_h(T, h, t); });
    return L.kernel_dim();
}

// dimension over the closure of ker(Phi on h); the F_p-kernel over GF(p^j)
// has dimension c + d j once j is a multiple of the field of definition
int phi_kernel_growth(const std::string& label, int p) {
    static std::map<std::pair<std::string, int>, int> cache;
    auto key = std::make_pair(label, p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    size_t k2 = phi_kernel_fp_dim(label, p, 2), k6 = phi_kernel_fp_dim(label, p, 6);
    if ((k6 - k2) % 4 != 0) throw std::logic_error("kernel of Phi does not grow linearly");
    int d = static_cast<int>((k6 - k2) / 4);
    cache[key] = d;
    return d;
}

Elem apply_g(const HAlgebra& h, const Mat& G, const Elem& a) {
    std::vector<Elem> img;
    for (int i = 0; i < h.n(); ++i) img.push_back(h.from_vec(G[i]));
    Elem out;
    for (const auto& [m, c] : a.c) {
        auto e = h.exps(m);
        Elem cur = Elem::scalar(c);
        for (int i = 0; i < h.n(); ++i)
            if (e[i]) cur = h.mul(cur, h.power(img[i], e[i]));
        out += cur;
    }
    return out;
}

Tensor apply_g(const HAlgebra& h, const Mat& G, const Tensor& t) {
    std::map<Mono, Elem> memo;
    auto img = [&](Mono m) -> const Elem& {
        auto it = memo.find(m);
        if (it == memo.end()) it = memo.emplace(m, apply_g(h, G, Elem::mono(m))).first;
        return it->second;
    };
    Tensor out(t.deg, t.base);
    for (const auto& [k, c] : t.c) {
        std::vector<Elem> f;
        for (Mono m : t.slots(k)) f.push_back(img(m));
        f[0] = c * f[0];
        out += pure_tensor(f, t.base);
    }
    return out;
}

Fq fp_random(std::mt19937_64& rng, bool nonzero) { return random_subfield(rng, 1, nonzero); }

}  // namespace

std::string PDCheck::failures() const {
    std::string s;
    auto add = [&](bool ok, const char* name) {
        if (!ok) s += (s.empty() ? "" : ",") + std::string(name);
    };
    add(theta_in_plus, "theta_in_plus");
    add(chi_cocycle, "chi_cocycle");
    add(chi_not_coboundary, "chi_not_coboundary");
    add(rho_theta_zero, "rho_theta_zero");
    add(phi_chi_is_d1_theta, "phi_chi_is_d1_theta");
    return s;
}

TypeContext::TypeContext(const TypeEntry& e) : e_(e), T_(e.type()), C_(std::make_shared<HAlgebra>(T_.R)) {}

Tensor TypeContext::chi3(const Point& P) const { return C_.chi({P.at(0), P.at(1), P.at(2)}); }
Tensor TypeContext::chi5(const Point& P) const { return C_.chi({P.at(2), P.at(3), P.at(4)}); }
Elem TypeContext::theta5(const Point& P) const { return h().from_vec({P.at(0), P.at(1)}); }

PDCheck TypeContext::verify(const PDDatum& D) const {
    PDCheck r;
    r.theta_in_plus = D.theta.coeff(0).is_zero();
    r.chi_cocycle = C_.d2(D.chi).is_zero() && D.chi.in_augmentation();
    r.chi_not_coboundary = !C_.is_coboundary(D.chi);
    r.rho_theta_zero = rho(D.theta).is_zero();
    r.phi_chi_is_d1_theta = r.theta_in_plus && phi(D.chi) == C_.d1(D.theta);
    return r;
}

HopfAlgebra build_deformation(const TypeContext& ctx, const PDDatum& D) {
    TAlgebra U(ctx.type(), D.theta);
    const int n = U.h().n();
    const uint64_t hd = U.hdim(), dim = U.dim();
    std::vector<Tensor> cop;
    for (int i = 0; i < n; ++i) cop.push_back(U.coproduct(U.gen(i)));
    Tensor dz = U.coproduct(U.gen(n));
    for (const auto& [k, c] : D.chi.c) dz.add_term((k / hd) * dim + (k % hd), c);
    cop.push_back(dz);
    return hopf_from_pbw(pbw_of(U, cop));
}

HopfAlgebra build_u_T(const TypeContext& ctx) { return build_deformation(ctx, PDDatum{{}, Tensor(2, ctx.h().dim())}); }

bool z_relation_holds(const TypeContext& ctx, const PDDatum& D) {
    TAlgebra U(ctx.type(), D.theta);
    const int n = U.h().n();
    const uint64_t hd = U.hdim(), dim = U.dim();
    Tensor dz = U.coproduct(U.gen(n));
    for (const auto& [k, c] : D.chi.c) dz.add_term((k / hd) * dim + (k % hd), c);
    Tensor pw = dz;
    for (int i = 1; i < U.h().p(); ++i) pw = U.tensor_mul(pw, dz);
    Tensor lhs = pw - ctx.type().lambda * dz + U.coproduct(D.theta);
    return lhs.is_zero();
}

bool primitives_match_h(const HopfAlgebra& H, int n_h, const Mat& R, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    PrimitiveSpace P = primitive_space(H);
    if (P.basis.size() != static_cast<size_t>(n_h)) return fail("dim P(H) = " + std::to_string(P.basis.size()));
    std::vector<Terms> gens;
    for (int i = 0; i < n_h; ++i) {
        uint32_t g = H.generators.at(i);
        Terms2 expect = {{static_cast<uint64_t>(g) * H.dim, Fq::one()}, {g, Fq::one()}};
        std::sort(expect.begin(), expect.end(), [](auto& a, auto& b) { return a.first < b.first; });
        if (H.comult[g] != expect) return fail("generator " + H.labels[g] + " is not primitive");
        gens.push_back(H.basis(g));
    }
    for (int i = 0; i < n_h; ++i) {
        for (int j = 0; j < n_h; ++j)
            if (H.mul(gens[i], gens[j]) != H.mul(gens[j], gens[i])) return fail("P(H) is not abelian");
        Terms want;
        for (int j = 0; j < n_h; ++j) want = terms_add(want, gens[j], R[i][j]);
        if (H.power(gens[i], H.p) != want) return fail("p-th power of " + H.labels[H.generators[i]]);
    }
    return true;
}

Equivalence equiv_pd_data(const TypeContext& ctx, const PDDatum& D1, const PDDatum& D2) {
    Equivalence out;
    const HAlgebra& h = ctx.h();
    auto s0 = ctx.cobar().coboundary_witness(D2.chi - D1.chi);
    if (!s0) return out;
    Elem w = D2.theta - D1.theta - ctx.phi(*s0);
    bool nonlinear = false;
    Vec wv = linear_coords(h, w, &nonlinear);
    if (nonlinear || !w.coeff(0).is_zero()) return out;
    FpLinearMap L(h.n(), h.n(), [&](const Vec& t) { return phi_on_h(ctx.type(), h, t); });
    if (auto t = L.solve(wv)) {
        out.equivalent = true;
        out.s = *s0 + h.from_vec(*t);
        return out;
    }
    int d = phi_kernel_growth(ctx.entry().label, h.p());
    std::vector<Vec> img = L.image_basis();
    size_t span = span_rank(img);
    if (static_cast<size_t>(h.n() - d) == span) {
        img.push_back(wv);
        if (span_rank(img) == span) {
            out.equivalent = true;
            out.needs_closure = true;
            out.s = *s0;
        }
    }
    return out;
}

Permissibility permissibility(const TypeEntry& e0) {
    const int p = field().p();
    Permissibility r;
    int d = phi_kernel_growth(e0.label, p);
    FieldScope scope(Field::create(p, 6));
    TypeEntry e = type_by_label(e0.label, p);
    AbelianType T = e.type();
    HAlgebra h(T.R);
    const int n = h.n();
    r.field_used = field().describe() + " and GF(" + std::to_string(p) + "^2)";
    std::vector<SparseVec> mrows;
    for (const auto& row : T.M) mrows.push_back(sv_from_dense(row));
    r.ker_rho_dim = n - static_cast<int>(rank_of(mrows));
    r.im_phi_dim = n - d;
    r.permissible = r.im_phi_dim == r.ker_rho_dim;

    std::vector<Vec> V = listed_subspace(e.im_phi);
    FpLinearMap L(n, n, [&](const Vec& t) { return phi_on_h(T, h, t); });
    std::vector<Vec> all = V;
    for (const auto& v : L.image_basis()) all.push_back(v);
    r.im_matches_listed = span_rank(all) == V.size() && static_cast<size_t>(r.im_phi_dim) == V.size();

    std::vector<Vec> K = listed_subspace(e.ker_rho);
    bool killed = true;
    for (const auto& v : K) killed = killed && vec_is_zero(vec_mat(v, T.M));
    r.ker_matches_listed = killed && static_cast<size_t>(r.ker_rho_dim) == K.size();
    return r;
}

std::optional<PDDatum> aplus_membership(const TypeContext& ctx, const Point& P) {
    const HAlgebra& h = ctx.h();
    Tensor chi = ctx.chi3(P);
    if (ctx.cobar().is_coboundary(chi)) return std::nullopt;
    auto s0 = ctx.cobar().coboundary_witness(ctx.phi(chi));
    if (!s0) return std::nullopt;
    Elem r = ctx.rho(*s0);
    bool nonlinear = false;
    Vec w = linear_coords(h, r, &nonlinear);
    if (nonlinear) return std::nullopt;
    // rho(t) = t M = -w
    Echelon E(true);
    for (const auto& row : ctx.type().M) E.insert(sv_from_dense(row));
    Vec target = vec_scale(w, -Fq::one());
    auto comb = E.solve(sv_from_dense(target));
    if (!comb) return std::nullopt;
    Vec t = sv_to_dense(*comb, static_cast<size_t>(h.n()));
    PDDatum D{*s0 + h.from_vec(t), chi};
    if (!ctx.rho(D.theta).is_zero()) return std::nullopt;
    return D;
}

std::optional<PDDatum> bplus_membership(const TypeContext& ctx, const Point& P) {
    const int idx = ctx.entry().index;
    if (idx == 4 && !P.at(0).is_zero()) return std::nullopt;
    if (idx == 9 && !P.at(1).is_zero()) return std::nullopt;
    Tensor chi = ctx.chi5(P);
    if (ctx.cobar().is_coboundary(chi)) return std::nullopt;
    auto s0 = ctx.cobar().coboundary_witness(ctx.phi(chi));
    if (!s0) return std::nullopt;
    Elem psi = decompose_plus(ctx.h(), *s0).tail;
    PDDatum D{psi + ctx.theta5(P), chi};
    if (!ctx.rho(D.theta).is_zero()) return std::nullopt;
    return D;
}

bool is_aut(const TypeEntry& e, const AutElement& a) {
    if (a.gamma.is_zero() || det2(a.G).is_zero()) return false;
    Fq lambda = gkind_lambda(e.g);
    if (!(pow(a.gamma, field().p()) * lambda == a.gamma * lambda)) return false;
    Mat R = restriction_matrix(e.h);
    if (mat_mul(mat_frobenius(a.G), R) != mat_mul(R, a.G)) return false;
    return mat_mul(a.G, e.M) == mat_scale(mat_mul(e.M, a.G), a.gamma);
}

AutElement aut_compose(const AutElement& outer, const AutElement& inner) {
    return {outer.gamma * inner.gamma, mat_mul(inner.G, outer.G)};
}

AutElement aut_inverse(const AutElement& a) { return {inv(a.gamma), inv2(a.G)}; }

AutElement aut_identity() { return {Fq::one(), mat_identity(2)}; }

std::string aut_family(const TypeEntry& e) {
    std::string g;
    switch (e.h) {
        case HKind::A: g = "G in GL2(k)"; break;
        case HKind::B: g = "G = diag(alpha, beta), alpha in F_p^x"; break;
        case HKind::C: g = "G = [[alpha, beta], [0, alpha^p]]"; break;
        case HKind::D: g = "G in GL2(F_p)"; break;
    }
    std::string gam = e.g == GKind::N ? "gamma in k^x" : "gamma in F_p^x";
    switch (e.index) {
        case 2: return "gamma in k^x, G = [[gamma alpha, beta], [0, alpha]]";
        case 5: return "gamma in k^x, G = diag(alpha, alpha gamma), alpha in F_p^x";
        case 7: return "gamma = 1, G = diag(alpha, beta), alpha in F_p^x";
        case 8: return "gamma = 1, G = alpha I, alpha in F_p^x";
        case 10: return "gamma = alpha^(1-p), G = [[alpha, beta], [0, alpha^p]]";
        case 12: return "gamma = 1, G = diag(alpha, alpha^p)";
        case 15:
            if (e.zeta == 1) return "gamma = 1, G in GL2(k)";
            if (e.label == "T(-1)") return "gamma = 1, G diagonal; or gamma = -1, G antidiagonal";
            return "gamma = 1, G diagonal";
        default: return gam + ", " + g;
    }
}

std::vector<AutElement> enumerate_aut(const TypeEntry& e) {
    const Field& F = field();
    std::vector<Fq> all;
    for (uint64_t c = 0; c < F.order(); ++c) all.push_back(F.from_code(c));
    std::vector<AutElement> out;
    for (Fq g : all) {
        if (g.is_zero()) continue;
        for (Fq a : all)
            for (Fq b : all)
                for (Fq c : all)
                    for (Fq d : all) {
                        AutElement x{g, {{a, b}, {c, d}}};
                        if (is_aut(e, x)) out.push_back(x);
                    }
    }
    return out;
}

AutElement random_aut(const TypeEntry& e, std::mt19937_64& rng) {
    const int p = field().p();
    const Fq z = Fq::zero(), o = Fq::one();
    auto nz = [&] { return random_nonzero(rng); };
    Fq gamma = e.g == GKind::N ? nz() : fp_random(rng, true);
    Mat G;
    switch (e.index) {
        case 2: {
            Fq a = nz();
            G = {{gamma * a, random_fq(rng)}, {z, a}};
            break;
        }
        case 5: {
            Fq a = fp_random(rng, true);
            G = {{a, z}, {z, a * gamma}};
            break;
        }
        case 7:
            gamma = o;
            G = {{fp_random(rng, true), z}, {z, nz()}};
            break;
        case 8: {
            gamma = o;
            Fq a = fp_random(rng, true);
            G = {{a, z}, {z, a}};
            break;
        }
        case 10: {
            Fq a = nz();
            gamma = pow_signed(a, 1 - p);
            G = {{a, random_fq(rng)}, {z, pow(a, p)}};
            break;
        }
        case 12: {
            gamma = o;
            Fq a = nz();
            G = {{a, z}, {z, pow(a, p)}};
            break;
        }
        case 15:
            gamma = o;
            if (e.zeta == 1) {
                do G = {{random_fq(rng), random_fq(rng)}, {random_fq(rng), random_fq(rng)}};
                while (det2(G).is_zero());
            } else if (e.label == "T(-1)" && (rng() & 1)) {
                gamma = -o;
                G = {{z, nz()}, {nz(), z}};
            } else {
                G = {{nz(), z}, {z, nz()}};
            }
            break;
        default:
            switch (e.h) {
                case HKind::A:
                    do G = {{random_fq(rng), random_fq(rng)}, {random_fq(rng), random_fq(rng)}};
                    while (det2(G).is_zero());
                    break;
                case HKind::B: G = {{fp_random(rng, true), z}, {z, nz()}}; break;
                case HKind::C: {
                    Fq a = nz();
                    G = {{a, random_fq(rng)}, {z, pow(a, p)}};
                    break;
                }
                case HKind::D:
                    do G = {{fp_random(rng, false), fp_random(rng, false)}, {fp_random(rng, false), fp_random(rng, false)}};
                    while (det2(G).is_zero());
                    break;
            }
    }
    AutElement a{gamma, G};
    if (!is_aut(e, a)) throw std::logic_error("random automorphism outside Aut(" + e.label + ")");
    return a;
}

Point act_A3(const AutElement& a, const Point& P) {
    const Mat& G = a.G;
    Fq gr = inv_frobenius(a.gamma);
    return {a.gamma * det2(G) * P[0], gr * (G[0][0] * P[1] + G[1][0] * P[2]), gr * (G[0][1] * P[1] + G[1][1] * P[2])};
}

Point act_A5(const AutElement& a, const Point& P) {
    const Mat& G = a.G;
    Fq gp = pow(a.gamma, field().p()), gr = inv_frobenius(a.gamma);
    return {gp * (G[0][0] * P[0] + G[1][0] * P[1]),
            gp * (G[0][1] * P[0] + G[1][1] * P[1]),
            a.gamma * det2(G) * P[2],
            gr * (G[0][0] * P[3] + G[1][0] * P[4]),
            gr * (G[0][1] * P[3] + G[1][1] * P[4])};
}

PDDatum transport_datum(const TypeContext& ctx, const AutElement& a, const PDDatum& D) {
    const HAlgebra& h = ctx.h();
    return {pow(a.gamma, h.p()) * apply_g(h, a.G, D.theta), a.gamma * apply_g(h, a.G, D.chi)};
}

std::vector<Terms> deformation_map(const TypeContext& ctx, const AutElement& a, const HopfAlgebra& target) {
    const int n = ctx.h().n(), p = ctx.h().p();
    std::vector<Terms> gen_img;
    for (int i = 0; i < n; ++i) {
        Terms t;
        for (int j = 0; j < n; ++j) t = terms_add(t, target.basis(target.generators.at(j)), a.G[i][j]);
        gen_img.push_back(t);
    }
    gen_img.push_back(terms_scale(target.basis(target.generators.at(n)), inv(a.gamma)));
    std::vector<Terms> out(target.dim);
    for (uint32_t m = 0; m < target.dim; ++m) {
        Terms cur = target.one();
        uint32_t r = m;
        for (int g = 0; g <= n; ++g) {
            int e = static_cast<int>(r % p);
            r /= p;
            if (e) cur = target.mul(cur, target.power(gen_img[g], e));
        }
        out[m] = cur;
    }
    return out;
}

std::string point_to_string(const Point& P) {
    std::string s = "(";
    for (size_t i = 0; i < P.size(); ++i) s += (i ? "," : "") + to_string(P[i]);
    return s + ")";
}

}  // namespace pgw
