#include "pgw/classify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pgw/orbits.hpp"

namespace pgw {

namespace {

using Clock = std::chrono::steady_clock;
using Vecs = std::vector<Vec>;

std::shared_ptr<const Field> gf(int p, int m) { return Field::create(p, m); }

// ---- small subspace arithmetic over the current field

size_t span_dim(const Vecs& vs) {
    std::vector<SparseVec> s;
    for (const auto& v : vs) s.push_back(sv_from_dense(v));
    return rank_of(s);
}

Vecs rows_of(const Mat& M) {
    Vecs out;
    for (const auto& r : M)
        if (!vec_is_zero(r)) out.push_back(r);
    return out;
}

// {v : v M = 0}
Vecs left_kernel(const Mat& M) {
    std::vector<SparseVec> cols;
    for (const auto& r : M) cols.push_back(sv_from_dense(r));
    Vecs out;
    for (const auto& k : kernel_of(cols)) out.push_back(sv_to_dense(k, M.size()));
    return out;
}

size_t meet_dim(const Vecs& a, const Vecs& b) {
    Vecs u = a;
    u.insert(u.end(), b.begin(), b.end());
    return span_dim(a) + span_dim(b) - span_dim(u);
}

std::vector<Fq> prime_field() {
    std::vector<Fq> out;
    for (int i = 0; i < field().p(); ++i) out.push_back(Fq::of(i));
    return out;
}

// all 2x2 matrices over F_p, in code order
std::vector<Mat> all_fp_mats() {
    auto F = prime_field();
    std::vector<Mat> out;
    for (Fq a : F)
        for (Fq b : F)
            for (Fq c : F)
                for (Fq d : F) out.push_back({{a, b}, {c, d}});
    return out;
}

std::string mat_key(const Mat& M) {
    std::string s;
    for (const auto& r : M)
        for (Fq v : r) s += std::to_string(field().code(v)) + ",";
    return s;
}

std::string mat_text(const Mat& M) {
    std::string s = "[";
    for (size_t i = 0; i < M.size(); ++i) {
        if (i) s += ";";
        for (size_t j = 0; j < M[i].size(); ++j) s += (j ? "," : "") + to_string(M[i][j]);
    }
    return s + "]";
}

// (gamma, G) over F_p with gamma G^{-1} M G = M2 and G R = R G
std::optional<std::pair<Fq, Mat>> fp_type_iso(HKind h, const Mat& M, const Mat& M2) {
    const Mat R = restriction_matrix(h);
    for (const Mat& G : all_fp_mats()) {
        if (det2(G).is_zero() || mat_mul(G, R) != mat_mul(R, G)) continue;
        Mat C = mat_mul(mat_mul(inv2(G), M), G);
        for (int g = 1; g < field().p(); ++g)
            if (mat_scale(C, Fq::of(g)) == M2) return std::make_pair(Fq::of(g), G);
    }
    return std::nullopt;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

// ---- polynomials over F_p in the Frobenius

using Poly = std::vector<Fq>;

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}
Poly poly_add(const Poly& a, const Poly& b, Fq s = Fq::one()) {
    Poly r(std::max(a.size(), b.size()), Fq::zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += s * b[i];
    return poly_trim(r);
}
Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Fq::zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(r);
}
// coefficient k stands for F^(k - shift)
std::string poly_text(const Poly& a, int shift) {
    std::string s;
    for (size_t k = a.size(); k-- > 0;) {
        if (a[k].is_zero()) continue;
        if (!s.empty()) s += "+";
        const int e = static_cast<int>(k) - shift;
        s += to_string(a[k]);
        if (e == 1) s += "F";
        else if (e != 0) s += "F^" + std::to_string(e);
    }
    return s.empty() ? "0" : s;
}

// Moore system: values f(u_j) = sum_k A_k u_j^{p^k} for j = 0..n-1
std::vector<Fq> solve_moore(const std::vector<Fq>& u, const std::vector<Fq>& vals) {
    const size_t n = u.size();
    std::vector<std::vector<Fq>> A(n, std::vector<Fq>(n + 1));
    for (size_t j = 0; j < n; ++j) {
        Fq w = u[j];
        for (size_t k = 0; k < n; ++k) {
            A[j][k] = w;
            w = frobenius(w);
        }
        A[j][n] = vals[j];
    }
    for (size_t c = 0; c < n; ++c) {
        size_t r = c;
        while (r < n && A[r][c].is_zero()) ++r;
        if (r == n) throw std::runtime_error("singular Moore matrix");
        std::swap(A[r], A[c]);
        Fq iv = inv(A[c][c]);
        for (auto& v : A[c]) v *= iv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || A[i][c].is_zero()) continue;
            Fq f = A[i][c];
            for (size_t k = 0; k <= n; ++k) A[i][k] -= f * A[c][k];
        }
    }
    std::vector<Fq> out(n);
    for (size_t k = 0; k < n; ++k) out[k] = A[k][n];
    return out;
}

Coords obstruction_class(const TypeContext& ctx, const Point& P) {
    return ctx.cobar().class_coords(ctx.phi(ctx.chi3(P)));
}

uint64_t mult_order(uint64_t p, uint64_t n) {
    if (n <= 1) return 1;
    uint64_t x = p % n;
    for (uint64_t k = 1; k <= n; ++k) {
        if (x == 1) return k;
        x = x * p % n;
    }
    return 0;
}

// labels of the type table; entries hold field handles, so checks rebuild them by label
std::vector<std::string> type_labels(int p) {
    FieldScope scope(Field::create(p, 1));
    std::vector<std::string> out;
    for (const auto& e : type_table(p)) out.push_back(e.label);
    return out;
}

std::string pct(size_t a, size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

}  // namespace

std::string field_name(const Field& F) { return "GF(" + std::to_string(F.p()) + "^" + std::to_string(F.m()) + ")"; }

CheckRecord run_check(const std::string& name, const std::shared_ptr<const Field>& F, const std::function<Outcome()>& fn) {
    CheckRecord r;
    r.name = name;
    r.field = field_name(*F);
    auto t0 = Clock::now();
    try {
        FieldScope scope(F);
        Outcome o = fn();
        r.pass = o.pass;
        r.witness = o.witness;
        if (!o.field.empty()) r.field = o.field;
    } catch (const std::exception& ex) {
        r.pass = false;
        r.witness = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

// ---- type catalog

std::string type_invariant(GKind g, HKind h, const Mat& M) {
    const Mat R = restriction_matrix(h);
    const Vecs K1 = left_kernel(R), K2 = rows_of(R), kM = left_kernel(M), iM = rows_of(M);
    std::ostringstream os;
    os << gkind_char(g) << hkind_char(h) << " rk" << span_dim(iM) << " " << meet_dim(kM, K1) << meet_dim(iM, K1)
       << meet_dim(kM, K2) << meet_dim(iM, K2) << meet_dim(kM, iM);
    if (g == GKind::S) {
        // M^p = M: eigenvalues lie in F_p, taken up to a common F_p^x factor
        const Fq tr = M[0][0] + M[1][1], det = det2(M);
        std::optional<Fq> r;
        for (Fq a : prime_field())
            if ((a * a - tr * a + det).is_zero()) {
                r = a;
                break;
            }
        if (!r) throw std::runtime_error("type_invariant: eigenvalues outside F_p");
        const Fq e1 = *r, e2 = tr - *r;
        std::pair<uint64_t, uint64_t> best{UINT64_MAX, UINT64_MAX};
        for (int g2 = 1; g2 < field().p(); ++g2) {
            uint64_t a = field().code(Fq::of(g2) * e1), b = field().code(Fq::of(g2) * e2);
            best = std::min(best, std::make_pair(std::min(a, b), std::max(a, b)));
        }
        os << " eig{" << best.first << "," << best.second << "}";
    }
    return os.str();
}

std::vector<CatalogClass> enumerate_rank2_types() {
    const int p = field().p();
    const auto mats = all_fp_mats();
    std::vector<CatalogClass> out;
    const auto table = type_table(p);
    for (GKind g : {GKind::N, GKind::S}) {
        const Fq lam = gkind_lambda(g);
        for (HKind h : {HKind::A, HKind::B, HKind::C, HKind::D}) {
            const Mat R = restriction_matrix(h);
            std::vector<Mat> sols;
            for (const Mat& M : mats)
                if (mat_is_zero(mat_mul(R, M)) && mat_pow(M, p) == mat_scale(M, lam)) sols.push_back(M);
            // orbits of gamma G^{-1} M G over F_p
            std::map<std::string, size_t> idx;
            for (size_t i = 0; i < sols.size(); ++i) idx[mat_key(sols[i])] = i;
            std::vector<size_t> parent(sols.size());
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](size_t a) {
                while (parent[a] != a) a = parent[a] = parent[parent[a]];
                return a;
            };
            for (const Mat& G : mats) {
                if (det2(G).is_zero() || mat_mul(G, R) != mat_mul(R, G)) continue;
                const Mat Gi = inv2(G);
                for (int gm = 1; gm < p; ++gm)
                    for (size_t i = 0; i < sols.size(); ++i) {
                        Mat C = mat_scale(mat_mul(mat_mul(Gi, sols[i]), G), Fq::of(gm));
                        auto it = idx.find(mat_key(C));
                        if (it == idx.end()) throw std::runtime_error("catalog: action leaves the solution set");
                        size_t a = find(i), b = find(it->second);
                        if (a != b) parent[std::max(a, b)] = std::min(a, b);
                    }
            }
            // F_p orbits with equal invariants coincide over the closure
            std::map<std::string, size_t> by_inv;
            std::vector<CatalogClass> local;
            std::set<size_t> seen_roots;
            for (size_t i = 0; i < sols.size(); ++i) {
                std::string inv = type_invariant(g, h, sols[i]);
                auto it = by_inv.find(inv);
                if (it == by_inv.end()) {
                    CatalogClass c{g, h, sols[i], 0, inv, {}};
                    by_inv[inv] = local.size();
                    local.push_back(c);
                    it = by_inv.find(inv);
                }
                local[it->second].members += 1;
                (void)find(i);
            }
            for (auto& c : local)
                for (const auto& e : table)
                    if (e.g == g && e.h == h && type_invariant(g, h, e.M) == c.invariant) c.labels.push_back(e.label);
            for (auto& c : local) out.push_back(std::move(c));
        }
    }
    return out;
}

ObstructionRank obstruction_rank(const TypeEntry& e) {
    const int p = field().p();
    // exponents of F lie in -1..2 (class coordinates of omega terms carry F^-1);
    // extraction runs in GF(p^4), where F^-1 = F^3, and is checked in GF(p^5)
    constexpr int kDeg = 4;
    // integer coefficients: handles of one field are meaningless in another
    using IPoly = std::vector<long long>;
    std::vector<std::vector<IPoly>> A(3, std::vector<IPoly>(3));
    auto to_poly = [](const IPoly& c) {
        Poly r;
        for (long long v : c) r.push_back(Fq::of(v));
        return poly_trim(r);
    };
    {
        FieldScope scope(gf(p, kDeg));
        TypeContext ctx(type_by_label(e.label, p));
        std::vector<Fq> u;
        for (int j = 0; j < kDeg; ++j) {
            std::vector<int> c(static_cast<size_t>(j) + 1, 0);
            c[static_cast<size_t>(j)] = 1;
            u.push_back(field().from_coeffs(c));  // t^j
        }
        for (int i = 0; i < 3; ++i) {
            std::vector<Coords> vals;
            for (Fq c : u) {
                Point P{Fq::zero(), Fq::zero(), Fq::zero()};
                P[static_cast<size_t>(i)] = c;
                vals.push_back(obstruction_class(ctx, P));
            }
            for (int r = 0; r < 3; ++r) {
                std::vector<Fq> col;
                for (const auto& v : vals) col.push_back(v.at(static_cast<size_t>(r)));
                Poly a = solve_moore(u, col);
                for (Fq x : a)
                    if (!in_prime_field(x)) throw std::runtime_error("obstruction map has coefficients outside F_p");
                // entry k is the coefficient of F^(k-1)
                IPoly c;
                for (Fq x : {a[3], a[0], a[1], a[2]}) c.push_back(static_cast<long long>(field().code(x)));
                A[static_cast<size_t>(r)][static_cast<size_t>(i)] = c;
            }
        }
    }
    {
        // the extracted matrix predicts the map in a field where F has larger order
        FieldScope scope(gf(p, kDeg + 1));
        TypeContext ctx(type_by_label(e.label, p));
        std::mt19937_64 rng(7);
        for (int s = 0; s < 4; ++s) {
            Point P{random_fq(rng), random_fq(rng), random_fq(rng)};
            Coords got = obstruction_class(ctx, P);
            for (int r = 0; r < 3; ++r) {
                Fq want = Fq::zero();
                for (int i = 0; i < 3; ++i) {
                    Fq w = inv_frobenius(P[static_cast<size_t>(i)]);
                    for (Fq c : to_poly(A[static_cast<size_t>(r)][static_cast<size_t>(i)])) {
                        want += c * w;
                        w = frobenius(w);
                    }
                }
                if (want != got.at(static_cast<size_t>(r))) throw std::runtime_error("obstruction map exceeds the F-degree bound");
            }
        }
    }
    std::vector<std::vector<Poly>> a(3, std::vector<Poly>(3));
    for (size_t r = 0; r < 3; ++r)
        for (size_t i = 0; i < 3; ++i) a[r][i] = to_poly(A[r][i]);
    auto minor = [&](int r1, int r2, int c1, int c2) {
        return poly_add(poly_mul(a[r1][c1], a[r2][c2]), poly_mul(a[r1][c2], a[r2][c1]), -Fq::one());
    };
    Poly det = poly_add(poly_add(poly_mul(a[0][0], minor(1, 2, 1, 2)), poly_mul(a[0][1], minor(1, 2, 0, 2)), -Fq::one()),
                        poly_mul(a[0][2], minor(1, 2, 0, 1)));
    ObstructionRank out;
    out.det = det;
    size_t terms = 0;
    for (Fq c : det) terms += c.is_zero() ? 0 : 1;
    out.injective = terms == 1;
    std::ostringstream os;
    os << "[Phi(chi_P)] = A(F) P with A = [";
    for (int r = 0; r < 3; ++r) {
        if (r) os << "; ";
        for (int i = 0; i < 3; ++i) os << (i ? ", " : "") << poly_text(a[r][i], 1);
    }
    os << "], det = " << poly_text(det, 3)
       << (out.injective ? " (a monomial: no nonzero P over the closure has [Phi(chi_P)] = 0)"
                         : " (not a monomial: nonzero kernel over the closure)");
    out.text = os.str();
    return out;
}

// ---- suites

namespace {

int expected_family_classes(int p) { return (p + 1) / 2 + 1; }  // {0} plus zeta ~ 1/zeta on F_p^x

std::optional<PDDatum> find_aplus_member(const TypeContext& ctx, std::string* where) {
    const int p = field().p();
    auto F = prime_field();
    for (Fq a : F)
        for (Fq b : F)
            for (Fq c : F) {
                if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
                Point P{c, b, a};
                if (auto d = aplus_membership(ctx, P)) {
                    *where = point_to_string(P);
                    return d;
                }
            }
    std::mt19937_64 rng(static_cast<uint64_t>(p));
    for (int s = 0; s < 50; ++s) {
        Point P{random_fq(rng), random_fq(rng), random_fq(rng)};
        if (auto d = aplus_membership(ctx, P)) {
            *where = point_to_string(P);
            return d;
        }
    }
    return std::nullopt;
}

Outcome type_row_outcome(const TypeEntry& e) {
    std::ostringstream w;
    bool ok = true;
    const AbelianType T = e.type();
    if (!is_algebraic_rep(T)) {
        ok = false;
        for (const auto& c : check_algebraic_rep(T))
            if (!c.pass) w << "rep condition " << c.name << " fails; ";
    }
    Permissibility perm = permissibility(e);
    w << "permissible=" << (perm.permissible ? "y" : "n") << " (listed " << (e.permissible ? "y" : "n") << ", dim Im Phi "
      << perm.im_phi_dim << ", dim Ker rho " << perm.ker_rho_dim << ", in " << perm.field_used << ")";
    if (perm.permissible != e.permissible) ok = false;
    if (!perm.im_matches_listed) {
        ok = false;
        w << "; Im Phi differs from listed " << e.im_phi;
    }
    if (!perm.ker_matches_listed) {
        ok = false;
        w << "; Ker rho differs from listed " << e.ker_rho;
    }
    TypeContext ctx(e);
    std::string where;
    auto member = find_aplus_member(ctx, &where);
    if (e.aplus_empty) {
        ObstructionRank o = obstruction_rank(e);
        w << "; A+ empty: " << o.text;
        if (!o.injective) ok = false;
        if (member) {
            ok = false;
            w << "; but A+ contains " << where;
        }
    } else {
        if (member) {
            w << "; A+ non-empty: contains " << where;
            if (!ctx.verify(*member).pass()) {
                ok = false;
                w << " (datum fails: " << ctx.verify(*member).failures() << ")";
            }
        } else {
            ok = false;
            w << "; A+ listed non-empty but no member found";
        }
    }
    return {ok, w.str()};
}

}  // namespace

Checks catalog_checks(int p) {
    Checks out;
    auto Fp = gf(p, 1);
    std::vector<CatalogClass> classes;
    out.push_back(run_check("types/catalog", Fp, [&] {
        classes = enumerate_rank2_types();
        const auto table = type_table(p);
        std::ostringstream w;
        bool ok = true;
        const size_t want = 14 + static_cast<size_t>(expected_family_classes(p));
        w << classes.size() << " classes (expected 14 + " << expected_family_classes(p) << " = " << want << ")";
        if (classes.size() != want) ok = false;
        std::set<std::string> invs;
        std::map<std::string, int> hits;
        for (const auto& c : classes) {
            invs.insert(c.invariant);
            if (c.labels.empty()) {
                ok = false;
                w << "; unmatched class " << gkind_char(c.g) << hkind_char(c.h) << " M=" << mat_text(c.M);
            }
            int fixed = 0;
            for (const auto& l : c.labels) {
                hits[l] += 1;
                if (l[1] != '(') ++fixed;
            }
            if (fixed > 1 || (fixed == 1 && c.labels.size() > 1)) {
                ok = false;
                w << "; class merges " << join(c.labels, ",");
            }
        }
        if (invs.size() != classes.size()) {
            ok = false;
            w << "; repeated invariants";
        }
        for (const auto& e : table)
            if (hits[e.label] != 1) {
                ok = false;
                w << "; row " << e.label << " matched " << hits[e.label] << " times";
            }
        w << "; classes:";
        for (const auto& c : classes) w << " {" << join(c.labels, ",") << ": " << c.members << " F_p-points}";
        return Outcome{ok, w.str()};
    }));
    out.push_back(run_check("types/catalog (S,A)", Fp, [&] {
        std::vector<std::string> got;
        for (const auto& c : classes)
            if (c.g == GKind::S && c.h == HKind::A) got.push_back(join(c.labels, "~"));
        std::set<std::string> labels;
        for (const auto& c : classes)
            if (c.g == GKind::S && c.h == HKind::A)
                for (const auto& l : c.labels) labels.insert(l);
        std::set<std::string> want{"T3"};
        for (int z = 0; z < p; ++z) want.insert(family_label(z, p));
        bool ok = labels == want && got.size() == 1 + static_cast<size_t>(expected_family_classes(p));
        return Outcome{ok, "classes " + join(got, " | ")};
    }));
    out.push_back(run_check("types/catalog (N,D)", Fp, [&] {
        std::vector<std::string> got;
        bool ok = true;
        for (const auto& c : classes)
            if (c.g == GKind::N && c.h == HKind::D) {
                got.push_back(join(c.labels, ",") + " M=" + mat_text(c.M) + " (" + std::to_string(c.members) + " points)");
                ok = ok && mat_is_zero(c.M) && c.members == 1 && c.labels == std::vector<std::string>{"T13"};
            }
        return Outcome{ok && got.size() == 1, join(got, "; ")};
    }));
    for (const auto& label : type_labels(p))
        out.push_back(run_check("types/" + label, Fp, [&] { return type_row_outcome(type_by_label(label, p)); }));
    return out;
}

Checks cobar_checks(int p, uint64_t seed, int samples) {
    Checks out;
    auto F = gf(p, 2);
    for (HKind h : {HKind::A, HKind::B, HKind::C, HKind::D}) {
        std::string name = std::string("cobar/cohomology h-kind ") + hkind_char(h);
        out.push_back(run_check(name, F, [&] {
            Cobar C(std::make_shared<HAlgebra>(restriction_matrix(h)));
            CohomologyDims d = C.cohomology();
            std::ostringstream w;
            w << "dim H1 = " << d.dim_h1 << ", dim H2 = " << d.dim_h2 << " (rank d1 " << d.rank_d1 << ", rank d2 "
              << d.rank_d2 << "); x(x)y, omega(x), omega(y) independent classes: " << (d.reps_rank == 3 ? "y" : "n");
            bool ok = d.dim_h1 == 2 && d.dim_h2 == 3 && d.reps_are_cocycles && d.reps_rank == 3;
            return Outcome{ok, w.str()};
        }));
    }
    for (const auto& label : type_labels(p)) {
        out.push_back(run_check("cobar/identities " + label, F, [&] {
            const TypeEntry e = type_by_label(label, p);
            std::mt19937_64 rng(seed + static_cast<uint64_t>(e.index * 31 + e.zeta));
            TypeContext ctx(e);
            auto reps = verify_cobar_identities(ctx.type(), ctx.cobar(), rng, samples);
            bool ok = !reps.empty();
            std::vector<std::string> parts;
            for (const auto& r : reps) {
                ok = ok && r.failed == 0 && r.checked >= samples;
                parts.push_back(r.name + " " + std::to_string(r.checked - r.failed) + "/" + std::to_string(r.checked));
            }
            return Outcome{ok, join(parts, "; ")};
        }));
    }
    return out;
}

Checks emptiness_checks(int p, int m, uint64_t seed, int samples) {
    Checks out;
    auto F = gf(p, m);
    for (const std::string label : {"T3", "T11", "T13", "T(-1)"}) {
        out.push_back(run_check("emptiness/" + label, F, [&] {
            const TypeEntry e = type_by_label(label, p);
            TypeContext ctx(e);
            std::mt19937_64 rng(seed + static_cast<uint64_t>(e.index));
            int none = 0;
            std::string bad;
            for (int s = 0; s < samples; ++s) {
                Point P;
                do P = {random_fq(rng), random_fq(rng), random_fq(rng)};
                while (P[0].is_zero() && P[1].is_zero() && P[2].is_zero());
                if (!aplus_membership(ctx, P)) ++none;
                else if (bad.empty()) bad = point_to_string(P);
            }
            ObstructionRank o = obstruction_rank(e);
            std::string w = "A+ membership none for " + pct(static_cast<size_t>(none), static_cast<size_t>(samples)) +
                            " random nonzero P; " + o.text;
            if (!bad.empty()) w += "; member found at " + bad;
            return Outcome{none == samples && o.injective && e.aplus_empty, w};
        }));
    }
    return out;
}

namespace {

// Theta (or Psi + Theta_P) as listed in the orbit tables for the point P
Elem listed_theta(const TypeContext& ctx, const Representative& r, const Point& P) {
    const TypeEntry& e = ctx.entry();
    const HAlgebra& h = ctx.h();
    const int p = field().p();
    if (!e.permissible) {
        Elem t = ctx.theta5(P);
        if (e.index == 2) t += pow(P[3], static_cast<uint64_t>(p)) * h.mul(ctx.x(), h.power(ctx.y(), p - 1));
        return t;
    }
    if (e.index == 5 && r.is_family()) return h.mul(h.power(ctx.x(), p - 1), ctx.y()) - ctx.y();
    if (e.index == 8) return (-P[0] / Fq::of(2)) * h.power(ctx.x(), 2);
    return {};
}

std::vector<std::pair<std::string, Point>> rep_points(const Representative& r) {
    std::vector<std::pair<std::string, Point>> pts;
    if (!r.is_family()) pts.emplace_back("", r.base);
    else
        for (Fq xi : sample_params(r.xi_nonzero)) pts.emplace_back("xi=" + to_string(xi), r.at(xi));
    return pts;
}

// appendix T-table "# of Iso. classes": single classes and families per type
std::optional<std::pair<int, int>> listed_counts(const TypeEntry& e) {
    switch (e.index) {
        case 1: return std::make_pair(8, 0);
        case 2: return std::make_pair(6, 2);
        case 4: return std::make_pair(4, 1);
        case 5: return std::make_pair(1, 1);
        case 6: return std::make_pair(1, 0);
        case 7: return std::make_pair(3, 0);
        case 8: return std::make_pair(0, 2);
        case 9: return std::make_pair(4, 1);
        case 10: return std::make_pair(1, 1);
        case 12: return std::make_pair(1, 0);
        case 14: return std::make_pair(3, 0);
        case 15:
            if (e.aplus_empty) return std::nullopt;
            return std::make_pair(1, 0);
        default: return std::nullopt;
    }
}

bool has_orbits(const TypeEntry& e) { return listed_counts(e).has_value(); }

Outcome membership_outcome(const TypeEntry& e, const Representative& r) {
    TypeContext ctx(e);
    std::ostringstream w;
    bool ok = true;
    size_t n = 0;
    std::string first;
    for (const auto& [param, P] : rep_points(r)) {
        ++n;
        auto D = admissible_datum(ctx, P);
        std::string tag = point_to_string(P);
        if (!D) {
            ok = false;
            w << tag << " not admissible; ";
            continue;
        }
        PDCheck c = ctx.verify(*D);
        if (!c.pass()) {
            ok = false;
            w << tag << " solver datum fails " << c.failures() << "; ";
        }
        PDDatum L{listed_theta(ctx, r, P), e.permissible ? ctx.chi3(P) : ctx.chi5(P)};
        PDCheck lc = ctx.verify(L);
        if (!lc.pass()) {
            ok = false;
            w << tag << " listed datum fails " << lc.failures() << "; ";
        } else if (!equiv_pd_data(ctx, L, *D).equivalent) {
            ok = false;
            w << tag << " listed and solver data not equivalent; ";
        }
        if (first.empty())
            first = "Theta=" + elem_to_string(D->theta, ctx.h().names(), field().p()) + " at " + tag;
    }
    w << n << " point(s) admissible with listed data equivalent to the solver's; " << first;
    return {ok, w.str()};
}

struct Labeled {
    int rep;
    Fq xi;
    Point P;
    std::string text;
};

Outcome pairwise_outcome(const TypeEntry& e) {
    const auto reps = representatives(e);
    std::vector<Labeled> pts;
    for (size_t i = 0; i < reps.size(); ++i) {
        if (!reps[i].is_family()) pts.push_back({static_cast<int>(i), Fq::zero(), reps[i].base, reps[i].name});
        else
            for (Fq xi : sample_params(reps[i].xi_nonzero))
                pts.push_back({static_cast<int>(i), xi, reps[i].at(xi), reps[i].name + "@" + to_string(xi)});
    }
    size_t diff = 0, same = 0;
    std::ostringstream bad;
    bool ok = true;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            bool expect_same = false;
            if (pts[i].rep == pts[j].rep) {
                const auto& r = reps[static_cast<size_t>(pts[i].rep)];
                expect_same = pow(pts[i].xi, r.modulus) == pow(pts[j].xi, r.modulus);
            }
            OrbitAnswer a = orbit_same(e, pts[i].P, pts[j].P);
            if (expect_same) {
                if (a.verdict == OrbitVerdict::Same && a.phi && act(e, *a.phi, pts[i].P) == pts[j].P) ++same;
                else {
                    ok = false;
                    bad << pts[i].text << " ~ " << pts[j].text << " not certified; ";
                }
            } else {
                if (a.verdict == OrbitVerdict::Different) ++diff;
                else {
                    ok = false;
                    bad << pts[i].text << " vs " << pts[j].text << ": " << a.reason << "; ";
                }
            }
        }
    std::ostringstream w;
    w << bad.str() << diff << " pairs non-equivalent, " << same << " family pairs equivalent with explicit phi, over "
      << pts.size() << " points";
    return {ok, w.str()};
}

Outcome coverage_outcome(const std::string& label, int p, int m_cap, uint64_t seed, int points) {
    const int k = p == 3 ? 2 : 1;
    std::string log;
    for (int m = 2 * k; m <= m_cap; m *= 2) {
        auto F = gf(p, m);
        FieldScope scope(F);
        const TypeEntry e = type_by_label(label, p);
        const auto reps = representatives(e);
        TypeContext ctx(e);
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(e.index * 16 + e.zeta + 1)));
        std::map<std::string, int> hit;
        int reduced = 0, missing = 0;
        std::string bad;
        for (int s = 0; s < points; ++s) {
            Point P = random_admissible_point(e, rng, k);
            auto nf = normal_form(e, P);
            if (!nf) {
                ++missing;
                continue;
            }
            const auto& r = reps.at(static_cast<size_t>(nf->rep));
            bool good = in_acting_group(e, nf->phi) && act(e, nf->phi, P) == nf->point &&
                        nf->point == (r.is_family() ? r.at(nf->xi) : r.base);
            if (good) {
                // sigma-correction: the transported datum is equivalent to the representative's
                auto D = admissible_datum(ctx, P);
                auto Dr = admissible_datum(ctx, nf->point);
                good = D && Dr && equiv_pd_data(ctx, transport_datum(ctx, nf->phi, *D), *Dr).equivalent;
            }
            if (!good) {
                if (bad.empty()) bad = point_to_string(P);
                continue;
            }
            ++reduced;
            hit[r.name] += 1;
        }
        if (!bad.empty())
            return {false, "reduction fails at " + bad + " (" + pct(static_cast<size_t>(reduced), static_cast<size_t>(points)) + ")",
                    field_name(*F)};
        if (missing == 0) {
            std::ostringstream w;
            w << log << reduced << "/" << points << " points with coordinates in GF(" << p << "^" << k
              << ") reduced by explicit phi with equivalent transported data; hits:";
            for (const auto& [n, c] : hit) w << " " << n << " x" << c;
            return {true, w.str(), field_name(*F)};
        }
        log += field_name(*F) + ": " + std::to_string(missing) + " points need roots outside the field; ";
    }
    return {false, log + "escalation cap reached", ""};
}

// order of the roots of unity the ratio automorphisms of a family draw on
uint64_t ratio_root_order(const std::string& label, int p, uint64_t modulus) {
    const uint64_t q = static_cast<uint64_t>(p);
    if (label == "T4") return (q - 1) * (q - 1);
    if (label == "T5") return q * q - 1;
    if (label == "T9") return q * q - q - 1;
    if (label == "T10") return q * q - q + 1;
    return modulus;
}

Outcome moduli_outcome(const std::string& label, int rep_idx, int p, int m_cap, uint64_t seed) {
    const uint64_t n = representatives(type_by_label(label, p)).at(static_cast<size_t>(rep_idx)).modulus;
    int m = static_cast<int>(mult_order(static_cast<uint64_t>(p), ratio_root_order(label, p, n)));
    if (m % 2 && 2 * m <= m_cap) m *= 2;
    if (m < 2) m = 2;
    if (m > m_cap) return {false, "mu_" + std::to_string(n) + " needs GF(" + std::to_string(p) + "^" + std::to_string(m) + ")", ""};
    auto F = gf(p, m);
    FieldScope scope(F);
    const TypeEntry e = type_by_label(label, p);
    const auto r = representatives(e).at(static_cast<size_t>(rep_idx));
    std::mt19937_64 rng(seed + static_cast<uint64_t>(e.index * 100 + rep_idx));
    const auto mu = mu_n(n);
    int pos = 0, neg = 0;
    std::ostringstream bad;
    for (int s = 0; s < 5; ++s) {
        Fq xi = random_nonzero(rng);
        for (Fq tau : mu) {
            auto phi = ratio_aut(e, rep_idx, xi, tau);
            if (phi && in_acting_group(e, *phi) && act(e, *phi, r.at(xi)) == r.at(tau * xi)) ++pos;
            else bad << "no phi for xi=" << to_string(xi) << " tau=" << to_string(tau) << "; ";
        }
        for (int t = 0, tries = 0; t < 5 && tries < 1000; ++tries) {
            Fq tau = random_nonzero(rng);
            if (pow(tau, n).is_one()) continue;
            ++t;
            OrbitAnswer a = orbit_same(e, r.at(xi), r.at(tau * xi));
            if (a.verdict == OrbitVerdict::Different) ++neg;
            else bad << "xi=" << to_string(xi) << " tau=" << to_string(tau) << " not separated; ";
        }
    }
    std::ostringstream w;
    w << bad.str() << "modulus " << r.modulus_text << " (n=" << n << ", |mu_n|=" << mu.size() << "): " << pos
      << " ratios in mu_n carried by explicit phi, " << neg << " ratios outside mu_n separated, 5 sampled xi";
    bool ok = bad.str().empty() && mu.size() == n && neg == 25 && pos == static_cast<int>(5 * n);
    if (e.index == 4) {
        // mu_(p-1)/2 is the group of nonzero squares of F_p
        std::set<uint64_t> sq, m2;
        for (int a = 1; a < p; ++a) sq.insert(field().code(Fq::of(a) * Fq::of(a)));
        for (Fq t : mu) m2.insert(field().code(t));
        w << "; mu_n = (F_p^x)^2: " << (sq == m2 ? "y" : "n");
        ok = ok && sq == m2;
    }
    return {ok, w.str(), field_name(*F)};
}

}  // namespace

Checks orbit_checks(int p, int m, int m_cap, uint64_t seed, int coverage_points) {
    Checks out;
    auto F = gf(p, m);
    FieldScope outer(F);
    const auto table = type_table(p);
    for (const auto& e : table) {
        if (!has_orbits(e)) continue;
        const auto reps = representatives(e);
        out.push_back(run_check("orbits/" + e.label + " count", F, [&] {
            auto want = *listed_counts(e);
            int singles = 0, fams = 0;
            std::vector<std::string> mods;
            for (const auto& r : reps) {
                if (r.is_family()) {
                    ++fams;
                    mods.push_back(r.name + " mod " + r.modulus_text);
                } else ++singles;
            }
            std::ostringstream w;
            w << singles << " single + " << fams << " families (listed " << want.first << " + " << want.second << ")";
            if (!mods.empty()) w << "; " << join(mods, ", ");
            return Outcome{singles == want.first && fams == want.second, w.str()};
        }));
        for (const auto& r : reps)
            out.push_back(run_check("orbits/" + e.label + " " + r.name + " membership", F,
                                    [&] { return membership_outcome(e, r); }));
        out.push_back(run_check("orbits/" + e.label + " pairwise", F, [&] { return pairwise_outcome(e); }));
        out.push_back(
            run_check("orbits/" + e.label + " coverage", F, [&] { return coverage_outcome(e.label, p, m_cap, seed, coverage_points); }));
        for (size_t i = 0; i < reps.size(); ++i)
            if (reps[i].is_family())
                out.push_back(run_check("orbits/" + e.label + " " + reps[i].name + " moduli", F,
                                        [&] { return moduli_outcome(e.label, static_cast<int>(i), p, m_cap, seed); }));
    }
    out.push_back(run_check("orbits/T(zeta!=-1) classes", F, [&] {
        std::vector<TypeEntry> fam;
        for (const auto& e : table)
            if (e.is_family() && e.zeta != p - 1) fam.push_back(e);
        std::set<std::string> invs;
        std::ostringstream w;
        bool ok = true;
        for (const auto& e : fam) {
            invs.insert(type_invariant(e.g, e.h, e.M));
            if (representatives(e).size() != 1) ok = false;
            if (e.zeta >= 2) {
                int zi = 1;
                while ((zi * e.zeta) % p != 1) ++zi;
                const TypeEntry other = type_by_label(family_label(zi, p), p);
                auto iso = fp_type_iso(e.h, e.M, other.M);
                if (!iso) {
                    ok = false;
                    w << e.label << " !~ " << other.label << "; ";
                } else {
                    w << e.label << " ~ " << other.label << " by gamma=" << to_string(iso->first)
                      << " G=" << mat_text(iso->second) << "; ";
                }
            }
        }
        w << invs.size() << " classes, one A+ orbit each (expected (p+1)/2 = " << (p + 1) / 2 << ")";
        return Outcome{ok && invs.size() == static_cast<size_t>((p + 1) / 2), w.str()};
    }));
    out.push_back(run_check("orbits/T8 family count", F, [&] {
        const TypeEntry e = type_by_label("T8", p);
        const auto reps = representatives(e);
        std::ostringstream w;
        bool ok = reps.size() == 2 && reps[0].is_family() && reps[1].is_family() &&
                  reps[0].modulus == static_cast<uint64_t>((p - 1) / 2) && reps[0].xi_nonzero && reps[1].modulus == 1 &&
                  !reps[1].xi_nonzero;
        w << "appendix T-table: 2 families; orbit table: " << reps[0].name << " in k^x/" << reps[0].modulus_text << ", "
          << reps[1].name << " in k";
        size_t cross = 0;
        for (Fq a : sample_params(true))
            for (Fq b : sample_params(false)) {
                if (orbit_same(e, reps[0].at(a), reps[1].at(b)).verdict != OrbitVerdict::Different) {
                    ok = false;
                    w << "; mismatch at xi=" << to_string(a) << ", " << to_string(b);
                } else ++cross;
            }
        w << "; the two families stay disjoint at " << cross << " sampled pairs, so both readings agree on 2 families";
        return Outcome{ok, w.str()};
    }));
    return out;
}

std::vector<std::string> pd_spot_rows() {
    return {"T5 (xi,0,1)", "T10 (xi,0,1)", "T8 (xi,1,0)", "T2 (0,1,0,1,0)", "T14 (1,1,0)"};
}

Checks pd_checks(int p, int m, const std::vector<std::string>& spot) {
    Checks out;
    auto F = gf(p, m);
    std::vector<BuiltT> rows;
    {
        FieldScope scope(F);
        const Fq generic = field().exp(1);
        for (auto& b : t_row_data()) {
            if (!spot.empty()) {
                if (std::find(spot.begin(), spot.end(), b.name) == spot.end()) continue;
                if (!b.param.empty() && b.param != "xi=" + to_string(generic)) continue;
            }
            rows.push_back(std::move(b));
        }
    }
    const uint32_t want_dim = static_cast<uint32_t>(p * p * p);
    for (const auto& b : rows) {
        std::string name = "pd/" + b.name + (b.param.empty() ? "" : " " + b.param);
        out.push_back(run_check(name, F, [&] {
            TypeContext ctx(b.entry);
            std::ostringstream w;
            HopfAlgebra H = build_deformation(ctx, b.datum);
            PDCheck c = ctx.verify(b.datum);
            AxiomReport ax = check_hopf_axioms(H);
            std::string why;
            bool prim = primitives_match_h(H, 2, ctx.type().R, &why);
            bool zrel = z_relation_holds(ctx, b.datum);
            w << "dim " << H.dim << "; datum " << (c.pass() ? "ok" : c.failures()) << "; axioms "
              << (ax.pass ? "pass" : ax.first_failure) << "; P(H) = h " << (prim ? "y" : why) << "; z relation "
              << (zrel ? "y" : "n") << "; Theta=" << elem_to_string(b.datum.theta, ctx.h().names(), p);
            return Outcome{H.dim == want_dim && c.pass() && ax.pass && prim && zrel, w.str()};
        }));
    }
    return out;
}

namespace {

Terms gen(const HopfAlgebra& H, int i) { return H.basis(H.generators.at(static_cast<size_t>(i))); }

Outcome iso_outcome(const HopfAlgebra& H, const HopfAlgebra& K, const std::vector<Terms>& images, const std::string& text) {
    auto f = map_from_generators(H, K, images);
    std::string why;
    bool ok = is_hopf_isomorphism(H, K, f, &why);
    return {ok, text + (ok ? "" : ": " + why)};
}

// "T(a) P" and "T(b) P" with a b = 1 in F_p
bool inverse_family_pair(const std::string& a, const std::string& b, int p) {
    const auto zeta = [&](const std::string& name) -> int {
        const std::string label = name.substr(0, name.find(" ("));
        if (label.rfind("T(", 0) != 0) return -1;
        return type_by_label(label, p).zeta;
    };
    const int za = zeta(a), zb = zeta(b);
    if (za <= 0 || zb <= 0 || za == zb) return false;
    return a.substr(a.find(" (")) == b.substr(b.find(" (")) && (za * zb) % p == 1;
}

Outcome row_outcome(const AppendixRow& r) {
    const HopfAlgebra& H = r.H;
    const uint32_t want = static_cast<uint32_t>(H.p * H.p * H.p);
    std::ostringstream w;
    bool ok = H.dim == want;
    AxiomReport ax = check_hopf_axioms(H);
    ok = ok && ax.pass;
    bool conn = is_connected(H);
    ok = ok && conn;
    w << "dim " << H.dim << "; axioms " << (ax.pass ? "pass" : ax.first_failure) << "; connected " << (conn ? "y" : "n");
    const bool c = is_commutative(H), s = is_semisimple(H), l = is_local(H);
    w << "; Comm/S.S./Loc " << (c ? "y" : "n") << "/" << (s ? "y" : "n") << "/" << (l ? "y" : "n");
    if (r.flags) {
        w << " (listed " << (r.flags->commutative ? "y" : "n") << "/" << (r.flags->semisimple ? "y" : "n") << "/"
          << (r.flags->local ? "y" : "n") << ")";
        ok = ok && c == r.flags->commutative && s == r.flags->semisimple && l == r.flags->local;
    }
    PrimBucket b = prim_bucket(H);
    const size_t want_uP = r.prim_dim == 1 ? static_cast<size_t>(H.p) : r.prim_dim == 2 ? static_cast<size_t>(H.p * H.p) : want;
    w << "; dim P(H) " << b.dim_prim << ", dim u(P(H)) " << b.dim_uP << (b.uP_commutative ? " commutative" : " noncommutative");
    ok = ok && b.dim_prim == r.prim_dim && b.dim_uP == want_uP;
    if (r.prim_dim == 2) ok = ok && b.uP_commutative == r.uP_commutative;
    return {ok, w.str()};
}

}  // namespace

Checks appendix_checks(int p, int m) {
    Checks out;
    auto F = gf(p, m);
    std::vector<AppendixRow> rows;
    {
        FieldScope scope(F);
        rows = build_appendix_tables();
    }
    for (const auto& r : rows)
        out.push_back(run_check("appendix/" + r.name + (r.param.empty() ? "" : " " + r.param), F, [&] { return row_outcome(r); }));
    for (const std::string t : {"A", "B", "C", "T"}) {
        out.push_back(run_check("appendix/" + t + " invariants distinct", F, [&] {
            std::vector<std::pair<std::string, InvariantVector>> v;
            for (const auto& r : rows)
                if (r.table == t) v.emplace_back(r.name, invariant_vector(r.H));
            size_t pairs = 0, iso_pairs = 0;
            std::ostringstream bad;
            for (size_t i = 0; i < v.size(); ++i)
                for (size_t j = i + 1; j < v.size(); ++j) {
                    if (v[i].first == v[j].first) continue;  // one parametric family
                    if (inverse_family_pair(v[i].first, v[j].first, p)) {
                        ++iso_pairs;
                        continue;
                    }
                    ++pairs;
                    if (v[i].second == v[j].second) bad << v[i].first << " = " << v[j].first << "; ";
                }
            std::string w = bad.str() + std::to_string(pairs) + " pairs separated";
            if (iso_pairs) w += "; " + std::to_string(iso_pairs) + " T(zeta), T(1/zeta) pairs isomorphic by the explicit map of T(zeta!=-1) classes";
            return Outcome{bad.str().empty(), w};
        }));
    }
    // crosswalk: relations-built T rows against the deformation construction
    {
        std::vector<BuiltT> data;
        {
            FieldScope scope(F);
            data = t_row_data();
        }
        std::map<std::string, std::vector<const BuiltT*>> by_rep;
        std::vector<std::string> order;
        for (const auto& b : data) {
            if (!by_rep.count(b.name)) order.push_back(b.name);
            by_rep[b.name].push_back(&b);
        }
        for (const auto& name : order)
            out.push_back(run_check("appendix/crosswalk " + name, F, [&] {
                size_t same = 0;
                std::string bad;
                for (const BuiltT* b : by_rep[name]) {
                    TypeContext ctx(b->entry);
                    HopfAlgebra A = build_T_row(ctx, b->datum);
                    HopfAlgebra D = build_deformation(ctx, b->datum);
                    if (A.mult == D.mult && A.comult == D.comult && A.antipode == D.antipode && A.counit == D.counit) ++same;
                    else if (bad.empty()) bad = b->param;
                }
                return Outcome{bad.empty(), (bad.empty() ? "" : "differs at " + bad + "; ") + std::to_string(same) + "/" +
                                                std::to_string(by_rep[name].size()) + " identical structure constants"};
            }));
    }
    // u(T3), u(T11), u(T13) and u(T(-1)) among the C rows
    struct PrimC {
        std::string type, row;
        std::vector<int> perm;  // generator images: x, y, z -> C generators
    };
    for (const PrimC& pc : std::vector<PrimC>{{"T3", "C7", {0, 1, 2}}, {"T11", "C8", {0, 1, 2}}, {"T13", "C9", {1, 2, 0}}}) {
        out.push_back(run_check("appendix/primC u(" + pc.type + ") = " + pc.row, F, [&] {
            TypeContext ctx(type_by_label(pc.type, p));
            HopfAlgebra U = build_u_T(ctx);
            HopfAlgebra C = *build_named_row(pc.row);
            const char* nm = "xyz";
            std::string text = "x->" + std::string(1, nm[pc.perm[0]]) + ", y->" + std::string(1, nm[pc.perm[1]]) + ", z->" +
                               std::string(1, nm[pc.perm[2]]);
            return iso_outcome(U, C, {gen(C, pc.perm[0]), gen(C, pc.perm[1]), gen(C, pc.perm[2])}, text);
        }));
    }
    out.push_back(run_check("appendix/primC u(T(-1)) = C(lambda,delta)", F, [&] {
        auto roots = solve_power(2, -Fq::one());
        if (roots.empty()) return Outcome{false, "no square root of -1 in the field"};
        Fq i = roots.front();
        Fq lam = -i, del = pow(lam, static_cast<uint64_t>(p - 1));
        TypeContext ctx(type_by_label("T(-1)", p));
        HopfAlgebra U = build_u_T(ctx);
        HopfAlgebra C = build_C_lambda_delta(lam, del);
        return iso_outcome(U, C, {gen(C, 0), gen(C, 1), terms_scale(gen(C, 2), lam)},
                           "lambda=" + to_string(lam) + ", delta=" + to_string(del) + "; x->x, y->y, z->lambda z");
    }));
    out.push_back(run_check("appendix/C(lambda,delta) swap", F, [&] {
        std::ostringstream w;
        bool ok = true;
        size_t n = 0;
        for (Fq l : mu_n(2 * static_cast<uint64_t>(p - 1))) {
            Fq d = pow(l, static_cast<uint64_t>(p - 1));
            HopfAlgebra H = build_C_lambda_delta(l, d), K = build_C_lambda_delta(inv(l), d);
            std::string why;
            if (!is_hopf_isomorphism(H, K, map_from_generators(H, K, {gen(K, 1), gen(K, 0), gen(K, 2)}), &why)) {
                ok = false;
                w << "lambda=" << to_string(l) << ": " << why << "; ";
            }
            ++n;
        }
        w << n << " values of lambda: C(lambda,delta) = C(1/lambda,delta) by x<->y";
        return Outcome{ok, w.str()};
    }));
    out.push_back(run_check("appendix/T(zeta!=-1) classes", F, [&] {
        // T(zeta) = T(1/zeta) by x -> y', y -> -zeta x', z -> zeta (z' - x'y')
        std::map<int, HopfAlgebra> H;
        for (int z = 0; z < p - 1; ++z) {
            TypeContext ctx(type_by_label(family_label(z, p), p));
            auto D = aplus_membership(ctx, {Fq::one(), Fq::zero(), Fq::zero()});
            if (!D) return Outcome{false, family_label(z, p) + " (1,0,0) not in A+"};
            H.emplace(z, build_deformation(ctx, *D));
        }
        std::ostringstream w;
        bool ok = true;
        std::vector<int> cls(static_cast<size_t>(p - 1));
        std::iota(cls.begin(), cls.end(), 0);
        for (int z = 2; z < p - 1; ++z) {
            int zi = 1;
            while ((zi * z) % p != 1) ++zi;
            const HopfAlgebra &A = H.at(z), &B = H.at(zi);
            Fq zeta = Fq::of(z);
            Terms xy = B.mul(gen(B, 0), gen(B, 1));
            auto r = iso_outcome(A, B,
                                 {gen(B, 1), terms_scale(gen(B, 0), -zeta), terms_add(terms_scale(gen(B, 2), zeta), xy, -zeta)},
                                 family_label(z, p) + " = " + family_label(zi, p));
            w << r.witness << "; ";
            ok = ok && r.pass;
            cls[static_cast<size_t>(std::max(z, zi))] = std::min(z, zi);
        }
        std::set<int> reps;
        std::set<std::string> invs;
        for (int z = 0; z < p - 1; ++z)
            if (cls[static_cast<size_t>(z)] == z) {
                reps.insert(z);
                const TypeEntry e = type_by_label(family_label(z, p), p);
                invs.insert(type_invariant(e.g, e.h, e.M));
            }
        // distinct types give non-isomorphic algebras since P(H) with its z-action recovers the type
        ok = ok && invs.size() == reps.size() && reps.size() == static_cast<size_t>((p + 1) / 2);
        w << reps.size() << " classes (expected (p+1)/2 = " << (p + 1) / 2 << "), types pairwise distinct";
        return Outcome{ok, w.str()};
    }));
    return out;
}

int orbit_field_degree(int p, int cap) {
    const uint64_t q = static_cast<uint64_t>(p);
    uint64_t l = 2;
    for (uint64_t n : {q * q - 1, q * q - q + 1, q * q - q - 1, (q - 1) * (q - 1), uint64_t{2}}) {
        uint64_t o = mult_order(q, n);
        l = std::lcm(l, o);
    }
    return l <= static_cast<uint64_t>(cap) ? static_cast<int>(l) : 0;
}

}  // namespace pgw
