#include "pgw/rla.hpp"

#include <stdexcept>

#include "pgw/linalg.hpp"

namespace pgw {

Mat mat_zero(int n) { return Mat(n, Vec(n)); }

Mat mat_identity(int n) {
    Mat m = mat_zero(n);
    for (int i = 0; i < n; ++i) m[i][i] = Fq::one();
    return m;
}

Mat mat_unit(int n, int i, int j) {
    Mat m = mat_zero(n);
    m[i][j] = Fq::one();
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    Mat out(n, Vec(c));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
    Mat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

Mat mat_scale(const Mat& a, Fq c) {
    Mat out = a;
    for (auto& row : out)
        for (auto& v : row) v *= c;
    return out;
}

Mat mat_pow(const Mat& a, int e) {
    Mat out = mat_identity(static_cast<int>(a.size()));
    for (int i = 0; i < e; ++i) out = mat_mul(out, a);
    return out;
}

Mat mat_transpose(const Mat& a) {
    Mat out(a.empty() ? 0 : a[0].size(), Vec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
    return out;
}

Mat mat_frobenius(const Mat& a) {
    Mat out = a;
    for (auto& row : out)
        for (auto& v : row) v = frobenius(v);
    return out;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

Fq det2(const Mat& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

Mat inv2(const Mat& a) {
    Fq d = det2(a);
    if (d.is_zero()) throw std::domain_error("singular 2x2 matrix");
    Fq di = inv(d);
    return {{a[1][1] * di, -a[0][1] * di}, {-a[1][0] * di, a[0][0] * di}};
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec out = a;
    for (size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_scale(const Vec& a, Fq c) {
    Vec out = a;
    for (auto& v : out) v *= c;
    return out;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& v : a)
        if (!v.is_zero()) return false;
    return true;
}

Vec vec_mat(const Vec& v, const Mat& m) {
    Vec out(m.empty() ? 0 : m[0].size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
    }
    return out;
}

Vec RestrictedLie::bracket(const Vec& a, const Vec& b) const {
    Vec out(dim);
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Fq ab = a[i] * b[j];
            for (int k = 0; k < dim; ++k) {
                Fq s = c[(i * dim + j) * dim + k];
                if (!s.is_zero()) out[k] += ab * s;
            }
        }
    }
    return out;
}

bool RestrictedLie::is_abelian() const {
    for (const auto& v : c)
        if (!v.is_zero()) return false;
    return true;
}

Vec RestrictedLie::basis(int i) const {
    Vec v(dim);
    v[i] = Fq::one();
    return v;
}

RestrictedLie abelian_lie(const Mat& R) {
    RestrictedLie L;
    L.dim = static_cast<int>(R.size());
    L.c.assign(static_cast<size_t>(L.dim) * L.dim * L.dim, Fq::zero());
    for (int i = 0; i < L.dim; ++i) L.pmap_basis.push_back(R[i]);
    return L;
}

std::vector<Vec> jacobson_si(const RestrictedLie& L, const Vec& a, const Vec& x) {
    int p = field().p();
    // coefficients of the formal variable, degree 0..p-1
    std::vector<Vec> w(p, Vec(L.dim));
    w[0] = a;
    for (int step = 0; step < p - 1; ++step) {
        std::vector<Vec> next(p, Vec(L.dim));
        for (int d = 0; d < p; ++d) {
            if (vec_is_zero(w[d])) continue;
            next[d] = vec_add(next[d], L.bracket(w[d], x));
            if (d + 1 < p) next[d + 1] = vec_add(next[d + 1], L.bracket(w[d], a));
        }
        w = std::move(next);
    }
    std::vector<Vec> s;
    for (int i = 1; i <= p - 1; ++i) s.push_back(vec_scale(w[i - 1], inv(Fq::of(i))));
    return s;
}

Vec pmap(const RestrictedLie& L, const Vec& v) {
    int first = -1;
    for (int i = 0; i < L.dim; ++i)
        if (!v[i].is_zero()) {
            first = i;
            break;
        }
    if (first < 0) return Vec(L.dim);
    Vec a(L.dim);
    a[first] = v[first];
    Vec rest = v;
    rest[first] = Fq::zero();
    Vec out = vec_scale(L.pmap_basis[first], frobenius(v[first]));
    if (vec_is_zero(rest)) return out;
    out = vec_add(out, pmap(L, rest));
    for (const auto& s : jacobson_si(L, a, rest)) out = vec_add(out, s);
    return out;
}

Vec rho_apply(const AbelianType& T, const Vec& v) { return vec_mat(v, T.M); }

std::vector<Check> check_algebraic_rep(const AbelianType& T) {
    int n = T.n();
    if (static_cast<int>(T.M.size()) != n) throw std::invalid_argument("representation matrix has wrong size");
    for (const auto& row : T.M)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("representation matrix has wrong size");
    for (const auto& row : T.R)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("restriction matrix has wrong size");
    int p = field().p();
    RestrictedLie h = abelian_lie(T.R);
    std::vector<Check> out;

    // (i): g = k z, so only [z,z] = 0 is involved: rho_0 = rho_z rho_z - rho_z rho_z
    Mat comm = mat_add(mat_mul(T.M, T.M), mat_scale(mat_mul(T.M, T.M), -Fq::one()));
    out.push_back({"bracket compatibility", mat_is_zero(comm), ""});

    // (ii): rho_{z^[p]} = rho_{lambda z} = rho_z^p
    Mat lhs = mat_scale(T.M, T.lambda);
    Mat rhs = mat_pow(T.M, p);
    out.push_back({"p-map compatibility", lhs == rhs, lhs == rhs ? "" : "lambda M != M^p"});

    // (iii): derivation law on basis pairs
    bool deriv = true;
    for (int i = 0; i < n && deriv; ++i)
        for (int j = 0; j < n && deriv; ++j) {
            Vec l = rho_apply(T, h.bracket(h.basis(i), h.basis(j)));
            Vec r = vec_add(h.bracket(rho_apply(T, h.basis(i)), h.basis(j)),
                            h.bracket(h.basis(i), rho_apply(T, h.basis(j))));
            if (l != r) deriv = false;
        }
    out.push_back({"derivation law", deriv, ""});

    // (iv): rho_z(a^[p]) = rho_z(a) (ad a)^{p-1} on basis elements
    bool restr = true;
    std::string detail;
    for (int i = 0; i < n && restr; ++i) {
        Vec a = h.basis(i);
        Vec l = rho_apply(T, pmap(h, a));
        Vec r = rho_apply(T, a);
        for (int k = 0; k < p - 1; ++k) r = h.bracket(r, a);
        if (l != r) {
            restr = false;
            detail = "fails on basis element " + std::to_string(i + 1);
        }
    }
    out.push_back({"restriction compatibility", restr, detail});
    return out;
}

bool is_algebraic_rep(const AbelianType& T) {
    for (const auto& c : check_algebraic_rep(T))
        if (!c.pass) return false;
    return true;
}

RestrictedLie semiproduct(const AbelianType& T) {
    if (!is_algebraic_rep(T)) throw std::invalid_argument("not an algebraic representation");
    int n = T.n();
    RestrictedLie L;
    L.dim = n + 1;
    int d = L.dim;
    L.c.assign(static_cast<size_t>(d) * d * d, Fq::zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            L.c[(n * d + i) * d + j] = T.M[i][j];
            L.c[(i * d + n) * d + j] = -T.M[i][j];
        }
    for (int i = 0; i < n; ++i) {
        Vec v(d);
        for (int j = 0; j < n; ++j) v[j] = T.R[i][j];
        L.pmap_basis.push_back(v);
    }
    Vec zp(d);
    zp[n] = T.lambda;
    L.pmap_basis.push_back(zp);
    return L;
}

namespace {

Vec random_vec(int n, std::mt19937_64& rng) {
    Vec v(n);
    for (auto& x : v) x = random_fq(rng);
    return v;
}

}  // namespace

std::vector<Check> check_restricted_axioms(const RestrictedLie& L, std::mt19937_64& rng, int samples) {
    int n = L.dim, p = field().p();
    std::vector<Check> out;
    bool anti = true, jac = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec a = L.bracket(L.basis(i), L.basis(j));
            Vec b = L.bracket(L.basis(j), L.basis(i));
            if (vec_add(a, b) != Vec(n) || !vec_is_zero(L.bracket(L.basis(i), L.basis(i)))) anti = false;
            for (int k = 0; k < n; ++k) {
                Vec x = L.basis(i), y = L.basis(j), z = L.basis(k);
                Vec s = vec_add(vec_add(L.bracket(x, L.bracket(y, z)), L.bracket(y, L.bracket(z, x))),
                                L.bracket(z, L.bracket(x, y)));
                if (!vec_is_zero(s)) jac = false;
            }
        }
    out.push_back({"antisymmetry", anti, ""});
    out.push_back({"Jacobi identity", jac, ""});

    std::vector<std::pair<Vec, Vec>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pairs.emplace_back(L.basis(i), L.basis(j));
    for (int s = 0; s < samples; ++s) pairs.emplace_back(random_vec(n, rng), random_vec(n, rng));

    bool semilin = true, additive = true, adp = true;
    for (const auto& [u, v] : pairs) {
        Fq alpha = random_fq(rng);
        if (pmap(L, vec_scale(u, alpha)) != vec_scale(pmap(L, u), frobenius(alpha))) semilin = false;
        Vec rhs = vec_add(pmap(L, u), pmap(L, v));
        for (const auto& si : jacobson_si(L, u, v)) rhs = vec_add(rhs, si);
        if (pmap(L, vec_add(u, v)) != rhs) additive = false;
        Vec l = L.bracket(u, pmap(L, v));
        Vec r = u;
        for (int k = 0; k < p; ++k) r = L.bracket(r, v);
        if (l != r) adp = false;
    }
    out.push_back({"p-map semilinearity", semilin, ""});
    out.push_back({"Jacobson sum formula", additive, ""});
    out.push_back({"ad of p-th power", adp, ""});
    return out;
}

bool torus_check(const RestrictedLie& L) {
    if (!L.is_abelian()) throw std::invalid_argument("torus_check expects an abelian algebra");
    FpLinearMap f(L.dim, L.dim, [&](const Vec& v) { return pmap(L, v); });
    return f.kernel_dim() == 0;
}

}  // namespace pgw
