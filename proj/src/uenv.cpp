#include "pgw/uenv.hpp"

#include <sstream>
#include <stdexcept>

namespace pgw {

Elem Elem::scalar(Fq a) {
    Elem e;
    e.add_term(0, a);
    return e;
}

Elem Elem::mono(Mono m, Fq a) {
    Elem e;
    e.add_term(m, a);
    return e;
}

Fq Elem::coeff(Mono m) const {
    auto it = c.find(m);
    return it == c.end() ? Fq::zero() : it->second;
}

void Elem::add_term(Mono m, Fq a) {
    if (a.is_zero()) return;
    auto [it, fresh] = c.emplace(m, a);
    if (!fresh) {
        it->second += a;
        if (it->second.is_zero()) c.erase(it);
    }
}

Elem& Elem::operator+=(const Elem& o) {
    for (const auto& [m, a] : o.c) add_term(m, a);
    return *this;
}

Elem& Elem::operator-=(const Elem& o) {
    for (const auto& [m, a] : o.c) add_term(m, -a);
    return *this;
}

Elem operator*(Fq s, const Elem& a) {
    Elem out;
    if (s.is_zero()) return out;
    for (const auto& [m, v] : a.c) out.c.emplace(m, s * v);
    return out;
}

void Tensor::add_term(uint64_t k, Fq a) {
    if (a.is_zero()) return;
    auto [it, fresh] = c.emplace(k, a);
    if (!fresh) {
        it->second += a;
        if (it->second.is_zero()) c.erase(it);
    }
}

uint64_t Tensor::key(const std::vector<Mono>& s) const {
    uint64_t k = 0;
    for (Mono m : s) k = k * base + m;
    return k;
}

std::vector<Mono> Tensor::slots(uint64_t k) const {
    std::vector<Mono> s(deg);
    for (int i = deg - 1; i >= 0; --i) {
        s[i] = static_cast<Mono>(k % base);
        k /= base;
    }
    return s;
}

Tensor& Tensor::operator+=(const Tensor& o) {
    for (const auto& [k, a] : o.c) add_term(k, a);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    for (const auto& [k, a] : o.c) add_term(k, -a);
    return *this;
}

Tensor operator*(Fq s, const Tensor& a) {
    Tensor out(a.deg, a.base);
    if (s.is_zero()) return out;
    for (const auto& [k, v] : a.c) out.c.emplace(k, s * v);
    return out;
}

bool Tensor::in_augmentation() const {
    for (const auto& [k, v] : c)
        for (Mono m : slots(k))
            if (m == 0) return false;
    return true;
}

Tensor pure_tensor(const std::vector<Elem>& factors, uint64_t base) {
    Tensor t(static_cast<int>(factors.size()), base);
    std::map<uint64_t, Fq> cur{{0, Fq::one()}};
    for (const auto& f : factors) {
        std::map<uint64_t, Fq> next;
        for (const auto& [k, a] : cur)
            for (const auto& [m, b] : f.c) {
                Fq v = a * b;
                auto [it, fresh] = next.emplace(k * base + m, v);
                if (!fresh) it->second += v;
            }
        cur = std::move(next);
    }
    for (const auto& [k, a] : cur) t.add_term(k, a);
    return t;
}

int binom_mod(int n, int k, int p) {
    if (k < 0 || k > n) return 0;
    std::vector<int> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<int> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = (row[j - 1] + row[j]) % p;
        row = std::move(next);
    }
    return row[k] % p;
}

HAlgebra::HAlgebra(const Mat& R, std::vector<std::string> names)
    : n_(static_cast<int>(R.size())), p_(field().p()), R_(R), names_(std::move(names)) {
    if (names_.empty()) {
        static const char* defaults[] = {"x", "y", "w", "v"};
        for (int i = 0; i < n_; ++i) names_.push_back(n_ <= 4 ? defaults[i] : "x" + std::to_string(i + 1));
    }
    dim_ = 1;
    for (int i = 0; i < n_; ++i) dim_ *= static_cast<Mono>(p_);
    table_.resize(static_cast<size_t>(dim_) * dim_);
    for (Mono a = 0; a < dim_; ++a) {
        std::vector<int> ea = exps(a);
        for (Mono b = 0; b < dim_; ++b) {
            std::vector<int> e = ea, eb = exps(b);
            for (int i = 0; i < n_; ++i) e[i] += eb[i];
            std::map<Mono, Fq> out;
            reduce_into(e, Fq::one(), out, 0);
            auto& slot = table_[static_cast<size_t>(a) * dim_ + b];
            for (const auto& [m, v] : out)
                if (!v.is_zero()) slot.emplace_back(m, v);
        }
    }
}

void HAlgebra::reduce_into(std::vector<int> e, Fq c, std::map<Mono, Fq>& out, int depth) const {
    if (c.is_zero()) return;
    if (depth > 64 * p_) throw std::logic_error("u(h) reduction does not terminate");
    for (int i = 0; i < n_; ++i) {
        if (e[i] < p_) continue;
        e[i] -= p_;
        for (int j = 0; j < n_; ++j) {
            if (R_[i][j].is_zero()) continue;
            std::vector<int> f = e;
            f[j] += 1;
            reduce_into(f, c * R_[i][j], out, depth + 1);
        }
        return;
    }
    Mono m = mono(e);
    auto [it, fresh] = out.emplace(m, c);
    if (!fresh) it->second += c;
}

std::vector<int> HAlgebra::exps(Mono m) const {
    std::vector<int> e(n_);
    for (int i = 0; i < n_; ++i) {
        e[i] = static_cast<int>(m % p_);
        m /= p_;
    }
    return e;
}

Mono HAlgebra::mono(const std::vector<int>& e) const {
    Mono m = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        if (e[i] < 0 || e[i] >= p_) throw std::out_of_range("exponent outside 0..p-1");
        m = m * p_ + e[i];
    }
    return m;
}

int HAlgebra::degree(Mono m) const {
    int d = 0;
    for (int v : exps(m)) d += v;
    return d;
}

Elem HAlgebra::gen(int i) const {
    std::vector<int> e(n_, 0);
    e[i] = 1;
    return Elem::mono(mono(e));
}

Elem HAlgebra::from_vec(const Vec& v) const {
    Elem out;
    for (int i = 0; i < n_; ++i) out += v[i] * gen(i);
    return out;
}

const std::vector<std::pair<Mono, Fq>>& HAlgebra::mul_mono(Mono a, Mono b) const {
    return table_[static_cast<size_t>(a) * dim_ + b];
}

Elem HAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& [ma, ca] : a.c)
        for (const auto& [mb, cb] : b.c) {
            Fq s = ca * cb;
            for (const auto& [m, v] : mul_mono(ma, mb)) out.add_term(m, s * v);
        }
    return out;
}

Elem HAlgebra::power(const Elem& a, int k) const {
    Elem out = Elem::scalar(Fq::one());
    for (int i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

Tensor HAlgebra::coproduct(const Elem& a) const {
    Tensor t(2, dim_);
    for (const auto& [m, c] : a.c) {
        std::vector<int> e = exps(m);
        // product over generators of sum_k C(e,k) x^k (x) x^{e-k}; exponents stay below p
        std::vector<std::pair<std::pair<Mono, Mono>, Fq>> cur{{{0, 0}, c}};
        Mono stride = 1;
        for (int i = 0; i < n_; ++i) {
            std::vector<std::pair<std::pair<Mono, Mono>, Fq>> next;
            for (const auto& [mm, v] : cur)
                for (int k = 0; k <= e[i]; ++k) {
                    Fq b = Fq::of(binom_mod(e[i], k, p_));
                    if (b.is_zero()) continue;
                    next.push_back({{mm.first + k * stride, mm.second + (e[i] - k) * stride}, v * b});
                }
            cur = std::move(next);
            stride *= p_;
        }
        for (const auto& [mm, v] : cur) t.add_term(mm.first * dim_ + mm.second, v);
    }
    return t;
}

Tensor HAlgebra::tensor_mul(const Tensor& a, const Tensor& b) const {
    Tensor out(a.deg, dim_);
    for (const auto& [ka, ca] : a.c) {
        std::vector<Mono> sa = a.slots(ka);
        for (const auto& [kb, cb] : b.c) {
            std::vector<Mono> sb = b.slots(kb);
            std::map<uint64_t, Fq> cur{{0, ca * cb}};
            for (int s = 0; s < a.deg; ++s) {
                std::map<uint64_t, Fq> next;
                for (const auto& [k, v] : cur)
                    for (const auto& [m, w] : mul_mono(sa[s], sb[s])) {
                        auto [it, fresh] = next.emplace(k * dim_ + m, v * w);
                        if (!fresh) it->second += v * w;
                    }
                cur = std::move(next);
            }
            for (const auto& [k, v] : cur) out.add_term(k, v);
        }
    }
    return out;
}

Elem HAlgebra::rho(const Mat& M, const Elem& a) const {
    Elem out;
    for (const auto& [m, c] : a.c) {
        std::vector<int> e = exps(m);
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            std::vector<int> f = e;
            f[i] -= 1;
            Elem img = from_vec(M[i]);
            out += (c * Fq::of(e[i])) * mul(Elem::mono(mono(f)), img);
        }
    }
    return out;
}

Tensor HAlgebra::rho(const Mat& M, const Tensor& t) const {
    Tensor out(t.deg, t.base);
    for (const auto& [k, c] : t.c) {
        std::vector<Mono> s = t.slots(k);
        for (int i = 0; i < t.deg; ++i) {
            Elem r = rho(M, Elem::mono(s[i]));
            for (const auto& [m, v] : r.c) {
                std::vector<Mono> s2 = s;
                s2[i] = m;
                out.add_term(t.key(s2), c * v);
            }
        }
    }
    return out;
}

Fq omega_coeff(int i) {
    int p = field().p();
    // (p-1)! / (i! (p-i)!) mod p
    Fq num = Fq::one(), den = Fq::one();
    for (int k = 1; k <= p - 1; ++k) num *= Fq::of(k);
    for (int k = 1; k <= i; ++k) den *= Fq::of(k);
    for (int k = 1; k <= p - i; ++k) den *= Fq::of(k);
    return num / den;
}

Tensor omega(const HAlgebra& h, const Elem& r) {
    for (const auto& [m, c] : r.c)
        if (h.degree(m) != 1) throw std::invalid_argument("omega expects a linear combination of generators");
    int p = h.p();
    Tensor t(2, h.dim());
    for (int i = 1; i <= p - 1; ++i) t += omega_coeff(i) * pure_tensor({h.power(r, i), h.power(r, p - i)}, h.dim());
    return t;
}

Elem omega_defect_primitive(const HAlgebra& h, const Elem& r, const Elem& s) {
    int p = h.p();
    Elem out;
    for (int i = 1; i <= p - 1; ++i) out += omega_coeff(i) * h.mul(h.power(r, i), h.power(s, p - i));
    return out;
}

PlusSplit decompose_plus(const HAlgebra& h, const Elem& a) {
    if (!a.coeff(0).is_zero()) throw std::invalid_argument("element has a constant term");
    PlusSplit out;
    for (const auto& [m, c] : a.c) (h.degree(m) == 1 ? out.linear : out.tail).add_term(m, c);
    return out;
}

TAlgebra::TAlgebra(const AbelianType& T, Elem theta) : T_(T), theta_(std::move(theta)) {
    h_ = std::make_shared<HAlgebra>(T.R);
    int p = h_->p();
    if (!h_->rho(T.M, theta_).is_zero()) throw std::invalid_argument("theta is not killed by rho_z");
    rho_pow_.assign(p, std::vector<Elem>(h_->dim()));
    for (Mono m = 0; m < h_->dim(); ++m) {
        Elem cur = Elem::mono(m);
        for (int k = 0; k < p; ++k) {
            rho_pow_[k][m] = cur;
            cur = h_->rho(T.M, cur);
        }
    }
    cache_.resize(static_cast<size_t>(dim()) * dim());
    cached_.assign(static_cast<size_t>(dim()) * dim(), 0);
}

std::vector<std::string> TAlgebra::names() const {
    std::vector<std::string> out = h_->names();
    out.push_back("z");
    return out;
}

Elem TAlgebra::gen(int i) const {
    if (i < h_->n()) return h_->gen(i);
    return Elem::mono(h_->dim());
}

const std::vector<std::pair<Mono, Fq>>& TAlgebra::mul_mono(Mono a, Mono b) const {
    size_t idx = static_cast<size_t>(a) * dim() + b;
    if (cached_[idx]) return cache_[idx];
    int p = h_->p();
    Mono hd = h_->dim();
    Mono ra = a % hd, rb = b % hd;
    int za = static_cast<int>(a / hd), zb = static_cast<int>(b / hd);
    Elem out;
    Elem left = Elem::mono(ra);
    for (int k = 0; k <= za; ++k) {
        Fq bin = Fq::of(binom_mod(za, k, p));
        if (bin.is_zero()) continue;
        Elem r = h_->mul(left, rho_pow_[k][rb]);
        int e = za - k + zb;
        if (e < p) {
            for (const auto& [m, c] : r.c) out.add_term(m + static_cast<Mono>(e) * hd, bin * c);
        } else {
            // r z^e = lambda r z^{e-p+1} - (r theta) z^{e-p}
            Elem rt = h_->mul(r, theta_);
            for (const auto& [m, c] : r.c)
                out.add_term(m + static_cast<Mono>(e - p + 1) * hd, bin * T_.lambda * c);
            for (const auto& [m, c] : rt.c) out.add_term(m + static_cast<Mono>(e - p) * hd, -(bin * c));
        }
    }
    auto& slot = cache_[idx];
    for (const auto& [m, c] : out.c) slot.emplace_back(m, c);
    cached_[idx] = 1;
    return slot;
}

Elem TAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& [ma, ca] : a.c)
        for (const auto& [mb, cb] : b.c) {
            Fq s = ca * cb;
            for (const auto& [m, v] : mul_mono(ma, mb)) out.add_term(m, s * v);
        }
    return out;
}

Elem TAlgebra::power(const Elem& a, int k) const {
    Elem out = Elem::scalar(Fq::one());
    for (int i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

Tensor TAlgebra::coproduct(const Elem& a) const {
    int p = h_->p();
    Mono hd = h_->dim();
    Tensor t(2, dim());
    for (const auto& [m, c] : a.c) {
        Tensor dh = h_->coproduct(Elem::mono(m % hd, c));
        int ze = static_cast<int>(m / hd);
        for (const auto& [k, v] : dh.c) {
            Mono l = static_cast<Mono>(k / hd), r = static_cast<Mono>(k % hd);
            for (int j = 0; j <= ze; ++j) {
                Fq b = Fq::of(binom_mod(ze, j, p));
                if (b.is_zero()) continue;
                t.add_term(static_cast<uint64_t>(l + j * hd) * dim() + (r + (ze - j) * hd), v * b);
            }
        }
    }
    return t;
}

Tensor TAlgebra::tensor_mul(const Tensor& a, const Tensor& b) const {
    Tensor out(a.deg, dim());
    for (const auto& [ka, ca] : a.c) {
        std::vector<Mono> sa = a.slots(ka);
        for (const auto& [kb, cb] : b.c) {
            std::vector<Mono> sb = b.slots(kb);
            std::map<uint64_t, Fq> cur{{0, ca * cb}};
            for (int s = 0; s < a.deg; ++s) {
                std::map<uint64_t, Fq> next;
                for (const auto& [k, v] : cur)
                    for (const auto& [m, w] : mul_mono(sa[s], sb[s])) {
                        auto [it, fresh] = next.emplace(k * dim() + m, v * w);
                        if (!fresh) it->second += v * w;
                    }
                cur = std::move(next);
            }
            for (const auto& [k, v] : cur) out.add_term(k, v);
        }
    }
    return out;
}

std::string mono_to_string(Mono m, const std::vector<std::string>& names, int p) {
    std::string out;
    for (size_t i = 0; i < names.size(); ++i) {
        int e = static_cast<int>(m % p);
        m /= p;
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

namespace {

std::string scalar_factor(Fq c) {
    std::string s = to_string(c);
    return s.find('+') != std::string::npos ? "(" + s + ")" : s;
}

std::string term_prefix(Fq c, bool has_mono) {
    if (c.is_one() && has_mono) return "";
    return scalar_factor(c) + (has_mono ? "*" : "");
}

std::vector<std::string> split_top(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && s.compare(i, sep.size(), sep) == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + sep.size();
            i += sep.size() - 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(' '), b = s.find_last_not_of(' ');
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

// parses "coef*x^a*y" into (coef, monomial index)
std::pair<Fq, Mono> parse_term(const std::string& term, const std::vector<std::string>& names, int p) {
    Fq coef = Fq::one();
    std::vector<int> e(names.size(), 0);
    for (const std::string& raw : split_top(term, "*")) {
        std::string f = strip(raw);
        if (f.empty()) throw std::invalid_argument("empty factor in '" + term + "'");
        if (f.front() == '(') {
            coef *= parse_scalar(f.substr(1, f.size() - 2));
            continue;
        }
        std::string base = f, ex;
        if (auto pos = f.find('^'); pos != std::string::npos) {
            base = f.substr(0, pos);
            ex = f.substr(pos + 1);
        }
        bool var = false;
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == base) {
                e[i] += ex.empty() ? 1 : std::stoi(ex);
                var = true;
            }
        if (!var) {
            if (f == "1") continue;
            coef *= parse_scalar(f);
        }
    }
    Mono m = 0;
    for (int i = static_cast<int>(names.size()) - 1; i >= 0; --i) {
        if (e[i] >= p) throw std::invalid_argument("exponent not in PBW range in '" + term + "'");
        m = m * p + e[i];
    }
    return {coef, m};
}

}  // namespace

std::string elem_to_string(const Elem& a, const std::vector<std::string>& names, int p) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : a.c) {
        if (!out.empty()) out += " + ";
        out += term_prefix(c, m != 0) + (m != 0 ? mono_to_string(m, names, p) : "");
    }
    return out;
}

Elem elem_from_string(const std::string& s, const std::vector<std::string>& names, int p) {
    Elem out;
    if (strip(s) == "0") return out;
    for (const std::string& t : split_top(s, " + ")) {
        auto [c, m] = parse_term(strip(t), names, p);
        out.add_term(m, c);
    }
    return out;
}

std::string tensor_to_string(const Tensor& t, const std::vector<std::string>& names, int p) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : t.c) {
        if (!out.empty()) out += " + ";
        std::string body;
        for (Mono m : t.slots(k)) body += (body.empty() ? "" : "|") + mono_to_string(m, names, p);
        out += term_prefix(c, true) + body;
    }
    return out;
}

Tensor tensor_from_string(const std::string& s, const std::vector<std::string>& names, int p, int deg) {
    uint64_t base = 1;
    for (size_t i = 0; i < names.size(); ++i) base *= static_cast<uint64_t>(p);
    Tensor out(deg, base);
    if (strip(s) == "0") return out;
    for (const std::string& t : split_top(s, " + ")) {
        std::vector<std::string> parts = split_top(strip(t), "|");
        if (static_cast<int>(parts.size()) != deg) throw std::invalid_argument("tensor term of wrong degree: " + t);
        // the coefficient is attached to the first slot
        auto [c, m0] = parse_term(parts[0], names, p);
        std::vector<Mono> slots{m0};
        for (size_t i = 1; i < parts.size(); ++i) slots.push_back(parse_term(parts[i], names, p).second);
        out.add_term(out.key(slots), c);
    }
    return out;
}

}  // namespace pgw
