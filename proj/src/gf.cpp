#include "pgw/gf.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pgw {

namespace {

thread_local std::shared_ptr<const Field> tl_field;

constexpr uint64_t kOnes = 0x1111111111111111ULL;
constexpr uint64_t kHigh = 0x8888888888888888ULL;
constexpr uint64_t kTableLimit = 1ULL << 22;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// dense polynomials over F_p, low degree first
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
    int r = 1;
    for (int e = p - 2, b = a % p; e > 0; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

Poly poly_mod(Poly a, const Poly& f, int p) {
    trim(a);
    int df = static_cast<int>(f.size()) - 1;
    int lead_inv = inv_mod(f.back(), p);
    while (static_cast<int>(a.size()) - 1 >= df) {
        int da = static_cast<int>(a.size()) - 1;
        int c = a.back() * lead_inv % p;
        for (int i = 0; i <= df; ++i)
            a[da - df + i] = ((a[da - df + i] - c * f[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(r, f, p);
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: no root-free factor of degree <= m/2
bool irreducible(const Poly& f, int p) {
    int m = static_cast<int>(f.size()) - 1;
    if (m == 1) return true;
    if (f[0] == 0) return false;
    Poly xp = {0, 1};
    for (int i = 1; i <= m / 2; ++i) {
        Poly r = {1};
        Poly base = xp;
        for (int e = p; e > 0; e >>= 1) {
            if (e & 1) r = poly_mulmod(r, base, f, p);
            base = poly_mulmod(base, base, f, p);
        }
        xp = r;
        Poly d = xp;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = (d[1] - 1 + p) % p;
        trim(d);
        Poly g = poly_gcd(f, d, p);
        if (g.size() > 1) return false;
    }
    return true;
}

Poly smallest_irreducible(int p, int m) {
    uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (uint64_t n = 0; n < count; ++n) {
        Poly f(m + 1, 0);
        f[m] = 1;
        uint64_t t = n;
        // most significant digit of n is c0, so iteration is lexicographic low-degree-first
        for (int i = m - 1; i >= 0; --i) {
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        if (irreducible(f, p)) return f;
    }
    throw std::runtime_error("no irreducible polynomial found");
}

std::mutex registry_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const Field>> registry;

}  // namespace

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::shared_ptr<const Field> Field::create(int p, int m) {
    if (p <= 2 || !is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("p must be an odd prime");
    if (p > 7) throw std::invalid_argument("only p <= 7 is supported");
    if (m < 1 || m > 16) throw std::invalid_argument("m must lie in 1..16");
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto key = std::make_pair(p, m);
    if (auto it = registry.find(key); it != registry.end()) return it->second;

    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = 1;
    for (int i = 0; i < m; ++i) f->q_ *= static_cast<uint64_t>(p);
    f->modulus_ = smallest_irreducible(p, m);
    if (!irreducible(f->modulus_, p)) throw std::logic_error("modulus not irreducible");
    f->primes_ = prime_factors(f->q_ - 1);

    // primitive element: first dense code whose order is q-1
    uint64_t n = f->q_ - 1;
    for (uint64_t c = 1; c < f->q_; ++c) {
        uint64_t g = f->pack_code(c);
        bool ok = true;
        for (uint64_t l : f->primes_)
            if (f->ppow(g, n / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            f->prim_packed_ = g;
            break;
        }
    }
    if (f->prim_packed_ == 0 && f->q_ > 2) throw std::logic_error("no primitive element");

    if (f->q_ <= kTableLimit) {
        f->table_ = true;
        f->exp_code_.resize(n);
        f->log_.assign(f->q_, 0);
        uint64_t cur = 1;
        for (uint64_t k = 0; k < n; ++k) {
            uint64_t code = f->unpack_code(cur);
            f->exp_code_[k] = static_cast<uint32_t>(code);
            f->log_[code] = static_cast<uint32_t>(k);
            cur = f->pmul(cur, f->prim_packed_);
        }
        f->zech_.resize(n);
        for (uint64_t k = 0; k < n; ++k) {
            uint64_t code = f->exp_code_[k];
            uint64_t c0 = code % p;
            uint64_t shifted = code - c0 + (c0 + 1) % p;
            f->zech_[k] = shifted == 0 ? 0 : f->log_[shifted] + 1;
        }
        f->prim_ = Fq{2};
    } else {
        f->prim_ = Fq{f->prim_packed_};
    }
    registry[key] = f;
    return f;
}

uint64_t Field::pack_code(uint64_t code) const {
    uint64_t out = 0;
    for (int i = 0; i < m_; ++i) {
        out |= (code % p_) << (4 * i);
        code /= p_;
    }
    return out;
}

uint64_t Field::unpack_code(uint64_t packed) const {
    uint64_t code = 0;
    for (int i = m_ - 1; i >= 0; --i) code = code * p_ + ((packed >> (4 * i)) & 0xF);
    return code;
}

uint64_t Field::pack(const std::vector<int>& c) const {
    uint64_t out = 0;
    for (int i = 0; i < m_ && i < static_cast<int>(c.size()); ++i) {
        int v = ((c[i] % p_) + p_) % p_;
        out |= static_cast<uint64_t>(v) << (4 * i);
    }
    return out;
}

uint64_t Field::padd(uint64_t a, uint64_t b) const {
    uint64_t t = a + b;
    uint64_t ge = ((t + (8 - p_) * kOnes) & kHigh) >> 3;
    return t - ge * p_;
}

uint64_t Field::pneg(uint64_t a) const {
    uint64_t mask = m_ == 16 ? ~0ULL : ((1ULL << (4 * m_)) - 1);
    uint64_t t = (p_ * kOnes & mask) - a;
    uint64_t ge = ((t + (8 - p_) * kOnes) & kHigh & mask) >> 3;
    return t - ge * p_;
}

uint64_t Field::pmul(uint64_t a, uint64_t b) const {
    int x[16], y[16], r[32] = {0};
    for (int i = 0; i < m_; ++i) {
        x[i] = (a >> (4 * i)) & 0xF;
        y[i] = (b >> (4 * i)) & 0xF;
    }
    for (int i = 0; i < m_; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < m_; ++j) r[i + j] += x[i] * y[j];
    }
    for (int k = 2 * m_ - 2; k >= m_; --k) {
        int c = r[k] % p_;
        if (!c) continue;
        for (int i = 0; i < m_; ++i) r[k - m_ + i] += c * (p_ - modulus_[i]);
    }
    uint64_t out = 0;
    for (int i = 0; i < m_; ++i) out |= static_cast<uint64_t>(r[i] % p_) << (4 * i);
    return out;
}

uint64_t Field::ppow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = pmul(r, a);
        a = pmul(a, a);
        e >>= 1;
    }
    return r;
}

Fq Field::add(Fq a, Fq b) const {
    if (!table_) return Fq{padd(a.v, b.v)};
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    uint64_t n = q_ - 1;
    uint64_t i = a.v - 1, j = b.v - 1;
    uint64_t k = j >= i ? j - i : j + n - i;
    uint32_t z = zech_[k];
    if (z == 0) return Fq{0};
    uint64_t r = i + z - 1;
    if (r >= n) r -= n;
    return Fq{r + 1};
}

Fq Field::neg(Fq a) const {
    if (!table_) return Fq{pneg(a.v)};
    if (a.v == 0) return a;
    uint64_t n = q_ - 1;
    uint64_t r = a.v - 1 + n / 2;
    if (r >= n) r -= n;
    return Fq{r + 1};
}

Fq Field::mul(Fq a, Fq b) const {
    if (!table_) return Fq{pmul(a.v, b.v)};
    if (a.v == 0 || b.v == 0) return Fq{0};
    uint64_t n = q_ - 1;
    uint64_t r = a.v - 1 + b.v - 1;
    if (r >= n) r -= n;
    return Fq{r + 1};
}

Fq Field::inv(Fq a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    if (!table_) return Fq{ppow(a.v, q_ - 2)};
    uint64_t n = q_ - 1;
    uint64_t i = a.v - 1;
    return Fq{(i == 0 ? 0 : n - i) + 1};
}

Fq Field::pow(Fq a, uint64_t e) const {
    if (!table_) return Fq{ppow(a.v, e)};
    if (e == 0) return Fq{1};
    if (a.v == 0) return Fq{0};
    uint64_t n = q_ - 1;
    return Fq{mulmod(a.v - 1, e % n, n) + 1};
}

Fq Field::from_int(long long n) const {
    long long r = ((n % p_) + p_) % p_;
    return from_code(static_cast<uint64_t>(r));
}

Fq Field::from_coeffs(const std::vector<int>& c) const {
    Poly red = c;
    for (auto& v : red) v = ((v % p_) + p_) % p_;
    if (static_cast<int>(red.size()) > m_) red = poly_mod(red, modulus_, p_);
    if (table_) return from_code(unpack_code(pack(red)));
    return Fq{pack(red)};
}

std::vector<int> Field::coeffs(Fq a) const {
    std::vector<int> out(m_, 0);
    uint64_t packed;
    if (table_) {
        if (a.v == 0) return out;
        packed = pack_code(exp_code_[a.v - 1]);
    } else {
        packed = a.v;
    }
    for (int i = 0; i < m_; ++i) out[i] = (packed >> (4 * i)) & 0xF;
    return out;
}

uint64_t Field::code(Fq a) const {
    if (table_) return a.v == 0 ? 0 : exp_code_[a.v - 1];
    return unpack_code(a.v);
}

Fq Field::from_code(uint64_t c) const {
    if (c >= q_) throw std::out_of_range("field code out of range");
    if (table_) return c == 0 ? Fq{0} : Fq{static_cast<uint64_t>(log_[c]) + 1};
    return Fq{pack_code(c)};
}

uint64_t Field::plog(uint64_t a) const {
    // Pohlig-Hellman with baby-step giant-step on each prime power
    uint64_t n = q_ - 1;
    unsigned __int128 x = 0, mod = 1;
    for (uint64_t l : primes_) {
        uint64_t le = 1;
        int e = 0;
        while ((n / le) % l == 0) {
            le *= l;
            ++e;
        }
        uint64_t gamma = ppow(prim_packed_, n / l);
        uint64_t steps = 1;
        while (steps * steps < l) ++steps;
        std::unordered_map<uint64_t, uint64_t> baby;
        uint64_t cur = 1;
        for (uint64_t j = 0; j < steps; ++j) {
            baby.emplace(cur, j);
            cur = pmul(cur, gamma);
        }
        uint64_t giant = ppow(ppow(gamma, steps), l - 1);  // gamma^{-steps}
        uint64_t xk = 0, lk = 1;
        uint64_t ginv = ppow(prim_packed_, n - 1);
        for (int k = 0; k < e; ++k) {
            uint64_t h = pmul(a, ppow(ginv, xk));
            h = ppow(h, n / (lk * l));
            uint64_t d = UINT64_MAX, y = h;
            for (uint64_t i = 0; i <= steps; ++i) {
                auto it = baby.find(y);
                if (it != baby.end()) {
                    d = i * steps + it->second;
                    break;
                }
                y = pmul(y, giant);
            }
            if (d == UINT64_MAX) throw std::logic_error("discrete log failed");
            xk += d * lk;
            lk *= l;
        }
        // CRT: x = x mod `mod`, xk mod le
        unsigned __int128 t = x;
        while (static_cast<uint64_t>(t % le) != xk % le) t += mod;
        x = t;
        mod *= le;
    }
    return static_cast<uint64_t>(x % n);
}

uint64_t Field::log(Fq a) const {
    if (a.v == 0) throw std::domain_error("log of zero");
    if (table_) return a.v - 1;
    return plog(a.v);
}

Fq Field::exp(uint64_t k) const {
    uint64_t n = q_ - 1;
    k %= n;
    if (table_) return Fq{k + 1};
    return Fq{ppow(prim_packed_, k)};
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << p_ << "^" << m_ << ")";
    return os.str();
}

FieldScope::FieldScope(std::shared_ptr<const Field> f) : prev_(tl_field) { tl_field = std::move(f); }
FieldScope::~FieldScope() { tl_field = prev_; }

const Field& field() {
    if (!tl_field) throw std::logic_error("no current field");
    return *tl_field;
}

std::shared_ptr<const Field> field_ptr() { return tl_field; }

Fq Fq::of(long long n) { return field().from_int(n); }

Fq pow_signed(Fq a, long long e) {
    if (e >= 0) return pow(a, static_cast<uint64_t>(e));
    return pow(inv(a), static_cast<uint64_t>(-e));
}

Fq frobenius(Fq a) { return pow(a, static_cast<uint64_t>(field().p())); }

Fq inv_frobenius(Fq a) {
    uint64_t e = 1;
    for (int i = 0; i < field().m() - 1; ++i) e *= static_cast<uint64_t>(field().p());
    return pow(a, e);
}

std::vector<Fq> mu_n(uint64_t n) {
    const Field& F = field();
    uint64_t N = F.order() - 1;
    uint64_t g = gcd_u64(n, N);
    std::vector<Fq> out;
    for (uint64_t k = 0; k < g; ++k) out.push_back(F.exp(k * (N / g)));
    return out;
}

std::vector<Fq> solve_power(long long n, Fq c) {
    const Field& F = field();
    if (c.is_zero()) {
        if (n <= 0) throw std::invalid_argument("solve_power: c = 0 with n <= 0");
        return {Fq::zero()};
    }
    uint64_t N = F.order() - 1;
    // x^n = c with x = g^k: n k = log c (mod N)
    long long nn = n % static_cast<long long>(N);
    if (nn < 0) nn += static_cast<long long>(N);
    uint64_t un = static_cast<uint64_t>(nn);
    uint64_t L = F.log(c);
    uint64_t g = gcd_u64(un, N);  // gcd(0, N) = N
    if (L % g != 0) return {};
    uint64_t Ng = N / g, ng = un / g, Lg = L / g;
    // inverse of ng modulo Ng
    uint64_t k0 = 0;
    if (Ng > 1) {
        long long t0 = 0, t1 = 1;
        long long r0 = static_cast<long long>(Ng), r1 = static_cast<long long>(ng % Ng);
        while (r1 != 0) {
            long long qq = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - qq * r1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - qq * t1);
        }
        long long invn = ((t0 % static_cast<long long>(Ng)) + static_cast<long long>(Ng)) % static_cast<long long>(Ng);
        k0 = mulmod(Lg % Ng, static_cast<uint64_t>(invn), Ng);
    }
    std::vector<Fq> out;
    for (uint64_t j = 0; j < g; ++j) out.push_back(F.exp(k0 + j * Ng));
    return out;
}

bool in_prime_field(Fq a) { return frobenius(a) == a; }

Fq random_fq(std::mt19937_64& rng) {
    const Field& F = field();
    std::uniform_int_distribution<uint64_t> d(0, F.order() - 1);
    return F.from_code(d(rng));
}

Fq random_nonzero(std::mt19937_64& rng) {
    const Field& F = field();
    std::uniform_int_distribution<uint64_t> d(1, F.order() - 1);
    return F.from_code(d(rng));
}

Fq random_subfield(std::mt19937_64& rng, int k, bool nonzero) {
    const Field& F = field();
    if (k <= 0 || F.m() % k != 0) throw std::invalid_argument("subfield degree must divide m");
    uint64_t sub = 1;
    for (int i = 0; i < k; ++i) sub *= static_cast<uint64_t>(F.p());
    std::uniform_int_distribution<uint64_t> d(nonzero ? 1 : 0, sub - 1);
    uint64_t r = d(rng);
    if (r == 0) return Fq::zero();
    uint64_t step = (F.order() - 1) / (sub - 1);
    return F.exp((r - 1) * step);
}

std::string to_string(Fq a) {
    const Field& F = field();
    std::vector<int> c = F.coeffs(a);
    std::string out;
    for (int i = F.m() - 1; i >= 0; --i) {
        if (!c[i]) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]);
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Fq parse_scalar(const std::string& s) {
    const Field& F = field();
    std::vector<int> c(F.m(), 0);
    size_t i = 0;
    auto read_int = [&](int& v) {
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) return false;
        v = std::stoi(s.substr(i, j - i));
        i = j;
        return true;
    };
    if (s.empty()) throw std::invalid_argument("empty scalar");
    while (i < s.size()) {
        int coef = 1, deg = 0;
        bool has_coef = read_int(coef);
        if (i < s.size() && s[i] == 't') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (!read_int(deg)) throw std::invalid_argument("bad scalar: " + s);
            }
        } else if (!has_coef) {
            throw std::invalid_argument("bad scalar: " + s);
        }
        if (deg >= F.m()) {
            std::vector<int> big(deg + 1, 0);
            big[deg] = coef;
            Fq extra = F.from_coeffs(big);
            std::vector<int> ec = F.coeffs(extra);
            for (int k = 0; k < F.m(); ++k) c[k] += ec[k];
        } else {
            c[deg] += coef;
        }
        if (i < s.size()) {
            if (s[i] != '+') throw std::invalid_argument("bad scalar: " + s);
            ++i;
        }
    }
    return F.from_coeffs(c);
}

}  // namespace pgw
