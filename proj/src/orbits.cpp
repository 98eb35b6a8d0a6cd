#include "pgw/orbits.hpp"

#include <stdexcept>

namespace pgw {

namespace {

using Opt = std::optional<Fq>;

Opt root(long long n, Fq c) {
    if (c.is_zero()) return n > 0 ? Opt(Fq::zero()) : std::nullopt;
    auto r = solve_power(n, c);
    if (r.empty()) return std::nullopt;
    return r.front();
}

Mat diag(Fq a, Fq b) { return {{a, Fq::zero()}, {Fq::zero(), b}}; }

Fq P0() { return Fq::zero(); }
Fq P1() { return Fq::one(); }

long long ip(int p) { return p; }

// X with X (u, v)^T = (1, 0)^T and det X = 1; (u, v) nonzero
Mat to_e1(Fq u, Fq v) {
    if (!u.is_zero()) return {{inv(u), P0()}, {-v, u}};
    return {{P0(), inv(v)}, {-v, P0()}};
}

AutElement with(Fq gamma, Mat G) { return {gamma, std::move(G)}; }

Representative single(const std::string& name, Point base) {
    Representative r;
    r.name = name;
    r.base = std::move(base);
    r.modulus_text = "1";
    return r;
}

Representative family(const std::string& name, Point base, int idx, uint64_t modulus, const std::string& text,
                      bool nonzero = false) {
    Representative r;
    r.name = name;
    r.base = std::move(base);
    r.xi_index = idx;
    r.modulus = modulus;
    r.modulus_text = text;
    r.xi_nonzero = nonzero;
    return r;
}

std::string flag(const char* name, bool v) { return std::string(name) + (v ? "=0;" : "!=0;"); }

}  // namespace

Point Representative::at(Fq xi) const {
    Point q = base;
    if (xi_index >= 0) q[xi_index] = xi;
    return q;
}

std::vector<Representative> representatives(const TypeEntry& e) {
    const uint64_t p = static_cast<uint64_t>(field().p());
    const Fq o = P1(), z = P0();
    switch (e.index) {
        case 1:
            return {single("(0,0,1,0,0)", {z, z, o, z, z}), single("(1,0,1,0,0)", {o, z, o, z, z}),
                    single("(0,0,0,1,0)", {z, z, z, o, z}), single("(1,0,0,1,0)", {o, z, z, o, z}),
                    single("(0,1,0,1,0)", {z, o, z, o, z}), single("(0,0,1,1,0)", {z, z, o, o, z}),
                    single("(1,0,1,1,0)", {o, z, o, o, z}), single("(0,1,1,1,0)", {z, o, o, o, z})};
        case 2:
            return {single("(0,0,1,0,0)", {z, z, o, z, z}),
                    single("(0,1,1,0,0)", {z, o, o, z, z}),
                    single("(0,0,0,1,0)", {z, z, z, o, z}),
                    single("(0,1,0,1,0)", {z, o, z, o, z}),
                    single("(0,0,0,0,1)", {z, z, z, z, o}),
                    single("(0,1,0,0,1)", {z, o, z, z, o}),
                    family("(0,xi,1,1,0)", {z, z, o, o, z}, 1, 2, "mu_2"),
                    family("(0,xi,1,0,1)", {z, z, o, z, o}, 1, 1, "1")};
        case 4:
            return {single("(0,0,1,0,0)", {z, z, o, z, z}), single("(0,1,1,0,0)", {z, o, o, z, z}),
                    single("(0,0,0,0,1)", {z, z, z, z, o}), single("(0,1,0,0,1)", {z, o, z, z, o}),
                    family("(0,xi,1,0,1)", {z, z, o, z, o}, 1, (p - 1) / 2, "mu_(p-1)/2")};
        case 9:
            return {single("(0,0,1,0,0)", {z, z, o, z, z}), single("(1,0,1,0,0)", {o, z, o, z, z}),
                    single("(0,0,0,0,1)", {z, z, z, z, o}), single("(1,0,0,0,1)", {o, z, z, z, o}),
                    family("(xi,0,1,0,1)", {z, z, o, z, o}, 0, p * p - p - 1, "mu_(p^2-p-1)")};
        case 5:
            return {single("(1,0,0)", {o, z, z}), family("(xi,0,1)", {z, z, o}, 0, (p * p - 1) / 2, "mu_(p^2-1)/2")};
        case 6: return {single("(0,1,0)", {z, o, z})};
        case 7:
        case 14: return {single("(1,0,0)", {o, z, z}), single("(0,1,0)", {z, o, z}), single("(1,1,0)", {o, o, z})};
        case 8:
            return {family("(xi,0,0)", {z, z, z}, 0, (p - 1) / 2, "mu_(p-1)/2", true),
                    family("(xi,1,0)", {z, o, z}, 0, 1, "1")};
        case 10:
            return {single("(1,0,0)", {o, z, z}), family("(xi,0,1)", {z, z, o}, 0, p * p - p + 1, "mu_(p^2-p+1)")};
        case 12: return {single("(1,0,0)", {o, z, z})};
        case 15:
            if (e.aplus_empty) return {};
            return {single("(1,0,0)", {o, z, z})};
        default: return {};
    }
}

Point act(const TypeEntry& e, const AutElement& a, const Point& P) {
    return e.permissible ? act_A3(a, P) : act_A5(a, P);
}

std::optional<PDDatum> admissible_datum(const TypeContext& ctx, const Point& P) {
    return ctx.entry().permissible ? aplus_membership(ctx, P) : bplus_membership(ctx, P);
}

bool in_acting_group(const TypeEntry& e, const AutElement& a) {
    if (!is_aut(e, a)) return false;
    return e.index != 9 || a.G[0][1].is_zero();
}

std::optional<NormalForm> normal_form(const TypeEntry& e, const Point& P) {
    const int p = field().p();
    const Fq o = P1();
    std::optional<AutElement> phi;
    auto fail = [] { return std::optional<NormalForm>(); };
    if (e.permissible) {
        if (P.size() != 3) throw std::invalid_argument("expected three coordinates");
        Fq a = P[0], b = P[1], c = P[2];
        switch (e.index) {
            case 5:
                if (c.is_zero()) {
                    auto g = root(2, inv(a));
                    if (!g) return fail();
                    phi = with(*g, diag(o, *g));
                } else {
                    auto u = root(ip(p) + 1, inv(c));
                    if (!u) return fail();
                    Fq g = pow(*u, p);
                    phi = with(g, diag(o, g));
                }
                break;
            case 6: phi = with(o, diag(inv(b), o)); break;
            case 7:
                if (b.is_zero()) phi = with(o, diag(o, inv(a)));
                else if (a.is_zero()) phi = with(o, diag(inv(b), o));
                else phi = with(o, diag(inv(b), b / a));
                break;
            case 8:
                phi = b.is_zero() ? aut_identity() : with(o, diag(inv(b), inv(b)));
                break;
            case 10:
                if (c.is_zero()) {
                    auto al = root(2, inv(a));
                    if (!al) return fail();
                    phi = with(pow_signed(*al, 1 - p), diag(*al, pow(*al, p)));
                } else {
                    auto u = root(ip(p) * p - p + 1, inv(c));
                    if (!u) return fail();
                    Fq al = pow(*u, p);
                    phi = with(pow_signed(al, 1 - p), diag(al, pow(al, p)));
                }
                break;
            case 12: {
                auto al = root(ip(p) + 1, inv(a));
                if (!al) return fail();
                phi = with(o, diag(*al, pow(*al, p)));
                break;
            }
            case 14:
                if (b.is_zero() && c.is_zero()) {
                    phi = with(o, diag(inv(a), o));
                } else {
                    AutElement g0 = with(o, mat_transpose(to_e1(b, c)));
                    Point q = act_A3(g0, P);
                    phi = q[0].is_zero() ? g0 : aut_compose(with(o, diag(o, inv(q[0]))), g0);
                }
                break;
            case 15: phi = with(o, diag(inv(a), o)); break;
            default: return fail();
        }
    } else {
        if (P.size() != 5) throw std::invalid_argument("expected five coordinates");
        Fq a = P[0], b = P[1], c = P[2], d = P[3], ee = P[4];
        switch (e.index) {
            case 1: {
                AutElement first = aut_identity();
                if (!(d.is_zero() && ee.is_zero())) {
                    first = with(o, mat_transpose(to_e1(d, ee)));
                    Point q = act_A5(first, P);
                    if (!q[2].is_zero()) first = aut_compose(with(o, diag(o, inv(q[2]))), first);
                } else {
                    first = with(inv(c), mat_identity(2));
                }
                Point q = act_A5(first, P);
                Fq qa = q[0], qb = q[1];
                AutElement second = aut_identity();
                if (q[3].is_zero()) {
                    if (!(qa.is_zero() && qb.is_zero())) second = with(o, mat_transpose(to_e1(qa, qb)));
                } else if (q[2].is_zero()) {
                    if (!qb.is_zero()) {
                        second = with(o, {{o, P0()}, {-qa / qb, inv(qb)}});
                    } else if (!qa.is_zero()) {
                        auto u = root(ip(p) * p - 1, inv(qa));
                        if (!u) return fail();
                        second = with(pow(*u, p), diag(inv(*u), o));
                    }
                } else {
                    if (!qb.is_zero()) {
                        auto u = root(ip(p) * p - p + 1, inv(qb));
                        if (!u) return fail();
                        Fq g11 = inv(*u);
                        second = with(pow(*u, p), {{g11, P0()}, {-g11 * qa / qb, pow_signed(*u, 1 - p)}});
                    } else if (!qa.is_zero()) {
                        auto u = root(ip(p) * p - 1, inv(qa));
                        if (!u) return fail();
                        second = with(pow(*u, p), diag(inv(*u), pow_signed(*u, 1 - p)));
                    }
                }
                phi = aut_compose(second, first);
                break;
            }
            case 2: {
                // G = [[gamma alpha, beta], [0, alpha]], s = gamma alpha
                Fq gamma, s;
                if (!d.is_zero()) {
                    if (c.is_zero()) {
                        if (b.is_zero()) {
                            gamma = o;
                            s = inv(d);
                        } else {
                            auto u = root(ip(p) * p - p - 1, d / b);
                            if (!u) return fail();
                            gamma = pow(*u, p);
                            s = inv(*u * d);
                        }
                    } else {
                        auto r = root(2, inv(c));
                        if (!r) return fail();
                        s = *r;
                        gamma = pow_signed(s * d, -p);
                    }
                    Fq alpha = s / gamma;
                    phi = with(gamma, {{s, -alpha * ee / d}, {P0(), alpha}});
                } else if (!ee.is_zero()) {
                    if (c.is_zero()) {
                        if (b.is_zero()) {
                            phi = with(o, diag(inv(ee), inv(ee)));
                        } else {
                            auto u = root(ip(p) * p - 1, ee / b);
                            if (!u) return fail();
                            Fq g = pow(*u, p), alpha = inv(*u * ee);
                            phi = with(g, diag(g * alpha, alpha));
                        }
                    } else {
                        auto r = root(2, inv(c));
                        if (!r) return fail();
                        auto u = root(p - 1, *r * ee);
                        if (!u) return fail();
                        Fq g = pow(*u, p);
                        phi = with(g, diag(*r, *r / g));
                    }
                } else {
                    auto r = root(2, inv(c));
                    if (!r) return fail();
                    s = *r;
                    gamma = o;
                    if (!b.is_zero()) {
                        auto g = root(p - 1, inv(s * b));
                        if (!g) return fail();
                        gamma = *g;
                    }
                    phi = with(gamma, diag(s, s / gamma));
                }
                break;
            }
            case 4: {
                // G = diag(alpha in F_p^x, beta)
                if (ee.is_zero()) {
                    if (b.is_zero()) {
                        phi = with(o, diag(o, inv(c)));
                    } else {
                        for (int k = 1; k < p && !phi; ++k) {
                            Fq al = Fq::of(k);
                            if (auto g = root(p - 1, al * c / b)) phi = with(*g, diag(al, inv(*g * al * c)));
                        }
                        if (!phi) return fail();
                    }
                } else if (c.is_zero()) {
                    if (b.is_zero()) {
                        phi = with(o, diag(o, inv(ee)));
                    } else {
                        auto u = root(ip(p) * p - 1, ee / b);
                        if (!u) return fail();
                        phi = with(pow(*u, p), diag(o, inv(*u * ee)));
                    }
                } else {
                    for (int k = 1; k < p && !phi; ++k) {
                        Fq al = Fq::of(k);
                        if (auto u = root(p - 1, ee / (al * c))) phi = with(pow(*u, p), diag(al, inv(*u * ee)));
                    }
                    if (!phi) return fail();
                }
                break;
            }
            case 9: {
                // G = diag(alpha, alpha^p)
                Fq al = o, g;
                if (ee.is_zero()) {
                    if (!a.is_zero()) {
                        auto r = root(ip(p) * p + p - 1, a * pow_signed(c, -p));
                        if (!r) return fail();
                        al = *r;
                    }
                    g = inv(pow(al, p + 1) * c);
                } else if (c.is_zero()) {
                    if (!a.is_zero()) {
                        auto r = root(ip(p) * p * p - 1, a * pow_signed(ee, -ip(p) * p));
                        if (!r) return fail();
                        al = *r;
                    }
                    g = pow_signed(al, -ip(p) * p) * pow_signed(ee, -p);
                } else {
                    auto r = root(ip(p) * p - p - 1, c * pow_signed(ee, -p));
                    if (!r) return fail();
                    al = *r;
                    g = pow_signed(al, -ip(p) * p) * pow_signed(ee, -p);
                }
                phi = with(g, diag(al, pow(al, p)));
                break;
            }
            default: return fail();
        }
    }
    if (!phi || !in_acting_group(e, *phi)) return fail();
    Point q = act(e, *phi, P);
    auto reps = representatives(e);
    for (size_t i = 0; i < reps.size(); ++i) {
        const auto& r = reps[i];
        Fq xi = r.is_family() ? q[r.xi_index] : Fq::zero();
        if (r.is_family() && r.xi_nonzero && xi.is_zero()) continue;
        if (r.at(xi) == q) return NormalForm{static_cast<int>(i), xi, q, *phi};
    }
    return fail();
}

std::optional<AutElement> ratio_aut(const TypeEntry& e, int rep, Fq xi, Fq tau) {
    const int p = field().p();
    auto reps = representatives(e);
    if (rep < 0 || rep >= static_cast<int>(reps.size()) || !reps[rep].is_family()) return std::nullopt;
    const Representative& r = reps[rep];
    if (tau.is_zero() || !pow(tau, r.modulus).is_one()) return std::nullopt;
    const Fq o = P1();
    std::optional<AutElement> phi;
    auto pick = [&](long long n, Fq c, uint64_t order) -> Opt {
        for (Fq u : solve_power(n, c))
            if (pow(u, order).is_one()) return u;
        return std::nullopt;
    };
    const uint64_t up = static_cast<uint64_t>(p);
    switch (e.index) {
        case 5:
            if (auto u = pick(-2, tau, up * up - 1)) {
                Fq al = pow_signed(*u, -(p + 1)), g = pow(*u, p);
                phi = with(g, diag(al, al * g));
            }
            break;
        case 8:
            if (rep == 0) {
                for (int k = 1; k < p && !phi; ++k)
                    if (Fq::of(static_cast<long long>(k) * k) == tau) phi = with(o, diag(Fq::of(k), Fq::of(k)));
            } else {
                phi = aut_identity();
            }
            break;
        case 10:
            if (auto u = pick(2 * p, tau, up * up - up + 1)) {
                Fq al = pow(*u, p);
                phi = with(pow_signed(al, 1 - p), diag(al, pow(al, p)));
            }
            break;
        case 2:
            if (rep == 6) phi = with(tau, diag(tau, o));
            else phi = aut_identity();
            break;
        case 4:
            for (int k = 1; k < p && !phi; ++k) {
                Fq w = Fq::of(k);
                if (w * w != tau) continue;
                if (auto u = pick(p - 1, w, (up - 1) * (up - 1))) phi = with(pow(*u, p), diag(inv(w), inv(*u)));
            }
            break;
        case 9:
            if (auto al = pick(-2 * p, tau, up * up - up - 1)) phi = with(pow_signed(*al, -p * p), diag(*al, pow(*al, p)));
            break;
        default: break;
    }
    if (!phi || !in_acting_group(e, *phi)) return std::nullopt;
    if (act(e, *phi, r.at(xi)) != r.at(tau * xi)) return std::nullopt;
    return phi;
}

std::string orbit_invariant(const TypeEntry& e, const Point& P) {
    const long long p = field().p();
    const uint64_t up = static_cast<uint64_t>(p);
    std::string s = e.label + ":";
    auto scalar = [&](Fq v) { s += "I=" + to_string(v) + ";"; };
    if (e.permissible) {
        Fq a = P[0], b = P[1], c = P[2];
        switch (e.index) {
            case 5:
            case 10:
                s += flag("c", c.is_zero());
                if (!c.is_zero()) {
                    if (e.index == 5) scalar(pow(pow(a, up + 1) * pow_signed(c, -2 * p), (up - 1) / 2));
                    else scalar(pow(a, up * up - up + 1) * pow_signed(c, -2 * p));
                }
                break;
            case 7:
                s += flag("a", a.is_zero()) + flag("b", b.is_zero());
                break;
            case 8:
                s += flag("b", b.is_zero());
                scalar(b.is_zero() ? pow(a, (up - 1) / 2) : a / (b * b));
                break;
            case 14:
                s += flag("a", a.is_zero()) + flag("bc", b.is_zero() && c.is_zero());
                break;
            default: break;
        }
        return s;
    }
    Fq a = P[0], b = P[1], c = P[2], d = P[3], ee = P[4];
    switch (e.index) {
        case 1:
            s += flag("de", d.is_zero() && ee.is_zero()) + flag("c", c.is_zero()) + flag("ab", a.is_zero() && b.is_zero()) +
                 flag("ae-bd", (a * ee - b * d).is_zero());
            break;
        case 2:
            s += flag("d", d.is_zero());
            if (d.is_zero()) s += flag("e", ee.is_zero());
            s += flag("c", c.is_zero());
            if (c.is_zero() || (d.is_zero() && ee.is_zero())) {
                s += flag("b", b.is_zero());
            } else if (!d.is_zero()) {
                scalar(b * b * pow_signed(c, p * (p - 1) - 1) * pow_signed(d, -2 * p * (p - 1)));
            } else {
                scalar(b * pow_signed(c, -(p + 1) / 2) * pow(ee, up));
            }
            break;
        case 4:
            s += flag("c", c.is_zero()) + flag("e", ee.is_zero());
            if (c.is_zero() || ee.is_zero()) s += flag("b", b.is_zero());
            else scalar(pow(b * pow_signed(c, -(p + 1)) * pow(ee, up), (up - 1) / 2));
            break;
        case 9: {
            s += flag("c", c.is_zero()) + flag("e", ee.is_zero());
            long long n = p * p - p - 1;
            if (c.is_zero() || ee.is_zero()) s += flag("a", a.is_zero());
            else scalar(pow(a, static_cast<uint64_t>(n)) * pow_signed(c, 1 - p * p * p) * pow(ee, static_cast<uint64_t>(p * p * p + p * p - p)));
            break;
        }
        default: break;
    }
    return s;
}

Point random_admissible_point(const TypeEntry& e, std::mt19937_64& rng, int k) {
    auto r = [&] { return random_subfield(rng, k); };
    auto fp = [&] { return random_subfield(rng, 1); };
    const Fq z = P0();
    for (;;) {
        Point P;
        switch (e.index) {
            case 1: P = {r(), r(), r(), r(), r()}; break;
            case 2: P = {z, r(), r(), r(), r()}; break;
            case 4: P = {z, r(), r(), z, r()}; break;
            case 9: P = {r(), z, r(), z, r()}; break;
            case 5:
            case 10: P = {r(), z, r()}; break;
            case 6: P = {z, fp(), z}; break;
            case 7:
            case 8: P = {r(), fp(), z}; break;
            case 12: P = {r(), z, z}; break;
            case 14: P = {fp(), fp(), fp()}; break;
            case 15: P = {r(), z, z}; break;
            default: throw std::invalid_argument("no admissible points for " + e.label);
        }
        if (e.index == 15 && e.aplus_empty) throw std::invalid_argument("no admissible points for " + e.label);
        bool zero = e.permissible ? (P[0].is_zero() && P[1].is_zero() && P[2].is_zero())
                                  : (P[2].is_zero() && P[3].is_zero() && P[4].is_zero());
        if (!zero) return P;
    }
}

OrbitAnswer orbit_same(const TypeEntry& e, const Point& P, const Point& Q) {
    OrbitAnswer out;
    std::string ip_ = orbit_invariant(e, P), iq = orbit_invariant(e, Q);
    if (ip_ != iq) {
        out.verdict = OrbitVerdict::Different;
        out.reason = "invariants differ: " + ip_ + " vs " + iq;
        return out;
    }
    auto np = normal_form(e, P), nq = normal_form(e, Q);
    if (!np || !nq) {
        out.reason = "normal form needs a root outside " + field().describe();
        return out;
    }
    if (np->rep != nq->rep) {
        out.verdict = OrbitVerdict::Different;
        out.reason = "different representatives";
        return out;
    }
    AutElement mid = aut_identity();
    if (np->point != nq->point) {
        if (np->xi.is_zero()) {
            out.verdict = OrbitVerdict::Different;
            out.reason = "family parameter zero on one side only";
            return out;
        }
        const Fq tau = nq->xi / np->xi;
        const Representative r0 = representatives(e)[static_cast<size_t>(np->rep)];
        if (!pow(tau, r0.modulus).is_one()) {
            out.verdict = OrbitVerdict::Different;
            out.reason = "ratio " + to_string(tau) + " is not in " + r0.modulus_text;
            return out;
        }
        auto r = ratio_aut(e, np->rep, np->xi, tau);
        if (!r) {
            out.reason = "ratio " + to_string(tau) + " is in " + r0.modulus_text + " but its automorphism needs a root outside " +
                         field().describe();
            return out;
        }
        mid = *r;
    }
    AutElement phi = aut_compose(aut_inverse(nq->phi), aut_compose(mid, np->phi));
    if (!in_acting_group(e, phi) || act(e, phi, P) != Q) {
        out.reason = "composed automorphism failed verification";
        return out;
    }
    out.verdict = OrbitVerdict::Same;
    out.phi = phi;
    out.reason = "explicit automorphism";
    return out;
}

}  // namespace pgw
