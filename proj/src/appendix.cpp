#include "pgw/appendix.hpp"

#include <stdexcept>

namespace pgw {

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

// monomial x^a y^b z^c as a presentation element
Elem M(int a, int b, int c, Fq s = Fq::one()) {
    const Mono p = static_cast<Mono>(field().p());
    return Elem::mono(static_cast<Mono>(a) + static_cast<Mono>(b) * p + static_cast<Mono>(c) * p * p, s);
}

Elem zero() { return {}; }

struct Rules {
    Elem xp, yp, zp;
    Elem xy, xz, yz;  // [x,y], [x,z], [y,z]
};

Presentation make_presentation(const Rules& r) {
    Presentation P;
    P.names = kXYZ;
    P.pth_power = {r.xp, r.yp, r.zp};
    if (!r.xy.is_zero()) P.bracket[{0, 1}] = r.xy;
    if (!r.xz.is_zero()) P.bracket[{0, 2}] = r.xz;
    if (!r.yz.is_zero()) P.bracket[{1, 2}] = r.yz;
    return P;
}

HopfAlgebra primitive_generated(const Rules& r) {
    PresentedAlgebra A(make_presentation(r));
    Tensor z(2, A.dim());
    return hopf_from_presentation(A, {z, z, z});
}

Tensor tensor_power(const PresentedAlgebra& A, const Tensor& t, int k) {
    Tensor r(2, A.dim());
    r.add_term(0, Fq::one());
    for (int i = 0; i < k; ++i) r = A.tensor_mul(r, t);
    return r;
}

// psi(y) = omega(x); psi(z) = omega(x)(y(x)1 + 1(x)y)^{p-1} + omega(y), or for
// A1 the weighted sum over k of ((p-1)!/(k!(p-k)!)) omega(x)^k (y(x)1 + 1(x)y)^{p-k} + omega(y)
HopfAlgebra a_family(const Rules& r, bool weighted) {
    PresentedAlgebra A(make_presentation(r));
    const int p = A.p();
    Tensor wx = A.omega(A.gen(0));
    Tensor a = A.primitive_part(A.gen(1));
    Tensor Z = A.omega(A.gen(1));
    if (weighted) {
        for (int k = 1; k <= p - 1; ++k) Z += omega_coeff(k) * A.tensor_mul(tensor_power(A, wx, k), tensor_power(A, a, p - k));
    } else {
        Z += A.tensor_mul(wx, tensor_power(A, a, p - 1));
    }
    return hopf_from_presentation(A, {Tensor(2, A.dim()), wx, Z});
}

}  // namespace

std::vector<Fq> b2_f_coeffs() {
    const int p = field().p();
    std::vector<Fq> f;
    for (int i = 1; i <= p - 1; ++i) {
        Fq c = inv(Fq::of(p - i));
        f.push_back(i % 2 == 1 ? c : -c);
    }
    return f;
}

HopfAlgebra build_A(int i) {
    Rules r;
    switch (i) {
        case 1: r = {M(1, 0, 0), M(0, 1, 0), M(0, 0, 1), {}, {}, {}}; break;
        case 2: r = {zero(), M(1, 0, 0), M(0, 1, 0), {}, {}, {}}; break;
        case 3: r = {zero(), zero(), zero(), {}, {}, {}}; break;
        case 4: r = {zero(), zero(), M(1, 0, 0), {}, {}, {}}; break;
        default: throw std::invalid_argument("A rows are A1..A4");
    }
    return a_family(r, i == 1);
}

HopfAlgebra build_A_lambda(Fq lambda) {
    const int p = field().p();
    Rules r;
    r.xp = zero();
    r.yp = zero();
    r.zp = M(p - 1, 1, 0, -Fq::one()) + M(1, 0, 0, lambda);
    r.yz = M(1, 0, 0);
    return a_family(r, false);
}

HopfAlgebra build_B(int i) {
    Rules r;
    r.xp = M(1, 0, 0);
    r.yp = zero();
    r.xy = M(0, 1, 0);
    if (i == 1) {
        r.zp = zero();
        PresentedAlgebra A(make_presentation(r));
        Tensor z(2, A.dim());
        return hopf_from_presentation(A, {z, z, A.omega(A.gen(1))});
    }
    if (i == 2) {
        r.zp = M(0, 0, 1);
        // y f(x) in ordered form, computed in the x, y subalgebra
        PresentedAlgebra xy(make_presentation(r));
        Elem fx;
        auto f = b2_f_coeffs();
        for (size_t k = 0; k < f.size(); ++k) fx += M(static_cast<int>(k) + 1, 0, 0, f[k]);
        r.yz = xy.mul(xy.gen(1), fx);
        PresentedAlgebra A(make_presentation(r));
        Tensor z(2, A.dim());
        return hopf_from_presentation(A, {z, z, A.omega(A.gen(0))});
    }
    if (i == 3) {
        if (field().p() == 2) throw std::invalid_argument("B3 needs p > 2");
        r.zp = zero();
        r.xz = M(0, 0, 1);
        r.yz = M(0, 2, 0);
        PresentedAlgebra A(make_presentation(r));
        Tensor z(2, A.dim());
        return hopf_from_presentation(A, {z, z, Fq::of(-2) * A.tensor(A.gen(0), A.gen(1))});
    }
    throw std::invalid_argument("B rows are B1..B3");
}

HopfAlgebra build_C(int i) {
    Rules r;
    const Elem x = M(1, 0, 0), y = M(0, 1, 0), z = M(0, 0, 1);
    switch (i) {
        case 1: r.xp = x; r.yp = y; r.zp = z; break;
        case 2: r.xp = y; r.yp = z; break;
        case 3: r.yp = z; break;
        case 4: break;
        case 5: r.xy = z; break;
        case 6: r.xp = z; r.xy = z; break;
        case 7: r.zp = z; break;
        case 8: r.xp = y; r.zp = z; break;
        case 9: r.yp = y; r.zp = z; break;
        case 10: r.zp = z; r.xy = z; break;
        case 11: r.xp = x; r.xy = y; break;
        case 12: r.xp = x; r.yp = z; r.xy = y; break;
        case 13: r.xp = x; r.zp = z; r.xy = y; break;
        case 14: r.xp = x; r.yp = z; r.zp = z; r.xy = y; break;
        case 15:
            if (field().p() == 2) throw std::invalid_argument("C15 needs p > 2");
            r.zp = z;
            r.xy = z;
            r.xz = x;
            r.yz = Fq::of(-1) * y;
            break;
        default: throw std::invalid_argument("C rows are C1..C15");
    }
    return primitive_generated(r);
}

HopfAlgebra build_C_lambda_delta(Fq lambda, Fq delta) {
    const int p = field().p();
    if (lambda.is_zero() || pow(lambda, p - 1) != delta || !(delta.is_one() || delta == -Fq::one()))
        throw std::invalid_argument("C(lambda, delta) needs lambda^{p-1} = delta = +-1");
    Rules r;
    r.zp = M(0, 0, 1, delta);
    r.xz = M(1, 0, 0, lambda);
    r.yz = M(0, 1, 0, inv(lambda));
    return primitive_generated(r);
}

HopfAlgebra build_T_row(const TypeContext& ctx, const PDDatum& D) {
    const AbelianType& T = ctx.type();
    const HAlgebra& h = ctx.h();
    const int n = T.n();
    const Mono hd = h.dim();
    Presentation P;
    for (const auto& s : h.names()) P.names.push_back(s);
    P.names.push_back("z");
    for (int i = 0; i < n; ++i) P.pth_power.push_back(h.from_vec(T.R[i]));
    P.pth_power.push_back(Elem::mono(hd, T.lambda) - D.theta);
    for (int i = 0; i < n; ++i) {
        Elem r = Fq::of(-1) * h.from_vec(T.M[i]);
        if (!r.is_zero()) P.bracket[{i, n}] = r;
    }
    PresentedAlgebra A(std::move(P));
    std::vector<Tensor> psi(n + 1, Tensor(2, A.dim()));
    for (const auto& [k, c] : D.chi.c) psi[n].add_term((k / hd) * A.dim() + k % hd, c);
    return hopf_from_presentation(A, psi);
}

std::vector<Fq> sample_params(bool nonzero) {
    const Field& F = field();
    std::vector<Fq> out;
    auto push = [&](Fq a) {
        for (Fq b : out)
            if (b == a) return;
        out.push_back(a);
    };
    if (!nonzero) push(Fq::zero());
    push(Fq::one());
    const uint64_t q1 = F.order() - 1;
    for (uint64_t k = 1; out.size() < 8 && k < q1; ++k) push(F.exp(k));
    return out;
}

std::vector<BuiltT> t_row_data() {
    const int p = field().p();
    std::vector<BuiltT> rows;
    for (const auto& e : type_table(p)) {
        if (e.aplus_empty || e.index == 3 || e.index == 11 || e.index == 13) continue;
        TypeContext ctx(e);
        for (const auto& r : representatives(e)) {
            std::vector<std::pair<std::string, Point>> pts;
            if (!r.is_family()) {
                pts.emplace_back("", r.base);
            } else {
                for (Fq xi : sample_params(r.xi_nonzero)) pts.emplace_back("xi=" + to_string(xi), r.at(xi));
            }
            for (auto& [param, P] : pts) {
                BuiltT b;
                b.name = e.label + " " + r.name;
                b.param = param;
                b.entry = e;
                b.point = P;
                auto d = admissible_datum(ctx, P);
                if (!d) throw std::runtime_error(b.name + " " + param + ": representative is not admissible");
                b.datum = *d;
                rows.push_back(std::move(b));
            }
        }
    }
    return rows;
}

PrimBucket prim_bucket(const HopfAlgebra& H) {
    PrimitiveSpace P = primitive_space(H);
    PrimBucket b;
    b.dim_prim = P.basis.size();
    Echelon span;
    std::vector<Terms> basis;
    auto add = [&](const Terms& t) {
        if (span.insert(SparseVec(t.begin(), t.end()))) {
            basis.push_back(t);
            return true;
        }
        return false;
    };
    add(H.one());
    for (size_t k = 0; k < basis.size(); ++k)
        for (const auto& g : P.basis) add(H.mul(basis[k], g));
    b.dim_uP = basis.size();
    b.uP_commutative = true;
    for (size_t i = 0; i < P.basis.size() && b.uP_commutative; ++i)
        for (size_t j = i + 1; j < P.basis.size(); ++j)
            if (H.mul(P.basis[i], P.basis[j]) != H.mul(P.basis[j], P.basis[i])) {
                b.uP_commutative = false;
                break;
            }
    return b;
}

namespace {

AppendixRow row(std::string table, std::string name, std::string param, std::optional<ListedFlags> flags, size_t prim,
                bool uPc, HopfAlgebra H) {
    AppendixRow r;
    r.table = std::move(table);
    r.name = std::move(name);
    r.param = std::move(param);
    r.flags = flags;
    r.prim_dim = prim;
    r.uP_commutative = uPc;
    r.H = std::move(H);
    return r;
}

ListedFlags fl(bool c, bool s, bool l) { return {c, s, l}; }

}  // namespace

std::vector<AppendixRow> build_T_rows() {
    std::vector<AppendixRow> out;
    for (const auto& b : t_row_data()) {
        TypeContext ctx(b.entry);
        out.push_back(row("T", b.name, b.param, std::nullopt, 2, true, build_T_row(ctx, b.datum)));
    }
    return out;
}

std::vector<AppendixRow> build_appendix_tables() {
    const int p = field().p();
    std::vector<AppendixRow> out;
    out.push_back(row("A", "A1", "", fl(true, true, false), 1, true, build_A(1)));
    for (int i = 2; i <= 4; ++i) out.push_back(row("A", "A" + std::to_string(i), "", fl(true, false, true), 1, true, build_A(i)));
    for (Fq l : sample_params(false))
        out.push_back(row("A", "A(lambda)", "lambda=" + to_string(l), fl(false, false, true), 1, true, build_A_lambda(l)));
    for (int i = 1; i <= 3; ++i) {
        if (i == 3 && p == 2) continue;
        out.push_back(row("B", "B" + std::to_string(i), "", fl(false, false, false), 2, false, build_B(i)));
    }
    for (int i = 1; i <= 15; ++i) {
        if (i == 15 && p == 2) continue;
        ListedFlags f;
        if (i == 1) f = fl(true, true, false);
        else if (i <= 4) f = fl(true, false, true);
        else if (i <= 6) f = fl(false, false, true);
        else if (i <= 9) f = fl(true, false, false);
        else f = fl(false, false, false);
        out.push_back(row("C", "C" + std::to_string(i), "", f, 3, i <= 4 || (i >= 7 && i <= 9), build_C(i)));
    }
    for (Fq l : mu_n(2 * static_cast<uint64_t>(p - 1))) {
        Fq d = pow(l, p - 1);
        out.push_back(row("C", "C(lambda,delta)", "lambda=" + to_string(l) + ",delta=" + to_string(d), fl(false, false, false), 3,
                          false, build_C_lambda_delta(l, d)));
    }
    if (p > 2)
        for (auto& r : build_T_rows()) out.push_back(std::move(r));
    return out;
}

std::optional<HopfAlgebra> build_named_row(const std::string& id) {
    if (id.size() < 2) return std::nullopt;
    const char t = id[0];
    int i = 0;
    try {
        size_t used = 0;
        i = std::stoi(id.substr(1), &used);
        if (used != id.size() - 1) return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (t == 'A' && i >= 1 && i <= 4) return build_A(i);
    if (t == 'B' && i >= 1 && i <= 3) return build_B(i);
    if (t == 'C' && i >= 1 && i <= 15) return build_C(i);
    return std::nullopt;
}

}  // namespace pgw
