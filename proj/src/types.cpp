#include "pgw/types.hpp"

#include <cctype>
#include <stdexcept>

namespace pgw {

char gkind_char(GKind g) { return g == GKind::N ? 'N' : 'S'; }

char hkind_char(HKind h) { return "ABCD"[static_cast<int>(h)]; }

HKind hkind_from_char(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'A': return HKind::A;
        case 'B': return HKind::B;
        case 'C': return HKind::C;
        case 'D': return HKind::D;
    }
    throw std::invalid_argument(std::string("unknown h kind ") + c);
}

Mat restriction_matrix(HKind h) {
    switch (h) {
        case HKind::A: return mat_zero(2);
        case HKind::B: return mat_unit(2, 0, 0);
        case HKind::C: return mat_unit(2, 0, 1);
        case HKind::D: return mat_identity(2);
    }
    return mat_zero(2);
}

Fq gkind_lambda(GKind g) { return g == GKind::N ? Fq::zero() : Fq::one(); }

AbelianType TypeEntry::type() const {
    return AbelianType{label, gkind_lambda(g), restriction_matrix(h), M};
}

std::string family_label(int zeta, int p) {
    zeta = ((zeta % p) + p) % p;
    if (zeta == p - 1) return "T(-1)";
    return "T(" + std::to_string(zeta) + ")";
}

std::vector<TypeEntry> type_table(int p) {
    const Mat Z = mat_zero(2);
    auto e = [](int i, int j) { return mat_unit(2, i - 1, j - 1); };
    using G = GKind;
    using H = HKind;
    std::vector<TypeEntry> t = {
        {"T1", 1, 0, G::N, H::A, Z, false, false, "h", "0"},
        {"T2", 2, 0, G::N, H::A, e(1, 2), false, false, "ky", "0"},
        {"T3", 3, 0, G::S, H::A, Z, true, true, "h", "h"},
        {"T4", 4, 0, G::N, H::B, Z, false, false, "h", "kx"},
        {"T5", 5, 0, G::N, H::B, e(2, 1), true, false, "kx", "kx"},
        {"T6", 6, 0, G::S, H::B, Z, true, false, "h", "h"},
        {"T7", 7, 0, G::S, H::B, e(2, 2), true, false, "kx", "kx"},
        {"T8", 8, 0, G::S, H::B, mat_add(e(2, 1), e(2, 2)), true, false, "kx", "kx"},
        {"T9", 9, 0, G::N, H::C, Z, false, false, "h", "ky"},
        {"T10", 10, 0, G::N, H::C, e(1, 2), true, false, "ky", "ky"},
        {"T11", 11, 0, G::S, H::C, Z, true, true, "h", "h"},
        {"T12", 12, 0, G::S, H::C, e(1, 1), true, false, "ky", "ky"},
        {"T13", 13, 0, G::N, H::D, Z, true, true, "h", "h"},
        {"T14", 14, 0, G::S, H::D, Z, true, false, "h", "h"},
    };
    for (int z = 0; z < p; ++z) {
        Mat M = e(1, 1);
        M[1][1] = Fq::of(z);
        const char* sub = z == 0 ? "ky" : "0";
        t.push_back({family_label(z, p), 15, z, G::S, H::A, M, true, z == p - 1, sub, sub});
    }
    return t;
}

TypeEntry type_by_label(const std::string& label0, int p) {
    std::string label;
    for (char c : label0)
        if (!std::isspace(static_cast<unsigned char>(c))) label += c;
    if (label.size() > 3 && label.rfind("T(", 0) == 0 && label.back() == ')') {
        std::string inner = label.substr(2, label.size() - 3);
        auto eq = inner.find('=');
        if (eq != std::string::npos) inner = inner.substr(eq + 1);
        // accept a unicode minus sign
        if (inner.rfind("\xE2\x88\x92", 0) == 0) inner = "-" + inner.substr(3);
        int z = std::stoi(inner);
        z = ((z % p) + p) % p;
        for (auto& e : type_table(p))
            if (e.is_family() && e.zeta == z) return e;
    }
    for (auto& e : type_table(p))
        if (e.label == label) return e;
    throw std::invalid_argument("unknown type label " + label0);
}

}  // namespace pgw
