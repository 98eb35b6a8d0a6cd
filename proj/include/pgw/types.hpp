#pragma once
// The rank-2 abelian types: restriction kinds of g and h, and the listed
// representation matrices.

#include <string>
#include <vector>

#include "pgw/rla.hpp"

namespace pgw {

enum class GKind { N, S };           // z^[p] = 0, z^[p] = z
enum class HKind { A, B, C, D };     // see restriction_matrix

char gkind_char(GKind g);
char hkind_char(HKind h);
HKind hkind_from_char(char c);

// A: x^[p]=y^[p]=0; B: x^[p]=x; C: x^[p]=y; D: x^[p]=x, y^[p]=y
Mat restriction_matrix(HKind h);
Fq gkind_lambda(GKind g);

struct TypeEntry {
    std::string label;  // "T1".."T14" or "T(zeta)"
    int index = 0;      // 1..14, 15 for the family
    int zeta = 0;       // family parameter in 0..p-1
    GKind g = GKind::N;
    HKind h = HKind::A;
    Mat M;
    bool permissible = false;
    bool aplus_empty = false;
    std::string ker_rho;  // listed subspaces: "0", "kx", "ky", "h"
    std::string im_phi;

    AbelianType type() const;
    bool is_family() const { return index == 15; }
};

// the fourteen rows plus T(zeta) for zeta = 0..p-1
std::vector<TypeEntry> type_table(int p);
// "T5", "T(2)", "T(-1)", "T(zeta=-1)" accepted; zeta is reduced mod p
TypeEntry type_by_label(const std::string& label, int p);
std::string family_label(int zeta, int p);  // zeta = p-1 prints as "T(-1)"

}  // namespace pgw
