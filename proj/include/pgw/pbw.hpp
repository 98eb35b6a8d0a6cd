#pragma once
// Structure constants of a Hopf algebra given on a truncated PBW basis
// (monomial index = sum e_k p^k over ordered generators) by its products
// and the coproducts of its generators.

#include <functional>
#include <string>
#include <vector>

#include "pgw/hopf.hpp"
#include "pgw/uenv.hpp"

namespace pgw {

struct PBWData {
    int ngens = 0;
    std::vector<std::string> names;
    std::function<const std::vector<std::pair<Mono, Fq>>&(Mono, Mono)> mul_mono;
    std::vector<Tensor> gen_coproduct;  // degree 2, key a*dim + b
};

// Coproduct extended multiplicatively along PBW words, counit zero on
// generators, antipode from S(g) = -g - sum S(a) b over the non-primitive
// part of the coproduct and extended anti-multiplicatively.
HopfAlgebra hopf_from_pbw(const PBWData& data);

PBWData pbw_of(const TAlgebra& U, const std::vector<Tensor>& gen_coproduct);
PBWData pbw_of(const HAlgebra& h);

}  // namespace pgw
