#pragma once
// Exact sparse elimination over the current field, plus restriction of
// scalars for F_p-linear (Frobenius-semilinear) maps.

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pgw/gf.hpp"

namespace pgw {

// sorted by key, no zero entries
using SparseVec = std::vector<std::pair<uint64_t, Fq>>;

SparseVec sv_from_map(const std::map<uint64_t, Fq>& m);
// x + a*y
SparseVec sv_axpy(const SparseVec& x, Fq a, const SparseVec& y);
SparseVec sv_scale(const SparseVec& x, Fq a);
SparseVec sv_from_dense(const std::vector<Fq>& v);
std::vector<Fq> sv_to_dense(const SparseVec& v, size_t n);

// Incremental row echelon form. Each stored row has a distinct leading key
// with coefficient 1. Optionally tracks how rows combine the inserted vectors.
class Echelon {
public:
    explicit Echelon(bool track = false) : track_(track) {}

    // Returns true when v was independent of the rows so far. When it was
    // dependent and tracking is on, *relation receives coefficients c with
    // sum_i c_i v_i = 0 (indices are insertion order, v included).
    bool insert(const SparseVec& v, SparseVec* relation = nullptr);
    size_t rank() const { return rows_.size(); }
    size_t inserted() const { return count_; }
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    // coefficients c over inserted vectors with sum c_i v_i = t (tracking required)
    std::optional<SparseVec> solve(const SparseVec& t) const;

private:
    struct Row {
        SparseVec vec;
        SparseVec comb;
    };
    bool track_;
    size_t count_ = 0;
    std::map<uint64_t, Row> rows_;
};

size_t rank_of(const std::vector<SparseVec>& vecs);
// basis of the relations among the given vectors
std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& columns);

// A map GF(q)^n_in -> GF(q)^n_out that is additive and commutes with F_p
// scalars, made into an F_p matrix by evaluating on the basis t^j e_i.
class FpLinearMap {
public:
    using Fn = std::function<std::vector<Fq>(const std::vector<Fq>&)>;
    FpLinearMap(size_t n_in, size_t n_out, Fn f);

    size_t kernel_dim() const { return kernel_.size(); }
    size_t image_dim() const { return image_.rank(); }
    const std::vector<std::vector<Fq>>& kernel_basis() const { return kernel_; }
    const std::vector<std::vector<Fq>>& image_basis() const { return image_vecs_; }
    bool in_image(const std::vector<Fq>& w) const;
    std::optional<std::vector<Fq>> solve(const std::vector<Fq>& w) const;
    // dimension over GF(q) of the span of the image
    size_t image_span_dim() const;

private:
    SparseVec linearize(const std::vector<Fq>& w) const;
    size_t n_in_, n_out_;
    int m_;
    Echelon image_{true};
    std::vector<std::vector<Fq>> kernel_;
    std::vector<std::vector<Fq>> image_vecs_;
    std::vector<std::vector<Fq>> inputs_;
};

}  // namespace pgw
