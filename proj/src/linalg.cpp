#include "pgw/linalg.hpp"

#include <stdexcept>

namespace pgw {

SparseVec sv_from_map(const std::map<uint64_t, Fq>& m) {
    SparseVec out;
    out.reserve(m.size());
    for (const auto& [k, v] : m)
        if (!v.is_zero()) out.emplace_back(k, v);
    return out;
}

SparseVec sv_axpy(const SparseVec& x, Fq a, const SparseVec& y) {
    if (a.is_zero()) return x;
    SparseVec out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, a * y[j].second);
            ++j;
        } else {
            Fq v = x[i].second + a * y[j].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sv_scale(const SparseVec& x, Fq a) {
    if (a.is_zero()) return {};
    SparseVec out = x;
    for (auto& e : out) e.second = e.second * a;
    return out;
}

SparseVec sv_from_dense(const std::vector<Fq>& v) {
    SparseVec out;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    return out;
}

std::vector<Fq> sv_to_dense(const SparseVec& v, size_t n) {
    std::vector<Fq> out(n);
    for (const auto& [k, c] : v) {
        if (k >= n) throw std::out_of_range("sparse index beyond dense length");
        out[k] = c;
    }
    return out;
}

bool Echelon::insert(const SparseVec& v0, SparseVec* relation) {
    SparseVec v = v0;
    SparseVec comb;
    if (track_) comb.emplace_back(count_, Fq::one());
    ++count_;
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) {
            Fq s = inv(v.front().second);
            Row r{sv_scale(v, s), track_ ? sv_scale(comb, s) : SparseVec{}};
            rows_.emplace(v.front().first, std::move(r));
            return true;
        }
        Fq c = -v.front().second;
        v = sv_axpy(v, c, it->second.vec);
        if (track_) comb = sv_axpy(comb, c, it->second.comb);
    }
    if (relation) *relation = comb;
    return false;
}

SparseVec Echelon::reduce(const SparseVec& v0) const {
    SparseVec v = v0;
    SparseVec done;
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) {
            done.push_back(v.front());
            v.erase(v.begin());
            continue;
        }
        v = sv_axpy(v, -v.front().second, it->second.vec);
    }
    return done;
}

std::optional<SparseVec> Echelon::solve(const SparseVec& t) const {
    if (!track_) throw std::logic_error("Echelon::solve needs tracking");
    SparseVec v = t;
    SparseVec comb;
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) return std::nullopt;
        Fq c = v.front().second;
        v = sv_axpy(v, -c, it->second.vec);
        comb = sv_axpy(comb, c, it->second.comb);
    }
    return comb;
}

size_t rank_of(const std::vector<SparseVec>& vecs) {
    Echelon e;
    for (const auto& v : vecs) e.insert(v);
    return e.rank();
}

std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& columns) {
    Echelon e(true);
    std::vector<SparseVec> out;
    for (const auto& c : columns) {
        SparseVec rel;
        if (!e.insert(c, &rel)) out.push_back(rel);
    }
    return out;
}

FpLinearMap::FpLinearMap(size_t n_in, size_t n_out, Fn f) : n_in_(n_in), n_out_(n_out), m_(field().m()) {
    const Field& F = field();
    std::vector<std::vector<Fq>> inputs;
    for (size_t i = 0; i < n_in; ++i) {
        for (int j = 0; j < m_; ++j) {
            std::vector<int> c(m_, 0);
            c[j] = 1;
            std::vector<Fq> x(n_in);
            x[i] = F.from_coeffs(c);
            inputs.push_back(x);
        }
    }
    for (const auto& x : inputs) {
        std::vector<Fq> y = f(x);
        if (y.size() != n_out) throw std::logic_error("FpLinearMap: output length mismatch");
        SparseVec rel;
        if (image_.insert(linearize(y), &rel)) {
            image_vecs_.push_back(y);
        } else {
            std::vector<Fq> k(n_in);
            for (const auto& [idx, c] : rel) {
                for (size_t r = 0; r < n_in; ++r) k[r] += c * inputs[idx][r];
            }
            kernel_.push_back(k);
        }
    }
    inputs_ = std::move(inputs);
}

SparseVec FpLinearMap::linearize(const std::vector<Fq>& w) const {
    const Field& F = field();
    SparseVec out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_zero()) continue;
        std::vector<int> c = F.coeffs(w[i]);
        for (int j = 0; j < m_; ++j)
            if (c[j]) out.emplace_back(i * m_ + j, F.from_int(c[j]));
    }
    return out;
}

bool FpLinearMap::in_image(const std::vector<Fq>& w) const { return image_.contains(linearize(w)); }

std::optional<std::vector<Fq>> FpLinearMap::solve(const std::vector<Fq>& w) const {
    auto comb = image_.solve(linearize(w));
    if (!comb) return std::nullopt;
    std::vector<Fq> x(n_in_);
    for (const auto& [idx, c] : *comb)
        for (size_t r = 0; r < n_in_; ++r) x[r] += c * inputs_[idx][r];
    return x;
}

size_t FpLinearMap::image_span_dim() const {
    std::vector<SparseVec> rows;
    for (const auto& v : image_vecs_) rows.push_back(sv_from_dense(v));
    return rank_of(rows);
}

}  // namespace pgw
