// Exact spans of two-tensors: incremental reduced bases, ad(H)-eigenspace
// decompositions, and module closures under adjoint generators.
#pragma once

#include "cybe/sparse_rref.hpp"
#include "cybe/tensor.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cybe {

class TensorSpan {
public:
    explicit TensorSpan(int n) : n_(n) {}

    int n() const { return n_; }
    int dim() const { return span_.dim(); }

    bool insert(const QTwoTensor& t) {
        if (t.n() != n_) throw std::invalid_argument("tensor span: dimension mismatch");
        return span_.insert(t.terms());
    }
    bool contains(const QTwoTensor& t) const { return span_.contains(t.terms()); }
    std::optional<std::vector<Rational>> coordinates(const QTwoTensor& t) const {
        return span_.coordinates(t.terms());
    }

    /// The reduced basis as tensors.
    std::vector<QTwoTensor> basis() const {
        std::vector<QTwoTensor> out;
        for (const auto& row : span_.rows()) {
            QTwoTensor t(n_);
            for (const auto& [key, c] : row) t.add(key, c);
            out.push_back(std::move(t));
        }
        return out;
    }

private:
    int n_;
    SparseRref<Key2> span_;
};

/// Exact eigenspace decomposition of the ad(H) action on the span of the given
/// tensors.  Integer eigenvalue candidates are scanned inside the Gershgorin
/// bound of the action matrix; the dimensions must exhaust the span.
inline std::map<long, std::vector<QTwoTensor>> eigen_decompose(const QMat& h,
                                                               const std::vector<QTwoTensor>& space) {
    if (space.empty()) return {};
    const int n = space.front().n();
    TensorSpan span(n);
    for (const QTwoTensor& v : space) span.insert(v);
    const int d = span.dim();
    const std::vector<QTwoTensor> basis = span.basis();

    QMat action = QMat::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        auto coords = span.coordinates(ad_two(h, basis[static_cast<std::size_t>(j)]));
        if (!coords) throw std::domain_error("not ad(H)-stable");
        for (int k = 0; k < d; ++k) action(k, j) = (*coords)[static_cast<std::size_t>(k)];
    }

    Rational bound = 0;
    for (int r = 0; r < d; ++r) {
        Rational s = 0;
        for (int c = 0; c < d; ++c) s += abs(action(r, c));
        if (s > bound) bound = s;
    }
    const long limit = numerator(bound).convert_to<long>() / denominator(bound).convert_to<long>() + 1;

    std::map<long, std::vector<QTwoTensor>> eigenspaces;
    int total = 0;
    for (long lambda = -limit; lambda <= limit; ++lambda) {
        QMat shifted = action - scale_by_rational(QMat(QMat::Identity(d, d)), Rational(lambda));
        QMat ns = nullspace(shifted);
        if (ns.cols() == 0) continue;
        std::vector<QTwoTensor> vecs;
        for (Eigen::Index c = 0; c < ns.cols(); ++c) {
            QTwoTensor v(n);
            for (int m = 0; m < d; ++m)
                if (!is_zero(ns(m, c))) v += basis[static_cast<std::size_t>(m)] * ns(m, c);
            vecs.push_back(std::move(v));
        }
        total += static_cast<int>(ns.cols());
        eigenspaces.emplace(lambda, std::move(vecs));
    }
    if (total != d) throw std::domain_error("not ad(H)-stable");  // defective or non-integer spectrum
    return eigenspaces;
}

/// Iterated adjoint closure of {r} under the given generators; returns an
/// exact independent generating set of the module.
inline std::vector<QTwoTensor> module_closure(const QTwoTensor& r, const std::vector<QMat>& generators,
                                              int cap = 200) {
    TensorSpan span(r.n());
    std::vector<QTwoTensor> basis;
    std::vector<std::size_t> queue;
    if (span.insert(r)) {
        basis.push_back(r);
        queue.push_back(0);
    }
    while (!queue.empty()) {
        const std::size_t at = queue.back();
        queue.pop_back();
        for (const QMat& x : generators) {
            QTwoTensor image = ad_two(x, basis[at]);
            if (image.is_zero() || !span.insert(image)) continue;
            basis.push_back(std::move(image));
            queue.push_back(basis.size() - 1);
            if (static_cast<int>(basis.size()) > cap)
                throw std::runtime_error("module closure exceeded the dimension cap");
        }
    }
    return basis;
}

}  // namespace cybe
