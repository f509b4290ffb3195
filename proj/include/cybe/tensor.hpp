// Sparse elements of gl_n (x) gl_n and gl_n (x) gl_n (x) gl_n with exact
// coefficients.  Terms are keyed by packed 1-based elementary-matrix indices,
// so map order is lexicographic in ((j,k),(l,m)[,(p,q)]).
#pragma once

#include "cybe/matrix.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace cybe {

using Key2 = std::uint32_t;  // packed ((j,k),(l,m))
using Key3 = std::uint64_t;  // packed ((j,k),(l,m),(p,q))

inline Key2 pack2(int j, int k, int l, int m) {
    return (Key2(j) << 24) | (Key2(k) << 16) | (Key2(l) << 8) | Key2(m);
}
inline std::array<int, 4> unpack2(Key2 key) {
    return {int(key >> 24) & 0xff, int(key >> 16) & 0xff, int(key >> 8) & 0xff, int(key) & 0xff};
}
inline Key3 pack3(int j, int k, int l, int m, int p, int q) {
    return (Key3(pack2(j, k, l, m)) << 16) | (Key3(p) << 8) | Key3(q);
}
inline std::array<int, 6> unpack3(Key3 key) {
    auto hi = unpack2(Key2(key >> 16));
    return {hi[0], hi[1], hi[2], hi[3], int(key >> 8) & 0xff, int(key) & 0xff};
}

template <class S>
class TwoTensor {
public:
    TwoTensor() = default;
    explicit TwoTensor(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<Key2, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(int j, int k, int l, int m, const S& c) { add(pack2(j, k, l, m), c); }
    void add(Key2 key, const S& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    S coefficient(int j, int k, int l, int m) const {
        auto it = terms_.find(pack2(j, k, l, m));
        return it == terms_.end() ? S{} : it->second;
    }

    TwoTensor& operator+=(const TwoTensor& o) {
        require_same_n(o.n_);
        for (const auto& [key, c] : o.terms_) add(key, c);
        return *this;
    }
    TwoTensor& operator-=(const TwoTensor& o) {
        require_same_n(o.n_);
        for (const auto& [key, c] : o.terms_) add(key, S{} - c);
        return *this;
    }
    TwoTensor operator+(const TwoTensor& o) const { TwoTensor r = *this; r += o; return r; }
    TwoTensor operator-(const TwoTensor& o) const { TwoTensor r = *this; r -= o; return r; }
    TwoTensor operator-() const { return *this * S(-1); }
    TwoTensor operator*(const S& c) const {
        TwoTensor r(n_);
        if (is_zero(c)) return r;
        for (const auto& [key, v] : terms_) r.add(key, v * c);
        return r;
    }
    bool operator==(const TwoTensor& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const TwoTensor& o) const { return !(*this == o); }

private:
    static bool is_zero(const S& c) { return c == S{}; }
    void require_same_n(int other) const {
        if (n_ != other) throw std::invalid_argument("tensor: dimension mismatch");
    }

    int n_ = 0;
    std::map<Key2, S> terms_;
};

template <class S>
class ThreeTensor {
public:
    ThreeTensor() = default;
    explicit ThreeTensor(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<Key3, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(int j, int k, int l, int m, int p, int q, const S& c) { add(pack3(j, k, l, m, p, q), c); }
    void add(Key3 key, const S& c) {
        if (c == S{}) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second == S{}) terms_.erase(it);
        }
    }

    ThreeTensor& operator+=(const ThreeTensor& o) {
        if (n_ != o.n_) throw std::invalid_argument("tensor: dimension mismatch");
        for (const auto& [key, c] : o.terms_) add(key, c);
        return *this;
    }
    ThreeTensor& operator-=(const ThreeTensor& o) {
        if (n_ != o.n_) throw std::invalid_argument("tensor: dimension mismatch");
        for (const auto& [key, c] : o.terms_) add(key, S{} - c);
        return *this;
    }
    ThreeTensor operator+(const ThreeTensor& o) const { ThreeTensor r = *this; r += o; return r; }
    ThreeTensor operator-(const ThreeTensor& o) const { ThreeTensor r = *this; r -= o; return r; }
    bool operator==(const ThreeTensor& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const ThreeTensor& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::map<Key3, S> terms_;
};

using QTwoTensor = TwoTensor<Rational>;
using TTwoTensor = TwoTensor<Laurent>;
using QThreeTensor = ThreeTensor<Rational>;
using TThreeTensor = ThreeTensor<Laurent>;

inline TTwoTensor lift_laurent(const QTwoTensor& t) {
    TTwoTensor r(t.n());
    for (const auto& [key, c] : t.terms()) r.add(key, Laurent(c));
    return r;
}

inline TThreeTensor lift_laurent(const QThreeTensor& t) {
    TThreeTensor r(t.n());
    for (const auto& [key, c] : t.terms()) r.add(key, Laurent(c));
    return r;
}

/// u (x) v expanded into elementary tensor terms.
template <class S>
TwoTensor<S> tensor_product(const Mat<S>& u, const Mat<S>& v) {
    if (u.rows() != v.rows() || u.rows() != u.cols() || v.rows() != v.cols())
        throw std::invalid_argument("tensor_product: dimension mismatch");
    const int n = static_cast<int>(u.rows());
    TwoTensor<S> t(n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (u(j - 1, k - 1) == S{}) continue;
            for (int l = 1; l <= n; ++l)
                for (int m = 1; m <= n; ++m) {
                    if (v(l - 1, m - 1) == S{}) continue;
                    t.add(j, k, l, m, u(j - 1, k - 1) * v(l - 1, m - 1));
                }
        }
    return t;
}

/// u ^ v = (u (x) v - v (x) u) / 2, stored expanded.
template <class S>
TwoTensor<S> wedge(const Mat<S>& u, const Mat<S>& v) {
    if (u.rows() != v.rows() || u.rows() != u.cols() || v.rows() != v.cols())
        throw std::invalid_argument("wedge: dimension mismatch");
    const int n = static_cast<int>(u.rows());
    TwoTensor<S> t(n);
    const S half = S(1) / Rational(2);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (u(j - 1, k - 1) == S{}) continue;
            for (int l = 1; l <= n; ++l)
                for (int m = 1; m <= n; ++m) {
                    if (v(l - 1, m - 1) == S{}) continue;
                    const S c = u(j - 1, k - 1) * v(l - 1, m - 1) * half;
                    t.add(j, k, l, m, c);
                    t.add(l, m, j, k, S{} - c);
                }
        }
    return t;
}

namespace detail {
// Nonzero entries of x by column and by row, for sparse adjoint sweeps.
template <class S>
struct AdTable {
    explicit AdTable(const Mat<S>& x) : n(static_cast<int>(x.rows())), col(n + 1), row(n + 1) {
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c)
                if (!(x(r - 1, c - 1) == S{})) {
                    col[c].push_back({r, x(r - 1, c - 1)});
                    row[r].push_back({c, x(r - 1, c - 1)});
                }
    }
    int n;
    std::vector<std::vector<std::pair<int, S>>> col, row;  // col[j]: (p, x_pj); row[k]: (q, x_kq)
};
}  // namespace detail

/// Leibniz action x.(a (x) b) = [x,a] (x) b + a (x) [x,b].
template <class S>
TwoTensor<S> ad_two(const Mat<S>& x, const TwoTensor<S>& t) {
    if (static_cast<int>(x.rows()) != t.n() || x.rows() != x.cols())
        throw std::invalid_argument("ad_two: dimension mismatch");
    detail::AdTable<S> tab(x);
    TwoTensor<S> out(t.n());
    for (const auto& [key, c] : t.terms()) {
        auto [j, k, l, m] = unpack2(key);
        for (auto& [p, v] : tab.col[j]) out.add(p, k, l, m, c * v);
        for (auto& [q, v] : tab.row[k]) out.add(j, q, l, m, S{} - c * v);
        for (auto& [p, v] : tab.col[l]) out.add(j, k, p, m, c * v);
        for (auto& [q, v] : tab.row[m]) out.add(j, k, l, q, S{} - c * v);
    }
    return out;
}

template <class S>
ThreeTensor<S> ad_three(const Mat<S>& x, const ThreeTensor<S>& t) {
    if (static_cast<int>(x.rows()) != t.n() || x.rows() != x.cols())
        throw std::invalid_argument("ad_three: dimension mismatch");
    detail::AdTable<S> tab(x);
    ThreeTensor<S> out(t.n());
    for (const auto& [key, c] : t.terms()) {
        auto [j, k, l, m, p, q] = unpack3(key);
        for (auto& [r, v] : tab.col[j]) out.add(r, k, l, m, p, q, c * v);
        for (auto& [r, v] : tab.row[k]) out.add(j, r, l, m, p, q, S{} - c * v);
        for (auto& [r, v] : tab.col[l]) out.add(j, k, r, m, p, q, c * v);
        for (auto& [r, v] : tab.row[m]) out.add(j, k, l, r, p, q, S{} - c * v);
        for (auto& [r, v] : tab.col[p]) out.add(j, k, l, m, r, q, c * v);
        for (auto& [r, v] : tab.row[q]) out.add(j, k, l, m, p, r, S{} - c * v);
    }
    return out;
}

/// Adjoint group action a (x) b -> (g a g^{-1}) (x) (g b g^{-1}), as four
/// successive one-index contractions.
template <class S>
TwoTensor<S> conj_two(const Mat<S>& g, const Mat<S>& g_inv, const TwoTensor<S>& t) {
    const int n = t.n();
    if (static_cast<int>(g.rows()) != n || static_cast<int>(g_inv.rows()) != n)
        throw std::invalid_argument("conj_two: dimension mismatch");
    auto contract = [&](const TwoTensor<S>& in, int slot, bool left) {
        TwoTensor<S> out(n);
        for (const auto& [key, c] : in.terms()) {
            auto idx = unpack2(key);
            const int old = idx[slot];
            for (int w = 1; w <= n; ++w) {
                const S& gv = left ? g(w - 1, old - 1) : g_inv(old - 1, w - 1);
                if (gv == S{}) continue;
                idx[slot] = w;
                out.add(idx[0], idx[1], idx[2], idx[3], c * gv);
            }
        }
        return out;
    };
    TwoTensor<S> r = contract(t, 0, true);   // row index of slot 1: g * e
    r = contract(r, 1, false);               // col index of slot 1: e * g^{-1}
    r = contract(r, 2, true);
    r = contract(r, 3, false);
    return r;
}

template <class S>
ThreeTensor<S> conj_three(const Mat<S>& g, const Mat<S>& g_inv, const ThreeTensor<S>& t) {
    const int n = t.n();
    if (static_cast<int>(g.rows()) != n || static_cast<int>(g_inv.rows()) != n)
        throw std::invalid_argument("conj_three: dimension mismatch");
    auto contract = [&](const ThreeTensor<S>& in, int slot, bool left) {
        ThreeTensor<S> out(n);
        for (const auto& [key, c] : in.terms()) {
            auto idx = unpack3(key);
            const int old = idx[slot];
            for (int w = 1; w <= n; ++w) {
                const S& gv = left ? g(w - 1, old - 1) : g_inv(old - 1, w - 1);
                if (gv == S{}) continue;
                idx[slot] = w;
                out.add(idx[0], idx[1], idx[2], idx[3], idx[4], idx[5], c * gv);
            }
        }
        return out;
    };
    ThreeTensor<S> r = t;
    for (int slot = 0; slot < 6; ++slot) r = contract(r, slot, slot % 2 == 0);
    return r;
}

inline QTwoTensor conj_two(const QMat& g, const QTwoTensor& t) { return conj_two(g, inverse(g), t); }
inline QThreeTensor conj_three(const QMat& g, const QThreeTensor& t) { return conj_three(g, inverse(g), t); }

/// Partial trace over one tensor slot; slot is 0-based.
template <class S>
Mat<S> partial_trace(const TwoTensor<S>& t, int traced_slot) {
    Mat<S> m = Mat<S>::Zero(t.n(), t.n());
    for (const auto& [key, c] : t.terms()) {
        auto [j, k, l, m2] = unpack2(key);
        if (traced_slot == 0) {
            if (j == k) m(l - 1, m2 - 1) = m(l - 1, m2 - 1) + c;
        } else {
            if (l == m2) m(j - 1, k - 1) = m(j - 1, k - 1) + c;
        }
    }
    return m;
}

/// Both partial trace contractions vanish, so the tensor sits in sl_n (x) sl_n.
template <class S>
bool sl_membership(const TwoTensor<S>& t) {
    return mat_is_zero(partial_trace(t, 0)) && mat_is_zero(partial_trace(t, 1));
}

}  // namespace cybe
