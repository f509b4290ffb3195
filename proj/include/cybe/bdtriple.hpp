// Belavin-Drinfeld triples for sl_n, the induced order on positive root
// vectors, and the constituent parts of the Cremmer-Gervais r-matrix.
#pragma once

#include "cybe/tensor.hpp"

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace cybe {

inline long mod_inverse(long a, long n) {
    long t = 0, new_t = 1;
    long r = n, new_r = mod_floor(a, n);
    while (new_r != 0) {
        const long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("not coprime");
    return mod_floor(t, n);
}

struct BDTriple {
    int n = 0;
    std::map<int, int> edges;  // j -> T(j) with domain S1

    bool in_domain(int j) const { return edges.count(j) > 0; }
    int apply(int j) const { return edges.at(j); }
};

struct TripleValidity {
    bool ok = true;
    std::string violation;  // first violated condition when not ok
};

inline TripleValidity validate_triple(const BDTriple& t) {
    std::set<int> targets;
    for (const auto& [j, k] : t.edges) {
        if (j < 1 || j >= t.n || k < 1 || k >= t.n) return {false, "index out of range"};
        if (!targets.insert(k).second) return {false, "not injective"};
    }
    for (const auto& [j, tj] : t.edges)
        for (const auto& [k, tk] : t.edges)
            if ((std::abs(tj - tk) == 1) != (std::abs(j - k) == 1))
                return {false, "adjacency preserving violated"};
    for (const auto& [j, unused] : t.edges) {
        int cur = j;
        bool escaped = false;
        for (int step = 0; step < t.n; ++step) {
            if (!t.in_domain(cur)) { escaped = true; break; }
            cur = t.apply(cur);
        }
        if (!escaped && t.in_domain(cur)) return {false, "local nilpotency violated"};
    }
    return {};
}

/// The strict order on simple indices (N >= 1 applications of T) and its
/// extension to positive root vectors e_{jk}.
struct RootOrder {
    int n = 0;
    std::vector<std::vector<bool>> simple;  // simple[j][k]: j < k, indices in [1, n-1]

    bool simple_less(int j, int k) const {
        if (j < 1 || j >= n || k < 1 || k >= n) return false;
        return simple[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
    /// e_{jk} < e_{lm}: same width and every simple constituent is related.
    bool root_less(int j, int k, int l, int m) const {
        if (m != k - j + l) return false;
        for (int s = 0; s <= k - j - 1; ++s)
            if (!simple_less(j + s, l + s)) return false;
        return true;
    }
    /// All strict pairs ((j,k),(l,m)) with 1 <= j < k <= n, 1 <= l < m <= n.
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> root_pairs() const {
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    const int m = k - j + l;
                    if (m <= l || m > n) continue;
                    if (root_less(j, k, l, m)) out.push_back({{j, k}, {l, m}});
                }
        return out;
    }
};

inline RootOrder root_order(const BDTriple& t) {
    RootOrder order;
    order.n = t.n;
    order.simple.assign(static_cast<std::size_t>(t.n), std::vector<bool>(static_cast<std::size_t>(t.n), false));
    for (const auto& [j, unused] : t.edges) {
        int cur = j;
        for (int step = 0; step < t.n && t.in_domain(cur); ++step) {
            cur = t.apply(cur);
            order.simple[static_cast<std::size_t>(j)][static_cast<std::size_t>(cur)] = true;
        }
    }
    return order;
}

/// alpha = 2 sum e_{jk} ^ e_{ml} over root pairs e_{jk} < e_{lm}.
inline QTwoTensor alpha(const BDTriple& t) {
    RootOrder order = root_order(t);
    QTwoTensor a(t.n);
    for (const auto& [jk, lm] : order.root_pairs()) {
        QTwoTensor w = wedge(elementary(t.n, jk.first, jk.second), elementary(t.n, lm.second, lm.first));
        a += w * Rational(2);
    }
    return a;
}

/// gamma = sum_{k < l} e_{kl} ^ e_{lk}.
inline QTwoTensor gamma(int n) {
    if (n < 2) throw std::invalid_argument("gamma: need n >= 2");
    QTwoTensor g(n);
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) g += wedge(elementary(n, k, l), elementary(n, l, k));
    return g;
}

/// The maximal triple T_{i,n}(j) = (j + i) mod n on S1 = [1,n-i-1] u [n-i+1,n-1].
inline BDTriple cg_triple(int i, int n) {
    if (i <= 0 || i >= n || std::gcd(i, n) != 1) throw std::domain_error("not coprime");
    BDTriple t;
    t.n = n;
    for (int j = 1; j <= n - 1; ++j) {
        if (j == n - i) continue;
        t.edges[j] = static_cast<int>(mod_floor(j + i, n));
    }
    return t;
}

/// Closed form of the forward alpha-part: 2 sum_{1<=k<l<=n-i} e_{kl} ^ eta_{l+i,k+i}.
inline QTwoTensor alpha_forward(int i, int n) {
    if (std::gcd(i, n) != 1 || i >= n) throw std::domain_error("not coprime");
    QTwoTensor a(n);
    for (int k = 1; k <= n - i; ++k)
        for (int l = k + 1; l <= n - i; ++l)
            a += wedge(elementary(n, k, l), eta(n, i, l + i, k + i)) * Rational(2);
    return a;
}

/// Backward alpha-part: 2 sum xi_{j+(n mod i),k+(n mod i)} ^ xi_{ml} over root
/// pairs of sl_i with e_{jk} equal to or below e_{lm} in the order induced by
/// the Cremmer-Gervais graph of (i - (n mod i), i); empty when i = 1.
inline QTwoTensor alpha_backward(int i, int n) {
    if (std::gcd(i, n) != 1 || i >= n) throw std::domain_error("not coprime");
    QTwoTensor a(n);
    if (i == 1) return a;
    const int rem = static_cast<int>(mod_floor(n, i));
    RootOrder order = root_order(cg_triple(i - rem, i));
    for (int j = 1; j <= i; ++j)
        for (int k = j + 1; k <= i; ++k)
            for (int l = 1; l <= i; ++l)
                for (int m = l + 1; m <= i; ++m) {
                    const bool related = (j == l && k == m) || order.root_less(j, k, l, m);
                    if (!related) continue;
                    a += wedge(xi(n, i, j + rem, k + rem), xi(n, i, m, l)) * Rational(2);
                }
    return a;
}

/// The single point of the beta variety for T_{i,n}.
inline QTwoTensor beta_point(int i, int n) {
    const long inv = mod_inverse(i, n);  // throws "not coprime"
    QTwoTensor b(n);
    for (int j = 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l) {
            const Rational c = Rational(-1) + Rational(2, n) * Rational(mod_floor((j - l) * inv, n));
            if (is_zero(c)) continue;
            b += wedge(elementary(n, j, j), elementary(n, l, l)) * c;
        }
    return b;
}

/// Membership test for the beta variety: the slot-two pairing of beta against
/// the root functional of T(j) minus that of j must equal (h_{T(j)} + h_j)/2
/// for every edge.  Root functionals pair through the trace form with h_j.
inline bool beta_member(const QTwoTensor& beta, const BDTriple& t) {
    const int n = t.n;
    for (const auto& [key, c] : beta.terms()) {
        auto [a1, a2, b1, b2] = unpack2(key);
        if (a1 != a2 || b1 != b2) throw std::invalid_argument("beta_member: non-diagonal beta");
    }
    for (const auto& [j, tj] : t.edges) {
        const QMat weight = cartan_h(n, tj) - cartan_h(n, j);
        QMat contracted = QMat::Zero(n, n);
        for (const auto& [key, c] : beta.terms()) {
            auto [a1, a2, b1, b2] = unpack2(key);
            contracted(a1 - 1, a1 - 1) += c * weight(b1 - 1, b1 - 1);
        }
        const QMat rhs = scale_by_rational(QMat(cartan_h(n, tj) + cartan_h(n, j)), Rational(1, 2));
        if (!mat_equal(contracted, rhs)) return false;
    }
    return true;
}

/// r_CG(i, n) = alpha_forward + alpha_backward + beta + gamma.
inline QTwoTensor r_cg(int i, int n) {
    QTwoTensor r = alpha_forward(i, n);
    r += alpha_backward(i, n);
    r += beta_point(i, n);
    r += gamma(n);
    return r;
}

/// alpha(t) minus the alpha-part of the triple with some edges deleted.
inline QTwoTensor alpha_sub(const BDTriple& t, const std::set<int>& removed_sources) {
    BDTriple reduced = t;
    for (int j : removed_sources) {
        if (!t.in_domain(j)) throw std::invalid_argument("alpha_sub: source not in S1");
        reduced.edges.erase(j);
    }
    return alpha(t) - alpha(reduced);
}

}  // namespace cybe
