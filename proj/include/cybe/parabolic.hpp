// Maximal parabolics p(i, n) in sl_n, Frobenius functionals and forms,
// principal elements, and the functional-to-r-matrix construction.
#pragma once

#include "cybe/functional.hpp"
#include "cybe/tensor.hpp"
#include "cybe/yangbaxter.hpp"

#include <numeric>
#include <set>
#include <vector>

namespace cybe {

/// Positions outside the deleted block (rows i+1..n against columns 1..i).
inline bool in_parabolic_pattern(int i, int j, int k) { return !(j >= i + 1 && k <= i); }

struct ParabolicBasis {
    int i = 0, n = 0;
    std::vector<QMat> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Ordered basis of p(i, n): e_{jk} (j < k) row-major, then h_1..h_{n-1}, then
/// the allowed e_{jk} (j > k) row-major.
inline ParabolicBasis parabolic_basis(int i, int n) {
    if (i <= 0 || i >= n) throw std::invalid_argument("parabolic_basis: need 0 < i < n");
    ParabolicBasis p;
    p.i = i;
    p.n = n;
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) p.basis.push_back(elementary(n, j, k));
    for (int j = 1; j < n; ++j) p.basis.push_back(cartan_h(n, j));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k < j; ++k)
            if (in_parabolic_pattern(i, j, k)) p.basis.push_back(elementary(n, j, k));
    return p;
}

/// Membership in span(p(i, n)): support inside the block pattern and traceless.
inline bool in_parabolic_span(const QMat& x, int i) {
    const int n = static_cast<int>(x.rows());
    if (!is_zero(trace(x))) return false;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            if (!is_zero(x(j - 1, k - 1)) && !in_parabolic_pattern(i, j, k)) return false;
    return true;
}

inline bool carrier_equals_parabolic(const Carrier& car, int i, int n) {
    if (car.dim() != n * n - 1 - i * (n - i)) return false;
    for (const QMat& x : car.basis())
        if (!in_parabolic_span(x, i)) return false;
    return true;
}

template <class S>
bool tensor_in_parabolic(const TwoTensor<S>& t, int i) {
    for (const auto& [key, c] : t.terms()) {
        auto [j, k, l, m] = unpack2(key);
        if (!in_parabolic_pattern(i, j, k) || !in_parabolic_pattern(i, l, m)) return false;
    }
    return true;
}

/// f_subprime = sum_{i<j<=n} e*_{j-i,j} + sum_{1<=j<i} e*_{j+1,j}.
inline LinearFunctional subprime_functional(int i, int n) {
    if (i <= 0 || i >= n) throw std::invalid_argument("subprime_functional: need 0 < i < n");
    LinearFunctional f;
    f.n = n;
    for (int j = i + 1; j <= n; ++j) f.add(j - i, j, 1);
    for (int j = 1; j < i; ++j) f.add(j + 1, j, 1);
    return f;
}

/// f_{rho,mu} = -rho^{-1} sum e*_{j-i,j} + eps mu^{-1} sum e*_{j+1,j}.
inline LinearFunctional f_rho_mu(int i, int n, const Rational& rho, const Rational& mu) {
    if (is_zero(rho) || is_zero(mu)) throw std::invalid_argument("f_rho_mu: zero scalar");
    const Rational eps = (mod_floor(n, i) == 1) ? 1 : -1;
    LinearFunctional f;
    f.n = n;
    for (int j = i + 1; j <= n; ++j) f.add(j - i, j, Rational(-1) / rho);
    for (int j = 1; j < i; ++j) f.add(j + 1, j, eps / mu);
    return f;
}

/// B_{jk} = f([x_j, x_k]) over the parabolic basis.
inline QMat frobenius_form(const LinearFunctional& f, const ParabolicBasis& p) {
    const int d = p.dim();
    QMat b = QMat::Zero(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            const Rational v = f(bracket(p.basis[static_cast<std::size_t>(j)], p.basis[static_cast<std::size_t>(k)]));
            b(j, k) = v;
            b(k, j) = -v;
        }
    return b;
}

inline bool is_frobenius(const LinearFunctional& f, const ParabolicBasis& p) {
    return rank(frobenius_form(f, p)) == p.dim();
}

/// The unique H with f([H, x]) = f(x) on p; requires f Frobenius.
inline QMat principal_element(const LinearFunctional& f, const ParabolicBasis& p) {
    const QMat b = frobenius_form(f, p);
    const int d = p.dim();
    QMat c(d, 1);
    for (int k = 0; k < d; ++k) c(k, 0) = f(p.basis[static_cast<std::size_t>(k)]);
    // f([H, x_k]) = sum_m y_m B_{mk}, so solve B y = -c using antisymmetry.
    SolveResult sol = linear_solve(b, QMat(-c));
    if (!sol.consistent || rank(b) != d) throw std::domain_error("not Frobenius");
    QMat h = QMat::Zero(p.n, p.n);
    for (int m = 0; m < d; ++m) h += scale_by_rational(p.basis[static_cast<std::size_t>(m)], sol.solution(m, 0));
    for (const QMat& x : p.basis)  // the defining identity, verified rather than trusted
        if (f(bracket(h, x)) != f(x)) throw std::logic_error("principal element postcondition failed");
    return h;
}

/// Eq-(9)-style closed form: diagonal blocks of length i reading
/// (-b, -b+1, ..., -b+i-1), truncated to n, plus the tracelessness shift.
inline QMat principal_closed_form(int i, int n) {
    if (i <= 0 || i >= n || std::gcd(i, n) != 1) throw std::domain_error("not subprime");
    const long rem = mod_floor(n, i);
    if (i > 1 && rem != 1 && rem != i - 1) throw std::domain_error("not subprime");
    const Rational theta = Rational(n - 1, 2 * n) * (Rational(n + 1, i) - i);
    QMat h = QMat::Zero(n, n);
    for (int m = 1; m <= n; ++m) {
        const long block = (m - 1) / i, offset = (m - 1) % i;
        h(m - 1, m - 1) = Rational(offset - block) + theta;
    }
    return h;
}

/// r_f built from the inverse Frobenius form; its cocycle is the coboundary
/// of f, its carrier is p, and it solves the CYBE.
inline QTwoTensor r_from_functional(const LinearFunctional& f, const ParabolicBasis& p) {
    const QMat b = frobenius_form(f, p);
    const int d = p.dim();
    QMat binv;
    try {
        binv = inverse(b);
    } catch (const std::domain_error&) {
        throw std::domain_error("not Frobenius");
    }
    QTwoTensor r(p.n);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const Rational c = binv(k, j);
            if (is_zero(c)) continue;
            r += tensor_product(p.basis[static_cast<std::size_t>(j)], p.basis[static_cast<std::size_t>(k)]) * c;
        }
    return r;
}

struct SupportGraph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // directed support pairs
};

inline SupportGraph support_graph(const LinearFunctional& f) {
    SupportGraph g;
    g.n = f.n;
    for (const auto& [pos, c] : f.coords) g.edges.insert(pos);
    return g;
}

/// Small functional: the underlying undirected support graph on vertices
/// 1..n is a tree.
inline bool is_small(const LinearFunctional& f) {
    SupportGraph g = support_graph(f);
    const int n = g.n;
    if (n <= 0 || g.edges.size() != static_cast<std::size_t>(n - 1)) return false;
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    for (const auto& [j, k] : g.edges) {
        const int a = find(j), b = find(k);
        if (a == b) return false;  // cycle (covers doubled undirected edges too)
        parent[static_cast<std::size_t>(a)] = b;
    }
    int components = 0;
    for (int v = 1; v <= n; ++v)
        if (find(v) == v) ++components;
    return components == 1;
}

}  // namespace cybe
