// Dense matrices over exact scalars (rationals, Laurent polynomials) and the
// exact linear algebra used everywhere else: row reduction, rank, nullspace,
// inverse, nilpotent exponentials and integer-spectrum t-powers.
#pragma once

#include "cybe/laurent.hpp"
#include "cybe/rational.hpp"

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <vector>

namespace Eigen {
template <>
struct NumTraits<cybe::Laurent> : GenericNumTraits<cybe::Laurent> {
    typedef cybe::Laurent Real;
    typedef cybe::Laurent NonInteger;
    typedef cybe::Laurent Nested;
    typedef cybe::Laurent Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 60
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace cybe {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using QMat = Mat<Rational>;
using TMat = Mat<Laurent>;

template <class S>
bool mat_is_zero(const Mat<S>& a) {
    for (Eigen::Index j = 0; j < a.rows(); ++j)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            if (!is_zero(a(j, k))) return false;
    return true;
}

template <class S>
bool mat_equal(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.rows(); ++j)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            if (!(a(j, k) == b(j, k))) return false;
    return true;
}

template <class S>
Mat<S> scale_by_rational(const Mat<S>& a, const Rational& c) {
    Mat<S> r = a;
    for (Eigen::Index j = 0; j < r.rows(); ++j)
        for (Eigen::Index k = 0; k < r.cols(); ++k) r(j, k) = r(j, k) * c;
    return r;
}

inline TMat lift_laurent(const QMat& a) {
    TMat r = TMat::Zero(a.rows(), a.cols());
    for (Eigen::Index j = 0; j < a.rows(); ++j)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            if (!is_zero(a(j, k))) r(j, k) = Laurent(a(j, k));
    return r;
}

inline QMat evaluate_at_one(const TMat& a) {
    QMat r = QMat::Zero(a.rows(), a.cols());
    for (Eigen::Index j = 0; j < a.rows(); ++j)
        for (Eigen::Index k = 0; k < a.cols(); ++k) r(j, k) = a(j, k).evaluate_at_one();
    return r;
}

inline TMat substitute_t_inverse(const TMat& a) {
    TMat r = a;
    for (Eigen::Index j = 0; j < r.rows(); ++j)
        for (Eigen::Index k = 0; k < r.cols(); ++k) r(j, k) = r(j, k).reciprocal_variable();
    return r;
}

// ---------------------------------------------------------------------------
// gl_n building blocks.  Indices are 1-based as in root-system conventions;
// out-of-range subscripts give the zero matrix.
// ---------------------------------------------------------------------------

/// e_{jk}, or the zero matrix when j or k falls outside [1, n].
inline QMat elementary(int n, int j, int k) {
    QMat m = QMat::Zero(n, n);
    if (j >= 1 && j <= n && k >= 1 && k <= n) m(j - 1, k - 1) = 1;
    return m;
}

/// h_j = e_{jj} - e_{j+1,j+1}.
inline QMat cartan_h(int n, int j) { return elementary(n, j, j) - elementary(n, j + 1, j + 1); }

/// xi_{kl} = sum over all integer p of e_{k+ip, l+ip} (finitely many land in range).
inline QMat xi(int n, int i, int k, int l) {
    QMat m = QMat::Zero(n, n);
    if (i < 1) throw std::invalid_argument("xi: period must be positive");
    for (long p = -(2 * static_cast<long>(n)) / i - 2; p <= (2 * static_cast<long>(n)) / i + 2; ++p) {
        long r = k + i * p, c = l + i * p;
        if (r >= 1 && r <= n && c >= 1 && c <= n) m(r - 1, c - 1) += 1;
    }
    return m;
}

/// eta_{kl} = sum over p >= 0 of e_{k+ip, l+ip}.
inline QMat eta(int n, int i, int k, int l) {
    QMat m = QMat::Zero(n, n);
    if (i < 1) throw std::invalid_argument("eta: period must be positive");
    for (long p = 0; p <= 2 * static_cast<long>(n) / i + 2; ++p) {
        long r = k + i * p, c = l + i * p;
        if (r >= 1 && r <= n && c >= 1 && c <= n) m(r - 1, c - 1) += 1;
    }
    return m;
}

template <class S>
Mat<S> bracket(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
        throw std::invalid_argument("bracket: dimension mismatch");
    return a * b - b * a;
}

template <class S>
S trace(const Mat<S>& a) {
    S t{};
    for (Eigen::Index j = 0; j < a.rows(); ++j) t = t + a(j, j);
    return t;
}

// ---------------------------------------------------------------------------
// Exact Gaussian elimination.  Pivot rule: first nonzero entry in column
// order, which keeps every result deterministic.
// ---------------------------------------------------------------------------

struct Echelon {
    QMat reduced;             // fully reduced row-echelon form, pivots normalized to 1
    std::vector<int> pivots;  // pivot column per pivot row
    int rank = 0;
};

inline Echelon row_echelon(QMat m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Echelon e;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = row; r < rows; ++r)
            if (!is_zero(m(r, col))) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        const Rational inv = Rational(1) / m(row, col);
        for (Eigen::Index c = col; c < cols; ++c) m(row, c) *= inv;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            const Rational f = m(r, col);
            for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
        }
        e.pivots.push_back(static_cast<int>(col));
        ++row;
    }
    e.rank = static_cast<int>(row);
    e.reduced = std::move(m);
    return e;
}

inline int rank(const QMat& m) { return row_echelon(m).rank; }

struct SolveResult {
    bool consistent = false;
    QMat solution;  // one exact solution (free variables set to zero) when consistent
};

/// Solves A x = rhs column-by-column; reports inconsistency instead of failing silently.
inline SolveResult linear_solve(const QMat& a, const QMat& rhs) {
    if (a.rows() != rhs.rows()) throw std::invalid_argument("linear_solve: dimension mismatch");
    QMat aug(a.rows(), a.cols() + rhs.cols());
    aug.leftCols(a.cols()) = a;
    aug.rightCols(rhs.cols()) = rhs;
    Echelon e = row_echelon(std::move(aug));
    SolveResult res;
    for (int p : e.pivots)
        if (p >= a.cols()) return res;  // pivot escaped into the augmented block
    res.consistent = true;
    res.solution = QMat::Zero(a.cols(), rhs.cols());
    for (std::size_t j = 0; j < e.pivots.size(); ++j)
        res.solution.row(e.pivots[j]) = e.reduced.row(static_cast<Eigen::Index>(j)).tail(rhs.cols());
    return res;
}

/// Columns form an exact basis of the kernel of A.
inline QMat nullspace(const QMat& a) {
    Echelon e = row_echelon(a);
    const Eigen::Index n = a.cols();
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
        for (Eigen::Index c = 0; c < n; ++c)
            if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(static_cast<int>(c));
    }
    QMat basis = QMat::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        basis(free_cols[f], static_cast<Eigen::Index>(f)) = 1;
        for (std::size_t j = 0; j < e.pivots.size(); ++j)
            basis(e.pivots[j], static_cast<Eigen::Index>(f)) =
                -e.reduced(static_cast<Eigen::Index>(j), free_cols[f]);
    }
    return basis;
}

inline Rational determinant(QMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const Eigen::Index n = m.rows();
    Rational det = 1;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (!is_zero(m(r, col))) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            m.row(piv).swap(m.row(col));
            det = -det;
        }
        det *= m(col, col);
        const Rational inv = Rational(1) / m(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (is_zero(m(r, col))) continue;
            const Rational f = m(r, col) * inv;
            for (Eigen::Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

inline QMat inverse(const QMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    SolveResult s = linear_solve(a, QMat::Identity(a.rows(), a.cols()));
    if (!s.consistent || rank(a) != a.rows()) throw std::domain_error("singular");
    return s.solution;
}

template <class S>
bool is_nilpotent(const Mat<S>& m) {
    if (m.rows() != m.cols()) return false;
    Mat<S> p = m;
    for (Eigen::Index k = 1; k < m.rows(); ++k) {
        if (mat_is_zero(p)) return true;
        p = p * m;
    }
    return mat_is_zero(p);
}

/// exp(N) for nilpotent N as the finite sum of N^k / k!.
template <class S>
Mat<S> exp_nilpotent(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("exp_nilpotent: matrix not square");
    if (!is_nilpotent(m)) throw std::domain_error("not nilpotent");
    const Eigen::Index n = m.rows();
    Mat<S> sum = Mat<S>::Identity(n, n);
    Mat<S> power = Mat<S>::Identity(n, n);
    Rational fact = 1;
    for (Eigen::Index k = 1; k < n; ++k) {
        power = power * m;
        if (mat_is_zero(power)) break;
        fact *= k;
        sum += scale_by_rational(power, Rational(1) / fact);
    }
    return sum;
}

/// t^{scale * A} for A with integer spectrum, computed as P diag(t^lambda) P^{-1}.
/// Eigenvalue candidates are read off the diagonal, so the input must be
/// triangular up to the diagonal part (all uses here are).
inline TMat t_power(const QMat& a, long scale) {
    if (a.rows() != a.cols()) throw std::invalid_argument("t_power: matrix not square");
    const Eigen::Index n = a.rows();
    QMat b = scale_by_rational(a, Rational(scale));
    std::vector<long> candidates;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (!is_integer(b(j, j))) throw std::domain_error("not t-exponentiable");
        long v = to_long(b(j, j));
        bool seen = false;
        for (long c : candidates) seen = seen || (c == v);
        if (!seen) candidates.push_back(v);
    }
    QMat p(n, 0);
    std::vector<long> exponents;
    for (long lambda : candidates) {
        QMat shifted = b - scale_by_rational(QMat(QMat::Identity(n, n)), Rational(lambda));
        QMat ns = nullspace(shifted);
        for (Eigen::Index c = 0; c < ns.cols(); ++c) exponents.push_back(lambda);
        QMat grown(n, p.cols() + ns.cols());
        grown.leftCols(p.cols()) = p;
        grown.rightCols(ns.cols()) = ns;
        p = std::move(grown);
    }
    if (p.cols() != n) throw std::domain_error("not t-exponentiable");
    QMat pinv = inverse(p);
    TMat diag = TMat::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) diag(j, j) = Laurent::t_pow(exponents[static_cast<std::size_t>(j)]);
    return lift_laurent(p) * diag * lift_laurent(pinv);
}

}  // namespace cybe
