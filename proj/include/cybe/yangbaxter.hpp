// Schouten brackets, CYBE/MCYBE classification, carriers, quasi-Frobenius
// cocycles and the polynomial-family boundary criterion.
#pragma once

#include "cybe/functional.hpp"
#include "cybe/sparse_rref.hpp"
#include "cybe/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cybe {

namespace detail {

inline Integer integer_from_int128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Integer r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? Integer(-r) : r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    mpq_canonicalize(q.backend().data());
    return q;
}

// Integer-scaled image of a rational tensor: terms * denom fit in int64, and
// pair products then stay far inside __int128.
struct ScaledTensor {
    bool ok = false;
    Integer denom = 1;
    long double max_abs = 0;
    std::vector<std::pair<Key2, __int128>> terms;
};

inline ScaledTensor scale_to_integers(const QTwoTensor& t) {
    ScaledTensor s;
    for (const auto& [key, c] : t.terms()) s.denom = lcm(s.denom, Integer(denominator(c)));
    const Integer limit = Integer(1) << 62;
    for (const auto& [key, c] : t.terms()) {
        Integer num = Integer(numerator(c)) * (s.denom / Integer(denominator(c)));
        if (abs(num) >= limit) return s;
        const long long v = num.convert_to<long long>();
        s.terms.emplace_back(key, static_cast<__int128>(v));
        long double a = v < 0 ? static_cast<long double>(-v) : static_cast<long double>(v);
        if (a > s.max_abs) s.max_abs = a;
    }
    s.ok = true;
    return s;
}

// The bilinear Schouten pairing over an accumulator A (callable on key, coeff).
template <class Coeff, class Emit>
void schouten_pairs(const std::vector<std::pair<Key2, Coeff>>& r,
                    const std::vector<std::pair<Key2, Coeff>>& s, const Emit& emit) {
    for (const auto& [ku, cu] : r) {
        const auto [j1, k1, l1, m1] = unpack2(ku);
        for (const auto& [kv, cv] : s) {
            const auto [j2, k2, l2, m2] = unpack2(kv);
            const Coeff c = cu * cv;
            // [a_u, a_v] (x) b_u (x) b_v
            if (k1 == j2) emit(pack3(j1, k2, l1, m1, l2, m2), c, false);
            if (k2 == j1) emit(pack3(j2, k1, l1, m1, l2, m2), c, true);
            // a_u (x) [b_u, a_v] (x) b_v
            if (m1 == j2) emit(pack3(j1, k1, l1, k2, l2, m2), c, false);
            if (k2 == l1) emit(pack3(j1, k1, j2, m1, l2, m2), c, true);
            // a_u (x) a_v (x) [b_u, b_v]
            if (m1 == l2) emit(pack3(j1, k1, j2, k2, l1, m2), c, false);
            if (m2 == l1) emit(pack3(j1, k1, j2, k2, l2, m1), c, true);
        }
    }
}

}  // namespace detail

/// Mixed Schouten expansion sum([a_u,a_v] (x) b_u (x) b_v + a_u (x) [b_u,a_v] (x) b_v
/// + a_u (x) a_v (x) [b_u,b_v]) over term pairs of r and s; equals <r,r> when s = r.
template <class S>
ThreeTensor<S> schouten_mixed(const TwoTensor<S>& r, const TwoTensor<S>& s) {
    if (r.n() != s.n()) throw std::invalid_argument("schouten: dimension mismatch");
    ThreeTensor<S> out(r.n());
    std::vector<std::pair<Key2, S>> rv(r.terms().begin(), r.terms().end());
    std::vector<std::pair<Key2, S>> sv(s.terms().begin(), s.terms().end());
    detail::schouten_pairs(rv, sv, [&](Key3 key, const S& c, bool negate) {
        out.add(key, negate ? S{} - c : c);
    });
    return out;
}

/// Rational overload with an integer fast path (the hot kernel of the project).
inline QThreeTensor schouten_mixed(const QTwoTensor& r, const QTwoTensor& s) {
    if (r.n() != s.n()) throw std::invalid_argument("schouten: dimension mismatch");
    QThreeTensor out(r.n());
    if (r.is_zero() || s.is_zero()) return out;
    const detail::ScaledTensor ir = detail::scale_to_integers(r);
    const detail::ScaledTensor is = detail::scale_to_integers(s);
    bool fast = ir.ok && is.ok;
    if (fast) {
        const long double pairs = static_cast<long double>(ir.terms.size()) * is.terms.size();
        fast = std::log2l(6.0L * pairs) + std::log2l(ir.max_abs + 1) + std::log2l(is.max_abs + 1) < 120.0L;
    }
    if (!fast) {
        std::vector<std::pair<Key2, Rational>> rv(r.terms().begin(), r.terms().end());
        std::vector<std::pair<Key2, Rational>> sv(s.terms().begin(), s.terms().end());
        detail::schouten_pairs(rv, sv, [&](Key3 key, const Rational& c, bool negate) {
            out.add(key, negate ? Rational(-c) : c);
        });
        return out;
    }
    std::unordered_map<Key3, __int128> acc;
    acc.reserve(std::min<std::size_t>(6 * ir.terms.size() * is.terms.size(), std::size_t(1) << 21));
    detail::schouten_pairs(ir.terms, is.terms, [&](Key3 key, __int128 c, bool negate) {
        acc[key] += negate ? -c : c;
    });
    const Integer den = ir.denom * is.denom;
    std::vector<std::pair<Key3, __int128>> sorted;
    sorted.reserve(acc.size());
    for (const auto& kv : acc)
        if (kv.second != 0) sorted.push_back(kv);
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, v] : sorted) out.add(key, detail::make_rational(detail::integer_from_int128(v), den));
    return out;
}

template <class S>
ThreeTensor<S> schouten(const TwoTensor<S>& r) {
    return schouten_mixed(r, r);
}
inline QThreeTensor schouten(const QTwoTensor& r) { return schouten_mixed(r, r); }

/// g-invariance, tested on the Chevalley generators e_{j,j+1}, e_{j+1,j};
/// they generate sl_n and the action is a derivation, so this is equivalent
/// to full invariance.
inline bool is_invariant(const QThreeTensor& t) {
    const int n = t.n();
    for (int j = 1; j < n; ++j) {
        if (!ad_three(elementary(n, j, j + 1), t).is_zero()) return false;
        if (!ad_three(elementary(n, j + 1, j), t).is_zero()) return false;
    }
    return true;
}

enum class YbTag { CYBE, MCYBE, NEITHER };

struct YbClass {
    YbTag tag = YbTag::NEITHER;
    QThreeTensor witness;  // the computed <r, r>
};

inline const char* to_string(YbTag tag) {
    switch (tag) {
        case YbTag::CYBE: return "CYBE";
        case YbTag::MCYBE: return "MCYBE";
        default: return "NEITHER";
    }
}

inline YbClass classify(const QTwoTensor& r) {
    YbClass c;
    c.witness = schouten(r);
    if (c.witness.is_zero()) c.tag = YbTag::CYBE;
    else c.tag = is_invariant(c.witness) ? YbTag::MCYBE : YbTag::NEITHER;
    return c;
}

// ---------------------------------------------------------------------------
// Carriers and cocycles.
// ---------------------------------------------------------------------------

using GlKey = std::uint16_t;  // packed (j,k) coordinate of gl_n
inline GlKey pack_gl(int j, int k) { return static_cast<GlKey>((j << 8) | k); }

inline SparseRref<GlKey>::Row gl_row(const QMat& m) {
    SparseRref<GlKey>::Row row;
    for (int j = 1; j <= m.rows(); ++j)
        for (int k = 1; k <= m.cols(); ++k)
            if (!is_zero(m(j - 1, k - 1))) row[pack_gl(j, k)] = m(j - 1, k - 1);
    return row;
}

struct Carrier {
    int n = 0;
    SparseRref<GlKey> span;  // reduced basis of the row space of r's coefficient matrix

    int dim() const { return span.dim(); }
    std::vector<QMat> basis() const {
        std::vector<QMat> out;
        for (const auto& row : span.rows()) {
            QMat m = QMat::Zero(n, n);
            for (const auto& [key, c] : row) m((key >> 8) - 1, (key & 0xff) - 1) = c;
            out.push_back(std::move(m));
        }
        return out;
    }
};

/// The span of first-slot contractions (xi (x) 1) r, i.e. the row space of the
/// coefficient matrix of r reshaped n^2 by n^2.
inline Carrier carrier(const QTwoTensor& r) {
    Carrier car;
    car.n = r.n();
    std::map<GlKey, SparseRref<GlKey>::Row> rows;
    for (const auto& [key, c] : r.terms()) {
        auto [j, k, l, m] = unpack2(key);
        rows[pack_gl(j, k)][pack_gl(l, m)] = c;
    }
    for (auto& [u, row] : rows) car.span.insert(std::move(row));
    return car;
}

struct CocycleForm {
    std::vector<QMat> basis;   // carrier basis (reduced echelon representatives)
    std::vector<GlKey> pivots;
    QMat matrix;               // B(x_j, x_k), antisymmetric and invertible
};

/// The 2-cocycle B(x,y) = <rcheck^{-1}(x), y> of a CYBE solution, expressed in
/// the carrier basis.  Throws "degenerate" when rcheck is not invertible there.
inline CocycleForm cocycle(const QTwoTensor& r) {
    Carrier car = carrier(r);
    const int d = car.dim();
    CocycleForm form;
    form.basis = car.basis();
    form.pivots = car.span.pivots();
    // r = sum R_{jk} x_j (x) x_k; with echelon basis rows, R_{jk} is the
    // coefficient of r at the pivot pair.
    QMat coeff = QMat::Zero(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const GlKey u = form.pivots[static_cast<std::size_t>(j)];
            const GlKey v = form.pivots[static_cast<std::size_t>(k)];
            coeff(j, k) = r.coefficient((u >> 8) & 0xff, u & 0xff, (v >> 8) & 0xff, v & 0xff);
        }
    QMat inv;
    try {
        inv = inverse(coeff);
    } catch (const std::domain_error&) {
        throw std::domain_error("degenerate");
    }
    form.matrix = inv.transpose();
    return form;
}

/// Whether the cocycle of r is the coboundary of f, i.e. B(x_j,x_k) = f([x_j,x_k]).
inline bool admits(const QTwoTensor& r, const LinearFunctional& f) {
    CocycleForm form = cocycle(r);
    const int d = static_cast<int>(form.basis.size());
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            const Rational expected = f(bracket(form.basis[static_cast<std::size_t>(j)],
                                                form.basis[static_cast<std::size_t>(k)]));
            if (form.matrix(j, k) != expected) return false;
        }
    return true;
}

struct BoundaryFamilyResult {
    bool ok = false;
    long first_nonzero_degree = -1;  // set when a positive-degree coefficient survives
};

/// Checks <r_t, r_t> = <r_0, r_0> identically in t for r_t = sum r_k t^k; when
/// it holds, the top coefficient r_m is a certified boundary solution.
inline BoundaryFamilyResult boundary_family_check(const std::vector<QTwoTensor>& coeffs) {
    if (coeffs.size() < 2) throw std::invalid_argument("boundary_family_check: need degree >= 1");
    if (coeffs.back().is_zero()) throw std::invalid_argument("boundary_family_check: zero top coefficient");
    const long m = static_cast<long>(coeffs.size()) - 1;
    for (long d = 1; d <= 2 * m; ++d) {
        QThreeTensor bucket(coeffs[0].n());
        for (long k = std::max<long>(0, d - m); k <= std::min<long>(m, d); ++k)
            bucket += schouten_mixed(coeffs[static_cast<std::size_t>(k)], coeffs[static_cast<std::size_t>(d - k)]);
        if (!bucket.is_zero()) return {false, d};
    }
    return {true, -1};
}

}  // namespace cybe
