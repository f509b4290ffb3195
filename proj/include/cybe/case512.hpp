// The (i, n) = (5, 12) boundary construction: explicit generators, the
// Frobenius functional on p(5, 12), the principal element, the 65-dimensional
// module with its eigenspace profile, and the deformation identity.
#pragma once

#include "cybe/bdtriple.hpp"
#include "cybe/parabolic.hpp"
#include "cybe/subprime.hpp"
#include "cybe/tensorspan.hpp"
#include "cybe/yangbaxter.hpp"

#include <set>

namespace cybe {

struct Case512Data {
    QMat x7, x4, x1, xm2;  // the four generators, graded by j - k
    QMat x;                // x7 + x4 + x1 + xm2
    QMat y;
    QMat h;                // principal element of f
    LinearFunctional f;
    QMat g;
    std::set<int> alpha0_edges{5, 6};
};

inline Case512Data build512() {
    const int n = 12;
    Case512Data d;

    d.x7 = QMat::Zero(n, n);
    for (int j = 1; j <= 5; ++j) d.x7 -= elementary(n, j, j + 7);

    d.x1 = QMat(-(elementary(n, 1, 2) + elementary(n, 3, 4) +
                  scale_by_rational(elementary(n, 5, 6), Rational(2)) + elementary(n, 6, 7) +
                  elementary(n, 8, 9) + elementary(n, 10, 11)));

    d.x4 = QMat(-elementary(n, 2, 6) - elementary(n, 3, 7));

    d.xm2 = QMat::Zero(n, n);
    for (int j = 1; j <= 5; ++j) {
        const Rational c = Rational((7 - j) / 2);
        d.xm2 += scale_by_rational(QMat(elementary(n, j, j - 2) + elementary(n, j + 7, j + 5)), c);
    }

    d.x = d.x7 + d.x4 + d.x1 + d.xm2;

    d.y = QMat(scale_by_rational(elementary(n, 1, 6), Rational(-2)) - elementary(n, 2, 6) +
               scale_by_rational(elementary(n, 3, 6), Rational(3)) +
               scale_by_rational(elementary(n, 4, 6), Rational(2)) + elementary(n, 5, 6) -
               elementary(n, 3, 7) - elementary(n, 4, 7) - elementary(n, 5, 7));

    d.f.n = n;
    for (int j = 1; j <= 5; ++j) d.f.add(j, j + 7, 1);
    for (int j = 1; j <= 5; ++j) d.f.add(j + 7, j + 5, 1);
    d.f.add(6, 7, 1);
    d.f.add(7, 8, 1);
    d.f.add(6, 10, 1);
    d.f.add(7, 11, 1);

    const long half_diag[12] = {1, -1, 3, 1, 5, -3, -5, -1, -3, 1, -1, 3};
    d.h = QMat::Zero(n, n);
    for (int j = 0; j < n; ++j) d.h(j, j) = Rational(half_diag[j], 2);
    d.h += scale_by_rational(
        QMat(elementary(n, 3, 6) + elementary(n, 4, 7) + elementary(n, 1, 7)), Rational(3));

    d.g = QMat(exp_nilpotent(d.x7) * exp_nilpotent(d.xm2) * exp_nilpotent(bracket(d.xm2, d.x1)) *
               exp_nilpotent(d.x1) * exp_nilpotent(d.y));
    return d;
}

/// The ten verification checks of the (5, 12) construction.
inline CheckReport verify512() {
    const int n = 12, i = 5;
    const Case512Data d = build512();
    CheckReport report;

    const QTwoTensor r = r_cg(i, n);
    const QTwoTensor xr = ad_two(d.x, r);

    report.add("xr_cybe", classify(xr).tag == YbTag::CYBE);
    report.add("carrier", carrier_equals_parabolic(carrier(xr), i, n));
    report.add("admits", admits(xr, d.f));

    const ParabolicBasis p = parabolic_basis(i, n);
    bool principal = is_frobenius(d.f, p);
    for (const QMat& yb : p.basis) principal = principal && (d.f(bracket(d.h, yb)) == d.f(yb));
    report.add("principal", principal);

    const std::vector<QTwoTensor> module = module_closure(r, {d.x7, d.x4, d.x1, d.xm2});
    auto eigenspaces = eigen_decompose(d.h, module);
    const long expected_dims[10] = {1, 4, 5, 9, 10, 12, 10, 8, 4, 2};
    bool dims_ok = module.size() == 65 && eigenspaces.size() == 10;
    for (long lambda = 0; lambda < 10 && dims_ok; ++lambda) {
        auto it = eigenspaces.find(lambda);
        dims_ok = it != eigenspaces.end() &&
                  it->second.size() == static_cast<std::size_t>(expected_dims[lambda]);
    }
    report.add("module_dims", dims_ok);

    // r' = exp(-e36 - e47 - e17).(r - alpha_0) spans M_0
    const QTwoTensor a0 = alpha_sub(cg_triple(i, n), d.alpha0_edges);
    const QMat nil = QMat(-(elementary(n, 3, 6) + elementary(n, 4, 7) + elementary(n, 1, 7)));
    const QTwoTensor rp = conj_two(exp_nilpotent(nil), QTwoTensor(r - a0));
    bool m0_ok = dims_ok;
    if (m0_ok) {
        TensorSpan m0(n);
        for (const QTwoTensor& v : eigenspaces.at(0)) m0.insert(v);
        TensorSpan rp_span(n);
        rp_span.insert(rp);
        m0_ok = m0.dim() == 1 && m0.contains(rp) && rp_span.contains(eigenspaces.at(0).front());
    }
    report.add("m0_rprime", m0_ok);

    report.add("g_split", conj_two(d.g, r) == rp + xr);

    const TMat tp = t_power(d.h, 2);
    const TMat big_phi = tp * lift_laurent(d.g);
    const TMat big_phi_inv = lift_laurent(inverse(d.g)) * substitute_t_inverse(tp);
    TTwoTensor expected = lift_laurent(rp);
    expected += lift_laurent(xr) * Laurent::t_pow(2);
    report.add("t2h_identity", conj_two(big_phi, big_phi_inv, lift_laurent(r)) == expected);

    report.add("rprime_mcybe", classify(rp).tag == YbTag::MCYBE);

    std::vector<QTwoTensor> family = {rp, QTwoTensor(n), xr};
    report.add("schouten_family", boundary_family_check(family).ok);
    return report;
}

}  // namespace cybe
