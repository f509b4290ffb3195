// The subprime machinery: the nilpotent pair (X, Z), the module spanned by
// {r, W, V_0..V_i}, the group element g, the one-parameter deformation Phi(t),
// and the verifier for the main boundary-solution theorem.
#pragma once

#include "cybe/bdtriple.hpp"
#include "cybe/parabolic.hpp"
#include "cybe/tensor.hpp"
#include "cybe/tensorspan.hpp"
#include "cybe/yangbaxter.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace cybe {

struct CheckReport {
    std::vector<std::pair<std::string, bool>> checks;

    void add(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
    bool all_ok() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
    std::string first_failure() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return name;
        return {};
    }
};

/// The subprime scalars: eps, c_k = floor((n-k)/i), a_k = eps((-nk) mod i).
struct SubprimeContext {
    int i = 0, n = 0;
    int eps = 1;

    long c(long k) const { return floor_div(n - k, i); }
    long a(long k) const { return eps * mod_floor(-static_cast<long>(n) * k, i); }
};

inline SubprimeContext context(int i, int n) {
    if (i <= 0 || i >= n || std::gcd(i, n) != 1) throw std::domain_error("not subprime");
    const long rem = mod_floor(n, i);
    if (i > 1 && rem != 1 && rem != i - 1) throw std::domain_error("not subprime");
    SubprimeContext ctx;
    ctx.i = i;
    ctx.n = n;
    ctx.eps = (rem == 1) ? 1 : -1;
    return ctx;
}

/// E_{kl} in the subprime rewriting: xi_{k+1,l+1} when n mod i = 1, else
/// -xi_{i-l,i-k}; defined for all integer subscripts.
inline QMat Ecal(const SubprimeContext& ctx, int k, int l) {
    if (mod_floor(ctx.n, ctx.i) == 1) return xi(ctx.n, ctx.i, k + 1, l + 1);
    return -xi(ctx.n, ctx.i, ctx.i - l, ctx.i - k);
}

/// d_l = sum_{l<=j<i} E_{jj} shifted by the multiple of I_n that kills the trace.
inline QMat d_ell(const SubprimeContext& ctx, int l) {
    QMat d = QMat::Zero(ctx.n, ctx.n);
    for (int j = l; j < ctx.i; ++j) d += Ecal(ctx, j, j);
    const Rational theta = -trace(d) / ctx.n;
    return d + scale_by_rational(QMat(QMat::Identity(ctx.n, ctx.n)), theta);
}

/// X = sum c_j e_{j,j+i} and Z = sum a_j xi_{j+1,j}.
inline std::pair<QMat, QMat> XZ(const SubprimeContext& ctx) {
    const int i = ctx.i, n = ctx.n;
    QMat x = QMat::Zero(n, n);
    for (int j = 1; j <= n - i; ++j) x += scale_by_rational(elementary(n, j, j + i), Rational(ctx.c(j)));
    QMat z = QMat::Zero(n, n);
    for (int j = 1; j < i; ++j) z += scale_by_rational(xi(n, i, j + 1, j), Rational(ctx.a(j)));
    return {x, z};
}

struct ModuleBasis {
    QTwoTensor r;
    QTwoTensor w;
    std::vector<QTwoTensor> v;  // V_0 .. V_i
};

/// The displayed module vectors V_0, W, V_1..V_i.
inline ModuleBasis module_vectors(const SubprimeContext& ctx) {
    const int i = ctx.i, n = ctx.n;
    ModuleBasis mb;
    mb.r = r_cg(i, n);

    QTwoTensor v0 = wedge(XZ(ctx).first, QMat(QMat::Identity(n, n))) * Rational(2, n);
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            if (ctx.c(k) <= ctx.c(l)) continue;
            v0 -= wedge(elementary(n, k, l), eta(n, i, l, k + i)) * Rational(2);
        }
    for (int k = 1; k < i; ++k)
        for (int l = k + 1; l < i; ++l) v0 -= wedge(Ecal(ctx, k, l), Ecal(ctx, l - k, i)) * Rational(2);
    mb.v.push_back(std::move(v0));

    QTwoTensor w(n);
    for (int l = 1; l < i; ++l) w += wedge(d_ell(ctx, l), Ecal(ctx, l, l - 1));
    for (int l = 1; l < i; ++l)
        for (int j = l + 1; j < i; ++j)
            for (int k = j + 1; k <= i; ++k) w += wedge(Ecal(ctx, j - 1, k - 1), Ecal(ctx, k - j + l, l - 1));
    mb.w = w * Rational(2);

    for (int l = 1; l <= i; ++l) {
        QTwoTensor vl = wedge(d_ell(ctx, l), Ecal(ctx, l, i));
        for (int j = l; j < i; ++j)
            for (int k = j + 1; k < i; ++k) vl += wedge(Ecal(ctx, j, k), Ecal(ctx, k - j + l, i));
        for (int k = 0; k < l; ++k)
            for (int j = k + 1; j < l; ++j) vl -= wedge(Ecal(ctx, j, k), Ecal(ctx, k - j + l, i));
        mb.v.push_back(vl * (Rational(-2) * binomial(i, l)));
    }
    return mb;
}

/// Basis, abelian-subalgebra and vanishing claims for the nilpotent algebra
/// generated by X and Z, plus the (ad Z)^k X closed form.
inline CheckReport nilpotent_algebra_checks(const SubprimeContext& ctx) {
    const int i = ctx.i;
    auto [x, z] = XZ(ctx);
    CheckReport report;

    std::vector<QMat> ad_powers = {x};  // X, (ad Z)X, ..., (ad Z)^{i-1}X
    for (int k = 1; k < i; ++k) ad_powers.push_back(bracket(z, ad_powers.back()));

    SparseRref<GlKey> span;
    bool independent = true;
    if (i > 1) independent = span.insert(gl_row(z));
    for (const QMat& m : ad_powers) independent = span.insert(gl_row(m)) && independent;
    report.add("basis_independent", independent && span.dim() == (i == 1 ? 1 : i + 1));

    bool abelian = true;
    for (std::size_t a = 0; a < ad_powers.size(); ++a)
        for (std::size_t b = a + 1; b < ad_powers.size(); ++b)
            abelian = abelian && mat_is_zero(bracket(ad_powers[a], ad_powers[b]));
    report.add("abelian_span", abelian);

    report.add("adZ_i_vanishes", mat_is_zero(bracket(z, ad_powers.back())));

    bool closed_form = true;
    for (int k = 1; k < i; ++k) {
        const Rational coeff = factorial(i - 1) / factorial(i - k - 1);
        closed_form = closed_form &&
                      mat_equal(ad_powers[static_cast<std::size_t>(k)],
                                scale_by_rational(Ecal(ctx, k, i), coeff));
    }
    report.add("adZ_power_closed_form", closed_form);
    return report;
}

/// The six module-action identities: Z.r = W, X.r = V_0, Z.W = 0,
/// Z.V_l = (l+1) V_{l+1}, X.W = V_1 / i, X.V_l = 0.
inline CheckReport verify_module_actions(const SubprimeContext& ctx) {
    const int i = ctx.i;
    auto [x, z] = XZ(ctx);
    ModuleBasis mb = module_vectors(ctx);
    CheckReport report;
    report.add("Z_r_is_W", ad_two(z, mb.r) == mb.w);
    report.add("X_r_is_V0", ad_two(x, mb.r) == mb.v[0]);
    report.add("Z_W_vanishes", ad_two(z, mb.w).is_zero());
    bool zv = true;
    for (int l = 0; l <= i; ++l) {
        const QTwoTensor next = (l + 1 <= i) ? mb.v[static_cast<std::size_t>(l + 1)] : QTwoTensor(ctx.n);
        zv = zv && (ad_two(z, mb.v[static_cast<std::size_t>(l)]) == next * Rational(l + 1));
    }
    report.add("Z_V_ladder", zv);
    report.add("X_W_is_V1_over_i", ad_two(x, mb.w) == mb.v[1] * Rational(1, i));
    bool xv = true;
    for (int l = 0; l <= i; ++l) xv = xv && ad_two(x, mb.v[static_cast<std::size_t>(l)]).is_zero();
    report.add("X_V_vanishes", xv);
    return report;
}

/// Brute-force verification of the bracket identities on eta/e/E/d and of the
/// adjoint actions of X and Z on the four constituent parts of r.
inline CheckReport lemma_identities(const SubprimeContext& ctx) {
    const int i = ctx.i, n = ctx.n;
    auto [x, z] = XZ(ctx);
    CheckReport report;

    bool ok_xeta = true, ok_xe = true, ok_zeta = true, ok_ze = true;
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            const QMat eta_kl = eta(n, i, k, l), e_kl = elementary(n, k, l);
            ok_xeta = ok_xeta &&
                      mat_equal(bracket(x, eta_kl),
                                QMat(scale_by_rational(eta(n, i, k, l + i), Rational(ctx.c(k) - ctx.c(l))) +
                                     scale_by_rational(elementary(n, k - i, l), Rational(ctx.c(k) + 1))));
            ok_xe = ok_xe && mat_equal(bracket(x, e_kl),
                                       QMat(scale_by_rational(elementary(n, k - i, l), Rational(ctx.c(k) + 1)) -
                                            scale_by_rational(elementary(n, k, l + i), Rational(ctx.c(l)))));
            QMat z_eta = scale_by_rational(eta(n, i, k + 1, l), Rational(ctx.a(k))) -
                         scale_by_rational(eta(n, i, k, l - 1), Rational(ctx.a(l - 1)));
            if (mod_floor(n - l, i) == i - 1)
                z_eta += scale_by_rational(elementary(n, n + k - l + 1, n), Rational(ctx.a(l - 1)));
            ok_zeta = ok_zeta && mat_equal(bracket(z, eta_kl), z_eta);
            ok_ze = ok_ze && mat_equal(bracket(z, e_kl),
                                       QMat(scale_by_rational(elementary(n, k + 1, l), Rational(ctx.a(k))) -
                                            scale_by_rational(elementary(n, k, l - 1), Rational(ctx.a(l - 1)))));
        }
    report.add("X_eta", ok_xeta);
    report.add("X_e", ok_xe);
    report.add("Z_eta", ok_zeta);
    report.add("Z_e", ok_ze);

    bool ok_ze2 = true, ok_xe2 = true;
    for (int k = 1; k < i; ++k)
        for (int l = 0; l <= i; ++l) {
            ok_ze2 = ok_ze2 &&
                     mat_equal(bracket(z, Ecal(ctx, k, l)),
                               QMat(scale_by_rational(Ecal(ctx, k + 1, l), Rational(i - 1 - k)) -
                                    scale_by_rational(Ecal(ctx, k, l - 1), Rational(mod_floor(-l, i)))));
            const QMat expected = (l == 0) ? QMat(-Ecal(ctx, k, i)) : QMat(QMat::Zero(n, n));
            ok_xe2 = ok_xe2 && mat_equal(bracket(x, Ecal(ctx, k, l)), expected);
        }
    report.add("Z_E", ok_ze2);
    report.add("X_E", ok_xe2);

    bool ok_xd = true, ok_zd = true;
    for (int l = 1; l <= i; ++l) {
        ok_xd = ok_xd && mat_is_zero(bracket(x, d_ell(ctx, l)));
        ok_zd = ok_zd && mat_equal(bracket(z, d_ell(ctx, l)),
                                   scale_by_rational(Ecal(ctx, l, l - 1), Rational(-(i - l))));
    }
    report.add("X_d", ok_xd);
    report.add("Z_d", ok_zd);

    // Adjoint actions on the four parts of r (the second lemma).
    const QTwoTensor a_fwd = alpha_forward(i, n), a_bwd = alpha_backward(i, n);
    const QTwoTensor beta = beta_point(i, n), gam = gamma(n);

    QTwoTensor x_afwd(n);
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            if (ctx.c(k) > ctx.c(l)) x_afwd -= wedge(elementary(n, k, l), eta(n, i, l, k + i)) * Rational(2);
    for (int j = 1; j <= n - i; ++j)
        for (int s = j + 1; s <= j + i; ++s)
            x_afwd += wedge(elementary(n, j, s), elementary(n, s, j + i)) * Rational(2 * ctx.c(j));
    report.add("X_alpha_forward", ad_two(x, a_fwd) == x_afwd);

    QTwoTensor x_abwd(n);
    for (int k = 1; k < i; ++k)
        for (int l = k + 1; l < i; ++l) x_abwd -= wedge(Ecal(ctx, k, l), Ecal(ctx, l - k, i)) * Rational(2);
    report.add("X_alpha_backward", ad_two(x, a_bwd) == x_abwd);

    QTwoTensor x_beta(n);
    for (int j = 1; j <= n; ++j) {
        QMat rhs = scale_by_rational(QMat(QMat::Identity(n, n)), Rational(2, n)) - elementary(n, j, j) -
                   elementary(n, j + i, j + i);
        x_beta += wedge(elementary(n, j, j + i), rhs) * Rational(ctx.c(j));
    }
    report.add("X_beta", ad_two(x, beta) == x_beta);

    QTwoTensor x_gamma(n);
    for (int j = 1; j <= n; ++j) {
        x_gamma += wedge(elementary(n, j, j + i), QMat(elementary(n, j, j) - elementary(n, j + i, j + i))) *
                   Rational(ctx.c(j));
        for (int s = j + 1; s < j + i; ++s)
            x_gamma -= wedge(elementary(n, j, s), elementary(n, s, j + i)) * Rational(2 * ctx.c(j));
    }
    report.add("X_gamma", ad_two(x, gam) == x_gamma);

    QTwoTensor z_afwd(n);
    for (int j = 1; j < n; ++j)
        z_afwd += wedge(eta(n, i, j + i + 1, j + i), cartan_h(n, j)) * Rational(2 * ctx.a(j));
    report.add("Z_alpha_forward", ad_two(z, a_fwd) == z_afwd);

    QTwoTensor z_abwd(n);
    for (int j = 1; j < i; ++j) z_abwd += wedge(Ecal(ctx, j, j - 1), Ecal(ctx, j, j)) * Rational(2 * (i - j));
    for (int l = 1; l < i; ++l)
        for (int j = l + 1; j <= i; ++j)
            for (int k = j; k <= i; ++k)
                z_abwd += wedge(Ecal(ctx, j - 1, k - 1), Ecal(ctx, k - j + l, l - 1)) * Rational(2);
    report.add("Z_alpha_backward", ad_two(z, a_bwd) == z_abwd);

    QTwoTensor z_beta(n);
    for (int j = 1; j < i; ++j)
        z_beta -= wedge(Ecal(ctx, j, j - 1), QMat(d_ell(ctx, j) - d_ell(ctx, j + 1))) * Rational(2 * (i - j));
    for (int l = 1; l < n; ++l)
        z_beta -= wedge(QMat(eta(n, i, l + 1, l) + eta(n, i, l + i + 1, l + i)), cartan_h(n, l)) *
                  Rational(ctx.a(l));
    report.add("Z_beta", ad_two(z, beta) == z_beta);

    QTwoTensor z_gamma(n);
    for (int j = 1; j < n; ++j)
        z_gamma += wedge(elementary(n, j + 1, j), cartan_h(n, j)) * Rational(ctx.a(j));
    report.add("Z_gamma", ad_two(z, gam) == z_gamma);

    return report;
}

/// g = exp(-Z) exp(-X) exp(-sum binom(i,k) E_{ki}).
inline QMat g_matrix(const SubprimeContext& ctx) {
    const int i = ctx.i, n = ctx.n;
    auto [x, z] = XZ(ctx);
    QMat third = QMat::Zero(n, n);
    for (int k = 1; k < i; ++k) third -= scale_by_rational(Ecal(ctx, k, i), binomial(i, k));
    return QMat(exp_nilpotent(QMat(-z)) * exp_nilpotent(QMat(-x)) * exp_nilpotent(third));
}

/// alpha_0: the alpha-part contributed by the edge at source n - (n mod i);
/// zero when i = 1 (the edge leaves the diagram).
inline QTwoTensor alpha_0(const SubprimeContext& ctx) {
    if (ctx.i == 1) return QTwoTensor(ctx.n);
    const int source = ctx.n - static_cast<int>(mod_floor(ctx.n, ctx.i));
    return alpha_sub(cg_triple(ctx.i, ctx.n), {source});
}

inline QTwoTensor r_prime(const SubprimeContext& ctx) {
    ModuleBasis mb = module_vectors(ctx);
    return mb.r + mb.v[static_cast<std::size_t>(ctx.i)];
}

/// b = -(X + Z).r = -V_0 - W.
inline QTwoTensor boundary_b(const SubprimeContext& ctx) {
    ModuleBasis mb = module_vectors(ctx);
    return QTwoTensor(-(mb.v[0] + mb.w));
}

/// b_{rho,mu} = (rho X + mu Z).r.
inline QTwoTensor b_rho_mu(const SubprimeContext& ctx, const Rational& rho, const Rational& mu) {
    auto [x, z] = XZ(ctx);
    const QMat gen = scale_by_rational(x, rho) + scale_by_rational(z, mu);
    return ad_two(gen, r_cg(ctx.i, ctx.n));
}

/// Phi(t) = t^{2nH} g with H the subprime principal element.
inline TMat phi(const SubprimeContext& ctx) {
    const QMat h = principal_closed_form(ctx.i, ctx.n);
    return TMat(t_power(h, 2 * ctx.n) * lift_laurent(g_matrix(ctx)));
}

/// The main-theorem verifier: the Phi identity, classification and carrier of
/// b, the Schouten family identity, the g split, and V_i = -alpha_0.
inline CheckReport verify_main(const SubprimeContext& ctx) {
    const int i = ctx.i, n = ctx.n;
    CheckReport report;

    ModuleBasis mb = module_vectors(ctx);
    const QTwoTensor& r = mb.r;
    const QTwoTensor rp = r + mb.v[static_cast<std::size_t>(i)];
    const QTwoTensor b = QTwoTensor(-(mb.v[0] + mb.w));

    const QMat g = g_matrix(ctx);
    const QMat h = principal_closed_form(i, n);
    const TMat tp = t_power(h, 2 * n);
    const TMat big_phi = tp * lift_laurent(g);
    const TMat big_phi_inv = lift_laurent(inverse(g)) * substitute_t_inverse(tp);
    TTwoTensor moved = conj_two(big_phi, big_phi_inv, lift_laurent(r));
    TTwoTensor expected = lift_laurent(rp);
    expected += lift_laurent(b) * Laurent::t_pow(2 * n);
    report.add("phi_identity", moved == expected);

    report.add("b_cybe", classify(b).tag == YbTag::CYBE);
    report.add("carrier", carrier_equals_parabolic(carrier(b), i, n));

    std::vector<QTwoTensor> family(static_cast<std::size_t>(2 * n) + 1, QTwoTensor(n));
    family.front() = rp;
    family.back() = b;
    report.add("schouten_family", boundary_family_check(family).ok);

    report.add("g_r_split", conj_two(g, r) == rp + b);
    report.add("Vi_alpha0", mb.v[static_cast<std::size_t>(i)] == QTwoTensor(-alpha_0(ctx)));
    return report;
}

/// All subprime coprime pairs with i < n <= max_n.
inline std::vector<std::pair<int, int>> subprime_pairs(int max_n) {
    std::vector<std::pair<int, int>> out;
    for (int n = 2; n <= max_n; ++n)
        for (int i = 1; i < n; ++i) {
            if (std::gcd(i, n) != 1) continue;
            const long rem = mod_floor(n, i);
            if (i == 1 || rem == 1 || rem == i - 1) out.emplace_back(i, n);
        }
    return out;
}

}  // namespace cybe
