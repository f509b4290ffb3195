#include "cybe/subprime.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cybe;

TEST_CASE("context scalars") {
    SubprimeContext c37 = context(3, 7);
    CHECK(c37.eps == 1);
    CHECK(c37.c(1) == 2);
    CHECK(c37.c(2) == 1);
    CHECK(c37.c(3) == 1);
    CHECK(c37.c(4) == 1);
    CHECK(c37.a(1) == 2);
    CHECK(c37.a(2) == 1);
    CHECK(c37.a(0) == 0);

    CHECK(context(3, 8).eps == -1);
    CHECK(context(1, 5).eps == -1);  // n mod 1 = 0, so eps defaults to -1; Z = 0 regardless
    CHECK_THROWS_AS(context(5, 12), std::domain_error);
    CHECK_THROWS_AS(context(2, 4), std::domain_error);
}

TEST_CASE("Ecal and d_ell") {
    CHECK(mat_equal(Ecal(context(3, 7), 1, 0), xi(7, 3, 2, 1)));
    CHECK(mat_equal(Ecal(context(3, 7), 1, 0), QMat(elementary(7, 2, 1) + elementary(7, 5, 4))));
    CHECK(mat_equal(Ecal(context(3, 8), 1, 0), QMat(-(elementary(8, 3, 2) + elementary(8, 6, 5)))));

    QMat d1 = d_ell(context(3, 7), 1);
    QMat expected = elementary(7, 2, 2) + elementary(7, 5, 5) + elementary(7, 3, 3) + elementary(7, 6, 6);
    expected -= scale_by_rational(QMat(QMat::Identity(7, 7)), Rational(4, 7));
    CHECK(mat_equal(d1, expected));
    CHECK(is_zero(trace(d1)));
    CHECK(mat_is_zero(d_ell(context(3, 7), 3)));  // d_i vanishes
}

TEST_CASE("Ecal bracket rule") {
    for (auto [i, n] : {std::pair{3, 7}, {3, 8}, {4, 9}}) {
        SubprimeContext ctx = context(i, n);
        for (int k = 1; k < i; ++k)
            for (int r = 1; r < i; ++r)
                for (int l = 0; l <= i; ++l)
                    for (int s = 0; s <= i; ++s) {
                        QMat lhs = bracket(Ecal(ctx, k, l), Ecal(ctx, r, s));
                        QMat rhs = QMat::Zero(n, n);
                        if (l == r) rhs += Ecal(ctx, k, s);
                        if (s == k) rhs -= Ecal(ctx, r, l);
                        CHECK(mat_equal(lhs, rhs));
                    }
    }
}

TEST_CASE("X and Z") {
    SubprimeContext ctx = context(3, 7);
    auto [x, z] = XZ(ctx);
    QMat ex = scale_by_rational(elementary(7, 1, 4), 2) + elementary(7, 2, 5) + elementary(7, 3, 6) +
              elementary(7, 4, 7);
    CHECK(mat_equal(x, ex));
    QMat ez = scale_by_rational(QMat(elementary(7, 2, 1) + elementary(7, 5, 4)), 2) + elementary(7, 3, 2) +
              elementary(7, 6, 5);
    CHECK(mat_equal(z, ez));

    // Z also equals sum (i - j) E_{j,j-1}
    QMat z_alt = QMat::Zero(7, 7);
    for (int j = 1; j < 3; ++j) z_alt += scale_by_rational(Ecal(ctx, j, j - 1), Rational(3 - j));
    CHECK(mat_equal(z, z_alt));

    auto [x1, z1] = XZ(context(1, 5));
    CHECK(mat_is_zero(z1));

    for (auto [i, n] : {std::pair{2, 5}, {3, 8}, {4, 9}}) {
        SubprimeContext c = context(i, n);
        auto [xx, zz] = XZ(c);
        QMat alt = QMat::Zero(n, n);
        for (int j = 1; j < i; ++j) alt += scale_by_rational(Ecal(c, j, j - 1), Rational(i - j));
        CHECK(mat_equal(zz, alt));
    }
}

TEST_CASE("nilpotent algebra checks") {
    for (auto [i, n] : {std::pair{2, 5}, {3, 7}, {3, 8}, {1, 4}}) {
        CheckReport report = nilpotent_algebra_checks(context(i, n));
        INFO(i << "," << n << " first failure: " << report.first_failure());
        CHECK(report.all_ok());
    }
}

TEST_CASE("module vectors at the degenerate pair (1,2)") {
    ModuleBasis mb = module_vectors(context(1, 2));
    CHECK(mb.v[0] == wedge(elementary(2, 1, 2), cartan_h(2, 1)));
    CHECK(mb.w.is_zero());
    CHECK(mb.v[1].is_zero());
}

TEST_CASE("module vectors land in the parabolic and in sl^2") {
    for (auto [i, n] : {std::pair{2, 5}, {3, 7}, {3, 8}}) {
        ModuleBasis mb = module_vectors(context(i, n));
        CHECK(sl_membership(mb.w));
        CHECK(tensor_in_parabolic(mb.w, i));
        for (const QTwoTensor& v : mb.v) {
            CHECK(sl_membership(v));
            CHECK(tensor_in_parabolic(v, i));
        }
    }
}

TEST_CASE("module actions (Proposition-level identities)") {
    for (auto [i, n] : {std::pair{2, 5}, {3, 7}, {1, 3}, {3, 8}}) {
        CheckReport report = verify_module_actions(context(i, n));
        INFO(i << "," << n << " first failure: " << report.first_failure());
        CHECK(report.all_ok());
    }
}

TEST_CASE("V_i equals minus alpha_0") {
    for (auto [i, n] : {std::pair{2, 5}, {3, 7}, {3, 8}, {1, 4}}) {
        SubprimeContext ctx = context(i, n);
        ModuleBasis mb = module_vectors(ctx);
        CHECK(mb.v[static_cast<std::size_t>(i)] == QTwoTensor(-alpha_0(ctx)));
    }
}

TEST_CASE("lemma identities") {
    for (auto [i, n] : {std::pair{2, 5}, {3, 7}, {3, 8}}) {
        CheckReport report = lemma_identities(context(i, n));
        INFO(i << "," << n << " first failure: " << report.first_failure());
        CHECK(report.all_ok());
    }
}

TEST_CASE("H eigenstructure of the module") {
    for (auto [i, n] : {std::pair{2, 5}, {3, 7}}) {
        SubprimeContext ctx = context(i, n);
        ModuleBasis mb = module_vectors(ctx);
        std::vector<QTwoTensor> space = {mb.r, mb.w};
        for (const QTwoTensor& v : mb.v) space.push_back(v);
        QMat h = principal_closed_form(i, n);
        auto eig = eigen_decompose(h, space);

        // dims (1, 2, 1, ..., 1) over eigenvalues 0..i+1
        REQUIRE(eig.count(0) == 1);
        CHECK(eig[0].size() == 1);
        CHECK(eig[1].size() == 2);
        for (long lambda = 2; lambda <= i + 1; ++lambda) CHECK(eig[lambda].size() == 1);

        // H.r' = 0 and H.W = W
        QTwoTensor rp = mb.r + mb.v[static_cast<std::size_t>(i)];
        CHECK(ad_two(h, rp).is_zero());
        CHECK(ad_two(h, mb.w) == mb.w);
        TensorSpan m0(n);
        m0.insert(eig[0].front());
        CHECK(m0.contains(rp));
    }
}

TEST_CASE("g matrix") {
    CHECK(mat_equal(g_matrix(context(1, 2)), QMat(QMat::Identity(2, 2) - elementary(2, 1, 2))));

    const long expected_rows[7][7] = {{1, 0, 0, -2, 0, 0, 1},  {-2, 1, 0, 1, -1, 0, 1},
                                      {1, -1, 1, -2, 1, -1, 1}, {0, 0, 0, 1, 0, 0, -1},
                                      {0, 0, 0, -2, 1, 0, -1},  {0, 0, 0, 1, -1, 1, -1},
                                      {0, 0, 0, 0, 0, 0, 1}};
    QMat g37 = g_matrix(context(3, 7));
    for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) CHECK(g37(j, k) == expected_rows[j][k]);

    for (auto [i, n] : {std::pair{2, 5}, {3, 7}, {4, 9}, {3, 8}}) {
        QMat g = g_matrix(context(i, n));
        CHECK(determinant(g) == 1);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) CHECK(is_integer(g(j, k)));
    }
}

TEST_CASE("phi matrix golden at (3,7)") {
    TMat p = phi(context(3, 7));
    const long expo[7] = {-2, 12, 26, -16, -2, 12, -30};
    const long coef[7][7] = {{1, 0, 0, -2, 0, 0, 1},  {-2, 1, 0, 1, -1, 0, 1}, {1, -1, 1, -2, 1, -1, 1},
                             {0, 0, 0, 1, 0, 0, -1},  {0, 0, 0, -2, 1, 0, -1}, {0, 0, 0, 1, -1, 1, -1},
                             {0, 0, 0, 0, 0, 0, 1}};
    for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) {
            const Laurent expected = Laurent::term(coef[j][k], expo[j]);
            CHECK(p(j, k) == expected);
        }
}

TEST_CASE("phi entries are integer monomials and Phi is unimodular") {
    for (auto [i, n] : {std::pair{2, 5}, {3, 8}}) {
        SubprimeContext ctx = context(i, n);
        TMat p = phi(ctx);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Laurent& v = p(j, k);
                if (v.is_zero()) continue;
                REQUIRE(v.is_monomial());
                CHECK(is_integer(v.coeffs().begin()->second));
            }
        // det Phi(t) = 1: 2nH is traceless, det g = 1, plus a spot check at t = 2
        CHECK(is_zero(trace(principal_closed_form(i, n))));
        CHECK(determinant(g_matrix(ctx)) == 1);
        QMat at2 = QMat::Zero(n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rational v = 0;
                for (const auto& [e, c] : p(j, k).coeffs())
                    v += c * (e >= 0 ? Rational(1L << e) : Rational(1, 1L << (-e)));
                at2(j, k) = v;
            }
        CHECK(determinant(at2) == 1);
    }
}

TEST_CASE("b and b_rho_mu") {
    SubprimeContext c12 = context(1, 2);
    CHECK(boundary_b(c12) == QTwoTensor(wedge(elementary(2, 1, 2), cartan_h(2, 1)) * Rational(-1)));

    // (-X + eps Z).r equals r_f for the subprime functional; b_{rho,mu} admits f_{rho,mu}
    for (auto [i, n] : {std::pair{2, 5}, {3, 7}}) {
        SubprimeContext ctx = context(i, n);
        QTwoTensor b = boundary_b(ctx);
        CHECK(b == b_rho_mu(ctx, -1, -1));
        CHECK(b_rho_mu(ctx, -1, ctx.eps) ==
              r_from_functional(subprime_functional(i, n), parabolic_basis(i, n)));
        for (auto [rho, mu] : {std::pair<Rational, Rational>{1, 1}, {-1, ctx.eps}, {2, 3}}) {
            QTwoTensor brm = b_rho_mu(ctx, rho, mu);
            CHECK(classify(brm).tag == YbTag::CYBE);
            CHECK(admits(brm, f_rho_mu(i, n, rho, mu)));
        }
    }
}

TEST_CASE("schouten bracket of r equals that of r_prime") {
    for (auto [i, n] : {std::pair{2, 5}, {3, 7}}) {
        SubprimeContext ctx = context(i, n);
        CHECK(schouten(r_cg(i, n)) == schouten(r_prime(ctx)));
        CHECK(classify(r_prime(ctx)).tag == YbTag::MCYBE);
    }
}

TEST_CASE("verify_main on small subprime pairs") {
    for (auto [i, n] : {std::pair{2, 5}, {3, 7}, {1, 3}, {3, 8}}) {
        CheckReport report = verify_main(context(i, n));
        INFO(i << "," << n << " first failure: " << report.first_failure());
        CHECK(report.all_ok());
    }
}

TEST_CASE("subprime pair enumeration") {
    auto pairs = subprime_pairs(12);
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair{5, 12}) == pairs.end());
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair{11, 12}) != pairs.end());
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair{4, 7}) != pairs.end());
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair{5, 9}) != pairs.end());
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair{6, 11}) != pairs.end());
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair{1, 2}) != pairs.end());
    CHECK(pairs.size() == 36);  // 11+5+6+4+3+2+1+1+1+1+1 over i = 1..11
}
