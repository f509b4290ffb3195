#include "cybe/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cybe;

namespace {
QMat random_matrix(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    QMat m = QMat::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m(j, k) = Rational(num(rng), den(rng));
    return m;
}

QMat random_strictly_upper(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-5, 5);
    QMat m = QMat::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) m(j, k) = num(rng);
    return m;
}
}  // namespace

TEST_CASE("rank and inverse basics") {
    CHECK(rank(QMat::Identity(2, 2)) == 2);
    QMat rot = QMat::Zero(2, 2);
    rot(0, 1) = 1;
    rot(1, 0) = -1;
    QMat expected = QMat::Zero(2, 2);
    expected(0, 1) = -1;
    expected(1, 0) = 1;
    CHECK(mat_equal(inverse(rot), expected));
    CHECK_THROWS_AS(inverse(QMat::Zero(2, 2)), std::domain_error);
}

TEST_CASE("inverse is exact on random invertible matrices") {
    std::mt19937_64 rng(424242);
    int done = 0;
    while (done < 40) {
        QMat a = random_matrix(rng, 4);
        if (rank(a) < 4) continue;
        CHECK(mat_equal(QMat(a * inverse(a)), QMat(QMat::Identity(4, 4))));
        ++done;
    }
}

TEST_CASE("linear_solve reports inconsistency") {
    QMat a(2, 2);
    a << Rational(1), Rational(0), Rational(1), Rational(0);
    QMat bad(2, 1), good(2, 1);
    bad << Rational(0), Rational(1);
    good << Rational(3), Rational(3);
    CHECK_FALSE(linear_solve(a, bad).consistent);
    auto res = linear_solve(a, good);
    REQUIRE(res.consistent);
    CHECK(mat_equal(QMat(a * res.solution), good));
}

TEST_CASE("nullspace spans the kernel") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        QMat a = random_matrix(rng, 4);
        a.row(3) = a.row(0) + a.row(1);  // force a rank drop
        QMat ns = nullspace(a);
        CHECK(ns.cols() == 4 - rank(a));
        if (ns.cols() > 0) CHECK(mat_is_zero(QMat(a * ns)));
    }
}

TEST_CASE("determinant") {
    QMat rot = QMat::Zero(2, 2);
    rot(0, 1) = 1;
    rot(1, 0) = -1;
    CHECK(determinant(rot) == 1);
    CHECK(determinant(QMat::Zero(3, 3)) == 0);
    std::mt19937_64 rng(7);
    QMat a = random_matrix(rng, 4), b = random_matrix(rng, 4);
    CHECK(determinant(QMat(a * b)) == determinant(a) * determinant(b));
}

TEST_CASE("exp_nilpotent basics") {
    CHECK(mat_equal(exp_nilpotent(QMat(QMat::Zero(3, 3))), QMat(QMat::Identity(3, 3))));
    QMat e12 = elementary(2, 1, 2);
    CHECK(mat_equal(exp_nilpotent(e12), QMat(QMat::Identity(2, 2) + e12)));
    CHECK_THROWS_AS(exp_nilpotent(QMat(QMat::Identity(2, 2))), std::domain_error);
}

TEST_CASE("exp_nilpotent(N) exp_nilpotent(-N) is the identity") {
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 60; ++trial) {
        QMat n = random_strictly_upper(rng, 5);
        QMat prod = exp_nilpotent(n) * exp_nilpotent(QMat(-n));
        CHECK(mat_equal(prod, QMat(QMat::Identity(5, 5))));
        CHECK(determinant(exp_nilpotent(n)) == 1);
    }
}

TEST_CASE("t_power on a diagonal matrix") {
    QMat a = QMat::Zero(2, 2);
    a(0, 0) = 1;
    a(1, 1) = -1;
    TMat p = t_power(a, 1);
    CHECK(p(0, 0) == Laurent::t_pow(1));
    CHECK(p(1, 1) == Laurent::t_pow(-1));
    CHECK(p(0, 1).is_zero());
    CHECK(mat_equal(evaluate_at_one(p), QMat(QMat::Identity(2, 2))));
}

TEST_CASE("t_power matches entrywise powers for integer diagonals") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> d(-7, 7);
    for (int trial = 0; trial < 25; ++trial) {
        QMat a = QMat::Zero(4, 4);
        for (int j = 0; j < 4; ++j) a(j, j) = d(rng);
        TMat p = t_power(a, 3);
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                if (j == k) CHECK(p(j, k) == Laurent::t_pow(3 * to_long(a(j, j))));
                else CHECK(p(j, k).is_zero());
            }
    }
}

TEST_CASE("t_power of the (3,7) principal diagonal reproduces the row scalings") {
    QMat h = QMat::Zero(7, 7);
    const Rational diag[7] = {Rational(-1, 7), Rational(6, 7),  Rational(13, 7), Rational(-8, 7),
                              Rational(-1, 7), Rational(6, 7),  Rational(-15, 7)};
    for (int j = 0; j < 7; ++j) h(j, j) = diag[j];
    TMat p = t_power(h, 14);
    const long expected[7] = {-2, 12, 26, -16, -2, 12, -30};
    for (int j = 0; j < 7; ++j) CHECK(p(j, j) == Laurent::t_pow(expected[j]));
}

TEST_CASE("t_power rejects non-integer spectrum") {
    QMat a = QMat::Zero(1, 1);
    a(0, 0) = Rational(1, 2);
    CHECK_THROWS_AS(t_power(a, 1), std::domain_error);
}

TEST_CASE("t_power rejects defective matrices") {
    QMat jordan = QMat::Zero(2, 2);
    jordan(0, 0) = 2;
    jordan(1, 1) = 2;
    jordan(0, 1) = 1;
    CHECK_THROWS_AS(t_power(jordan, 1), std::domain_error);
}

TEST_CASE("t_power handles triangular input with nilpotent part") {
    QMat a = QMat::Zero(3, 3);
    a(0, 0) = 2;
    a(1, 1) = 3;
    a(2, 2) = -1;
    a(0, 1) = 5;
    TMat p = t_power(a, 1);
    CHECK(mat_equal(evaluate_at_one(p), QMat(QMat::Identity(3, 3))));
    TMat q = substitute_t_inverse(p);
    CHECK(mat_equal(QMat(evaluate_at_one(TMat(p * q))), QMat(QMat::Identity(3, 3))));
    TMat prod = p * q;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) CHECK(prod(j, k) == (j == k ? Laurent(1) : Laurent()));
}
