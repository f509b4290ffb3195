#include "cybe/yangbaxter.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cybe;

namespace {
const QMat E = elementary(2, 1, 2);
const QMat F = elementary(2, 2, 1);
const QMat H = cartan_h(2, 1);

QMat random_sparse_gl(std::mt19937_64& rng, int n, int terms = 3) {
    std::uniform_int_distribution<int> idx(1, n);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    QMat m = QMat::Zero(n, n);
    for (int t = 0; t < terms; ++t) m(idx(rng) - 1, idx(rng) - 1) += Rational(num(rng), den(rng));
    return m;
}

QTwoTensor random_two_tensor(std::mt19937_64& rng, int n, int wedges = 2) {
    QTwoTensor t(n);
    for (int w = 0; w < wedges; ++w) t += wedge(random_sparse_gl(rng, n), random_sparse_gl(rng, n));
    return t;
}

QMat random_unipotent(std::mt19937_64& rng, int n) {
    QMat nil = QMat::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) nil(j, k) = static_cast<long>(rng() % 5) - 2;
    return exp_nilpotent(nil);
}
}  // namespace

TEST_CASE("schouten on sl2 wedges") {
    CHECK(schouten(QTwoTensor(2)).is_zero());
    CHECK(schouten(wedge(E, H)).is_zero());
    QThreeTensor m = schouten(wedge(E, F));
    CHECK_FALSE(m.is_zero());
    CHECK(is_invariant(m));
}

TEST_CASE("fast and generic schouten paths agree") {
    std::mt19937_64 rng(606060);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        QTwoTensor r = random_two_tensor(rng, n), s = random_two_tensor(rng, n);
        CHECK(schouten_mixed(r, s) == schouten_mixed<Rational>(r, s));
    }
}

TEST_CASE("is_invariant rejects a non-invariant tensor") {
    QThreeTensor t(2);
    t.add(1, 2, 1, 2, 1, 2, Rational(1));
    CHECK_FALSE(is_invariant(t));
    CHECK(is_invariant(QThreeTensor(3)));
}

TEST_CASE("classify") {
    CHECK(classify(wedge(E, H)).tag == YbTag::CYBE);
    CHECK(classify(wedge(E, F)).tag == YbTag::MCYBE);
    QTwoTensor neither(3);
    neither.add(1, 2, 2, 3, Rational(1));  // e12 (x) e23: nonzero, non-invariant bracket
    CHECK(classify(neither).tag == YbTag::NEITHER);

    QTwoTensor degenerate(3);
    degenerate.add(1, 2, 1, 3, Rational(1));  // e12 (x) e13 has vanishing Schouten bracket
    CHECK(classify(degenerate).tag == YbTag::CYBE);
}

TEST_CASE("carrier of the sl2 boundary solution is the Borel") {
    Carrier car = carrier(wedge(E, H));
    REQUIRE(car.dim() == 2);
    auto basis = car.basis();
    CHECK(mat_equal(basis[0], H));
    CHECK(mat_equal(basis[1], E));
    CHECK(carrier(QTwoTensor(4)).dim() == 0);
}

TEST_CASE("carrier dimension is conjugation invariant") {
    std::mt19937_64 rng(717171);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        QTwoTensor r = random_two_tensor(rng, n);
        QMat g = random_unipotent(rng, n);
        CHECK(carrier(conj_two(g, r)).dim() == carrier(r).dim());
    }
}

TEST_CASE("cocycle of e^h") {
    CocycleForm form = cocycle(wedge(E, H));
    REQUIRE(form.basis.size() == 2);
    CHECK(form.matrix(0, 0) == 0);
    CHECK(form.matrix(1, 1) == 0);
    CHECK(form.matrix(0, 1) == -form.matrix(1, 0));
    CHECK(form.matrix(0, 1) != 0);
    QTwoTensor lopsided(2);
    lopsided.add(1, 2, 2, 1, Rational(1));  // e12 (x) e21: rcheck is singular on its carrier
    CHECK_THROWS_AS(cocycle(lopsided), std::domain_error);
}

TEST_CASE("cocycle identity holds on carrier basis triples") {
    QTwoTensor r = wedge(E, H);
    CocycleForm form = cocycle(r);
    Carrier car = carrier(r);
    const int d = car.dim();
    auto coords = [&](const QMat& x) {
        auto c = car.span.coordinates(gl_row(x));
        REQUIRE(c.has_value());
        return *c;
    };
    auto b_of = [&](const QMat& x, int k) {
        auto cx = coords(x);
        Rational v = 0;
        for (int m = 0; m < d; ++m) v += cx[static_cast<std::size_t>(m)] * form.matrix(m, k);
        return v;
    };
    auto basis = car.basis();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                Rational sum = b_of(bracket(basis[a], basis[b]), c) + b_of(bracket(basis[b], basis[c]), a) +
                               b_of(bracket(basis[c], basis[a]), b);
                CHECK(sum == 0);
            }
}

TEST_CASE("admits pins the coboundary functional") {
    LinearFunctional f;
    f.n = 2;
    f.add(1, 2, Rational(-1));
    CHECK(admits(wedge(E, H), f));  // e^h admits -e*_{12}
    LinearFunctional g;
    g.n = 2;
    g.add(1, 2, Rational(1));
    CHECK_FALSE(admits(wedge(E, H), g));
    CHECK(admits(QTwoTensor(wedge(E, H) * Rational(-1)), g));  // -e^h admits +e*_{12}
}

TEST_CASE("boundary_family_check") {
    std::vector<QTwoTensor> good = {wedge(E, F), wedge(E, H)};  // exp(te).r
    auto res = boundary_family_check(good);
    CHECK(res.ok);

    std::vector<QTwoTensor> bad = {wedge(E, F), wedge(E, F)};
    auto res2 = boundary_family_check(bad);
    CHECK_FALSE(res2.ok);
    CHECK(res2.first_nonzero_degree > 0);

    CHECK_THROWS_AS(boundary_family_check({wedge(E, F)}), std::invalid_argument);
    CHECK_THROWS_AS(boundary_family_check({wedge(E, F), QTwoTensor(2)}), std::invalid_argument);
}

TEST_CASE("schouten is equivariant under unipotent conjugation") {
    std::mt19937_64 rng(828282);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        QTwoTensor r = random_two_tensor(rng, n);
        QMat g = random_unipotent(rng, n);
        QMat ginv = inverse(g);
        CHECK(schouten(conj_two(g, ginv, r)) == conj_three(g, ginv, schouten(r)));
    }
}

TEST_CASE("classification is conjugation invariant") {
    std::mt19937_64 rng(939393);
    QTwoTensor cybe_r = wedge(E, H), mcybe_r = wedge(E, F);
    for (int trial = 0; trial < 20; ++trial) {
        QMat g = random_unipotent(rng, 2);
        CHECK(classify(conj_two(g, cybe_r)).tag == YbTag::CYBE);
        CHECK(classify(conj_two(g, mcybe_r)).tag == YbTag::MCYBE);
    }
}

TEST_CASE("invariant schouten brackets are fixed by the unipotent group action") {
    std::mt19937_64 rng(121212);
    QThreeTensor w = schouten(wedge(E, F));
    for (int trial = 0; trial < 20; ++trial) {
        QMat g = random_unipotent(rng, 2);
        CHECK(conj_three(g, inverse(g), w) == w);
    }
}
