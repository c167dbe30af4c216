#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asmkit/linalg.hpp"
#include "reference_oracles.hpp"

using namespace asmkit;
using namespace asmkit::testing;

TEST_CASE("det basics") {
    Matrix<Rational> m(2, 2);
    m.at(0, 0) = Rational(2);
    m.at(0, 1) = Rational(3);
    m.at(1, 0) = Rational(5);
    m.at(1, 1) = Rational(7);
    CHECK(det(m) == Rational(-1));

    Matrix<Rational> empty(0, 0);
    CHECK(det(empty) == Rational(1));

    Matrix<Rational> rect(2, 3);
    CHECK_THROWS_AS(det(rect), invalid_input);
}

TEST_CASE("det equals signed permutation sum on random matrices") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        auto m = random_rational_matrix(4, seed);
        CHECK(det(m) == det_by_definition(m));
    }
}

TEST_CASE("det is multiplicative") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        auto a = random_rational_matrix(3, seed);
        auto b = random_rational_matrix(3, seed + 100);
        Matrix<Rational> ab(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                Rational s(0);
                for (size_t k = 0; k < 3; ++k) s += a.at(i, k) * b.at(k, j);
                ab.at(i, j) = s;
            }
        CHECK(det(ab) == det(a) * det(b));
    }
}

TEST_CASE("det over Laurent polynomials uses exact Bareiss") {
    using P = LaurentPoly<Rational>;
    SplitMix64 rng(42);
    for (int trial = 0; trial < 4; ++trial) {
        Matrix<P> m(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                std::vector<Rational> c;
                for (int k = 0; k < 3; ++k) c.push_back(Rational(rng.range(-4, 4)));
                m.at(i, j) = P::from_coeffs(c, static_cast<int>(rng.range(-2, 2)));
            }
        CHECK(det(m) == det_by_definition(m));
    }
}

TEST_CASE("vandermonde determinant") {
    // det(x_i^{n-j}) with columns in the bialternant order x^{n-1}, ..., x^0
    // equals prod_{i<j} (x_i - x_j).
    for (size_t n = 2; n <= 4; ++n) {
        auto xs = sample_points(n, 31 * n, no_constraint());
        Matrix<Rational> v(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v.at(i, j) = rational_pow(xs[i], static_cast<long>(n - 1 - j));
        Rational prod(1);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) prod *= xs[i] - xs[j];
        CHECK(det(v) == prod);
    }
}

TEST_CASE("permanent basics and Ryser") {
    Matrix<Rational> ones(2, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) ones.at(i, j) = Rational(1);
    CHECK(perm(ones) == Rational(2));

    for (size_t n = 1; n <= 6; ++n) {
        Matrix<Rational> h(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) h.at(i, j) = make_rational(1, 2);
        CHECK(perm(h) == make_rational(factorial(n), integer_pow(2, n)));
    }

    // direct sum vs inclusion-exclusion: both equal the definition
    auto m4 = random_rational_matrix(4, 9);
    CHECK(perm(m4) == perm_by_definition(m4));
    auto m5 = random_rational_matrix(5, 10);
    CHECK(perm(m5) == perm_by_definition(m5));

    Matrix<Rational> diag(3, 3);
    diag.at(0, 0) = Rational(2);
    diag.at(1, 1) = Rational(3);
    diag.at(2, 2) = Rational(5);
    CHECK(perm(diag) == det(diag));
}

TEST_CASE("pfaffian basics") {
    Matrix<Rational> m(2, 2);
    m.at(0, 1) = make_rational(7, 3);
    m.at(1, 0) = make_rational(-7, 3);
    CHECK(pfaffian(m) == make_rational(7, 3));

    Matrix<Rational> empty(0, 0);
    CHECK(pfaffian(empty) == Rational(1));

    Matrix<Rational> odd(3, 3);
    CHECK_THROWS_AS(pfaffian(odd), invalid_input);

    Matrix<Rational> notskew(2, 2);
    notskew.at(0, 1) = Rational(1);
    notskew.at(1, 0) = Rational(1);
    CHECK_THROWS_AS(pfaffian(notskew), invalid_input);
}

TEST_CASE("pfaffian matches the ordered matching sum and squares to det") {
    for (uint64_t seed = 1; seed <= 4; ++seed) {
        for (size_t n : {2u, 4u, 6u}) {
            auto m = random_skew_matrix(n, seed * 13 + n);
            Rational pf = pfaffian(m);
            CHECK(pf == pf_by_definition(m));
            CHECK(pf * pf == det(m));
        }
    }
}

TEST_CASE("hafnian basics and matching sum") {
    Matrix<Rational> m2(2, 2);
    m2.at(0, 1) = Rational(5);
    m2.at(1, 0) = Rational(5);
    CHECK(hafnian(m2) == Rational(5));

    for (size_t n : {4u, 6u}) {
        Matrix<Rational> ones(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) ones.at(i, j) = Rational(1);
        CHECK(hafnian(ones) == Rational(odd_double_factorial(n / 2)));
    }

    for (uint64_t seed = 2; seed <= 4; ++seed) {
        auto m = random_symmetric_matrix(6, seed);
        CHECK(hafnian(m) == hf_by_definition(m));
    }

    Matrix<Rational> notsym(2, 2);
    notsym.at(0, 1) = Rational(1);
    notsym.at(1, 0) = Rational(2);
    CHECK_THROWS_AS(hafnian(notsym), invalid_input);
}

TEST_CASE("det over the cyclotomic field") {
    SplitMix64 rng(77);
    Matrix<Cyclo24> m(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            Cyclo24 v;
            for (int k = 0; k < 8; ++k) v.coeff(k) = make_rational(rng.range(-3, 3), rng.range(1, 3));
            m.at(i, j) = v;
        }
    CHECK(det(m) == det_by_definition(m));
}
