#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asmkit/enumerate.hpp"
#include "asmkit/kuperberg.hpp"
#include "asmkit/sampling.hpp"

using namespace asmkit;

TEST_CASE("sigma") {
    CHECK(sigma(Cyclo24(Rational(2))) == Cyclo24(make_rational(3, 2)));
    CHECK(sigma(cyclo_root(4)) == cyclo_root(4) + cyclo_root(4));  // i - (-i) = 2i
    CHECK(sigma(Cyclo24::one()).is_zero());
    CHECK_THROWS_AS(sigma(Cyclo24::zero()), pole_error);
}

TEST_CASE("kernel matrices are skew where they should be") {
    auto pts = sample_points(4, 3, spectral_constraint());
    std::vector<Cyclo24> x;
    for (const auto& p : pts) x.emplace_back(p);
    Cyclo24 a = cyclo_root(6);
    for (int k : {1, 2}) {
        auto m = kernel_m_qt(k, x, a);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) CHECK((m.at(i, j) + m.at(j, i)).is_zero());
    }
    auto od = kernel_m_od(x, a);
    auto uo1 = kernel_m_uo1(x, a);
    auto uo2 = kernel_m_uo2(x, a, cyclo_root(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            CHECK((od.at(i, j) + od.at(j, i)).is_zero());
            CHECK((uo1.at(i, j) + uo1.at(j, i)).is_zero());
            CHECK((uo2.at(i, j) + uo2.at(j, i)).is_zero());
        }
}

TEST_CASE("prefactors at n=1 reduce to their displays") {
    auto pts = sample_points(2, 21, spectral_constraint());
    Cyclo24 x(pts[0]), y(pts[1]), a = cyclo_root(8);

    // F(1; x, y; a) = sigma(a x/y) sigma(a y/x): the pair product with an
    // empty denominator
    CHECK(prefactor_f(std::vector<Cyclo24>{x}, std::vector<Cyclo24>{y}, a) ==
          sigma(Cyclo24(a * x / y)) * sigma(Cyclo24(a * y / x)));

    // F_QT(1; (x1,x2); a) = sigma(a x2/x1) sigma(a x1/x2) / sigma(x2/x1)
    std::vector<Cyclo24> xs = {x, y};
    CHECK(prefactor_f_qt(xs, a) ==
          sigma(Cyclo24(a * y / x)) * sigma(Cyclo24(a * x / y)) / sigma(Cyclo24(y / x)));

    // F_V(1; x, y; a) with the i <= j diagonal terms in the denominator
    Cyclo24 expect = sigma(Cyclo24(a * x / y)) * sigma(Cyclo24(a * y / x)) *
                     sigma(Cyclo24(a * x * y)) * sigma(Cyclo24(a / (x * y))) /
                     (sigma(Cyclo24(Cyclo24::one() / (x * x))) * sigma(Cyclo24(y * y)));
    CHECK(prefactor_f_v(std::vector<Cyclo24>{x}, std::vector<Cyclo24>{y}, a) == expect);
}

TEST_CASE("cyclotomic values serialize as eight rational strings") {
    auto strs = cyclo_root(4).to_strings();
    REQUIRE(strs.size() == 8);
    CHECK(strs[6] == "1");  // zeta_4 = zeta_24^6
    for (size_t i = 0; i < 8; ++i)
        if (i != 6) CHECK(strs[i] == "0");
}

TEST_CASE("n=1 closed values") {
    auto pts = sample_points(2, 9, spectral_constraint());
    std::vector<Rational> x = {pts[0]}, y = {pts[1]};
    // A(1; x, y; a) = 1 for every root
    for (RootOfUnity r : {RootOfUnity::Z4, RootOfUnity::Z6, RootOfUnity::Z8})
        CHECK(partition_function(PartitionCase::A, x, y, r) == Cyclo24::one());
    // A_OD(2; x; zeta6) = 1 = Sp_4 trivial character
    CHECK(partition_function(PartitionCase::OD, pts, {}, RootOfUnity::Z6) == Cyclo24::one());
    CHECK(character_side(PartitionCase::OD, RootOfUnity::Z6, pts, {}) == 1);
}

TEST_CASE("partition function equals character side on every theorem row") {
    for (const auto& row : all_partition_rows()) {
        for (int n = 1; n <= 2; ++n) {
            auto rep = verify_partition_row(row, n, 1, 2);
            INFO(case_name(row.c), " at ", root_name(row.root), " n=", n);
            CHECK(rep.all_equal);
        }
    }
}

TEST_CASE("the A, HT2 and OD rows extend to n = 3") {
    using C = PartitionCase;
    using R = RootOfUnity;
    std::vector<PartitionRow> rows = {{C::A, R::Z4, false},  {C::A, R::Z6, false},
                                      {C::A, R::Z8, false},  {C::A, R::Z12, true},
                                      {C::HT2, R::Z4, false}, {C::HT2, R::Z6, false},
                                      {C::HT2, R::Z8, true},  {C::OD, R::Z4, false},
                                      {C::OD, R::Z6, false}};
    for (const auto& row : rows) {
        auto rep = verify_partition_row(row, 3, 5, 2);
        INFO(case_name(row.c), " at ", root_name(row.root));
        CHECK(rep.all_equal);
    }
}

TEST_CASE("QTS order 8 specializations, including the limit route at x=3") {
    IntPolynomial gen = x_enumeration(ClassTag::QTS, 8);
    CHECK(to_string(gen) == "12 + 22x + 6x^2");
    for (int xv : {0, 1, 2, 3})
        CHECK(gen.eval(Rational(xv)) == specialized_enumeration(ClassTag::QTS, xv, 8));
    CHECK(specialized_enumeration(ClassTag::QTS, 3, 8) == 132);
}

TEST_CASE("A is symmetric under permuting x and permuting y") {
    auto pts = sample_points(6, 17, spectral_constraint());
    std::vector<Rational> x(pts.begin(), pts.begin() + 3), y(pts.begin() + 3, pts.end());
    Cyclo24 base = partition_function(PartitionCase::A, x, y, RootOfUnity::Z6);
    std::vector<Rational> xp = {x[2], x[0], x[1]}, yp = {y[1], y[2], y[0]};
    CHECK(partition_function(PartitionCase::A, xp, yp, RootOfUnity::Z6) == base);
    CHECK(partition_function(PartitionCase::A, xp, y, RootOfUnity::Z8) ==
          partition_function(PartitionCase::A, x, y, RootOfUnity::Z8));
}

TEST_CASE("pole reporting") {
    // x1 y1 = 1 collapses the symplectic Weyl denominator on the character side
    std::vector<Rational> x = {make_rational(1, 2)}, y = {make_rational(2, 1)};
    CHECK_THROWS_AS(character_side(PartitionCase::V, RootOfUnity::Z6, x, y), pole_error);
    // repeated spectral parameters are a pole of the kernel-side prefactor
    CHECK_THROWS_AS(
        partition_function(PartitionCase::A, {make_rational(1, 2), make_rational(1, 2)},
                           {Rational(3), Rational(4)}, RootOfUnity::Z6),
        pole_error);
    // sigma(a x_i x_j) vanishing inside a kernel entry reports the factor
    CHECK_THROWS_AS(kernel_m_od(std::vector<Cyclo24>{Cyclo24(cyclo_root(6).inverse()), Cyclo24::one()},
                                cyclo_root(6)),
                    pole_error);
}

TEST_CASE("unsupported case-root pairs are rejected") {
    auto pts = sample_points(2, 5, spectral_constraint());
    CHECK_THROWS_AS(character_side(PartitionCase::OD, RootOfUnity::Z8, pts, {}), unsupported_error);
    CHECK_THROWS_AS(character_side(PartitionCase::OO2, RootOfUnity::Z6, pts, {}), unsupported_error);
    CHECK_THROWS_AS(character_side_all_ones(PartitionCase::HT2, RootOfUnity::Z12, 2),
                    unsupported_error);
}

TEST_CASE("specialized enumeration: ASM row") {
    // A_n(0) = n!, A_n(1) = #ASM_n, A_n(2) = 2^{n(n-1)/2}
    for (int n = 1; n <= 4; ++n) {
        CHECK(specialized_enumeration(ClassTag::ASM, 0, n) == Rational(factorial(static_cast<unsigned long>(n))));
        CHECK(specialized_enumeration(ClassTag::ASM, 1, n) == Rational(asm_product_formula(n)));
        CHECK(specialized_enumeration(ClassTag::ASM, 2, n) == pow2(n * (n - 1) / 2));
    }
    CHECK(specialized_enumeration(ClassTag::ASM, 1, 3) == 7);
}

TEST_CASE("specialized enumeration matches brute-force x-enumeration") {
    struct Case {
        ClassTag tag;
        int order;
        std::vector<int> xs;
    };
    std::vector<Case> cases = {
        {ClassTag::ASM, 1, {0, 1, 2, 3}},  {ClassTag::ASM, 2, {0, 1, 2, 3}},
        {ClassTag::ASM, 3, {0, 1, 2, 3}},  {ClassTag::ASM, 4, {0, 1, 2, 3}},
        {ClassTag::HTS, 2, {0, 1, 2}},     {ClassTag::HTS, 4, {0, 1, 2}},
        {ClassTag::HTS, 6, {0, 1, 2}},     {ClassTag::QTS, 4, {0, 1, 2, 3}},
        {ClassTag::VS, 3, {0, 1, 2, 3}},   {ClassTag::VS, 5, {0, 1, 2, 3}},
        {ClassTag::VS, 7, {0, 1, 2, 3}},   {ClassTag::VS, 9, {0, 1, 2, 3}},
        {ClassTag::VHS, 5, {0, 1, 2}},
        {ClassTag::VHS, 7, {0, 1, 2}},     {ClassTag::OS, 2, {0, 1}},
        {ClassTag::OS, 4, {0, 1}},         {ClassTag::OOS, 4, {0}},
        {ClassTag::UASM, 2, {0, 1, 2, 3}}, {ClassTag::UASM, 4, {0, 1, 2, 3}},
        {ClassTag::UASM, 6, {0, 1, 2, 3}}, {ClassTag::UUASM, 4, {0, 1, 2}},
        {ClassTag::UUASM, 8, {0, 1, 2}},   {ClassTag::VHPASM, 6, {0, 1, 2}},
        {ClassTag::UOSASM, 8, {0, 1}},     {ClassTag::VOS, 1, {0, 1}},
        {ClassTag::VOS, 3, {0, 1}},        {ClassTag::VOS, 9, {0, 1}},
        {ClassTag::VOS, 11, {0, 1}},
    };
    for (const auto& c : cases) {
        IntPolynomial gen = x_enumeration(c.tag, c.order);
        for (int xv : c.xs) {
            INFO(class_name(c.tag), " order ", c.order, " at x=", xv);
            CHECK(gen.eval(Rational(xv)) == specialized_enumeration(c.tag, xv, c.order));
        }
    }
}

TEST_CASE("specialized enumeration at x=1 equals the count formulas") {
    for (auto [tag, order] : std::vector<std::pair<ClassTag, int>>{
             {ClassTag::ASM, 5},   {ClassTag::ASM, 6},     {ClassTag::HTS, 6},
             {ClassTag::QTS, 8},   {ClassTag::VS, 7},      {ClassTag::VHS, 9},
             {ClassTag::OS, 6},    {ClassTag::UASM, 6},    {ClassTag::UUASM, 8},
             {ClassTag::VHPASM, 10}, {ClassTag::UOSASM, 16}, {ClassTag::VOS, 11}}) {
        CHECK(specialized_enumeration(tag, 1, order) == class_count_formula(tag, order));
    }
}

TEST_CASE("qt zeta12 limit route") {
    // closed n=1 values: A_QT1(4;1;a) = 1 and A_QT2(4;1;a) = 2 for every a
    for (RootOfUnity r : {RootOfUnity::Z4, RootOfUnity::Z6, RootOfUnity::Z8, RootOfUnity::Z12}) {
        CHECK(qt_all_ones(1, 1, r) == 1);
        CHECK(qt_all_ones(2, 1, r) == 2);
    }
    // cross-check against the character route where both exist
    CHECK(qt_all_ones(1, 2, RootOfUnity::Z6) ==
          character_side_all_ones(PartitionCase::QT1, RootOfUnity::Z6, 2));
    CHECK(qt_all_ones(2, 2, RootOfUnity::Z8) ==
          character_side_all_ones(PartitionCase::QT2, RootOfUnity::Z8, 2));
    CHECK(specialized_enumeration(ClassTag::QTS, 3, 4) == 2);
}
