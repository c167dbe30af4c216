#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asmkit/characters.hpp"
#include "asmkit/counting.hpp"
#include "asmkit/linalg.hpp"
#include "asmkit/sampling.hpp"
#include "asmkit/signmatrix.hpp"

namespace asmkit {

// sigma(t) = t - 1/t
template <class S>
S sigma(const S& t) {
    if (ring<S>::is_zero(t)) throw pole_error("sigma: t = 0");
    return t - ring<S>::quot(ring<S>::one(), t);
}

enum class RootOfUnity { Z4, Z6, Z8, Z12 };

inline Cyclo24 root_value(RootOfUnity r) {
    switch (r) {
        case RootOfUnity::Z4: return cyclo_root(4);
        case RootOfUnity::Z6: return cyclo_root(6);
        case RootOfUnity::Z8: return cyclo_root(8);
        case RootOfUnity::Z12: return cyclo_root(12);
    }
    return Cyclo24::one();
}

// x = a^2 + 2 + a^{-2} pairs the enumeration parameter with the root
inline int root_xvalue(RootOfUnity r) {
    switch (r) {
        case RootOfUnity::Z4: return 0;
        case RootOfUnity::Z6: return 1;
        case RootOfUnity::Z8: return 2;
        case RootOfUnity::Z12: return 3;
    }
    return -1;
}

inline RootOfUnity root_for_xvalue(int x) {
    switch (x) {
        case 0: return RootOfUnity::Z4;
        case 1: return RootOfUnity::Z6;
        case 2: return RootOfUnity::Z8;
        case 3: return RootOfUnity::Z12;
    }
    throw unsupported_error("x-enumeration parameter must be 0, 1, 2 or 3");
}

inline std::string root_name(RootOfUnity r) {
    switch (r) {
        case RootOfUnity::Z4: return "zeta4";
        case RootOfUnity::Z6: return "zeta6";
        case RootOfUnity::Z8: return "zeta8";
        case RootOfUnity::Z12: return "zeta12";
    }
    return "?";
}

enum class PartitionCase {
    A,
    HT2,
    V,
    UU2,
    VH2_4n1,
    VH2_4n3,
    VHP2,
    QT1,
    QT2,
    OD,
    OO2,
    UO1,
    UO2,
    VO2_8n1,
    VO2_8n3
};

inline const char* case_name(PartitionCase c) {
    switch (c) {
        case PartitionCase::A: return "A";
        case PartitionCase::HT2: return "HT2";
        case PartitionCase::V: return "V";
        case PartitionCase::UU2: return "UU2";
        case PartitionCase::VH2_4n1: return "VH2_4n1";
        case PartitionCase::VH2_4n3: return "VH2_4n3";
        case PartitionCase::VHP2: return "VHP2";
        case PartitionCase::QT1: return "QT1";
        case PartitionCase::QT2: return "QT2";
        case PartitionCase::OD: return "OD";
        case PartitionCase::OO2: return "OO2";
        case PartitionCase::UO1: return "UO1";
        case PartitionCase::UO2: return "UO2";
        case PartitionCase::VO2_8n1: return "VO2_8n1";
        case PartitionCase::VO2_8n3: return "VO2_8n3";
    }
    return "?";
}

inline PartitionCase parse_case(const std::string& s) {
    for (PartitionCase c :
         {PartitionCase::A, PartitionCase::HT2, PartitionCase::V, PartitionCase::UU2,
          PartitionCase::VH2_4n1, PartitionCase::VH2_4n3, PartitionCase::VHP2, PartitionCase::QT1,
          PartitionCase::QT2, PartitionCase::OD, PartitionCase::OO2, PartitionCase::UO1,
          PartitionCase::UO2, PartitionCase::VO2_8n1, PartitionCase::VO2_8n3})
        if (s == case_name(c)) return c;
    throw invalid_input("unknown partition-function case '" + s + "'");
}

// determinant cases take (x, y) of length n; Pfaffian cases a single vector
// of length 2n
inline bool is_pfaffian_case(PartitionCase c) {
    switch (c) {
        case PartitionCase::QT1:
        case PartitionCase::QT2:
        case PartitionCase::OD:
        case PartitionCase::OO2:
        case PartitionCase::UO1:
        case PartitionCase::UO2:
        case PartitionCase::VO2_8n1:
        case PartitionCase::VO2_8n3: return true;
        default: return false;
    }
}

namespace detail {

template <class S>
S checked_div(const S& num, const S& den, size_t i, size_t j, const char* what) {
    if (ring<S>::is_zero(den))
        throw pole_error(std::string("kernel entry (") + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + "): pole in factor " + what);
    return ring<S>::quot(num, den);
}

}  // namespace detail

// ---- kernel matrices -------------------------------------------------

template <class S>
Matrix<S> kernel_m(const std::vector<S>& x, const std::vector<S>& y, const S& a) {
    const size_t n = x.size();
    Matrix<S> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            S den = sigma(S(a * ring<S>::quot(x[i], y[j]))) * sigma(S(a * ring<S>::quot(y[j], x[i])));
            m.at(i, j) = detail::checked_div(ring<S>::one(), den, i, j, "sigma(a x/y) sigma(a y/x)");
        }
    return m;
}

template <class S>
Matrix<S> kernel_m_ht(const std::vector<S>& x, const std::vector<S>& y, const S& a) {
    const size_t n = x.size();
    Matrix<S> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            S d1 = sigma(S(a * ring<S>::quot(x[i], y[j])));
            S d2 = sigma(S(a * ring<S>::quot(y[j], x[i])));
            m.at(i, j) = detail::checked_div(ring<S>::one(), d1, i, j, "sigma(a x/y)") +
                         detail::checked_div(ring<S>::one(), d2, i, j, "sigma(a y/x)");
        }
    return m;
}

template <class S>
Matrix<S> kernel_m_u(const std::vector<S>& x, const std::vector<S>& y, const S& a) {
    const size_t n = x.size();
    Matrix<S> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            S d1 = sigma(S(a * ring<S>::quot(x[i], y[j]))) * sigma(S(a * ring<S>::quot(y[j], x[i])));
            S d2 = sigma(S(a * x[i] * y[j])) * sigma(S(ring<S>::quot(a, S(x[i] * y[j]))));
            m.at(i, j) = detail::checked_div(ring<S>::one(), d1, i, j, "sigma(a x/y) sigma(a y/x)") -
                         detail::checked_div(ring<S>::one(), d2, i, j, "sigma(a xy) sigma(a/xy)");
        }
    return m;
}

template <class S>
Matrix<S> kernel_m_uu(const std::vector<S>& x, const std::vector<S>& y, const S& a, const S& b,
                      const S& c) {
    const size_t n = x.size();
    Matrix<S> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            S bLo = sigma(S(ring<S>::quot(b, y[j]))), bHi = sigma(S(b * y[j]));
            S cHi = sigma(S(c * x[i])), cLo = sigma(S(ring<S>::quot(c, x[i])));
            S t1 = detail::checked_div(S(bLo * cHi), sigma(S(a * ring<S>::quot(x[i], y[j]))), i, j,
                                       "sigma(a x/y)");
            S t2 = detail::checked_div(S(bLo * cLo), sigma(S(ring<S>::quot(a, S(x[i] * y[j])))), i,
                                       j, "sigma(a/(xy))");
            S t3 = detail::checked_div(S(bHi * cHi), sigma(S(a * x[i] * y[j])), i, j, "sigma(a xy)");
            S t4 = detail::checked_div(S(bHi * cLo), sigma(S(a * ring<S>::quot(y[j], x[i]))), i, j,
                                       "sigma(a y/x)");
            m.at(i, j) = t1 - t2 - t3 + t4;
        }
    return m;
}

template <class S>
Matrix<S> kernel_m_qt(int k, const std::vector<S>& x, const S& a) {
    const size_t n2 = x.size();
    Matrix<S> m(n2, n2);
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n2; ++j) {
            if (i == j) continue;
            S v = ring<S>::quot(x[j], x[i]);
            S num = sigma(detail::pow_scalar(v, k));
            S den = sigma(S(a * v)) * sigma(S(a * ring<S>::quot(x[i], x[j])));
            m.at(i, j) = detail::checked_div(num, den, i, j, "sigma(a xj/xi) sigma(a xi/xj)");
        }
    return m;
}

template <class S>
Matrix<S> kernel_m_od(const std::vector<S>& x, const S& a) {
    const size_t n2 = x.size();
    Matrix<S> m(n2, n2);
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n2; ++j) {
            if (i == j) continue;
            S num = sigma(S(ring<S>::quot(x[j], x[i])));
            S den = sigma(S(a * x[i] * x[j])) * sigma(S(ring<S>::quot(a, S(x[i] * x[j]))));
            m.at(i, j) = detail::checked_div(num, den, i, j, "sigma(a xi xj) sigma(a/(xi xj))");
        }
    return m;
}

template <class S>
Matrix<S> kernel_m_oo(const std::vector<S>& x, const S& a, const S& b, const S& c) {
    const size_t n2 = x.size();
    Matrix<S> m(n2, n2);
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n2; ++j) {
            if (i == j) continue;
            S t1 = detail::checked_div(S(c * c), sigma(S(a * x[i] * x[j])), i, j, "sigma(a xi xj)");
            S t2 = detail::checked_div(S(b * b), sigma(S(ring<S>::quot(a, S(x[i] * x[j])))), i, j,
                                       "sigma(a/(xi xj))");
            m.at(i, j) = sigma(S(ring<S>::quot(x[j], x[i]))) * (t1 + t2);
        }
    return m;
}

template <class S>
Matrix<S> kernel_m_uo1(const std::vector<S>& x, const S& a) {
    const size_t n2 = x.size();
    Matrix<S> m(n2, n2);
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n2; ++j) {
            if (i == j) continue;
            S d1 = sigma(S(a * x[i] * x[j])) * sigma(S(ring<S>::quot(a, S(x[i] * x[j]))));
            S d2 = sigma(S(a * ring<S>::quot(x[j], x[i]))) * sigma(S(a * ring<S>::quot(x[i], x[j])));
            S bracket = detail::checked_div(ring<S>::one(), d1, i, j, "sigma(a xi xj) sigma(a/(xi xj))") -
                        detail::checked_div(ring<S>::one(), d2, i, j, "sigma(a xj/xi) sigma(a xi/xj)");
            m.at(i, j) = sigma(S(ring<S>::quot(x[j], x[i]))) * sigma(S(x[i] * x[j])) * bracket;
        }
    return m;
}

// The four cross terms pair sigma(c x_i^{+-1}) sigma(c x_j^{+-1}) factors
// with the matching sigma(a ...) denominators; the i <-> j swap negates the
// leading sigma(x_j/x_i), so the matrix is skew-symmetric.
template <class S>
Matrix<S> kernel_m_uo2(const std::vector<S>& x, const S& a, const S& c) {
    const size_t n2 = x.size();
    Matrix<S> m(n2, n2);
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n2; ++j) {
            if (i == j) continue;
            S cxi = sigma(S(c * x[i])), cxj = sigma(S(c * x[j]));
            S cyi = sigma(S(ring<S>::quot(c, x[i]))), cyj = sigma(S(ring<S>::quot(c, x[j])));
            S t1 = detail::checked_div(S(cxi * cxj), sigma(S(a * x[i] * x[j])), i, j, "sigma(a xi xj)");
            S t2 = detail::checked_div(S(cxi * cyj), sigma(S(a * ring<S>::quot(x[i], x[j]))), i, j,
                                       "sigma(a xi/xj)");
            S t3 = detail::checked_div(S(cyi * cxj), sigma(S(a * ring<S>::quot(x[j], x[i]))), i, j,
                                       "sigma(a xj/xi)");
            S t4 = detail::checked_div(S(cyi * cyj), sigma(S(ring<S>::quot(a, S(x[i] * x[j])))), i,
                                       j, "sigma(a/(xi xj))");
            m.at(i, j) = sigma(S(ring<S>::quot(x[j], x[i]))) * sigma(S(x[i] * x[j])) *
                         (t1 - t2 - t3 + t4);
        }
    return m;
}

// ---- prefactors ------------------------------------------------------

template <class S>
S prefactor_f(const std::vector<S>& x, const std::vector<S>& y, const S& a) {
    const size_t n = x.size();
    S num = ring<S>::one(), den = ring<S>::one();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            num = num * sigma(S(a * ring<S>::quot(x[i], y[j]))) *
                  sigma(S(a * ring<S>::quot(y[j], x[i])));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            den = den * sigma(S(ring<S>::quot(x[j], x[i]))) * sigma(S(ring<S>::quot(y[i], y[j])));
    if (ring<S>::is_zero(den)) throw pole_error("prefactor F: repeated spectral parameters");
    return ring<S>::quot(num, den);
}

template <class S>
S prefactor_f_v(const std::vector<S>& x, const std::vector<S>& y, const S& a) {
    const size_t n = x.size();
    S num = ring<S>::one(), den = ring<S>::one();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            num = num * sigma(S(a * ring<S>::quot(x[i], y[j]))) *
                  sigma(S(a * ring<S>::quot(y[j], x[i]))) * sigma(S(a * x[i] * y[j])) *
                  sigma(S(ring<S>::quot(a, S(x[i] * y[j]))));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            den = den * sigma(S(ring<S>::quot(x[j], x[i]))) * sigma(S(ring<S>::quot(y[i], y[j])));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            den = den * sigma(S(ring<S>::quot(ring<S>::one(), S(x[i] * x[j])))) *
                  sigma(S(y[i] * y[j]));
    if (ring<S>::is_zero(den)) throw pole_error("prefactor F_V: singular spectral parameters");
    return ring<S>::quot(num, den);
}

template <class S>
S prefactor_f_qt(const std::vector<S>& x, const S& a) {
    const size_t n2 = x.size();
    S num = ring<S>::one(), den = ring<S>::one();
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = i + 1; j < n2; ++j) {
            num = num * sigma(S(a * ring<S>::quot(x[j], x[i]))) *
                  sigma(S(a * ring<S>::quot(x[i], x[j])));
            den = den * sigma(S(ring<S>::quot(x[j], x[i])));
        }
    if (ring<S>::is_zero(den)) throw pole_error("prefactor F_QT: repeated spectral parameters");
    return ring<S>::quot(num, den);
}

template <class S>
S prefactor_f_od(const std::vector<S>& x, const S& a) {
    const size_t n2 = x.size();
    S num = ring<S>::one(), den = ring<S>::one();
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = i + 1; j < n2; ++j) {
            num = num * sigma(S(a * x[i] * x[j])) * sigma(S(ring<S>::quot(a, S(x[i] * x[j]))));
            den = den * sigma(S(ring<S>::quot(x[j], x[i])));
        }
    if (ring<S>::is_zero(den)) throw pole_error("prefactor F_OD: repeated spectral parameters");
    return ring<S>::quot(num, den);
}

// Numerator pairs sigma(a x_i/x_j) sigma(a x_j/x_i) sigma(a x_i x_j)
// sigma(a/(x_i x_j)) mirror F_V's cross terms on a single variable vector.
template <class S>
S prefactor_f_uo(const std::vector<S>& x, const S& a) {
    const size_t n2 = x.size();
    S num = ring<S>::one(), den = ring<S>::one();
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = i + 1; j < n2; ++j) {
            num = num * sigma(S(a * ring<S>::quot(x[i], x[j]))) *
                  sigma(S(a * ring<S>::quot(x[j], x[i]))) * sigma(S(a * x[i] * x[j])) *
                  sigma(S(ring<S>::quot(a, S(x[i] * x[j]))));
            den = den * sigma(S(ring<S>::quot(x[j], x[i])));
        }
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = i; j < n2; ++j) den = den * sigma(S(x[i] * x[j]));
    if (ring<S>::is_zero(den)) throw pole_error("prefactor F_UO: singular spectral parameters");
    return ring<S>::quot(num, den);
}

// Kernel matrix of the case at the given parameters (the object whose det
// or Pfaffian the partition function evaluates); used by the CLI's
// --dump-matrix debugging flag.
inline Matrix<Cyclo24> case_kernel_matrix(PartitionCase c, const std::vector<Rational>& xq,
                                          const std::vector<Rational>& yq, RootOfUnity root,
                                          std::optional<Rational> bparam = std::nullopt) {
    Cyclo24 a = root_value(root);
    Cyclo24 z4 = cyclo_root(4);
    std::vector<Cyclo24> x, y;
    for (const auto& v : xq) x.emplace_back(v);
    for (const auto& v : yq) y.emplace_back(v);
    switch (c) {
        case PartitionCase::A: return kernel_m(x, y, a);
        case PartitionCase::HT2: return kernel_m_ht(x, y, a);
        case PartitionCase::V: return kernel_m_u(x, y, a);
        case PartitionCase::UU2: return kernel_m_uu(x, y, a, z4, z4);
        case PartitionCase::VH2_4n1: return kernel_m_uu(x, y, a, a, a);
        case PartitionCase::VH2_4n3: return kernel_m_uu(x, y, a, Cyclo24(a.inverse()), Cyclo24(a.inverse()));
        case PartitionCase::VHP2: return kernel_m_uu(x, y, a, a, Cyclo24(a.inverse()));
        case PartitionCase::QT1: return kernel_m_qt(1, x, a);
        case PartitionCase::QT2: return kernel_m_qt(2, x, a);
        case PartitionCase::OD: return kernel_m_od(x, a);
        case PartitionCase::OO2: {
            Cyclo24 b = bparam ? Cyclo24(*bparam) : Cyclo24(Rational(2));
            return kernel_m_oo(x, a, b, b);
        }
        case PartitionCase::UO1: return kernel_m_uo1(x, a);
        case PartitionCase::UO2: return kernel_m_uo2(x, a, z4);
        case PartitionCase::VO2_8n1: return kernel_m_uo2(x, a, a);
        case PartitionCase::VO2_8n3: return kernel_m_uo2(x, a, Cyclo24(a.inverse()));
    }
    throw invalid_input("case_kernel_matrix: unknown case");
}

// ---- partition functions ---------------------------------------------

namespace detail {

template <class S>
S spow(const S& base, long e) {
    if (e >= 0) return pow_scalar(base, e);
    return ring<S>::quot(ring<S>::one(), pow_scalar(base, -e));
}

}  // namespace detail

// Assembled determinant/Pfaffian partition function over Q(zeta_24).
// Determinant cases take x and y of length n, Pfaffian cases take x of
// length 2n (y ignored).  bparam supplies the free parameter of A_OO.
inline Cyclo24 partition_function(PartitionCase c, const std::vector<Rational>& xq,
                                  const std::vector<Rational>& yq, RootOfUnity root,
                                  std::optional<Rational> bparam = std::nullopt) {
    using S = Cyclo24;
    Cyclo24 a = root_value(root);
    std::vector<S> x, y;
    for (const auto& v : xq) x.emplace_back(v);
    for (const auto& v : yq) y.emplace_back(v);
    const long n = is_pfaffian_case(c) ? static_cast<long>(x.size()) / 2 : static_cast<long>(x.size());
    if (is_pfaffian_case(c)) {
        if (x.size() % 2 != 0) throw invalid_input("Pfaffian case needs an even number of parameters");
    } else if (x.size() != y.size()) {
        throw invalid_input("determinant case needs x and y of equal length");
    }
    Cyclo24 sa = sigma(a);
    Cyclo24 z4 = cyclo_root(4);

    switch (c) {
        case PartitionCase::A:
            return detail::spow(sa, -n * n + n) * prefactor_f(x, y, a) * det(kernel_m(x, y, a));
        case PartitionCase::HT2:
            return detail::spow(sa, -n * n) * prefactor_f(x, y, a) * det(kernel_m_ht(x, y, a));
        case PartitionCase::V:
            return detail::spow(sa, -2 * n * n + 2 * n) * prefactor_f_v(x, y, a) *
                   det(kernel_m_u(x, y, a));
        case PartitionCase::UU2: {
            // the slice consumed by the enumeration theorems: b = c = zeta4
            Cyclo24 b = z4, cc = z4;
            Cyclo24 extra;
            if (a == z4) extra = detail::spow(Cyclo24(4), n);  // limit of the singular prefactor
            else
                extra = detail::spow(sigma(Cyclo24(a * a)), 2 * n) *
                        detail::spow(sigma(Cyclo24(b / a)), -n) * detail::spow(sigma(Cyclo24(cc / a)), -n);
            return detail::spow(sa, -2 * n * n - n) * extra * prefactor_f_v(x, y, a) *
                   det(kernel_m_uu(x, y, a, b, cc));
        }
        case PartitionCase::VH2_4n1:
            return detail::spow(sa, -2 * n * n - n) * prefactor_f_v(x, y, a) *
                   det(kernel_m_uu(x, y, a, a, a));
        case PartitionCase::VH2_4n3:
            return detail::spow(sa, -2 * n * n - n) * prefactor_f_v(x, y, a) *
                   det(kernel_m_uu(x, y, a, a.inverse(), a.inverse()));
        case PartitionCase::VHP2: {
            Cyclo24 sign = n % 2 == 0 ? Cyclo24::one() : -Cyclo24::one();
            return detail::spow(sa, -2 * n * n - n) * sign * prefactor_f_v(x, y, a) *
                   det(kernel_m_uu(x, y, a, a, a.inverse()));
        }
        case PartitionCase::QT1:
            return detail::spow(sa, -2 * n * n + 2 * n) * prefactor_f_qt(x, a) *
                   pfaffian(kernel_m_qt(1, x, a));
        case PartitionCase::QT2:
            return detail::spow(sa, -2 * n * n + 2 * n) * prefactor_f_qt(x, a) *
                   pfaffian(kernel_m_qt(2, x, a));
        case PartitionCase::OD:
            return detail::spow(sa, -2 * n * n + 2 * n) * prefactor_f_od(x, a) *
                   pfaffian(kernel_m_od(x, a));
        case PartitionCase::OO2: {
            if (!bparam) throw invalid_input("A_OO needs the free parameter b");
            Cyclo24 b(*bparam);
            if (b.is_zero()) throw pole_error("A_OO: b = 0");
            return detail::spow(b, -2 * n) * detail::spow(sa, -2 * n * n + n) *
                   prefactor_f_od(x, a) * pfaffian(kernel_m_oo(x, a, b, b));
        }
        case PartitionCase::UO1:
            return detail::spow(sa, -4 * n * n + 4 * n) * prefactor_f_uo(x, a) *
                   pfaffian(kernel_m_uo1(x, a));
        case PartitionCase::UO2: {
            Cyclo24 extra;
            if (a == z4) extra = detail::spow(Cyclo24(2), 2 * n);  // limit, as in the UU case
            else
                extra = detail::spow(sigma(Cyclo24(a * a)), 2 * n) *
                        detail::spow(sigma(Cyclo24(z4 / a)), -2 * n);
            return detail::spow(sa, -4 * n * n + n) * extra * prefactor_f_uo(x, a) *
                   pfaffian(kernel_m_uo2(x, a, z4));
        }
        case PartitionCase::VO2_8n1:
            return detail::spow(sa, -4 * n * n + n) * prefactor_f_uo(x, a) *
                   pfaffian(kernel_m_uo2(x, a, a));
        case PartitionCase::VO2_8n3:
            return detail::spow(sa, -4 * n * n + n) * prefactor_f_uo(x, a) *
                   pfaffian(kernel_m_uo2(x, a, Cyclo24(a.inverse())));
    }
    throw invalid_input("partition_function: unknown case");
}

// ---- character sides of the evaluation theorems ------------------------

namespace detail {

inline std::vector<CharCoord<Rational>> sq_coords(const std::vector<Rational>& v) {
    std::vector<CharCoord<Rational>> c;
    c.reserve(v.size());
    for (const auto& s : v) c.push_back(CharCoord<Rational>::value(s));
    return c;
}

inline std::vector<CharCoord<Rational>> sq_coords(const std::vector<Rational>& a,
                                                  const std::vector<Rational>& b) {
    auto c = sq_coords(a);
    for (const auto& s : b) c.push_back(CharCoord<Rational>::value(s));
    return c;
}

// character at fourth powers: coordinates (x_i^2)^2
inline std::vector<CharCoord<Rational>> quad_coords(const std::vector<Rational>& v) {
    std::vector<CharCoord<Rational>> c;
    c.reserve(v.size());
    for (const auto& s : v) c.push_back(CharCoord<Rational>::value(Rational(s * s)));
    return c;
}

inline Rational mono(const std::vector<Rational>& v, long e) {
    Rational p(1);
    for (const auto& x : v) p *= rational_pow(x, e);
    return p;
}

// plain two-argument staircase union, with no special half-integer listing
inline Weight delta_union(DeltaKind kind, const Rational& r, const Rational& s) {
    Rational tr = r * 2, ts = s * 2;
    auto u = staircase(kind, tr.get_num().get_si());
    auto v = staircase(kind, ts.get_num().get_si());
    std::vector<long> m;
    std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(m), std::greater<long>());
    return Weight(std::move(m));
}

}  // namespace detail

// Exact value of the right-hand side of the evaluation theorems for the
// given case and root of unity, at the given spectral points.  Rows proved
// only on the diagonal y = x require ys == xs.  Throws unsupported_error for
// (case, root) pairs outside the theorems.
inline Rational character_side(PartitionCase c, RootOfUnity root, const std::vector<Rational>& x,
                               const std::vector<Rational>& y) {
    using detail::delta;
    using detail::delta_half;
    using detail::mono;
    using detail::quad_coords;
    using detail::sq_coords;
    using R = RootOfUnity;
    const long n = is_pfaffian_case(c) ? static_cast<long>(x.size()) / 2 : static_cast<long>(x.size());
    const int N = static_cast<int>(n);

    auto need_yx = [&]() {
        if (y != x) throw invalid_input("this row is stated at y = x");
    };
    auto unsupported = [&]() -> Rational {
        throw unsupported_error(std::string("no theorem row for case ") + case_name(c) + " at " +
                                root_name(root));
    };

    // products over all (i, j) pairs of f(x_i^2, y_j^2)
    auto cross = [&](auto f) {
        Rational p(1);
        for (const auto& xi : x)
            for (const auto& yj : y) p *= f(Rational(xi * xi), Rational(yj * yj));
        return p;
    };
    // products over i < j inside one vector
    auto pairs = [&](const std::vector<Rational>& v, auto f) {
        Rational p(1);
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                p *= f(Rational(v[i] * v[i]), Rational(v[j] * v[j]));
        return p;
    };

    switch (c) {
        case PartitionCase::A: {
            if (root == R::Z4) {
                Matrix<Rational> m(static_cast<size_t>(n), static_cast<size_t>(n));
                for (long i = 0; i < n; ++i)
                    for (long j = 0; j < n; ++j)
                        m.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
                            1 / (x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)] +
                                 y[static_cast<size_t>(j)] * y[static_cast<size_t>(j)]);
                return pow2(-n * n + n) * mono(x, -n + 1) * mono(y, -n + 1) *
                       cross([](const Rational& u, const Rational& v) { return u + v; }) * perm(m);
            }
            if (root == R::Z6)
                return pow3(-n * (n - 1) / 2) * mono(x, -n + 1) * mono(y, -n + 1) *
                       char_value_sq(gl(2 * N), delta(n - 1, n - 1), sq_coords(x, y));
            if (root == R::Z8)
                return pow2(-n * (n - 1) / 2) * mono(x, -n + 1) * mono(y, -n + 1) *
                       pairs(x, [](const Rational& u, const Rational& v) { return u + v; }) *
                       pairs(y, [](const Rational& u, const Rational& v) { return u + v; });
            need_yx();
            long p = n / 2, q = (n - 1) / 2;
            return mono(x, -2 * n + 2) * char_value_sq(gl(N), delta(p, p - 1), quad_coords(x)) *
                   char_value_sq(gl(N), delta(q, q), quad_coords(x));
        }
        case PartitionCase::HT2: {
            if (root == R::Z4)
                return pow2(-n * n + n) * mono(x, -n) * mono(y, -n) *
                       cross([](const Rational& u, const Rational& v) { return u + v; });
            if (root == R::Z6)
                return pow3(-n * (n - 1) / 2) * mono(x, -n) * mono(y, -n) *
                       char_value_sq(gl(2 * N), delta(n, n - 1), sq_coords(x, y));
            if (root == R::Z8) {
                // normalization pinned against the kernel side at n = 1..3
                need_yx();
                return pow2(-n * (n - 1) / 2 + n) * mono(x, -2 * n) *
                       char_value_sq(gl(N), make_delta(DeltaKind::Delta2, Rational(n), Rational(n - 2)),
                                     sq_coords(x)) *
                       char_value_sq(gl(N),
                                     make_delta(DeltaKind::Delta2, Rational(n - 1), Rational(n - 1)),
                                     sq_coords(x));
            }
            return unsupported();
        }
        case PartitionCase::V: {
            if (root == R::Z4) {
                Matrix<Rational> m(static_cast<size_t>(n), static_cast<size_t>(n));
                for (long i = 0; i < n; ++i)
                    for (long j = 0; j < n; ++j) {
                        Rational u = x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
                        Rational v = y[static_cast<size_t>(j)] * y[static_cast<size_t>(j)];
                        m.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
                            1 / ((u + v) * (1 + u * v));
                    }
                return pow2(-2 * n * n + 2 * n) * mono(x, -2 * n + 2) * mono(y, -2 * n + 2) *
                       cross([](const Rational& u, const Rational& v) {
                           return Rational((u + v) * (1 + u * v));
                       }) *
                       perm(m);
            }
            if (root == R::Z6)
                return pow3(-n * (n - 1)) *
                       char_value_sq(sp_group(4 * N), delta(n - 1, n - 1), sq_coords(x, y));
            if (root == R::Z8)
                return pow2(-n * (n - 1)) * mono(x, -2 * n + 2) * mono(y, -2 * n + 2) *
                       pairs(x,
                             [](const Rational& u, const Rational& v) {
                                 return Rational((u + v) * (1 + u * v));
                             }) *
                       pairs(y, [](const Rational& u, const Rational& v) {
                           return Rational((u + v) * (1 + u * v));
                       });
            need_yx();
            Rational tau(1);
            for (const auto& xi : x) tau *= xi * xi + 1 / (xi * xi);
            return (1 / tau) *
                   char_value_sq(pin_group(2 * N + 1),
                                 detail::delta_union(DeltaKind::Delta, make_rational(n, 2),
                                                     make_rational(n - 2, 2)),
                                 quad_coords(x)) *
                   char_value_sq(pin_group(2 * N + 1),
                                 detail::delta_union(DeltaKind::Delta, make_rational(n - 1, 2),
                                                     make_rational(n - 1, 2)),
                                 quad_coords(x));
        }
        case PartitionCase::UU2: {
            if (root == R::Z4)
                return pow2(-2 * n * n + 2 * n) * mono(x, -2 * n) * mono(y, -2 * n) *
                       cross([](const Rational& u, const Rational& v) {
                           return Rational((u + v) * (1 + u * v));
                       });
            if (root == R::Z6)
                return pow3(-n * n + n) *
                       char_value_sq(pin_group(4 * N + 1), delta(n, n - 1), sq_coords(x, y));
            if (root == R::Z8) {
                need_yx();
                return pow2(-n * n + 2 * n) *
                       char_value_sq(pin_group(2 * N + 1),
                                     make_delta(DeltaKind::Delta2, Rational(n), Rational(n - 2)),
                                     sq_coords(x)) *
                       char_value_sq(pin_group(2 * N + 1),
                                     make_delta(DeltaKind::Delta2, Rational(n - 1), Rational(n - 1)),
                                     sq_coords(x));
            }
            return unsupported();
        }
        case PartitionCase::VH2_4n1: {
            if (root == R::Z4)
                return pow2(-2 * n * n) * mono(x, -2 * n) * mono(y, -2 * n) *
                       cross([](const Rational& u, const Rational& v) {
                           return Rational((u + v) * (1 + u * v));
                       });
            if (root == R::Z6) {
                Rational tau(1);
                for (const auto& xi : x) tau *= xi + 1 / xi;
                for (const auto& yi : y) tau *= yi + 1 / yi;
                return pow3(-n * n) * (1 / tau) *
                       char_value_sq(pin_group(4 * N), delta_half(2 * n + 1, 2 * n - 1),
                                     sq_coords(x, y));
            }
            if (root == R::Z8) {
                need_yx();
                Rational tau(1);
                for (const auto& xi : x) tau *= (xi + 1 / xi) * (xi + 1 / xi);
                return pow2(-n * (n - 1)) * (1 / tau) *
                       char_value_sq(pin_group(2 * N),
                                     make_delta(DeltaKind::Delta2, make_rational(2 * n + 1, 2),
                                                make_rational(2 * n - 3, 2)),
                                     sq_coords(x)) *
                       char_value_sq(pin_group(2 * N),
                                     make_delta(DeltaKind::Delta2, make_rational(2 * n - 1, 2),
                                                make_rational(2 * n - 1, 2)),
                                     sq_coords(x));
            }
            return unsupported();
        }
        case PartitionCase::VH2_4n3: {
            if (root == R::Z4)
                return pow2(-2 * n * n) * mono(x, -2 * n) * mono(y, -2 * n) *
                       cross([](const Rational& u, const Rational& v) {
                           return Rational((u + v) * (1 + u * v));
                       });
            if (root == R::Z6) {
                auto coords = sq_coords(x, y);
                coords.push_back(CharCoord<Rational>::limit_slot(1));
                return pow3(-n * n) * char_value_sq(sp_group(4 * N + 2), delta(n, n - 1), coords);
            }
            if (root == R::Z8) {
                // odd pin characters; verified against the kernel side at n = 1, 2
                need_yx();
                return pow2(-n * n + n) *
                       char_value_sq(pin_group(2 * N + 1),
                                     make_delta(DeltaKind::Delta2, Rational(n), Rational(n - 2)),
                                     sq_coords(x)) *
                       char_value_sq(pin_group(2 * N + 1),
                                     make_delta(DeltaKind::Delta2, Rational(n - 1), Rational(n - 1)),
                                     sq_coords(x));
            }
            return unsupported();
        }
        case PartitionCase::VHP2: {
            if (root == R::Z4)
                return pow2(-2 * n * n) * mono(x, -2 * n) * mono(y, -2 * n) *
                       cross([](const Rational& u, const Rational& v) {
                           return Rational((u + v) * (1 + u * v));
                       });
            if (root == R::Z6) {
                Rational fac(1);
                for (const auto& yi : y) fac *= yi * yi + 1 + 1 / (yi * yi);
                return pow3(-n * n) * fac *
                       char_value_sq(sp_group(4 * N), delta(n - 1, n - 1), sq_coords(x, y));
            }
            if (root == R::Z8) {
                need_yx();
                std::vector<Rational> inv;
                for (const auto& xi : x) inv.push_back(1 / xi);
                return pow2(-n * n + n) *
                       char_value_sq(gl(2 * N),
                                     make_delta(DeltaKind::Delta2, Rational(2 * n - 2), Rational(2 * n - 2)),
                                     sq_coords(x, inv));
            }
            return unsupported();
        }
        case PartitionCase::QT1: {
            if (root == R::Z4) {
                Matrix<Rational> m(x.size(), x.size());
                for (size_t i = 0; i < x.size(); ++i)
                    for (size_t j = 0; j < x.size(); ++j) {
                        if (i == j) continue;
                        m.at(i, j) = 1 / (x[i] * x[i] + x[j] * x[j]);
                    }
                return pow2(-2 * n * n + 2 * n) * mono(x, -2 * n + 2) *
                       pairs(x, [](const Rational& u, const Rational& v) { return u + v; }) *
                       hafnian(m);
            }
            if (root == R::Z6) {
                Rational g = char_value_sq(gl(2 * N), delta(n - 1, n - 1), sq_coords(x));
                return pow3(-n * n + n) * mono(x, -2 * n + 2) * g * g;
            }
            if (root == R::Z8)
                return pow2(-n * n + n) * mono(x, -2 * n + 2) *
                       char_value_sq(gl(2 * N),
                                     make_delta(DeltaKind::Delta2, Rational(2 * n - 2), Rational(2 * n - 2)),
                                     sq_coords(x));
            return unsupported();
        }
        case PartitionCase::QT2: {
            if (root == R::Z4)
                return pow2(-2 * n * n + 2 * n) * mono(x, -2 * n + 1) *
                       pairs(x, [](const Rational& u, const Rational& v) { return u + v; });
            if (root == R::Z6)
                return pow3(-n * n + n) * mono(x, -2 * n + 1) *
                       char_value_sq(gl(2 * N), delta(n - 1, n - 1), sq_coords(x)) *
                       char_value_sq(gl(2 * N), delta(n, n - 1), sq_coords(x));
            if (root == R::Z8)
                return pow2(-n * n + n) * mono(x, -2 * n + 1) *
                       pairs(x, [](const Rational& u, const Rational& v) { return u + v; });
            return unsupported();
        }
        case PartitionCase::OD: {
            if (root == R::Z4) {
                Matrix<Rational> m(x.size(), x.size());
                for (size_t i = 0; i < x.size(); ++i)
                    for (size_t j = 0; j < x.size(); ++j) {
                        if (i == j) continue;
                        m.at(i, j) = 1 / (1 + x[i] * x[i] * x[j] * x[j]);
                    }
                return pow2(-2 * n * n + 2 * n) * mono(x, -2 * n + 2) *
                       pairs(x, [](const Rational& u, const Rational& v) { return Rational(1 + u * v); }) *
                       hafnian(m);
            }
            if (root == R::Z6)
                return pow3(-n * n + n) *
                       char_value_sq(sp_group(4 * N), delta(n - 1, n - 1), sq_coords(x));
            return unsupported();
        }
        case PartitionCase::OO2: {
            if (root == R::Z4)
                return pow2(-2 * n * n + 2 * n) * mono(x, -2 * n + 1) *
                       pairs(x, [](const Rational& u, const Rational& v) { return Rational(1 + u * v); });
            return unsupported();
        }
        case PartitionCase::UO1: {
            if (root == R::Z4) {
                Matrix<Rational> m(x.size(), x.size());
                for (size_t i = 0; i < x.size(); ++i)
                    for (size_t j = 0; j < x.size(); ++j) {
                        if (i == j) continue;
                        Rational u = x[i] * x[i], v = x[j] * x[j];
                        m.at(i, j) = 1 / ((u + v) * (1 + u * v));
                    }
                return pow2(-4 * n * n + 4 * n) * mono(x, -4 * n + 4) *
                       pairs(x,
                             [](const Rational& u, const Rational& v) {
                                 return Rational((u + v) * (1 + u * v));
                             }) *
                       hafnian(m);
            }
            if (root == R::Z6) {
                Rational s = char_value_sq(sp_group(4 * N), delta(n - 1, n - 1), sq_coords(x));
                return pow3(-2 * n * n + 2 * n) * s * s;
            }
            return unsupported();
        }
        case PartitionCase::UO2: {
            if (root == R::Z4)
                return pow2(-4 * n * n + 4 * n) * mono(x, -4 * n + 2) *
                       pairs(x, [](const Rational& u, const Rational& v) {
                           return Rational((u + v) * (1 + u * v));
                       });
            if (root == R::Z6)
                return pow3(-2 * n * n + 2 * n) *
                       char_value_sq(sp_group(4 * N), delta(n - 1, n - 1), sq_coords(x)) *
                       char_value_sq(pin_group(4 * N + 1), delta(n, n - 1), sq_coords(x));
            return unsupported();
        }
        case PartitionCase::VO2_8n1: {
            if (root == R::Z4)
                return pow2(-4 * n * n + 2 * n) * mono(x, -4 * n + 2) *
                       pairs(x, [](const Rational& u, const Rational& v) {
                           return Rational((u + v) * (1 + u * v));
                       });
            if (root == R::Z6) {
                Rational tau(1);
                for (const auto& xi : x) tau *= xi + 1 / xi;
                return pow3(-n * (2 * n - 1)) * (1 / tau) *
                       char_value_sq(sp_group(4 * N), delta(n - 1, n - 1), sq_coords(x)) *
                       char_value_sq(pin_group(4 * N), delta_half(2 * n + 1, 2 * n - 1), sq_coords(x));
            }
            return unsupported();
        }
        case PartitionCase::VO2_8n3: {
            if (root == R::Z4)
                return pow2(-4 * n * n + 2 * n) * mono(x, -4 * n + 2) *
                       pairs(x, [](const Rational& u, const Rational& v) {
                           return Rational((u + v) * (1 + u * v));
                       });
            if (root == R::Z6) {
                auto coords = sq_coords(x);
                coords.push_back(CharCoord<Rational>::limit_slot(1));
                return pow3(-2 * n * n + n) *
                       char_value_sq(sp_group(4 * N), delta(n - 1, n - 1), sq_coords(x)) *
                       char_value_sq(sp_group(4 * N + 2), delta(n, n - 1), coords);
            }
            return unsupported();
        }
    }
    return unsupported();
}

// Value of the theorem's right-hand side with every spectral parameter set
// to 1: characters become Weyl dimensions, monomials become 1, and the
// permanent/Hafnian kernels become constant matrices.
inline Rational character_side_all_ones(PartitionCase c, RootOfUnity root, int n) {
    using detail::delta;
    using detail::delta_half;
    using R = RootOfUnity;
    const long N = n;

    auto const_perm = [&](long size, const Rational& v) {
        Matrix<Rational> m(static_cast<size_t>(size), static_cast<size_t>(size));
        for (size_t i = 0; i < static_cast<size_t>(size); ++i)
            for (size_t j = 0; j < static_cast<size_t>(size); ++j) m.at(i, j) = v;
        return perm(m);
    };
    auto const_haf = [&](long size, const Rational& v) {
        Matrix<Rational> m(static_cast<size_t>(size), static_cast<size_t>(size));
        for (size_t i = 0; i < static_cast<size_t>(size); ++i)
            for (size_t j = 0; j < static_cast<size_t>(size); ++j)
                if (i != j) m.at(i, j) = v;
        return hafnian(m);
    };
    auto unsupported = [&]() -> Rational {
        throw unsupported_error(std::string("no theorem row for case ") + case_name(c) + " at " +
                                root_name(root));
    };

    switch (c) {
        case PartitionCase::A:
            if (root == R::Z4) return pow2(-N * N + N) * pow2(N * N) * const_perm(N, make_rational(1, 2));
            if (root == R::Z6) return pow3(-N * (N - 1) / 2) * weyl_dim(gl(2 * n), delta(N - 1, N - 1));
            if (root == R::Z8) return pow2(N * (N - 1) / 2);
            return weyl_dim(gl(n), delta(N / 2, N / 2 - 1)) *
                   weyl_dim(gl(n), delta((N - 1) / 2, (N - 1) / 2));
        case PartitionCase::HT2:
            if (root == R::Z4) return pow2(N);
            if (root == R::Z6) return pow3(-N * (N - 1) / 2) * weyl_dim(gl(2 * n), delta(N, N - 1));
            if (root == R::Z8)
                return pow2(-N * (N - 1) / 2 + N) *
                       weyl_dim(gl(n), make_delta(DeltaKind::Delta2, Rational(N), Rational(N - 2))) *
                       weyl_dim(gl(n), make_delta(DeltaKind::Delta2, Rational(N - 1), Rational(N - 1)));
            return unsupported();
        case PartitionCase::V:
            if (root == R::Z4)
                return pow2(-2 * N * N + 2 * N) * pow2(2 * N * N) * const_perm(N, make_rational(1, 4));
            if (root == R::Z6) return pow3(-N * (N - 1)) * weyl_dim(sp_group(4 * n), delta(N - 1, N - 1));
            if (root == R::Z8) return pow2(N * (N - 1));
            return pow2(-N) *
                   weyl_dim(pin_group(2 * n + 1),
                            detail::delta_union(DeltaKind::Delta, make_rational(N, 2), make_rational(N - 2, 2))) *
                   weyl_dim(pin_group(2 * n + 1),
                            detail::delta_union(DeltaKind::Delta, make_rational(N - 1, 2), make_rational(N - 1, 2)));
        case PartitionCase::UU2:
            if (root == R::Z4) return pow2(2 * N);
            if (root == R::Z6) return pow3(-N * N + N) * weyl_dim(pin_group(4 * n + 1), delta(N, N - 1));
            if (root == R::Z8)
                return pow2(-N * N + 2 * N) *
                       weyl_dim(pin_group(2 * n + 1),
                                make_delta(DeltaKind::Delta2, Rational(N), Rational(N - 2))) *
                       weyl_dim(pin_group(2 * n + 1),
                                make_delta(DeltaKind::Delta2, Rational(N - 1), Rational(N - 1)));
            return unsupported();
        case PartitionCase::VH2_4n1:
            if (root == R::Z4) return Rational(1);
            if (root == R::Z6)
                return pow3(-N * N) * pow2(-2 * N) *
                       weyl_dim(pin_group(4 * n), delta_half(2 * N + 1, 2 * N - 1));
            if (root == R::Z8)
                return pow2(-N * (N - 1) - 2 * N) *
                       weyl_dim(pin_group(2 * n),
                                make_delta(DeltaKind::Delta2, make_rational(2 * N + 1, 2),
                                           make_rational(2 * N - 3, 2))) *
                       weyl_dim(pin_group(2 * n),
                                make_delta(DeltaKind::Delta2, make_rational(2 * N - 1, 2),
                                           make_rational(2 * N - 1, 2)));
            return unsupported();
        case PartitionCase::VH2_4n3:
            if (root == R::Z4) return Rational(1);
            if (root == R::Z6) return pow3(-N * N) * weyl_dim(sp_group(4 * n + 2), delta(N, N - 1));
            if (root == R::Z8)
                return pow2(-N * N + N) *
                       weyl_dim(pin_group(2 * n + 1),
                                make_delta(DeltaKind::Delta2, Rational(N), Rational(N - 2))) *
                       weyl_dim(pin_group(2 * n + 1),
                                make_delta(DeltaKind::Delta2, Rational(N - 1), Rational(N - 1)));
            return unsupported();
        case PartitionCase::VHP2:
            if (root == R::Z4) return Rational(1);
            if (root == R::Z6)
                return pow3(-N * N + N) * weyl_dim(sp_group(4 * n), delta(N - 1, N - 1));
            if (root == R::Z8)
                return pow2(-N * N + N) *
                       weyl_dim(gl(2 * n),
                                make_delta(DeltaKind::Delta2, Rational(2 * N - 2), Rational(2 * N - 2)));
            return unsupported();
        case PartitionCase::QT1:
            if (root == R::Z4)
                return pow2(-2 * N * N + 2 * N) * pow2(N * (2 * N - 1)) * const_haf(2 * N, make_rational(1, 2));
            if (root == R::Z6) {
                Rational g = weyl_dim(gl(2 * n), delta(N - 1, N - 1));
                return pow3(-N * N + N) * g * g;
            }
            if (root == R::Z8)
                return pow2(-N * N + N) *
                       weyl_dim(gl(2 * n),
                                make_delta(DeltaKind::Delta2, Rational(2 * N - 2), Rational(2 * N - 2)));
            return unsupported();
        case PartitionCase::QT2:
            if (root == R::Z4) return pow2(N);
            if (root == R::Z6)
                return pow3(-N * N + N) * weyl_dim(gl(2 * n), delta(N - 1, N - 1)) *
                       weyl_dim(gl(2 * n), delta(N, N - 1));
            if (root == R::Z8) return pow2(N * N);
            return unsupported();
        case PartitionCase::OD:
            if (root == R::Z4)
                return pow2(-2 * N * N + 2 * N) * pow2(N * (2 * N - 1)) * const_haf(2 * N, make_rational(1, 2));
            if (root == R::Z6) return pow3(-N * N + N) * weyl_dim(sp_group(4 * n), delta(N - 1, N - 1));
            return unsupported();
        case PartitionCase::OO2:
            if (root == R::Z4) return pow2(N);
            return unsupported();
        case PartitionCase::UO1:
            if (root == R::Z4)
                return pow2(-4 * N * N + 4 * N) * pow2(2 * N * (2 * N - 1)) *
                       const_haf(2 * N, make_rational(1, 4));
            if (root == R::Z6) {
                Rational s = weyl_dim(sp_group(4 * n), delta(N - 1, N - 1));
                return pow3(-2 * N * N + 2 * N) * s * s;
            }
            return unsupported();
        case PartitionCase::UO2:
            if (root == R::Z4) return pow2(2 * N);
            if (root == R::Z6)
                return pow3(-2 * N * N + 2 * N) * weyl_dim(sp_group(4 * n), delta(N - 1, N - 1)) *
                       weyl_dim(pin_group(4 * n + 1), delta(N, N - 1));
            return unsupported();
        case PartitionCase::VO2_8n1:
            if (root == R::Z4) return Rational(1);
            if (root == R::Z6)
                return pow3(-N * (2 * N - 1)) * pow2(-2 * N) *
                       weyl_dim(sp_group(4 * n), delta(N - 1, N - 1)) *
                       weyl_dim(pin_group(4 * n), delta_half(2 * N + 1, 2 * N - 1));
            return unsupported();
        case PartitionCase::VO2_8n3:
            if (root == R::Z4) return Rational(1);
            if (root == R::Z6)
                return pow3(-2 * N * N + N) * weyl_dim(sp_group(4 * n), delta(N - 1, N - 1)) *
                       weyl_dim(sp_group(4 * n + 2), delta(N, N - 1));
            return unsupported();
    }
    return unsupported();
}

// ---- exact all-ones limit through the kernel side ----------------------

namespace detail {

// P/Q with the common (t-1) factors cancelled by exact division, then
// evaluated at t = 1.  Works whenever the ratio is regular there.
inline Cyclo24 eval_ratio_at_one(LaurentPoly<Cyclo24> p, LaurentPoly<Cyclo24> q) {
    LaurentPoly<Cyclo24> tm1 =
        LaurentPoly<Cyclo24>::monomial(Cyclo24::one(), 1) - LaurentPoly<Cyclo24>(Cyclo24::one());
    while (q.eval_one().is_zero()) {
        q = poly_exact_div(q, tm1);
        p = poly_exact_div(p, tm1);  // throws if the ratio has a genuine pole
    }
    return p.eval_one() / q.eval_one();
}

}  // namespace detail

// A_QT^(k)(4n; 1...1; a) by exact principal specialization x_i = t^i and
// the t -> 1 limit; the route used where no character form is available
// (the QT rows at zeta_12).
inline Rational qt_all_ones(int k, int n, RootOfUnity root) {
    using S = PolyRatio<Cyclo24>;
    std::vector<S> x;
    for (int i = 1; i <= 2 * n; ++i)
        x.push_back(S(LaurentPoly<Cyclo24>::monomial(Cyclo24::one(), i)));
    S a(LaurentPoly<Cyclo24>(root_value(root)));
    S val = detail::spow(sigma(a), static_cast<long>(-2) * n * n + 2 * n) * prefactor_f_qt(x, a) *
            pfaffian(kernel_m_qt(k, x, a));
    Cyclo24 lim = detail::eval_ratio_at_one(val.num(), val.den());
    if (!lim.is_rational())
        throw invalid_input("qt_all_ones: limit is not rational");
    return lim.to_rational();
}

// Predicted x-enumeration value A^*(x) of the class at this order, composed
// from the partition-function factorizations and evaluated at all-ones
// through the character/product sides (which are regular there).
inline Rational specialized_enumeration(ClassTag tag, int xval, int order) {
    RootOfUnity r = root_for_xvalue(xval);
    std::string err = admissibility_error(tag, order);
    if (!err.empty()) throw unsupported_error(err);
    auto side = [&](PartitionCase c, int n) { return character_side_all_ones(c, r, n); };
    switch (tag) {
        case ClassTag::ASM: return side(PartitionCase::A, order);
        case ClassTag::HTS: {
            if (order % 2 != 0) throw unsupported_error("HTS x-enumeration covers even orders only");
            int n = order / 2;
            return side(PartitionCase::A, n) * side(PartitionCase::HT2, n);
        }
        case ClassTag::VS: return side(PartitionCase::V, (order - 1) / 2);
        case ClassTag::VHS: {
            if (order % 4 == 1) {
                int n = (order - 1) / 4;
                return side(PartitionCase::V, n) * side(PartitionCase::VH2_4n1, n);
            }
            int n = (order - 3) / 4;
            return side(PartitionCase::V, n) * side(PartitionCase::VH2_4n3, n);
        }
        case ClassTag::UASM: {
            int n = order / 2;
            return pow2(n) * side(PartitionCase::V, n);
        }
        case ClassTag::UUASM: {
            int n = order / 4;
            return side(PartitionCase::V, n) * side(PartitionCase::UU2, n);
        }
        case ClassTag::VHPASM: {
            int n = (order - 2) / 4;
            return side(PartitionCase::V, n) * side(PartitionCase::VHP2, n);
        }
        case ClassTag::QTS: {
            int n = order / 4;
            if (r == RootOfUnity::Z12)
                return qt_all_ones(1, n, r) * qt_all_ones(2, n, r);
            return side(PartitionCase::QT1, n) * side(PartitionCase::QT2, n);
        }
        case ClassTag::OS: return side(PartitionCase::OD, order / 2);
        case ClassTag::OOS: {
            int n = order / 4;
            return side(PartitionCase::OD, n) * side(PartitionCase::OO2, n);
        }
        case ClassTag::UOSASM: {
            int n = order / 8;
            return side(PartitionCase::UO1, n) * side(PartitionCase::UO2, n);
        }
        case ClassTag::VOS: {
            if (order % 8 == 1) {
                int n = (order - 1) / 8;
                return side(PartitionCase::UO1, n) * side(PartitionCase::VO2_8n1, n);
            }
            int n = (order - 3) / 8;
            return side(PartitionCase::UO1, n) * side(PartitionCase::VO2_8n3, n);
        }
        default:
            throw unsupported_error(std::string("no specialized enumeration for class ") +
                                    class_name(tag));
    }
}

// ---- the theorem row sweep ---------------------------------------------

struct PartitionRow {
    PartitionCase c;
    RootOfUnity root;
    bool y_equals_x;
};

inline std::vector<PartitionRow> all_partition_rows() {
    using C = PartitionCase;
    using R = RootOfUnity;
    return {
        {C::A, R::Z4, false},        {C::A, R::Z6, false},        {C::A, R::Z8, false},
        {C::A, R::Z12, true},        {C::HT2, R::Z4, false},      {C::HT2, R::Z6, false},
        {C::HT2, R::Z8, true},       {C::V, R::Z4, false},        {C::V, R::Z6, false},
        {C::V, R::Z8, false},        {C::V, R::Z12, true},        {C::UU2, R::Z4, false},
        {C::UU2, R::Z6, false},      {C::UU2, R::Z8, true},       {C::VH2_4n1, R::Z4, false},
        {C::VH2_4n1, R::Z6, false},  {C::VH2_4n1, R::Z8, true},   {C::VH2_4n3, R::Z4, false},
        {C::VH2_4n3, R::Z6, false},  {C::VH2_4n3, R::Z8, true},   {C::VHP2, R::Z4, false},
        {C::VHP2, R::Z6, false},     {C::VHP2, R::Z8, true},      {C::QT1, R::Z4, false},
        {C::QT1, R::Z6, false},      {C::QT1, R::Z8, false},      {C::QT2, R::Z4, false},
        {C::QT2, R::Z6, false},      {C::QT2, R::Z8, false},      {C::OD, R::Z4, false},
        {C::OD, R::Z6, false},       {C::OO2, R::Z4, false},      {C::UO1, R::Z4, false},
        {C::UO1, R::Z6, false},      {C::UO2, R::Z4, false},      {C::UO2, R::Z6, false},
        {C::VO2_8n1, R::Z4, false},  {C::VO2_8n1, R::Z6, false},  {C::VO2_8n3, R::Z4, false},
        {C::VO2_8n3, R::Z6, false},
    };
}

struct PartitionTrial {
    std::vector<Rational> x, y;
    std::optional<Rational> b;
    std::string lhs, rhs;
    bool equal = false;
};

struct PartitionRowReport {
    PartitionRow row;
    int n = 0;
    uint64_t seed = 0;
    std::vector<PartitionTrial> trials;
    bool all_equal = true;
};

// One evaluation-theorem row, checked at `trials` random regular rational
// spectral points drawn from the seed.
inline PartitionRowReport verify_partition_row(const PartitionRow& row, int n, uint64_t seed,
                                               int trials = 5) {
    PartitionRowReport rep;
    rep.row = row;
    rep.n = n;
    rep.seed = seed;
    for (int t = 0; t < trials; ++t) {
        uint64_t s = seed * 1000003ULL + static_cast<uint64_t>(t) * 101ULL +
                     static_cast<uint64_t>(n);
        size_t count = is_pfaffian_case(row.c) ? static_cast<size_t>(2 * n)
                                               : (row.y_equals_x ? static_cast<size_t>(n)
                                                                 : static_cast<size_t>(2 * n));
        auto pts = sample_points(count, s, spectral_constraint());
        PartitionTrial trial;
        if (is_pfaffian_case(row.c)) {
            trial.x = pts;
        } else if (row.y_equals_x) {
            trial.x = pts;
            trial.y = pts;
        } else {
            trial.x.assign(pts.begin(), pts.begin() + n);
            trial.y.assign(pts.begin() + n, pts.end());
        }
        if (row.c == PartitionCase::OO2) trial.b = sample_points(1, s ^ 0x5bd1e995ULL, spectral_constraint())[0];
        Cyclo24 lhs = partition_function(row.c, trial.x, trial.y, row.root, trial.b);
        Rational rhs = character_side(row.c, row.root, trial.x, trial.y);
        trial.lhs = lhs.to_string();
        trial.rhs = to_string(rhs);
        trial.equal = lhs == Cyclo24(rhs);
        rep.all_equal = rep.all_equal && trial.equal;
        rep.trials.push_back(std::move(trial));
    }
    return rep;
}

}  // namespace asmkit
