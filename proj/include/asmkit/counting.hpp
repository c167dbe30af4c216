#pragma once

#include "asmkit/characters.hpp"
#include "asmkit/signmatrix.hpp"

namespace asmkit {

// prod_{k=0}^{n-1} (3k+1)!/(n+k)!
inline Integer asm_product_formula(int n) {
    if (n < 1) throw invalid_input("asm_product_formula: n must be positive");
    Rational acc(1);
    for (int k = 0; k < n; ++k)
        acc *= make_rational(factorial(static_cast<unsigned long>(3 * k + 1)),
                             factorial(static_cast<unsigned long>(n + k)));
    if (!is_integral(acc)) throw invalid_input("asm_product_formula: non-integral product");
    return acc.get_num();
}

namespace detail {

inline Weight delta(long r, long s) { return make_delta(DeltaKind::Delta, Rational(r), Rational(s)); }
inline Weight delta_half(long two_r, long two_s) {
    return make_delta(DeltaKind::Delta, make_rational(two_r, 2), make_rational(two_s, 2));
}

// 3^{-n(n-1)/2} dim GL_{2n}(delta(n-1,n-1)): the ASM count of order n
inline Rational asm_factor(long n) {
    return pow3(-n * (n - 1) / 2) * weyl_dim(gl(static_cast<int>(2 * n)), delta(n - 1, n - 1));
}
// 3^{-n(n-1)/2} dim GL_{2n}(delta(n,n-1)): the half-turn companion factor
inline Rational ht_factor(long n) {
    return pow3(-n * (n - 1) / 2) * weyl_dim(gl(static_cast<int>(2 * n)), delta(n, n - 1));
}
// 3^{-n(n-1)} dim Sp_{4n}(delta(n-1,n-1)): the VSASM count of order 2n+1
inline Rational vs_factor(long n) {
    return pow3(-n * (n - 1)) * weyl_dim(sp_group(static_cast<int>(4 * n)), delta(n - 1, n - 1));
}
// 2^{-2n} 3^{-n^2} dim Pin_{4n}(delta(n+1/2,n-1/2))
inline Rational spin_factor(long n) {
    return pow2(-2 * n) * pow3(-n * n) *
           weyl_dim(pin_group(static_cast<int>(4 * n)), delta_half(2 * n + 1, 2 * n - 1));
}
// 3^{-n^2} dim Sp_{4n+2}(delta(n,n-1))
inline Rational sp_odd_factor(long n) {
    return pow3(-n * n) * weyl_dim(sp_group(static_cast<int>(4 * n + 2)), delta(n, n - 1));
}
// 3^{-n(n-1)} dim Pin_{4n+1}(delta(n,n-1))
inline Rational pin_odd_factor(long n) {
    return pow3(-n * (n - 1)) * weyl_dim(pin_group(static_cast<int>(4 * n + 1)), delta(n, n - 1));
}

}  // namespace detail

// True when the (class, order) count formula is the unproven conjecture for
// odd half-turn / diagonal classes rather than a theorem.
inline bool class_count_is_conjectural(ClassTag tag, int order) {
    return (tag == ClassTag::HTS || tag == ClassTag::DS) && order % 2 == 1;
}

// The closed enumeration formulas: powers of 2 and 3 times Weyl dimensions
// at staircase weights.  Rejects (class, order) pairs with no formula.
inline Rational class_count_formula(ClassTag tag, int order) {
    using namespace detail;
    std::string err = admissibility_error(tag, order);
    if (!err.empty()) throw unsupported_error(err);
    long o = order;
    switch (tag) {
        case ClassTag::ASM: return asm_factor(o);
        case ClassTag::HTS:
            if (o % 2 == 0) {
                long n = o / 2;
                return asm_factor(n) * ht_factor(n);
            } else {
                long n = (o - 1) / 2;
                Rational d = pow3(-n * n) * weyl_dim(gl(static_cast<int>(2 * n + 1)), delta(n, n - 1));
                return d * weyl_dim(gl(static_cast<int>(2 * n + 1)), delta(n, n - 1));
            }
        case ClassTag::QTS: {
            long n = o / 4;
            Rational a = asm_factor(n);
            return a * a * a * ht_factor(n);
        }
        case ClassTag::VS: return vs_factor((o - 1) / 2);
        case ClassTag::VHS: {
            if (o % 4 == 1) {
                long n = (o - 1) / 4;
                return vs_factor(n) * spin_factor(n);
            }
            long n = (o - 3) / 4;
            return vs_factor(n) * sp_odd_factor(n);
        }
        case ClassTag::OS: return vs_factor(o / 2);
        case ClassTag::VOS: {
            if (o % 8 == 1) {
                long n = (o - 1) / 8;
                Rational v = vs_factor(n);
                return v * v * v * spin_factor(n);
            }
            long n = (o - 3) / 8;
            Rational v = vs_factor(n);
            return v * v * v * sp_odd_factor(n);
        }
        case ClassTag::UASM: {
            long n = o / 2;
            return pow2(n) * vs_factor(n);
        }
        case ClassTag::UUASM: {
            long n = o / 4;
            return vs_factor(n) * pin_odd_factor(n);
        }
        case ClassTag::VHPASM: {
            long n = (o - 2) / 4;
            Rational v = vs_factor(n);
            return v * v;
        }
        case ClassTag::UOSASM: {
            long n = o / 8;
            Rational v = vs_factor(n);
            return v * v * v * pin_odd_factor(n);
        }
        case ClassTag::DS:
            if (o % 2 == 1) {
                long n = (o - 1) / 2;
                return pow3(-n * (n - 1) / 2) * weyl_dim(gl(static_cast<int>(2 * n + 1)), delta(n, n - 1));
            }
            throw unsupported_error("no count formula for even-order DSASMs");
        default: throw unsupported_error(std::string("no count formula for class ") + class_name(tag));
    }
}

}  // namespace asmkit
