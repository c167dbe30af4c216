#pragma once

#include <array>
#include <string>
#include <vector>

#include "asmkit/rational.hpp"

namespace asmkit {

// Element of the cyclotomic field Q(zeta_24), stored as a polynomial in
// zeta modulo Phi_24(zeta) = zeta^8 - zeta^4 + 1.  Degree phi(24) = 8, so
// every root of unity of order dividing 24 lives here, along with sqrt(-1),
// sqrt(2), sqrt(3) and all the constants the partition functions need.
class Cyclo24 {
  public:
    Cyclo24() = default;
    explicit Cyclo24(const Rational& r) { c_[0] = r; }
    explicit Cyclo24(long n) { c_[0] = Rational(n); }

    static Cyclo24 zero() { return Cyclo24(); }
    static Cyclo24 one() { return Cyclo24(Rational(1)); }

    // zeta_24^k for any integer k (k taken mod 24)
    static Cyclo24 zeta_pow(long k) {
        k %= 24;
        if (k < 0) k += 24;
        return zeta_table()[static_cast<size_t>(k)];
    }

    const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    Rational& coeff(int i) { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (int i = 1; i < 8; ++i)
            if (c_[static_cast<size_t>(i)] != 0) return false;
        return true;
    }

    Rational to_rational() const {
        if (!is_rational()) throw invalid_input("Cyclo24: not a rational element");
        return c_[0];
    }

    friend Cyclo24 operator+(const Cyclo24& a, const Cyclo24& b) {
        Cyclo24 r;
        for (size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Cyclo24 operator-(const Cyclo24& a, const Cyclo24& b) {
        Cyclo24 r;
        for (size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    Cyclo24 operator-() const {
        Cyclo24 r;
        for (size_t i = 0; i < 8; ++i) r.c_[i] = -c_[i];
        return r;
    }

    friend Cyclo24 operator*(const Cyclo24& a, const Cyclo24& b) {
        std::array<Rational, 15> t{};
        for (size_t i = 0; i < 8; ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < 8; ++j) {
                if (b.c_[j] == 0) continue;
                t[i + j] += a.c_[i] * b.c_[j];
            }
        }
        // zeta^8 = zeta^4 - 1
        for (size_t d = 14; d >= 8; --d) {
            if (t[d] == 0) continue;
            t[d - 4] += t[d];
            t[d - 8] -= t[d];
            t[d] = 0;
        }
        Cyclo24 r;
        for (size_t i = 0; i < 8; ++i) r.c_[i] = t[i];
        return r;
    }

    Cyclo24& operator+=(const Cyclo24& o) { return *this = *this + o; }
    Cyclo24& operator-=(const Cyclo24& o) { return *this = *this - o; }
    Cyclo24& operator*=(const Cyclo24& o) { return *this = *this * o; }

    friend bool operator==(const Cyclo24& a, const Cyclo24& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyclo24& a, const Cyclo24& b) { return !(a == b); }

    // Multiplicative inverse by solving the 8x8 linear system (mult-by-a) x = 1.
    Cyclo24 inverse() const {
        if (is_zero()) throw pole_error("Cyclo24: inverse of zero");
        if (is_rational()) return Cyclo24(Rational(1) / c_[0]);
        std::array<std::array<Rational, 9>, 8> m{};
        for (int j = 0; j < 8; ++j) {
            Cyclo24 col = *this * zeta_pow(j);
            for (int i = 0; i < 8; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coeff(i);
        }
        m[0][8] = Rational(1);
        for (int col = 0, row = 0; col < 8 && row < 8; ++col) {
            int p = row;
            while (p < 8 && m[static_cast<size_t>(p)][static_cast<size_t>(col)] == 0) ++p;
            if (p == 8) continue;
            std::swap(m[static_cast<size_t>(p)], m[static_cast<size_t>(row)]);
            Rational inv = Rational(1) / m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            for (int j = col; j <= 8; ++j) m[static_cast<size_t>(row)][static_cast<size_t>(j)] *= inv;
            for (int i = 0; i < 8; ++i) {
                if (i == row || m[static_cast<size_t>(i)][static_cast<size_t>(col)] == 0) continue;
                Rational f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
                for (int j = col; j <= 8; ++j)
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(row)][static_cast<size_t>(j)];
            }
            ++row;
        }
        Cyclo24 r;
        for (int i = 0; i < 8; ++i) r.c_[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][8];
        return r;
    }

    friend Cyclo24 operator/(const Cyclo24& a, const Cyclo24& b) { return a * b.inverse(); }

    Cyclo24 pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclo24 r = one(), b = *this;
        unsigned long u = static_cast<unsigned long>(e);
        while (u) {
            if (u & 1) r *= b;
            b *= b;
            u >>= 1;
        }
        return r;
    }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(8);
        for (const auto& x : c_) out.push_back(asmkit::to_string(x));
        return out;
    }

    std::string to_string() const {
        if (is_rational()) return asmkit::to_string(c_[0]);
        std::string s = "[";
        for (size_t i = 0; i < 8; ++i) {
            if (i) s += ",";
            s += asmkit::to_string(c_[i]);
        }
        return s + "]";
    }

  private:
    std::array<Rational, 8> c_{};  // coefficient of zeta^0 .. zeta^7

    static const std::array<Cyclo24, 24>& zeta_table() {
        static const std::array<Cyclo24, 24> table = [] {
            std::array<Cyclo24, 24> t{};
            t[0] = one();
            Cyclo24 z;
            z.c_[1] = Rational(1);
            for (size_t k = 1; k < 24; ++k) t[k] = t[k - 1] * z;
            return t;
        }();
        return table;
    }
};

// zeta_k = zeta_24^(24/k) for k | 24
inline Cyclo24 cyclo_root(long k) {
    if (k <= 0 || 24 % k != 0) throw invalid_input("cyclo_root: order must divide 24");
    return Cyclo24::zeta_pow(24 / k);
}

inline Cyclo24 embed(const Rational& r) { return Cyclo24(r); }

}  // namespace asmkit
