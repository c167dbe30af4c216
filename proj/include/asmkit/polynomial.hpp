#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asmkit/cyclo.hpp"
#include "asmkit/rational.hpp"

namespace asmkit {

template <class K>
inline bool scalar_is_zero(const K& x) {
    return x == K(0);
}
inline bool scalar_is_zero(const Cyclo24& x) { return x.is_zero(); }

template <class K>
inline K scalar_inverse(const K& x) {
    if (scalar_is_zero(x)) throw pole_error("scalar_inverse: zero");
    return K(1) / x;
}
inline Cyclo24 scalar_inverse(const Cyclo24& x) { return x.inverse(); }
inline Integer scalar_inverse(const Integer&) {
    throw invalid_input("scalar_inverse: integers are not a field");
}

// Exact scalar division: always possible over a field, divisibility-checked
// over the integers.  Returns false when the quotient does not exist.
template <class K>
inline bool scalar_try_divide(const K& num, const K& den, K& out) {
    out = num * scalar_inverse(den);
    return true;
}
inline bool scalar_try_divide(const Integer& num, const Integer& den, Integer& out) {
    if (den == 0) throw pole_error("scalar_try_divide: zero divisor");
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return true;
}

// Dense univariate Laurent polynomial over a field K.  coeffs[i] is the
// coefficient of t^(off+i); the first and last coefficients are nonzero
// unless the polynomial is zero (empty coeffs, off = 0).
template <class K>
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const K& c) {
        if (!scalar_is_zero(c)) co_ = {c};
    }

    static LaurentPoly monomial(const K& c, int exp) {
        LaurentPoly p;
        if (!scalar_is_zero(c)) {
            p.off_ = exp;
            p.co_ = {c};
        }
        return p;
    }

    static LaurentPoly from_coeffs(std::vector<K> coeffs, int off = 0) {
        LaurentPoly p;
        p.off_ = off;
        p.co_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    bool is_zero() const { return co_.empty(); }
    int lo() const { return off_; }
    int hi() const { return off_ + static_cast<int>(co_.size()) - 1; }
    const std::vector<K>& coeffs() const { return co_; }

    K coeff(int exp) const {
        int i = exp - off_;
        if (i < 0 || i >= static_cast<int>(co_.size())) return K(0);
        return co_[static_cast<size_t>(i)];
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
        std::vector<K> c(static_cast<size_t>(hi - lo + 1), K(0));
        for (int e = a.lo(); e <= a.hi(); ++e) c[static_cast<size_t>(e - lo)] += a.coeff(e);
        for (int e = b.lo(); e <= b.hi(); ++e) c[static_cast<size_t>(e - lo)] += b.coeff(e);
        return from_coeffs(std::move(c), lo);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    LaurentPoly operator-() const {
        LaurentPoly p = *this;
        for (auto& c : p.co_) c = K(0) - c;
        return p;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        std::vector<K> c(a.co_.size() + b.co_.size() - 1, K(0));
        for (size_t i = 0; i < a.co_.size(); ++i) {
            if (scalar_is_zero(a.co_[i])) continue;
            for (size_t j = 0; j < b.co_.size(); ++j) {
                if (scalar_is_zero(b.co_[j])) continue;
                c[i + j] += a.co_[i] * b.co_[j];
            }
        }
        return from_coeffs(std::move(c), a.off_ + b.off_);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.off_ == b.off_ && a.co_ == b.co_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Exact division; returns nullopt when den does not divide *this.
    std::optional<LaurentPoly> divided_by(const LaurentPoly& den) const {
        if (den.is_zero()) throw pole_error("LaurentPoly: division by zero polynomial");
        if (is_zero()) return LaurentPoly();
        if (co_.size() < den.co_.size()) return std::nullopt;
        std::vector<K> rem = co_;
        std::vector<K> q(co_.size() - den.co_.size() + 1, K(0));
        const K& lead = den.co_.back();
        for (size_t k = q.size(); k-- > 0;) {
            K f(0);
            if (!scalar_is_zero(rem[k + den.co_.size() - 1]) &&
                !scalar_try_divide(rem[k + den.co_.size() - 1], lead, f))
                return std::nullopt;
            q[k] = f;
            if (scalar_is_zero(f)) continue;
            for (size_t j = 0; j < den.co_.size(); ++j) rem[k + j] -= f * den.co_[j];
        }
        for (const auto& r : rem)
            if (!scalar_is_zero(r)) return std::nullopt;
        return from_coeffs(std::move(q), off_ - den.off_);
    }

    K eval(const K& x) const {
        if (is_zero()) return K(0);
        K acc(0);
        for (size_t i = co_.size(); i-- > 0;) acc = acc * x + co_[i];
        if (off_ > 0)
            for (int k = 0; k < off_; ++k) acc = acc * x;
        else if (off_ < 0) {
            K xi = scalar_inverse(x);
            for (int k = 0; k < -off_; ++k) acc = acc * xi;
        }
        return acc;
    }

    K eval_one() const {
        K acc(0);
        for (const auto& c : co_) acc += c;
        return acc;
    }

    int degree() const { return is_zero() ? -1 : hi(); }

  private:
    int off_ = 0;
    std::vector<K> co_;

    void normalize() {
        size_t head = 0;
        while (head < co_.size() && scalar_is_zero(co_[head])) ++head;
        if (head == co_.size()) {
            co_.clear();
            off_ = 0;
            return;
        }
        size_t tail = co_.size();
        while (tail > head && scalar_is_zero(co_[tail - 1])) --tail;
        if (head > 0 || tail < co_.size()) {
            co_ = std::vector<K>(co_.begin() + static_cast<long>(head), co_.begin() + static_cast<long>(tail));
            off_ += static_cast<int>(head);
        }
    }
};

// Univariate exact polynomial with rational coefficients, the generating
// function / limit-taking workhorse.
using IntPolynomial = LaurentPoly<Rational>;

template <class K>
LaurentPoly<K> poly_exact_div(const LaurentPoly<K>& num, const LaurentPoly<K>& den) {
    auto q = num.divided_by(den);
    if (!q) throw not_divisible("poly_exact_div: nonzero remainder");
    return *q;
}

inline std::string to_string(const IntPolynomial& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int e = p.lo(); e <= p.hi(); ++e) {
        Rational c = p.coeff(e);
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Rational a = abs(c);
        if (a != 1 || e == 0) s += to_string(a);
        if (e != 0) {
            s += var;
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

// Formal ratio of Laurent polynomials.  No gcd reduction; products stay
// small enough at the sizes we use, and resolve() performs the one exact
// division at the very end.
template <class K>
class PolyRatio {
  public:
    PolyRatio() : num_(), den_(LaurentPoly<K>(K(1))) {}
    explicit PolyRatio(const K& c) : num_(LaurentPoly<K>(c)), den_(LaurentPoly<K>(K(1))) {}
    explicit PolyRatio(LaurentPoly<K> n) : num_(std::move(n)), den_(LaurentPoly<K>(K(1))) {}
    PolyRatio(LaurentPoly<K> n, LaurentPoly<K> d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw pole_error("PolyRatio: zero denominator");
    }

    const LaurentPoly<K>& num() const { return num_; }
    const LaurentPoly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend PolyRatio operator+(const PolyRatio& a, const PolyRatio& b) {
        return PolyRatio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PolyRatio operator-(const PolyRatio& a, const PolyRatio& b) {
        return PolyRatio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    PolyRatio operator-() const { return PolyRatio(-num_, den_); }
    friend PolyRatio operator*(const PolyRatio& a, const PolyRatio& b) {
        return PolyRatio(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend PolyRatio operator/(const PolyRatio& a, const PolyRatio& b) {
        if (b.num_.is_zero()) throw pole_error("PolyRatio: division by zero");
        return PolyRatio(a.num_ * b.den_, a.den_ * b.num_);
    }
    PolyRatio& operator+=(const PolyRatio& o) { return *this = *this + o; }
    PolyRatio& operator-=(const PolyRatio& o) { return *this = *this - o; }
    PolyRatio& operator*=(const PolyRatio& o) { return *this = *this * o; }

    PolyRatio pow(long e) const {
        PolyRatio r(K(1)), b = *this;
        bool neg = e < 0;
        unsigned long u = static_cast<unsigned long>(neg ? -e : e);
        while (u) {
            if (u & 1) r *= b;
            b *= b;
            u >>= 1;
        }
        return neg ? PolyRatio(K(1)) / r : r;
    }

    // The ratio must be an honest Laurent polynomial at this point.
    LaurentPoly<K> resolve() const { return poly_exact_div(num_, den_); }

  private:
    LaurentPoly<K> num_, den_;
};

}  // namespace asmkit
