#pragma once

#include <set>
#include <vector>

#include "asmkit/linalg.hpp"
#include "asmkit/polynomial.hpp"
#include "asmkit/weights.hpp"

namespace asmkit {

namespace detail {

// Doubled exponent vector lambda + staircase for the group's bialternant:
// delta(n-1) for GL, delta(n) for Sp, delta(n-1/2) for odd pin,
// delta(n-1) for even pin.
inline std::vector<long> bialternant_exponents(const GroupSpec& g, const Weight& fitted) {
    const int r = g.rank;
    std::vector<long> a(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        long lam = fitted.tw[static_cast<size_t>(i)];
        switch (g.family) {
            case GroupFamily::GL: a[static_cast<size_t>(i)] = lam + 2 * (r - 1 - i); break;
            case GroupFamily::Sp: a[static_cast<size_t>(i)] = lam + 2 * (r - i); break;
            case GroupFamily::PinOdd: a[static_cast<size_t>(i)] = lam + 2 * (r - i) - 1; break;
            case GroupFamily::PinEven: a[static_cast<size_t>(i)] = lam + 2 * (r - 1 - i); break;
        }
    }
    return a;
}

enum class BialternantKind { V, Wminus, Wplus };

inline BialternantKind bialternant_kind(GroupFamily f) {
    switch (f) {
        case GroupFamily::GL: return BialternantKind::V;
        case GroupFamily::Sp:
        case GroupFamily::PinOdd: return BialternantKind::Wminus;
        case GroupFamily::PinEven: return BialternantKind::Wplus;
    }
    return BialternantKind::V;
}

}  // namespace detail

// A bialternant coordinate: either a concrete value, or the monomial t^texp
// of the limit indeterminate whose t -> 1 limit is taken by exact polynomial
// division.
template <class K>
struct CharCoord {
    bool limit = false;
    K v = K(0);
    int texp = 1;

    static CharCoord value(const K& val) { return {false, val, 0}; }
    static CharCoord limit_slot(int texp = 1) { return {true, K(0), texp}; }
};

namespace detail {

// Ratio det M(num_exp) / det M(den_exp) where M has entries coord_i^e,
// coord_i^e - coord_i^{-e} or coord_i^e + coord_i^{-e}.
template <class K>
K bialternant_ratio(BialternantKind kind, const std::vector<long>& num_exp,
                    const std::vector<long>& den_exp,
                    const std::vector<CharCoord<K>>& coords) {
    const size_t r = coords.size();
    bool has_limit = false;
    for (const auto& c : coords) has_limit |= c.limit;

    if (!has_limit) {
        auto build = [&](const std::vector<long>& ex) {
            Matrix<K> m(r, r);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) {
                    K p = pow_scalar(coords[i].v, ex[j]);
                    if (kind == BialternantKind::V) m.at(i, j) = p;
                    else {
                        K q = pow_scalar(coords[i].v, -ex[j]);
                        m.at(i, j) = kind == BialternantKind::Wminus ? K(p - q) : K(p + q);
                    }
                }
            return m;
        };
        K dn = det(build(den_exp));
        if (ring<K>::is_zero(dn))
            throw pole_error("bialternant: Weyl denominator vanishes at this point");
        return det(build(num_exp)) / dn;
    }

    using P = LaurentPoly<K>;
    auto build = [&](const std::vector<long>& ex) {
        Matrix<P> m(r, r);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                P p, q;
                if (coords[i].limit) {
                    int e = static_cast<int>(ex[j]) * coords[i].texp;
                    p = P::monomial(K(1), e);
                    q = P::monomial(K(1), -e);
                } else {
                    p = P(pow_scalar(coords[i].v, ex[j]));
                    q = P(pow_scalar(coords[i].v, -ex[j]));
                }
                if (kind == BialternantKind::V) m.at(i, j) = p;
                else m.at(i, j) = kind == BialternantKind::Wminus ? P(p - q) : P(p + q);
            }
        return m;
    };
    P dn = det(build(den_exp));
    if (dn.is_zero()) throw pole_error("bialternant: Weyl denominator vanishes identically");
    P nm = det(build(num_exp));
    auto quot = nm.divided_by(dn);
    if (!quot) throw not_divisible("bialternant: character ratio is not polynomial");
    return quot->eval_one();
}

}  // namespace detail

// Character of g with highest weight w at squared coordinates
// (c_1^2, ..., c_r^2).  Working on square roots keeps half-integer
// exponents exact; limit coordinates are the monomial u^texp with u -> 1.
// For even pin groups with lambda_n != 0 the value follows the halved
// denominator convention (the two mirror D_n constituents together).
template <class K>
K char_value_sq(const GroupSpec& g, const Weight& w, const std::vector<CharCoord<K>>& coords) {
    Weight lam = fit_weight(g, w);
    const size_t r = static_cast<size_t>(g.rank);
    if (coords.size() != r) throw invalid_input("char_value_sq: coordinate count != rank");
    if (r == 0) return K(1);
    Weight zero(std::vector<long>(r, 0));
    K val = detail::bialternant_ratio(detail::bialternant_kind(g.family),
                                      detail::bialternant_exponents(g, lam),
                                      detail::bialternant_exponents(g, zero), coords);
    if (g.family == GroupFamily::PinEven && lam.last_nonzero()) val = val + val;
    return val;
}

// Character at the given coordinate values; integer weights only, so the
// doubled exponents halve exactly.  Slots in limit_slots become the limit
// indeterminate t -> 1.
template <class K>
K char_bialternant(const GroupSpec& g, const Weight& w, const std::vector<K>& xs,
                   const std::set<size_t>& limit_slots = {}) {
    Weight lam = fit_weight(g, w);
    if (lam.is_half())
        throw invalid_input("char_bialternant: half-integer weight needs char_value_sq");
    const size_t r = static_cast<size_t>(g.rank);
    if (xs.size() != r) throw invalid_input("char_bialternant: coordinate count != rank");
    if (r == 0) return K(1);
    Weight zero(std::vector<long>(r, 0));
    auto num_exp = detail::bialternant_exponents(g, lam);
    auto den_exp = detail::bialternant_exponents(g, zero);
    for (auto& e : num_exp) e /= 2;
    for (auto& e : den_exp) e /= 2;
    std::vector<CharCoord<K>> coords;
    coords.reserve(r);
    for (size_t i = 0; i < r; ++i)
        coords.push_back(limit_slots.count(i) ? CharCoord<K>::limit_slot(1)
                                              : CharCoord<K>::value(xs[i]));
    K val = detail::bialternant_ratio(detail::bialternant_kind(g.family), num_exp, den_exp, coords);
    if (g.family == GroupFamily::PinEven && lam.last_nonzero()) val = val + val;
    return val;
}

// Weyl dimension formula over the positive roots of A_{n-1} / C_n / B_n /
// D_n, with the same even-pin doubling rule as the bialternant.
inline Rational weyl_dim(const GroupSpec& g, const Weight& w) {
    Weight lam = fit_weight(g, w);
    const int r = g.rank;
    if (r == 0) return Rational(1);
    std::vector<long> ell(static_cast<size_t>(r)), rho(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        long stair = 0;
        switch (g.family) {
            case GroupFamily::GL: stair = 2 * (r - 1 - i); break;
            case GroupFamily::Sp: stair = 2 * (r - i); break;
            case GroupFamily::PinOdd: stair = 2 * (r - i) - 1; break;
            case GroupFamily::PinEven: stair = 2 * (r - 1 - i); break;
        }
        rho[static_cast<size_t>(i)] = stair;
        ell[static_cast<size_t>(i)] = lam.tw[static_cast<size_t>(i)] + stair;
    }
    Integer num = 1, den = 1;
    auto pair_factor = [&](long a, long b) -> Integer {
        if (g.family == GroupFamily::GL) return Integer(a - b);
        return Integer(Integer(a) * Integer(a) - Integer(b) * Integer(b));
    };
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            num *= pair_factor(ell[static_cast<size_t>(i)], ell[static_cast<size_t>(j)]);
            den *= pair_factor(rho[static_cast<size_t>(i)], rho[static_cast<size_t>(j)]);
        }
    if (g.family == GroupFamily::Sp || g.family == GroupFamily::PinOdd) {
        for (int i = 0; i < r; ++i) {
            num *= ell[static_cast<size_t>(i)];
            den *= rho[static_cast<size_t>(i)];
        }
    }
    Rational dim = make_rational(num, den);
    if (g.family == GroupFamily::PinEven && lam.last_nonzero()) dim *= 2;
    return dim;
}

// Independent dimension oracle: principal specialization x_i = t^i as exact
// Laurent polynomials in t, exact division, evaluation at t = 1.  Must agree
// with weyl_dim everywhere.  The matrices have monomial entries, so the
// whole computation runs over integer-coefficient polynomials.
inline Rational dim_principal(const GroupSpec& g, const Weight& w) {
    Weight lam = fit_weight(g, w);
    const size_t r = static_cast<size_t>(g.rank);
    if (r == 0) return Rational(1);
    Weight zero(std::vector<long>(r, 0));
    auto num_exp = detail::bialternant_exponents(g, lam);
    auto den_exp = detail::bialternant_exponents(g, zero);
    auto kind = detail::bialternant_kind(g.family);

    using P = LaurentPoly<Integer>;
    auto build = [&](const std::vector<long>& ex) {
        Matrix<P> m(r, r);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                int e = static_cast<int>(ex[j]) * (static_cast<int>(i) + 1);
                P p = P::monomial(Integer(1), e);
                P q = P::monomial(Integer(1), -e);
                if (kind == detail::BialternantKind::V) m.at(i, j) = p;
                else m.at(i, j) = kind == detail::BialternantKind::Wminus ? P(p - q) : P(p + q);
            }
        return m;
    };
    P dn = det(build(den_exp));
    if (dn.is_zero()) throw pole_error("dim_principal: Weyl denominator vanishes identically");
    P nm = det(build(num_exp));
    // halved-denominator convention when lambda_n != 0: the integer-exact
    // quotient is det W+ (lambda+delta) / ((1/2) det W+(delta))
    if (g.family == GroupFamily::PinEven && lam.last_nonzero()) nm += nm;
    auto quot = nm.divided_by(dn);
    if (!quot) throw not_divisible("dim_principal: character ratio is not polynomial");
    return Rational(quot->eval_one());
}

}  // namespace asmkit
