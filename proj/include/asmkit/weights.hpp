#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "asmkit/rational.hpp"

namespace asmkit {

// Highest weight of a classical group: non-increasing, all entries sharing
// parity (all integers or all half-odd-integers), stored doubled so weight
// arithmetic stays in plain integers.
struct Weight {
    std::vector<long> tw;  // doubled entries, non-increasing, >= 0

    Weight() = default;
    explicit Weight(std::vector<long> doubled) : tw(std::move(doubled)) { check(); }

    static Weight from_parts(const std::vector<Rational>& parts) {
        std::vector<long> d;
        d.reserve(parts.size());
        for (const auto& p : parts) {
            Rational t = p * 2;
            if (!is_integral(t)) throw invalid_input("Weight: entries must be half-integers");
            d.push_back(t.get_num().get_si());
        }
        return Weight(std::move(d));
    }

    size_t size() const { return tw.size(); }
    bool empty() const { return tw.empty(); }

    // true when entries are half-odd-integers
    bool is_half() const { return !tw.empty() && tw.front() % 2 != 0; }

    bool last_nonzero() const { return !tw.empty() && tw.back() != 0; }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < tw.size(); ++i) {
            if (i) s += ",";
            if (tw[i] % 2 == 0) s += std::to_string(tw[i] / 2);
            else s += std::to_string(tw[i]) + "/2";
        }
        return s + ")";
    }

    static Weight parse(const std::string& text) {
        std::vector<Rational> parts;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            parts.push_back(parse_rational(tok));
        }
        return from_parts(parts);
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.tw == b.tw; }

  private:
    void check() const {
        for (size_t i = 0; i < tw.size(); ++i) {
            if (tw[i] < 0) throw invalid_input("Weight: negative entry");
            if (i && tw[i] > tw[i - 1]) throw invalid_input("Weight: entries must be non-increasing");
            if (tw[i] % 2 != tw[0] % 2) throw invalid_input("Weight: mixed parity");
        }
    }
};

enum class DeltaKind { Delta, Delta2 };

namespace detail {

// delta(r): r, r-1, r-2, ... through strictly positive values;
// delta2(r): r, r-2, r-4, ...  Arguments and entries are doubled.
inline std::vector<long> staircase(DeltaKind kind, long two_r) {
    std::vector<long> out;
    long step = kind == DeltaKind::Delta ? 2 : 4;
    for (long v = two_r; v > 0; v -= step) out.push_back(v);
    return out;
}

}  // namespace detail

inline Weight make_delta(DeltaKind kind, const Rational& r) {
    Rational t = r * 2;
    if (!is_integral(t)) throw invalid_input("make_delta: argument must be a half-integer");
    return Weight(detail::staircase(kind, t.get_num().get_si()));
}

// Two-argument form: the sorted multiset union delta(r) u delta(s), except
// that delta(n+1/2, n-1/2) follows the explicit half-partition listing of
// the enumeration theorems, which has a single trailing 1/2 (2n entries).
inline Weight make_delta(DeltaKind kind, const Rational& r, const Rational& s) {
    Rational tr = r * 2, ts = s * 2;
    if (!is_integral(tr) || !is_integral(ts))
        throw invalid_input("make_delta: arguments must be half-integers");
    long a = tr.get_num().get_si(), b = ts.get_num().get_si();
    if (a > 0 && b > 0 && (a % 2 != 0) != (b % 2 != 0))
        throw invalid_input("make_delta: mixed parity between r and s");
    auto u = detail::staircase(kind, a);
    auto v = detail::staircase(kind, b);
    std::vector<long> m;
    m.reserve(u.size() + v.size());
    std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(m),
               std::greater<long>());
    if (kind == DeltaKind::Delta && a % 2 != 0 && b % 2 != 0 && b >= 1 && a == b + 2) {
        // drop one trailing 1/2
        if (!m.empty() && m.back() == 1) m.pop_back();
    }
    return Weight(std::move(m));
}

enum class GroupFamily { GL, Sp, PinOdd, PinEven };

// rank is the Lie rank n: GL_n, Sp_2n, the double cover of O_{2n+1}, and
// the double cover of O_{2n} respectively.
struct GroupSpec {
    GroupFamily family;
    int rank;

    int label() const {
        switch (family) {
            case GroupFamily::GL: return rank;
            case GroupFamily::Sp: return 2 * rank;
            case GroupFamily::PinOdd: return 2 * rank + 1;
            case GroupFamily::PinEven: return 2 * rank;
        }
        return 0;
    }

    std::string name() const {
        switch (family) {
            case GroupFamily::GL: return "GL_" + std::to_string(label());
            case GroupFamily::Sp: return "Sp_" + std::to_string(label());
            case GroupFamily::PinOdd:
            case GroupFamily::PinEven: return "Pin_" + std::to_string(label());
        }
        return "?";
    }
};

inline GroupSpec gl(int n) { return {GroupFamily::GL, n}; }
// by matrix-size label: sp_group(2n) = Sp_{2n}
inline GroupSpec sp_group(int label) {
    if (label % 2 != 0 || label < 0) throw invalid_input("sp_group: label must be even");
    return {GroupFamily::Sp, label / 2};
}
inline GroupSpec pin_group(int label) {
    if (label < 0) throw invalid_input("pin_group: negative label");
    if (label % 2 == 0) return {GroupFamily::PinEven, label / 2};
    return {GroupFamily::PinOdd, (label - 1) / 2};
}

// Pads integer weights with zeros up to the rank; for half-integer weights
// drops trailing 1/2 entries while the weight overflows the rank (the
// convention the enumeration theorems' staircase weights require).
inline Weight fit_weight(const GroupSpec& g, Weight w) {
    bool half = w.is_half();
    if (half && (g.family == GroupFamily::GL || g.family == GroupFamily::Sp))
        throw invalid_input("fit_weight: half-integer weight needs an orthogonal-type group");
    size_t rank = static_cast<size_t>(g.rank);
    while (w.tw.size() > rank) {
        if (half && w.tw.back() == 1) w.tw.pop_back();
        else throw invalid_input("fit_weight: weight too long for " + g.name());
    }
    if (w.tw.size() < rank) {
        if (half) throw invalid_input("fit_weight: half-integer weight shorter than rank");
        w.tw.resize(rank, 0);
    }
    return w;
}

}  // namespace asmkit
