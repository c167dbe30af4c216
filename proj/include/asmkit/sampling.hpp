#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "asmkit/rational.hpp"

namespace asmkit {

// splitmix64: a fixed, platform-independent generator so that seeded runs
// are reproducible byte for byte.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : s_(seed) {}
    uint64_t next() {
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

  private:
    uint64_t s_;
};

// Accepts the candidate value given the points chosen so far.
using PointPredicate = std::function<bool(const std::vector<Rational>&, const Rational&)>;

// Candidate values are nonzero rationals with numerator and denominator
// bounded by 1000 and never equal to +-1; the predicate adds the per-suite
// pole-avoidance constraints on top.
inline std::vector<Rational> sample_points(size_t count, uint64_t seed, const PointPredicate& ok,
                                           size_t retry_budget = 20000) {
    SplitMix64 rng(seed);
    std::vector<Rational> out;
    out.reserve(count);
    size_t tries = 0;
    while (out.size() < count) {
        if (++tries > retry_budget)
            throw invalid_input("sample_points: predicate unsatisfiable within retry budget");
        long num = rng.range(-1000, 1000);
        long den = rng.range(1, 1000);
        if (num == 0) continue;
        Rational cand = make_rational(num, den);
        if (cand == 1 || cand == -1) continue;
        bool dup = false;
        for (const auto& p : out)
            if (p == cand) dup = true;
        if (dup) continue;
        if (ok && !ok(out, cand)) continue;
        out.push_back(cand);
    }
    return out;
}

inline PointPredicate no_constraint() { return PointPredicate(); }

// |u| distinct from |v| for every chosen v, and |uv| != 1: keeps every
// sigma-factor and Weyl denominator in the suites nonzero.
inline PointPredicate spectral_constraint() {
    return [](const std::vector<Rational>& chosen, const Rational& c) {
        for (const auto& p : chosen) {
            if (p == -c) return false;
            Rational prod = p * c;
            if (prod == 1 || prod == -1) return false;
        }
        return true;
    };
}

// x_i x_j != 1 only (the documented example predicate).
inline PointPredicate product_not_one() {
    return [](const std::vector<Rational>& chosen, const Rational& c) {
        for (const auto& p : chosen)
            if (p * c == 1) return false;
        return true;
    };
}

}  // namespace asmkit
