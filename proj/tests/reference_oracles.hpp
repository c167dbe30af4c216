#pragma once

// Test-only reference implementations: the literal signed/unsigned
// permutation and perfect-matching sums, plus a semistandard-tableau
// counter.  These stay independent of the production algorithms they check.

#include <vector>

#include "asmkit/linalg.hpp"
#include "asmkit/sampling.hpp"

namespace asmkit::testing {

inline int permutation_sign(const std::vector<size_t>& p) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

template <class T>
T det_by_definition(const Matrix<T>& m) {
    const size_t n = m.rows();
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    T acc = ring<T>::zero();
    do {
        T term = ring<T>::one();
        for (size_t i = 0; i < n; ++i) term = term * m.at(i, idx[i]);
        if (permutation_sign(idx) < 0) acc = acc - term;
        else acc = acc + term;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return n == 0 ? ring<T>::one() : acc;
}

template <class T>
T perm_by_definition(const Matrix<T>& m) {
    const size_t n = m.rows();
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    T acc = ring<T>::zero();
    do {
        T term = ring<T>::one();
        for (size_t i = 0; i < n; ++i) term = term * m.at(i, idx[i]);
        acc = acc + term;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return n == 0 ? ring<T>::one() : acc;
}

// Enumerates the ordered perfect matchings F_{2n} of Eq.-(Pf)/(Hf) style:
// sigma(1) < sigma(3) < ... and sigma(2i-1) < sigma(2i).
template <class T>
void matchings_rec(const Matrix<T>& m, std::vector<size_t>& seq, std::vector<bool>& used, T& acc,
                   bool signs) {
    const size_t n = m.rows();
    size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
        T term = ring<T>::one();
        for (size_t k = 0; k < seq.size(); k += 2) term = term * m.at(seq[k], seq[k + 1]);
        if (signs && permutation_sign(seq) < 0) acc = acc - term;
        else acc = acc + term;
        return;
    }
    used[first] = true;
    seq.push_back(first);
    for (size_t j = first + 1; j < n; ++j) {
        if (used[j]) continue;
        used[j] = true;
        seq.push_back(j);
        matchings_rec(m, seq, used, acc, signs);
        seq.pop_back();
        used[j] = false;
    }
    seq.pop_back();
    used[first] = false;
}

template <class T>
T pf_by_definition(const Matrix<T>& m) {
    T acc = ring<T>::zero();
    std::vector<size_t> seq;
    std::vector<bool> used(m.rows(), false);
    matchings_rec(m, seq, used, acc, true);
    return m.rows() == 0 ? ring<T>::one() : acc;
}

template <class T>
T hf_by_definition(const Matrix<T>& m) {
    T acc = ring<T>::zero();
    std::vector<size_t> seq;
    std::vector<bool> used(m.rows(), false);
    matchings_rec(m, seq, used, acc, false);
    return m.rows() == 0 ? ring<T>::one() : acc;
}

inline void ssyt_rec(const std::vector<int>& shape, std::vector<std::vector<int>>& tab, size_t r,
                     size_t c, int maxval, long long& count) {
    if (r == shape.size()) {
        ++count;
        return;
    }
    size_t nr = r, nc = c + 1;
    if (nc >= static_cast<size_t>(shape[r])) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);      // rows weakly increase
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);  // columns strictly increase
    for (int v = lo; v <= maxval; ++v) {
        tab[r][c] = v;
        ssyt_rec(shape, tab, nr, nc, maxval, count);
    }
}

// Number of semistandard Young tableaux of the given shape with entries <= n.
inline long long ssyt_count(const std::vector<int>& shape, int n) {
    if (shape.empty()) return 1;
    std::vector<std::vector<int>> tab;
    for (int len : shape) tab.emplace_back(static_cast<size_t>(len), 0);
    long long count = 0;
    ssyt_rec(shape, tab, 0, 0, n, count);
    return count;
}

inline Matrix<Rational> random_rational_matrix(size_t n, uint64_t seed, int bound = 9) {
    SplitMix64 rng(seed);
    Matrix<Rational> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = make_rational(rng.range(-bound, bound), rng.range(1, bound));
    return m;
}

inline Matrix<Rational> random_skew_matrix(size_t n, uint64_t seed, int bound = 9) {
    SplitMix64 rng(seed);
    Matrix<Rational> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            m.at(i, j) = make_rational(rng.range(-bound, bound), rng.range(1, bound));
            m.at(j, i) = -m.at(i, j);
        }
    return m;
}

inline Matrix<Rational> random_symmetric_matrix(size_t n, uint64_t seed, int bound = 9) {
    SplitMix64 rng(seed);
    Matrix<Rational> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            m.at(i, j) = make_rational(rng.range(-bound, bound), rng.range(1, bound));
            m.at(j, i) = m.at(i, j);
        }
    return m;
}

}  // namespace asmkit::testing
