#pragma once

#include <unordered_map>
#include <vector>

#include "asmkit/polynomial.hpp"
#include "asmkit/rational.hpp"

namespace asmkit {

template <class T>
struct ring {
    static T zero() { return T(0); }
    static T one() { return T(1); }
    static bool is_zero(const T& x) { return x == T(0); }
    static constexpr bool is_field = true;
    static T quot(const T& a, const T& b) { return a / b; }
};

template <>
struct ring<Integer> {
    static Integer zero() { return Integer(0); }
    static Integer one() { return Integer(1); }
    static bool is_zero(const Integer& x) { return x == 0; }
    static constexpr bool is_field = false;
    static Integer quot(const Integer& a, const Integer& b) {
        Integer out;
        if (!scalar_try_divide(a, b, out)) throw not_divisible("integer quotient is not exact");
        return out;
    }
};

template <>
struct ring<Cyclo24> {
    static Cyclo24 zero() { return Cyclo24::zero(); }
    static Cyclo24 one() { return Cyclo24::one(); }
    static bool is_zero(const Cyclo24& x) { return x.is_zero(); }
    static constexpr bool is_field = true;
    static Cyclo24 quot(const Cyclo24& a, const Cyclo24& b) { return a / b; }
};

template <class K>
struct ring<LaurentPoly<K>> {
    static LaurentPoly<K> zero() { return LaurentPoly<K>(); }
    static LaurentPoly<K> one() { return LaurentPoly<K>(K(1)); }
    static bool is_zero(const LaurentPoly<K>& x) { return x.is_zero(); }
    static constexpr bool is_field = false;
    static LaurentPoly<K> quot(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
        return poly_exact_div(a, b);
    }
};

template <class K>
struct ring<PolyRatio<K>> {
    static PolyRatio<K> zero() { return PolyRatio<K>(); }
    static PolyRatio<K> one() { return PolyRatio<K>(K(1)); }
    static bool is_zero(const PolyRatio<K>& x) { return x.is_zero(); }
    static constexpr bool is_field = true;
    static PolyRatio<K> quot(const PolyRatio<K>& a, const PolyRatio<K>& b) { return a / b; }
};

namespace detail {

template <class K>
K pow_scalar(const K& s, long e) {
    if (e < 0) return pow_scalar(scalar_inverse(s), -e);
    K r = ring<K>::one();
    K b = s;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}
inline Cyclo24 pow_scalar(const Cyclo24& s, long e) { return s.pow(e); }
template <class K>
PolyRatio<K> pow_scalar(const PolyRatio<K>& s, long e) {
    return s.pow(e);
}

}  // namespace detail

template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, ring<T>::zero()) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& at(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    // Submatrix with the given row and column index lists.
    Matrix select(const std::vector<size_t>& ri, const std::vector<size_t>& ci) const {
        Matrix s(ri.size(), ci.size());
        for (size_t i = 0; i < ri.size(); ++i)
            for (size_t j = 0; j < ci.size(); ++j) s.at(i, j) = at(ri[i], ci[j]);
        return s;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> d_;
};

// Determinant.  Fields get plain Gaussian elimination; non-field domains
// (Laurent/polynomial rings) get Bareiss fraction-free elimination, whose
// divisions are exact.  Both agree with the signed permutation sum.
template <class T>
T det(Matrix<T> m) {
    if (!m.square()) throw invalid_input("det: matrix must be square");
    const size_t n = m.rows();
    if (n == 0) return ring<T>::one();
    bool negate = false;
    if constexpr (ring<T>::is_field) {
        T acc = ring<T>::one();
        for (size_t k = 0; k < n; ++k) {
            size_t p = k;
            while (p < n && ring<T>::is_zero(m.at(p, k))) ++p;
            if (p == n) return ring<T>::zero();
            if (p != k) {
                for (size_t j = k; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
                negate = !negate;
            }
            const T pivot = m.at(k, k);
            acc = acc * pivot;
            for (size_t i = k + 1; i < n; ++i) {
                if (ring<T>::is_zero(m.at(i, k))) continue;
                T f = ring<T>::quot(m.at(i, k), pivot);
                for (size_t j = k + 1; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
                m.at(i, k) = ring<T>::zero();
            }
        }
        return negate ? ring<T>::zero() - acc : acc;
    } else {
        T prev = ring<T>::one();
        for (size_t k = 0; k + 1 < n; ++k) {
            size_t p = k;
            while (p < n && ring<T>::is_zero(m.at(p, k))) ++p;
            if (p == n) return ring<T>::zero();
            if (p != k) {
                for (size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
                negate = !negate;
            }
            for (size_t i = k + 1; i < n; ++i) {
                for (size_t j = k + 1; j < n; ++j)
                    m.at(i, j) = ring<T>::quot(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
                m.at(i, k) = ring<T>::zero();
            }
            prev = m.at(k, k);
        }
        T r = m.at(n - 1, n - 1);
        return negate ? ring<T>::zero() - r : r;
    }
}

// Permanent: direct permutation sum below n = 5, Ryser inclusion-exclusion
// from n = 5 up.
template <class T>
T perm(const Matrix<T>& m) {
    if (!m.square()) throw invalid_input("perm: matrix must be square");
    const size_t n = m.rows();
    if (n == 0) return ring<T>::one();
    if (n < 5) {
        std::vector<size_t> idx(n);
        for (size_t i = 0; i < n; ++i) idx[i] = i;
        T acc = ring<T>::zero();
        do {
            T term = ring<T>::one();
            for (size_t i = 0; i < n; ++i) term = term * m.at(i, idx[i]);
            acc = acc + term;
        } while (std::next_permutation(idx.begin(), idx.end()));
        return acc;
    }
    T acc = ring<T>::zero();
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        T prod = ring<T>::one();
        for (size_t i = 0; i < n; ++i) {
            T rowsum = ring<T>::zero();
            for (size_t j = 0; j < n; ++j)
                if (mask & (1u << j)) rowsum = rowsum + m.at(i, j);
            prod = prod * rowsum;
        }
        unsigned bits = static_cast<unsigned>(__builtin_popcount(mask));
        if ((n - bits) % 2 == 1) acc = acc - prod;
        else acc = acc + prod;
    }
    return acc;
}

namespace detail {

template <class T>
T pf_rec(const Matrix<T>& m, uint32_t mask, std::unordered_map<uint32_t, T>& memo, bool signs) {
    if (mask == 0) return ring<T>::one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    size_t first = static_cast<size_t>(__builtin_ctz(mask));
    uint32_t rest = mask & ~(1u << first);
    T acc = ring<T>::zero();
    size_t pos = 0;
    for (uint32_t r = rest; r; r &= r - 1, ++pos) {
        size_t j = static_cast<size_t>(__builtin_ctz(r));
        T sub = pf_rec(m, rest & ~(1u << j), memo, signs);
        T term = m.at(first, j) * sub;
        if (signs && pos % 2 == 1) acc = acc - term;
        else acc = acc + term;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace detail

// Pfaffian of a skew-symmetric matrix of even dimension, by recursive
// expansion along the smallest remaining index.  Matches the ordered
// perfect-matching sum sign convention.
template <class T>
T pfaffian(const Matrix<T>& m) {
    if (!m.square()) throw invalid_input("pfaffian: matrix must be square");
    const size_t n = m.rows();
    if (n % 2 != 0) throw invalid_input("pfaffian: dimension must be even");
    if (n > 24) throw invalid_input("pfaffian: dimension too large");
    for (size_t i = 0; i < n; ++i) {
        if (!ring<T>::is_zero(m.at(i, i))) throw invalid_input("pfaffian: nonzero diagonal");
        for (size_t j = i + 1; j < n; ++j)
            if (!ring<T>::is_zero(m.at(i, j) + m.at(j, i)))
                throw invalid_input("pfaffian: matrix is not skew-symmetric");
    }
    if (n == 0) return ring<T>::one();
    std::unordered_map<uint32_t, T> memo;
    return detail::pf_rec(m, (1u << n) - 1, memo, true);
}

// Hafnian of a symmetric matrix of even dimension; the diagonal is ignored.
template <class T>
T hafnian(const Matrix<T>& m) {
    if (!m.square()) throw invalid_input("hafnian: matrix must be square");
    const size_t n = m.rows();
    if (n % 2 != 0) throw invalid_input("hafnian: dimension must be even");
    if (n > 24) throw invalid_input("hafnian: dimension too large");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!ring<T>::is_zero(m.at(i, j) - m.at(j, i)))
                throw invalid_input("hafnian: matrix is not symmetric");
    if (n == 0) return ring<T>::one();
    std::unordered_map<uint32_t, T> memo;
    return detail::pf_rec(m, (1u << n) - 1, memo, false);
}

}  // namespace asmkit
