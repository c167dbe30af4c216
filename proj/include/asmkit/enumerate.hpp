#pragma once

#include <functional>
#include <set>

#include "asmkit/polynomial.hpp"
#include "asmkit/signmatrix.hpp"

namespace asmkit {

using MatrixSink = std::function<void(const SignMatrix&)>;

namespace detail {

// Plain ASM enumeration through the row-transfer representation: partial
// column sums live in {0,1}, each row advances the state by an alternating
// sign vector.  Equivalent to monotone-triangle traversal and fast enough to
// stream all ASMs of order 8.
class AsmRowEnumerator {
  public:
    AsmRowEnumerator(int n, const MatrixSink& sink) : n_(n), sink_(sink), state_(static_cast<size_t>(n), 0), mat_(n, n) {}

    void run() {
        if (n_ == 0) return;
        row(0);
    }

    // the slice whose first row is the unit vector e_{col}
    void run_with_first_row(int col) {
        if (n_ == 0) return;
        state_[static_cast<size_t>(col)] = 1;
        for (int j = 0; j < n_; ++j) mat_.at(0, j) = static_cast<int8_t>(j == col ? 1 : 0);
        row(1);
        state_[static_cast<size_t>(col)] = 0;
    }

  private:
    int n_;
    const MatrixSink& sink_;
    std::vector<int8_t> state_;
    SignMatrix mat_;

    void row(int r) {
        if (r == n_) {
            sink_(mat_);
            return;
        }
        cell(r, 0, 0);
    }

    void cell(int r, int j, int prefix) {
        if (j == n_) {
            if (prefix == 1) row(r + 1);
            return;
        }
        int8_t old = state_[static_cast<size_t>(j)];
        for (int8_t c = 0; c <= 1; ++c) {
            int d = c - old;
            int p = prefix + d;
            if (p != 0 && p != 1) continue;
            state_[static_cast<size_t>(j)] = c;
            mat_.at(r, j) = static_cast<int8_t>(d);
            cell(r, j + 1, p);
        }
        state_[static_cast<size_t>(j)] = old;
    }
};

// Backtracking enumeration over a fundamental domain of the class's
// symmetry group.  Cells are assigned orbit by orbit in row-major order of
// their representatives; all row and column prefix sums are kept in {0,1}
// as knowledge spreads, which prunes almost everything early.
class SymmetricEnumerator {
  public:
    SymmetricEnumerator(ClassTag tag, int n, const MatrixSink& sink)
        : tag_(tag), n_(n), sink_(sink), mat_(n, n) {
        build_orbits();
    }

    void run() {
        std::vector<int8_t> entries(static_cast<size_t>(n_) * static_cast<size_t>(n_), UNKNOWN);
        State st;
        st.rowPos.assign(static_cast<size_t>(n_), 0);
        st.rowSum.assign(static_cast<size_t>(n_), 0);
        st.colPos.assign(static_cast<size_t>(n_), 0);
        st.colSum.assign(static_cast<size_t>(n_), 0);
        dfs(0, entries, st);
    }

  private:
    static constexpr int8_t UNKNOWN = 100;

    struct State {
        std::vector<int> rowPos, rowSum, colPos, colSum;
    };

    ClassTag tag_;
    int n_;
    const MatrixSink& sink_;
    SignMatrix mat_;
    std::vector<std::vector<int>> orbits_;   // orbit -> flat cell indices
    std::vector<bool> orbit_forced_zero_;

    void build_orbits() {
        auto group = class_group(tag_);
        std::vector<bool> seen(static_cast<size_t>(n_) * static_cast<size_t>(n_), false);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                size_t flat = static_cast<size_t>(i * n_ + j);
                if (seen[flat]) continue;
                std::set<int> orbit;
                bool fz = false;
                for (Sym s : group) {
                    auto [pi, pj] = apply_sym(s, i, j, n_);
                    orbit.insert(pi * n_ + pj);
                    fz = fz || forced_zero(tag_, pi, pj, n_);
                }
                for (int cell : orbit) seen[static_cast<size_t>(cell)] = true;
                orbits_.emplace_back(orbit.begin(), orbit.end());
                orbit_forced_zero_.push_back(fz);
            }
    }

    // Advance all row/column prefix machines as far as known entries allow.
    bool advance(std::vector<int8_t>& entries, State& st) {
        bool progressed = true;
        while (progressed) {
            progressed = false;
            for (int r = 0; r < n_; ++r) {
                while (st.rowPos[static_cast<size_t>(r)] < n_) {
                    int8_t v = entries[static_cast<size_t>(r * n_ + st.rowPos[static_cast<size_t>(r)])];
                    if (v == UNKNOWN) break;
                    st.rowSum[static_cast<size_t>(r)] += v;
                    if (st.rowSum[static_cast<size_t>(r)] < 0 || st.rowSum[static_cast<size_t>(r)] > 1) return false;
                    ++st.rowPos[static_cast<size_t>(r)];
                    progressed = true;
                }
                if (st.rowPos[static_cast<size_t>(r)] == n_ && st.rowSum[static_cast<size_t>(r)] != 1) return false;
            }
            for (int c = 0; c < n_; ++c) {
                while (st.colPos[static_cast<size_t>(c)] < n_) {
                    int8_t v = entries[static_cast<size_t>(st.colPos[static_cast<size_t>(c)] * n_ + c)];
                    if (v == UNKNOWN) break;
                    st.colSum[static_cast<size_t>(c)] += v;
                    if (st.colSum[static_cast<size_t>(c)] < 0 || st.colSum[static_cast<size_t>(c)] > 1) return false;
                    ++st.colPos[static_cast<size_t>(c)];
                    progressed = true;
                }
                if (st.colPos[static_cast<size_t>(c)] == n_ && st.colSum[static_cast<size_t>(c)] != 1) return false;
            }
        }
        return true;
    }

    void dfs(size_t orbit_idx, const std::vector<int8_t>& entries, const State& st) {
        if (orbit_idx == orbits_.size()) {
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) mat_.at(i, j) = entries[static_cast<size_t>(i * n_ + j)];
            sink_(mat_);
            return;
        }
        const auto& orbit = orbits_[orbit_idx];
        for (int8_t v = -1; v <= 1; ++v) {
            if (v != 0 && orbit_forced_zero_[orbit_idx]) continue;
            std::vector<int8_t> next = entries;
            for (int cell : orbit) next[static_cast<size_t>(cell)] = v;
            State nst = st;
            if (!advance(next, nst)) continue;
            dfs(orbit_idx + 1, next, nst);
        }
    }
};

// Row-pair backtracking for the U-turn variants.  The path for pair k runs
// through row 2k left to right, then row 2k+1 right to left, and must keep
// alternating-sign prefix sums; all column prefix sums stay in {0,1}.
class UTurnEnumerator {
  public:
    UTurnEnumerator(ClassTag tag, int order, const MatrixSink& sink)
        : tag_(tag), sink_(sink) {
        auto [r, c] = class_shape(tag, order);
        R_ = r;
        C_ = c;
        mat_ = SignMatrix(R_, C_);
        colSum_.assign(static_cast<size_t>(C_), 0);
    }

    void run() {
        if (R_ == 0) {
            sink_(mat_);  // the empty member of the order-(4n+2) class at n = 0
            return;
        }
        pair_path(0, 0, 0);
    }

  private:
    ClassTag tag_;
    const MatrixSink& sink_;
    int R_ = 0, C_ = 0;
    SignMatrix mat_;
    std::vector<int> colSum_;

    bool columns_final_ok() const {
        if (tag_ == ClassTag::UASM) {
            for (int s : colSum_)
                if (s != 1) return false;
            return true;
        }
        if (tag_ == ClassTag::VHPASM) {
            for (int k = 0; k < C_; ++k)
                if (colSum_[static_cast<size_t>(k)] != (k % 2 == 0 ? 1 : 0)) return false;
            return true;
        }
        for (int k = 0; k + 1 < C_; k += 2)
            if (colSum_[static_cast<size_t>(k)] + colSum_[static_cast<size_t>(k + 1)] != 1) return false;
        return true;
    }

    void pair_path(int pair, int pos, int pathSum) {
        if (pos == 2 * C_) {
            if (pathSum != 1) return;
            if (pair + 1 < R_ / 2) pair_path(pair + 1, 0, 0);
            else if (columns_final_ok()) sink_(mat_);
            return;
        }
        // mid-pair constraint for the perverse class: odd-indexed rows sum 0
        if (tag_ == ClassTag::VHPASM && pos == C_ && pathSum != 0) return;
        int r = pos < C_ ? 2 * pair : 2 * pair + 1;
        int c = pos < C_ ? pos : 2 * C_ - 1 - pos;
        int8_t forced = 2;  // sentinel: no forcing
        if (tag_ == ClassTag::UOSASM) {
            if (r == c) forced = 0;
            else if (fills_before(c, r, pos, pair)) forced = mat_.at(c, r);
        }
        for (int8_t v = -1; v <= 1; ++v) {
            if (forced != 2 && v != forced) continue;
            int ps = pathSum + v;
            if (ps != 0 && ps != 1) continue;
            int cs = colSum_[static_cast<size_t>(c)] + v;
            if (cs != 0 && cs != 1) continue;
            mat_.at(r, c) = v;
            colSum_[static_cast<size_t>(c)] = cs;
            pair_path(pair, pos + 1, ps);
            colSum_[static_cast<size_t>(c)] -= v;
        }
    }

    // has cell (i,j) been filled before the current path position?
    bool fills_before(int i, int j, int pos, int pair) const {
        int p = i / 2;
        if (p != pair) return p < pair;
        int cellpos = i % 2 == 0 ? j : 2 * C_ - 1 - j;
        return cellpos < pos;
    }
};

}  // namespace detail

// Streams every member of the class at the given order exactly once, in a
// deterministic canonical order.  Symmetric classes run fundamental-domain
// backtracking, never filtering.
inline void enumerate(ClassTag tag, int order, const MatrixSink& sink) {
    std::string err = admissibility_error(tag, order);
    if (!err.empty()) throw invalid_input(err);
    if (tag == ClassTag::ASM) {
        detail::AsmRowEnumerator en(order, sink);
        en.run();
    } else if (is_square_class(tag)) {
        detail::SymmetricEnumerator en(tag, order, sink);
        en.run();
    } else {
        detail::UTurnEnumerator en(tag, order, sink);
        en.run();
    }
}

inline Integer count_class(ClassTag tag, int order) {
    Integer n = 0;
    enumerate(tag, order, [&](const SignMatrix&) { ++n; });
    return n;
}

// Deterministic work partitioning for plain ASMs: the first row of an ASM
// is a unit vector, so fixing its 1-column splits the stream into `order`
// independent parts.  Concatenating the parts in the canonical first-row
// order (column order-1 down to 0) reproduces the enumerate(ASM, order)
// stream exactly, so workers can process slices independently and any
// order-insensitive aggregate (counts, generating functions) is unchanged.
inline void enumerate_asm_prefix(int order, int first_one_col, const MatrixSink& sink) {
    if (first_one_col < 0 || first_one_col >= order)
        throw invalid_input("enumerate_asm_prefix: column out of range");
    if (order < 1) throw invalid_input("order must be positive");
    detail::AsmRowEnumerator en(order, sink);
    en.run_with_first_row(first_one_col);
}

// Number of orbits of -1 cells under the class's symmetry group, excluding
// orbits of symmetry-forced -1s.  For plain ASMs this is the number of -1
// entries.
inline int minus_one_statistic(const SignMatrix& m, ClassTag tag) {
    auto rep = validate(m, tag);
    if (!rep.ok) throw invalid_input("minus_one_statistic: matrix fails validation: " + rep.failures.front());
    auto group = detail::class_group(tag);
    int n = m.rows;
    std::vector<bool> seen(static_cast<size_t>(m.rows) * static_cast<size_t>(m.cols), false);
    int orbits = 0;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            if (m.at(i, j) != -1) continue;
            size_t flat = static_cast<size_t>(i * m.cols + j);
            if (seen[flat]) continue;
            bool forced = detail::forced_minus(tag, i, j, n);
            for (detail::Sym s : group) {
                auto [pi, pj] = detail::apply_sym(s, i, j, n);
                seen[static_cast<size_t>(pi * m.cols + pj)] = true;
            }
            if (!forced) ++orbits;
        }
    return orbits;
}

// Generating function sum_A x^{statistic(A)} over the class at this order.
inline IntPolynomial x_enumeration(ClassTag tag, int order) {
    std::vector<Rational> coeffs;
    enumerate(tag, order, [&](const SignMatrix& m) {
        int s = minus_one_statistic(m, tag);
        if (static_cast<size_t>(s) >= coeffs.size()) coeffs.resize(static_cast<size_t>(s) + 1, Rational(0));
        coeffs[static_cast<size_t>(s)] += 1;
    });
    return IntPolynomial::from_coeffs(coeffs, 0);
}

}  // namespace asmkit
