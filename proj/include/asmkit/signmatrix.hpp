#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asmkit/rational.hpp"

namespace asmkit {

enum class ClassTag {
    ASM,
    HTS,
    QTS,
    VS,
    VHS,
    DS,
    DAS,
    TS,
    OS,
    OOS,
    VOS,
    UASM,
    UUASM,
    VHPASM,
    UOSASM
};

inline const char* class_name(ClassTag t) {
    switch (t) {
        case ClassTag::ASM: return "asm";
        case ClassTag::HTS: return "hts";
        case ClassTag::QTS: return "qts";
        case ClassTag::VS: return "vs";
        case ClassTag::VHS: return "vhs";
        case ClassTag::DS: return "ds";
        case ClassTag::DAS: return "das";
        case ClassTag::TS: return "ts";
        case ClassTag::OS: return "os";
        case ClassTag::OOS: return "oos";
        case ClassTag::VOS: return "vos";
        case ClassTag::UASM: return "uasm";
        case ClassTag::UUASM: return "uuasm";
        case ClassTag::VHPASM: return "vhpasm";
        case ClassTag::UOSASM: return "uosasm";
    }
    return "?";
}

inline ClassTag parse_class(const std::string& s) {
    for (ClassTag t : {ClassTag::ASM, ClassTag::HTS, ClassTag::QTS, ClassTag::VS, ClassTag::VHS,
                       ClassTag::DS, ClassTag::DAS, ClassTag::TS, ClassTag::OS, ClassTag::OOS,
                       ClassTag::VOS, ClassTag::UASM, ClassTag::UUASM, ClassTag::VHPASM,
                       ClassTag::UOSASM})
        if (s == class_name(t)) return t;
    throw invalid_input("unknown class '" + s + "'");
}

inline bool is_square_class(ClassTag t) {
    switch (t) {
        case ClassTag::UASM:
        case ClassTag::UUASM:
        case ClassTag::VHPASM:
        case ClassTag::UOSASM: return false;
        default: return true;
    }
}

// Matrix shape for a class member of the given order.  U-turn variants live
// on their literal rectangular shapes: 2n x n for UASMs of order 2n,
// 2n x 2n for UUASMs of order 4n and VHPASMs of order 4n+2, 4n x 4n for
// UOSASMs of order 8n.
inline std::pair<int, int> class_shape(ClassTag t, int order) {
    switch (t) {
        case ClassTag::UASM:
            if (order < 2 || order % 2 != 0) throw invalid_input("UASM order must be even");
            return {order, order / 2};
        case ClassTag::UUASM:
            if (order < 4 || order % 4 != 0) throw invalid_input("UUASM order must be 4n");
            return {order / 2, order / 2};
        case ClassTag::VHPASM:
            if (order < 2 || order % 4 != 2) throw invalid_input("VHPASM order must be 4n+2");
            return {(order - 2) / 2, (order - 2) / 2};
        case ClassTag::UOSASM:
            if (order < 8 || order % 8 != 0) throw invalid_input("UOSASM order must be 8n");
            return {order / 2, order / 2};
        default:
            if (order < 1) throw invalid_input("order must be positive");
            return {order, order};
    }
}

// Orders at which the class is populated and within this artifact's scope.
// Returns an empty string when admissible, else the reason for rejection.
inline std::string admissibility_error(ClassTag t, int order) {
    if (order < 1) return "order must be positive";
    switch (t) {
        case ClassTag::ASM:
        case ClassTag::HTS:
        case ClassTag::DS:
        case ClassTag::DAS:
        case ClassTag::TS: return "";
        case ClassTag::QTS:
            return order % 4 == 0 ? "" : "QTSASM orders are multiples of 4 in scope";
        case ClassTag::VS:
            return order % 2 == 1 ? "" : "VSASMs exist only at odd orders";
        case ClassTag::VHS:
            return order % 2 == 1 ? "" : "VHSASMs exist only at odd orders";
        case ClassTag::OS:
            return order % 2 == 0 ? "" : "OSASMs exist only at even orders";
        case ClassTag::OOS:
            return order % 4 == 0 ? "" : "OOSASM orders are multiples of 4";
        case ClassTag::VOS: {
            int r = order % 8;
            if (r == 1 || r == 3) return "";
            if (r == 5 || r == 7) return "no VOSASMs of order 8n+5 or 8n+7";
            return "VOSASMs exist only at odd orders";
        }
        case ClassTag::UASM: return order % 2 == 0 && order >= 2 ? "" : "UASM orders are even";
        case ClassTag::UUASM: return order % 4 == 0 ? "" : "UUASM orders are multiples of 4";
        case ClassTag::VHPASM: return order % 4 == 2 ? "" : "VHPASM orders are 4n+2";
        case ClassTag::UOSASM: return order % 8 == 0 ? "" : "UOSASM orders are multiples of 8";
    }
    return "";
}

struct SignMatrix {
    int rows = 0, cols = 0;
    std::vector<int8_t> e;  // row-major, entries in {-1, 0, 1}

    SignMatrix() = default;
    SignMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

    int8_t& at(int i, int j) { return e[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
    int8_t at(int i, int j) const {
        return e[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)];
    }

    static SignMatrix from_rows(const std::vector<std::vector<int>>& rows_in) {
        if (rows_in.empty()) return SignMatrix();
        SignMatrix m(static_cast<int>(rows_in.size()), static_cast<int>(rows_in[0].size()));
        for (int i = 0; i < m.rows; ++i) {
            if (static_cast<int>(rows_in[static_cast<size_t>(i)].size()) != m.cols)
                throw invalid_input("SignMatrix: ragged rows");
            for (int j = 0; j < m.cols; ++j) {
                int v = rows_in[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (v < -1 || v > 1) throw invalid_input("SignMatrix: entry out of {-1,0,1}");
                m.at(i, j) = static_cast<int8_t>(v);
            }
        }
        return m;
    }

    friend bool operator==(const SignMatrix& a, const SignMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

namespace detail {

// Eight symmetries of the square acting on 0-based cells of an n x n grid.
enum class Sym { Id, Rot90, Rot180, Rot270, FlipV, FlipH, Transpose, AntiTranspose };

inline std::pair<int, int> apply_sym(Sym s, int i, int j, int n) {
    switch (s) {
        case Sym::Id: return {i, j};
        case Sym::Rot90: return {j, n - 1 - i};
        case Sym::Rot180: return {n - 1 - i, n - 1 - j};
        case Sym::Rot270: return {n - 1 - j, i};
        case Sym::FlipV: return {i, n - 1 - j};
        case Sym::FlipH: return {n - 1 - i, j};
        case Sym::Transpose: return {j, i};
        case Sym::AntiTranspose: return {n - 1 - j, n - 1 - i};
    }
    return {i, j};
}

inline std::vector<Sym> class_group(ClassTag t) {
    using S = Sym;
    switch (t) {
        case ClassTag::HTS: return {S::Id, S::Rot180};
        case ClassTag::QTS: return {S::Id, S::Rot90, S::Rot180, S::Rot270};
        case ClassTag::VS: return {S::Id, S::FlipV};
        case ClassTag::VHS: return {S::Id, S::FlipV, S::FlipH, S::Rot180};
        case ClassTag::DS:
        case ClassTag::OS: return {S::Id, S::Transpose};
        case ClassTag::DAS:
        case ClassTag::OOS: return {S::Id, S::Transpose, S::AntiTranspose, S::Rot180};
        case ClassTag::TS:
        case ClassTag::VOS:
            return {S::Id, S::Rot90, S::Rot180, S::Rot270, S::FlipV, S::FlipH, S::Transpose,
                    S::AntiTranspose};
        case ClassTag::UOSASM: return {S::Id, S::Transpose};
        default: return {S::Id};
    }
}

// Cells whose entry is pinned to zero by the class definition.
inline bool forced_zero(ClassTag t, int i, int j, int n) {
    switch (t) {
        case ClassTag::OS: return i == j;
        case ClassTag::OOS: return i == j || i + j == n - 1;
        case ClassTag::VOS: return i == j && 2 * i != n - 1;
        case ClassTag::UOSASM: return i == j;
        default: return false;
    }
}

// Cells whose entry is -1 in every member of the class (the "forced by
// symmetry" exclusions of the orbit statistic): the middle column of a
// VSASM and, for the doubly symmetric classes, the middle row as well.
inline bool forced_minus(ClassTag t, int i, int j, int n) {
    if (n % 2 == 0) return false;
    int mid = (n - 1) / 2;
    switch (t) {
        case ClassTag::VS: return j == mid && i % 2 == 1;
        case ClassTag::VHS:
        case ClassTag::VOS: return (j == mid && i % 2 == 1) || (i == mid && j % 2 == 1);
        default: return false;
    }
}

inline bool is_asv_prefix_ok(int sum) { return sum == 0 || sum == 1; }

// Alternating sign vector: entries in {-1,0,1}, prefix sums in {0,1},
// total 1.
inline bool is_asv(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) {
        s += x;
        if (!is_asv_prefix_ok(s)) return false;
    }
    return s == 1;
}

}  // namespace detail

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        ok = false;
        failures.push_back(what);
    }
};

// Checks the base alternating-sign conditions plus the class's symmetry and
// forced-zero constraints.  Failures are reported, not thrown.
inline ValidationReport validate(const SignMatrix& m, ClassTag tag) {
    ValidationReport rep;
    const int R = m.rows, C = m.cols;

    auto check_line = [&](bool row, int idx) {
        std::vector<int> v;
        if (row)
            for (int j = 0; j < C; ++j) v.push_back(m.at(idx, j));
        else
            for (int i = 0; i < R; ++i) v.push_back(m.at(i, idx));
        if (!detail::is_asv(v))
            rep.fail(std::string(row ? "row " : "column ") + std::to_string(idx + 1) +
                     " is not an alternating sign vector");
    };

    if (is_square_class(tag)) {
        if (R != C) {
            rep.fail("matrix is not square");
            return rep;
        }
        for (int i = 0; i < R; ++i) check_line(true, i);
        for (int j = 0; j < C; ++j) check_line(false, j);
        for (detail::Sym s : detail::class_group(tag)) {
            if (s == detail::Sym::Id) continue;
            for (int i = 0; i < R; ++i)
                for (int j = 0; j < C; ++j) {
                    auto [pi, pj] = detail::apply_sym(s, i, j, R);
                    if (m.at(i, j) != m.at(pi, pj)) {
                        rep.fail("symmetry constraint violated");
                        goto sym_done;
                    }
                }
        }
    sym_done:
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j)
                if (detail::forced_zero(tag, i, j, R) && m.at(i, j) != 0) {
                    rep.fail("forced zero cell (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") is nonzero");
                }
        return rep;
    }

    // U-turn variants: row pairs traverse row 2k-1 left to right then row 2k
    // right to left; that path must be an alternating sign vector.
    if (R % 2 != 0) {
        rep.fail("U-turn variant must have an even number of rows");
        return rep;
    }
    for (int k = 0; k < R / 2; ++k) {
        std::vector<int> path;
        for (int j = 0; j < C; ++j) path.push_back(m.at(2 * k, j));
        for (int j = C - 1; j >= 0; --j) path.push_back(m.at(2 * k + 1, j));
        if (!detail::is_asv(path))
            rep.fail("row pair " + std::to_string(k + 1) + " is not a U-turn alternating sign vector");
    }

    if (tag == ClassTag::UASM) {
        for (int j = 0; j < C; ++j) check_line(false, j);
    } else {
        // UU-type column pairs: down column 2k-1 then up column 2k.
        if (C % 2 != 0) {
            rep.fail("UU-turn variant must have an even number of columns");
            return rep;
        }
        for (int k = 0; k < C / 2; ++k) {
            std::vector<int> path;
            for (int i = 0; i < R; ++i) path.push_back(m.at(i, 2 * k));
            for (int i = R - 1; i >= 0; --i) path.push_back(m.at(i, 2 * k + 1));
            if (!detail::is_asv(path))
                rep.fail("column pair " + std::to_string(k + 1) +
                         " is not a U-turn alternating sign vector");
        }
    }

    if (tag == ClassTag::VHPASM) {
        for (int i = 0; i < R; i += 2) {
            int s = 0;
            for (int j = 0; j < C; ++j) s += m.at(i, j);
            if (s != 0) rep.fail("odd-indexed row sum is not 0");
        }
        for (int j = 0; j < C; j += 2) {
            int s = 0;
            for (int i = 0; i < R; ++i) s += m.at(i, j);
            if (s != 1) rep.fail("odd-indexed column sum is not 1");
        }
    }
    if (tag == ClassTag::UOSASM) {
        if (R != C) {
            rep.fail("UOSASM must be square");
            return rep;
        }
        for (int i = 0; i < R; ++i) {
            if (m.at(i, i) != 0) rep.fail("diagonal entry is nonzero");
            for (int j = i + 1; j < C; ++j)
                if (m.at(i, j) != m.at(j, i)) {
                    rep.fail("matrix is not symmetric");
                    i = R;
                    break;
                }
        }
    }
    return rep;
}

}  // namespace asmkit
