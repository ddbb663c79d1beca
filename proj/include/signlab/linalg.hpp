#pragma once

// Small dense exact linear algebra over Q, plus integer matrix helpers.
// Sizes here are root-system sized (rank <= ~10), so plain Gaussian
// elimination with rational pivots is entirely adequate.

#include <optional>
#include <vector>

#include "signlab/numeric.hpp"

namespace signlab {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;

inline Rational dot(const IntVec& a, const RatVec& b) {
    check(a.size() == b.size(), "dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

inline std::int64_t dot(const IntVec& a, const IntVec& b) {
    check(a.size() == b.size(), "dot: size mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec apply(const IntMat& m, const IntVec& v) {
    IntVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        check(m[i].size() == v.size(), "apply: shape mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

inline RatVec apply(const IntMat& m, const RatVec& v) {
    RatVec out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        check(m[i].size() == v.size(), "apply: shape mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += Rational(m[i][j]) * v[j];
    }
    return out;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat out(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        check(a[i].size() == k, "mat_mul: shape mismatch");
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
    return out;
}

inline IntMat identity_mat(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline bool is_identity(const IntMat& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    }
    return true;
}

inline IntMat transpose(const IntMat& m) {
    if (m.empty()) return {};
    IntMat out(m[0].size(), IntVec(m.size(), 0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

inline IntVec negate(const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

// Row-reduce in place; returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// A particular solution of A x = b with free variables set to zero,
// or nullopt when the system is inconsistent.
inline std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
    check(a.size() == b.size(), "solve_linear: row mismatch");
    if (a.empty()) return RatVec{};
    const std::size_t cols = a[0].size();
    RatMat aug(a.size(), RatVec(cols + 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        check(a[i].size() == cols, "solve_linear: ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    const auto pivots = rref(aug);
    for (const std::size_t p : pivots)
        if (p == cols) return std::nullopt;  // pivot in the rhs column
    RatVec x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

// Basis of the nullspace of A.
inline std::vector<RatVec> kernel_basis(const RatMat& a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    RatMat m = a;
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (const std::size_t p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        RatVec v(cols, Rational(0));
        v[freec] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][freec];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace signlab
