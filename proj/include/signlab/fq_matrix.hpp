#pragma once

// Small square matrices over F_q (n <= 4). The canonical element key is the
// row-major digit string in base q, most significant digit first, so numeric
// order on keys is lexicographic order on entry tuples.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "signlab/fq.hpp"

namespace signlab {

struct FqMat {
    std::uint8_t n = 0;
    std::array<FqElem, 16> a{};  // row-major, entries beyond n*n are zero

    FqElem at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    void set(std::size_t i, std::size_t j, FqElem v) { a[i * n + j] = v; }

    friend bool operator==(const FqMat&, const FqMat&) = default;
};

inline FqMat fq_identity(std::uint8_t n) {
    FqMat m;
    m.n = n;
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

inline std::uint64_t encode(const FieldSpec& f, const FqMat& m) {
    std::uint64_t key = 0;
    const std::size_t k = static_cast<std::size_t>(m.n) * m.n;
    for (std::size_t i = 0; i < k; ++i) key = key * f.q() + m.a[i];
    return key;
}

inline FqMat decode(const FieldSpec& f, std::uint8_t n, std::uint64_t key) {
    FqMat m;
    m.n = n;
    const std::size_t k = static_cast<std::size_t>(n) * n;
    for (std::size_t i = k; i-- > 0;) {
        m.a[i] = static_cast<FqElem>(key % f.q());
        key /= f.q();
    }
    return m;
}

inline FqMat mul(const FieldSpec& f, const FqMat& x, const FqMat& y) {
    FqMat z;
    z.n = x.n;
    const std::size_t n = x.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FqElem s = 0;
            for (std::size_t t = 0; t < n; ++t) s = f.add(s, f.mul(x.at(i, t), y.at(t, j)));
            z.set(i, j, s);
        }
    return z;
}

inline FqMat transpose(const FqMat& m) {
    FqMat t;
    t.n = m.n;
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) t.set(j, i, m.at(i, j));
    return t;
}

inline FqElem det(const FieldSpec& f, FqMat m) {
    const std::size_t n = m.n;
    FqElem d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) {
                const FqElem t = m.at(c, j);
                m.set(c, j, m.at(piv, j));
                m.set(piv, j, t);
            }
            d = f.neg(d);
        }
        d = f.mul(d, m.at(c, c));
        const FqElem inv = f.inv(m.at(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m.at(r, c) == 0) continue;
            const FqElem factor = f.mul(m.at(r, c), inv);
            for (std::size_t j = c; j < n; ++j)
                m.set(r, j, f.sub(m.at(r, j), f.mul(factor, m.at(c, j))));
        }
    }
    return d;
}

inline std::optional<FqMat> inverse(const FieldSpec& f, FqMat m) {
    const std::size_t n = m.n;
    FqMat inv = fq_identity(m.n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.a[c * n + j], m.a[piv * n + j]);
                std::swap(inv.a[c * n + j], inv.a[piv * n + j]);
            }
        const FqElem s = f.inv(m.at(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            m.set(c, j, f.mul(m.at(c, j), s));
            inv.set(c, j, f.mul(inv.at(c, j), s));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m.at(r, c) == 0) continue;
            const FqElem factor = m.at(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m.set(r, j, f.sub(m.at(r, j), f.mul(factor, m.at(c, j))));
                inv.set(r, j, f.sub(inv.at(r, j), f.mul(factor, inv.at(c, j))));
            }
        }
    }
    return inv;
}

inline std::string to_string(const FqMat& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.n; ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < m.n; ++j) {
            if (j) s += " ";
            s += std::to_string(m.at(i, j));
        }
    }
    return s + "]";
}

}  // namespace signlab
