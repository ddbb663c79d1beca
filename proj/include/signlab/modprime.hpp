#pragma once

// Arithmetic and polynomial tools over F_ell for the character-table
// engine: deterministic Miller-Rabin, Tonelli-Shanks, Hessenberg
// characteristic polynomials, and root extraction by squarefree reduction
// plus equal-degree splitting with a deterministic shift sequence.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "signlab/numeric.hpp"

namespace signlab {

struct PrimeField {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        check(a % p != 0, "inverse of zero mod p");
        return pow(a, p - 2);
    }
};

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic for all 64-bit inputs with this witness set.
inline bool miller_rabin(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Smallest prime ell == 1 (mod e) with ell > lower.
inline std::uint64_t find_split_prime(std::uint64_t e, std::uint64_t lower) {
    std::uint64_t k = lower / e + 1;
    for (;; ++k) {
        const std::uint64_t cand = k * e + 1;
        if (cand > lower && miller_rabin(cand)) return cand;
        check(k < (1ull << 40), "no split prime found");
    }
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

inline std::uint64_t primitive_root(std::uint64_t p) {
    const auto fs = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (const std::uint64_t f : fs)
            if (powmod_u64(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw consistency_error("no primitive root mod " + std::to_string(p));
}

// Square root mod an odd prime; nullopt-like sentinel p when not a residue.
inline std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (powmod_u64(a, (p - 1) / 2, p) != 1) return p;  // non-residue
    if (p % 4 == 3) return powmod_u64(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    std::uint64_t q = p - 1, s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t zq = 2;
    while (powmod_u64(zq, (p - 1) / 2, p) != p - 1) ++zq;
    std::uint64_t m = s;
    std::uint64_t c = powmod_u64(zq, q, p);
    std::uint64_t t = powmod_u64(a, q, p);
    std::uint64_t r = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod_u64(tt, tt, p);
            ++i;
        }
        const std::uint64_t b = powmod_u64(c, 1ull << (m - i - 1), p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return r;
}

// --- dense polynomials over F_ell, low degree first ---

using PolyMod = std::vector<std::uint64_t>;

inline void poly_trim(PolyMod& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PolyMod poly_mul(const PolyMod& a, const PolyMod& b, const PrimeField& F) {
    if (a.empty() || b.empty()) return {};
    PolyMod c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(c);
    return c;
}

inline PolyMod poly_mod(PolyMod a, const PolyMod& f, const PrimeField& F) {
    check(!f.empty(), "poly_mod by zero");
    const std::uint64_t lead_inv = F.inv(f.back());
    while (a.size() >= f.size()) {
        const std::uint64_t c = F.mul(a.back(), lead_inv);
        if (c != 0) {
            const std::size_t off = a.size() - f.size();
            for (std::size_t i = 0; i < f.size(); ++i)
                a[off + i] = F.sub(a[off + i], F.mul(c, f[i]));
        }
        a.pop_back();
        poly_trim(a);
        if (a.size() < f.size()) break;
    }
    poly_trim(a);
    return a;
}

inline PolyMod poly_gcd(PolyMod a, PolyMod b, const PrimeField& F) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        a = poly_mod(std::move(a), b, F);
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint64_t s = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, s);
    }
    return a;
}

inline PolyMod poly_powmod(PolyMod base, std::uint64_t e, const PolyMod& f, const PrimeField& F) {
    PolyMod r = {1};
    base = poly_mod(std::move(base), f, F);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, F), f, F);
        base = poly_mod(poly_mul(base, base, F), f, F);
        e >>= 1;
    }
    return r;
}

inline PolyMod poly_derivative(const PolyMod& a, const PrimeField& F) {
    if (a.size() <= 1) return {};
    PolyMod d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(a[i], i % F.p);
    poly_trim(d);
    return d;
}

// All roots in F_ell, without multiplicity, ascending. Standard reduction:
// strip the squarefree part, intersect with x^ell - x, then split linear
// factors with shifts a = 0,1,2,... (deterministic sequence for
// reproducibility; each shift separates residues from non-residues).
inline std::vector<std::uint64_t> poly_roots(const PolyMod& f0, const PrimeField& F) {
    PolyMod f = f0;
    poly_trim(f);
    std::vector<std::uint64_t> roots;
    if (f.size() <= 1) return roots;
    const PolyMod sq = poly_gcd(f, poly_derivative(f, F), F);
    if (sq.size() > 1) {
        // divide out the repeated part
        PolyMod q;  // f / sq by long division
        PolyMod rem = f;
        const std::uint64_t lead_inv = F.inv(sq.back());
        q.assign(f.size() - sq.size() + 1, 0);
        while (rem.size() >= sq.size()) {
            const std::uint64_t c = F.mul(rem.back(), lead_inv);
            const std::size_t off = rem.size() - sq.size();
            q[off] = c;
            for (std::size_t i = 0; i < sq.size(); ++i)
                rem[off + i] = F.sub(rem[off + i], F.mul(c, sq[i]));
            poly_trim(rem);
            if (rem.empty()) break;
        }
        f = std::move(q);
        poly_trim(f);
    }
    // keep only linear factors: gcd(f, x^ell - x)
    PolyMod xq = poly_powmod({0, 1}, F.p, f, F);  // x^ell mod f
    if (xq.size() < 2) xq.resize(2, 0);
    xq[1] = F.sub(xq[1], 1);  // x^ell - x
    poly_trim(xq);
    PolyMod lin = poly_gcd(f, xq, F);
    if (lin.size() <= 1) return roots;

    std::vector<PolyMod> stack = {lin};
    std::uint64_t shift = 0;
    while (!stack.empty()) {
        PolyMod g = std::move(stack.back());
        stack.pop_back();
        if (g.size() == 2) {  // x + c
            roots.push_back(F.mul(F.neg(g[0]), F.inv(g[1])));
            continue;
        }
        if (g.size() <= 1) continue;
        // split g by gcd with (x + a)^((ell-1)/2) - 1
        bool split_done = false;
        while (!split_done) {
            const std::uint64_t a = shift++;
            check(shift < F.p + 64, "root splitting did not terminate");
            PolyMod base = {a, 1};
            PolyMod s = poly_powmod(std::move(base), (F.p - 1) / 2, g, F);
            if (s.empty()) s = {0};
            s[0] = F.sub(s[0], 1);
            poly_trim(s);
            PolyMod d = poly_gcd(g, s, F);
            if (d.size() > 1 && d.size() < g.size()) {
                // complementary factor
                PolyMod rem = g, q;
                const std::uint64_t li = F.inv(d.back());
                q.assign(g.size() - d.size() + 1, 0);
                while (rem.size() >= d.size()) {
                    const std::uint64_t c = F.mul(rem.back(), li);
                    const std::size_t off = rem.size() - d.size();
                    q[off] = c;
                    for (std::size_t i = 0; i < d.size(); ++i)
                        rem[off + i] = F.sub(rem[off + i], F.mul(c, d[i]));
                    poly_trim(rem);
                    if (rem.empty()) break;
                }
                poly_trim(q);
                stack.push_back(std::move(d));
                stack.push_back(std::move(q));
                split_done = true;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// --- dense matrices over F_ell ---

using MatMod = std::vector<std::vector<std::uint64_t>>;

inline std::vector<std::uint64_t> mat_vec(const MatMod& m, const std::vector<std::uint64_t>& v,
                                          const PrimeField& F) {
    std::vector<std::uint64_t> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        unsigned __int128 acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            acc += static_cast<unsigned __int128>(m[i][j]) * v[j];
        out[i] = static_cast<std::uint64_t>(acc % F.p);
    }
    return out;
}

// Characteristic polynomial via Hessenberg reduction, monic, low degree
// first.
inline PolyMod charpoly(MatMod m, const PrimeField& F) {
    const std::size_t n = m.size();
    // reduce to upper Hessenberg by similarity
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            std::swap(m[piv], m[c + 1]);
            for (std::size_t r = 0; r < n; ++r) std::swap(m[r][piv], m[r][c + 1]);
        }
        const std::uint64_t inv = F.inv(m[c + 1][c]);
        for (std::size_t r = c + 2; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const std::uint64_t t = F.mul(m[r][c], inv);
            for (std::size_t j = 0; j < n; ++j) m[r][j] = F.sub(m[r][j], F.mul(t, m[c + 1][j]));
            for (std::size_t j = 0; j < n; ++j) m[j][c + 1] = F.add(m[j][c + 1], F.mul(t, m[j][r]));
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod subdiags) p_{i-1}
    std::vector<PolyMod> p(n + 1);
    p[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        PolyMod cur(p[k - 1].size() + 1, 0);
        for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
            cur[i + 1] = F.add(cur[i + 1], p[k - 1][i]);
            cur[i] = F.sub(cur[i], F.mul(m[k - 1][k - 1], p[k - 1][i]));
        }
        std::uint64_t beta = 1;
        for (std::size_t i = k - 1; i-- > 0;) {
            beta = F.mul(beta, m[i + 1][i]);
            if (beta == 0) break;
            const std::uint64_t coeff = F.mul(beta, m[i][k - 1]);
            if (coeff == 0) continue;
            for (std::size_t j = 0; j < p[i].size(); ++j)
                cur[j] = F.sub(cur[j], F.mul(coeff, p[i][j]));
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

// Basis of ker(m) as column vectors.
inline std::vector<std::vector<std::uint64_t>> kernel_mod(MatMod m, const PrimeField& F) {
    if (m.empty()) return {};
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        const std::uint64_t inv = F.inv(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const std::uint64_t t = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(t, m[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (const auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[freec] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = F.neg(m[i][freec]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace signlab
