#pragma once

// Exact root-datum combinatorics for split groups: the character lattice is
// Z^rank in epsilon-coordinates, roots and coroots are integer vectors, and
// the pairing <coroot, character> is the standard dot product. Types A
// (GL_n) and B (SO_{2n+1}) are provided; every root has multiplicity one.
//
// Coroot normalization for type B: long roots +-e_i +- e_j pair with
// e_i +- e_j, short roots e_i pair with 2 e_i, so <a^vee, a> = 2 holds with
// integer entries throughout.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "signlab/linalg.hpp"
#include "signlab/numeric.hpp"

namespace signlab {

struct RootDatum {
    int rank = 0;
    std::string family;                     // "A" or "B"
    std::vector<IntVec> positive_roots;     // Phi+
    std::vector<IntVec> positive_coroots;   // aligned with positive_roots
    std::vector<std::size_t> simple;        // indices into positive_roots, in order

    std::size_t positive_count() const { return positive_roots.size(); }

    // Full root list: positives first, then their negatives in the same order.
    std::vector<IntVec> all_roots() const {
        std::vector<IntVec> out = positive_roots;
        for (const auto& r : positive_roots) out.push_back(negate(r));
        return out;
    }

    std::vector<IntVec> all_coroots() const {
        std::vector<IntVec> out = positive_coroots;
        for (const auto& r : positive_coroots) out.push_back(negate(r));
        return out;
    }

    std::vector<IntVec> simple_roots() const {
        std::vector<IntVec> out;
        for (const std::size_t i : simple) out.push_back(positive_roots[i]);
        return out;
    }

    std::vector<IntVec> simple_coroots() const {
        std::vector<IntVec> out;
        for (const std::size_t i : simple) out.push_back(positive_coroots[i]);
        return out;
    }

    Rational pair(const IntVec& coroot, const RatVec& chi) const { return dot(coroot, chi); }

    // Coefficients of `root` in the simple basis (unique; Delta is
    // independent). nullopt when the vector is outside the span.
    std::optional<RatVec> expand_in_simple(const IntVec& root) const {
        const auto delta = simple_roots();
        RatMat a(static_cast<std::size_t>(rank), RatVec(delta.size()));
        for (std::size_t j = 0; j < delta.size(); ++j)
            for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i)
                a[i][j] = delta[j][i];
        RatVec b(root.begin(), root.end());
        auto x = solve_linear(a, b);
        if (!x) return std::nullopt;
        // Guard against an underdetermined solve silently mapping a vector
        // outside span(Delta): verify the expansion reproduces the input.
        RatVec back(static_cast<std::size_t>(rank), Rational(0));
        for (std::size_t j = 0; j < delta.size(); ++j)
            for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i)
                back[i] += (*x)[j] * Rational(delta[j][i]);
        for (std::size_t i = 0; i < back.size(); ++i)
            if (back[i] != Rational(root[i])) return std::nullopt;
        return x;
    }
};

namespace detail {

inline IntVec unit_vec(int rank, int i, std::int64_t v) {
    IntVec e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = v;
    return e;
}

inline IntVec two_entry(int rank, int i, std::int64_t vi, int j, std::int64_t vj) {
    IntVec e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = vi;
    e[static_cast<std::size_t>(j)] = vj;
    return e;
}

}  // namespace detail

// Structural invariants, checked by exhaustion: disjoint decomposition
// Phi = Phi+ u -Phi+, nonnegative integral simple expansions, <a^vee,a> = 2,
// and closure under every root reflection.
inline void validate_root_datum(const RootDatum& d) {
    check(d.rank > 0, "root datum with nonpositive rank");
    check(d.positive_roots.size() == d.positive_coroots.size(), "roots/coroots misaligned");
    std::set<IntVec> pos(d.positive_roots.begin(), d.positive_roots.end());
    check(pos.size() == d.positive_roots.size(), "duplicate positive root");
    std::set<IntVec> all;
    for (const auto& r : d.all_roots()) {
        check(r != IntVec(r.size(), 0), "zero vector listed as root");
        check(!all.count(r), "root listed twice");
        all.insert(r);
    }
    for (const auto& r : d.positive_roots) check(!pos.count(negate(r)), "Phi+ meets -Phi+");

    for (std::size_t i = 0; i < d.positive_roots.size(); ++i) {
        RatVec chi(d.positive_roots[i].begin(), d.positive_roots[i].end());
        check(d.pair(d.positive_coroots[i], chi) == 2, "<a^vee, a> != 2");
        auto coeffs = d.expand_in_simple(d.positive_roots[i]);
        check(coeffs.has_value(), "positive root outside span of Delta");
        for (const auto& c : *coeffs)
            check(is_integer(c) && c >= 0, "positive root not a nonneg integral Delta combination");
    }

    // s_a(x) = x - <a^vee, x> a must permute Phi, for every root a.
    const auto roots = d.all_roots();
    const auto coroots = d.all_coroots();
    for (std::size_t a = 0; a < roots.size(); ++a) {
        for (const auto& x : roots) {
            const std::int64_t c = dot(coroots[a], x);
            IntVec y(x);
            for (std::size_t t = 0; t < y.size(); ++t) y[t] -= c * roots[a][t];
            check(all.count(y) == 1, "reflection left the root system");
        }
    }
}

// GL_n on the lattice Z^n: roots e_i - e_j (i != j), coroots the same,
// Delta = {e_i - e_{i+1}}.
inline RootDatum root_datum_type_a(int n) {
    if (n < 2) throw config_error("type A rank must be >= 2, got " + std::to_string(n));
    RootDatum d;
    d.rank = n;
    d.family = "A";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            d.positive_roots.push_back(detail::two_entry(n, i, 1, j, -1));
            d.positive_coroots.push_back(detail::two_entry(n, i, 1, j, -1));
        }
    for (int i = 0; i + 1 < n; ++i) {
        const auto alpha = detail::two_entry(n, i, 1, i + 1, -1);
        const auto it = std::find(d.positive_roots.begin(), d.positive_roots.end(), alpha);
        d.simple.push_back(static_cast<std::size_t>(it - d.positive_roots.begin()));
    }
    return d;
}

// SO_{2n+1} on Z^n: roots +-e_i +- e_j and +-e_i, simple system
// {e_1 - e_2, ..., e_{n-1} - e_n, e_n}.
inline RootDatum root_datum_type_b(int n) {
    if (n < 1) throw config_error("type B rank must be >= 1, got " + std::to_string(n));
    RootDatum d;
    d.rank = n;
    d.family = "B";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            d.positive_roots.push_back(detail::two_entry(n, i, 1, j, -1));
            d.positive_coroots.push_back(detail::two_entry(n, i, 1, j, -1));
            d.positive_roots.push_back(detail::two_entry(n, i, 1, j, 1));
            d.positive_coroots.push_back(detail::two_entry(n, i, 1, j, 1));
        }
    for (int i = 0; i < n; ++i) {
        d.positive_roots.push_back(detail::unit_vec(n, i, 1));
        d.positive_coroots.push_back(detail::unit_vec(n, i, 2));
    }
    for (int i = 0; i + 1 < n; ++i) {
        const auto alpha = detail::two_entry(n, i, 1, i + 1, -1);
        const auto it = std::find(d.positive_roots.begin(), d.positive_roots.end(), alpha);
        d.simple.push_back(static_cast<std::size_t>(it - d.positive_roots.begin()));
    }
    const auto last = detail::unit_vec(n, n - 1, 1);
    const auto it = std::find(d.positive_roots.begin(), d.positive_roots.end(), last);
    d.simple.push_back(static_cast<std::size_t>(it - d.positive_roots.begin()));
    return d;
}

// Integer involution of the character lattice (chi -> matrix * chi).
// Construction validates shape only; order and root-permutation are what
// the hypothesis checker reports.
struct LatticeInvolution {
    IntMat matrix;
    std::string label;

    int rank() const { return static_cast<int>(matrix.size()); }

    IntVec apply(const IntVec& v) const { return signlab::apply(matrix, v); }
    RatVec apply(const RatVec& v) const { return signlab::apply(matrix, v); }
};

inline LatticeInvolution make_involution(IntMat m, std::string label) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw shape_error("involution matrix is not square");
    return LatticeInvolution{std::move(m), std::move(label)};
}

inline LatticeInvolution neg_identity(int rank) {
    IntMat m(static_cast<std::size_t>(rank), IntVec(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
    return LatticeInvolution{std::move(m), "neg-id"};
}

// Combinatorial parabolic: Theta a subset of Delta (given by positions in
// d.simple), with the derived three-way split of Phi.
struct ParabolicDatum {
    std::vector<std::size_t> theta;          // positions into d.simple, sorted
    std::vector<IntVec> levi_roots;          // Phi cap Z Theta
    std::vector<IntVec> nilradical_roots;    // Phi+ minus Z Theta
    std::vector<IntVec> opposite_roots;      // Phi- minus Z Theta
};

// Is `root` an integral combination of the Theta simple roots? Roots have a
// unique Delta expansion, so this is a support condition.
inline bool in_theta_span(const RootDatum& d, const std::vector<std::size_t>& theta,
                          const IntVec& root) {
    const auto coeffs = d.expand_in_simple(root);
    if (!coeffs) return false;
    std::set<std::size_t> th(theta.begin(), theta.end());
    for (std::size_t j = 0; j < coeffs->size(); ++j) {
        if ((*coeffs)[j] == 0) continue;
        if (!is_integer((*coeffs)[j])) return false;
        if (!th.count(j)) return false;
    }
    return true;
}

inline ParabolicDatum make_parabolic(const RootDatum& d, std::vector<std::size_t> theta) {
    std::sort(theta.begin(), theta.end());
    theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
    for (const std::size_t t : theta)
        if (t >= d.simple.size())
            throw config_error("theta position " + std::to_string(t) + " out of range");
    ParabolicDatum p;
    p.theta = theta;
    for (const auto& r : d.positive_roots) {
        if (in_theta_span(d, theta, r)) {
            p.levi_roots.push_back(r);
            p.levi_roots.push_back(negate(r));
        } else {
            p.nilradical_roots.push_back(r);
            p.opposite_roots.push_back(negate(r));
        }
    }
    return p;
}

inline ParabolicDatum opposite(const ParabolicDatum& p) {
    ParabolicDatum q = p;
    std::swap(q.nilradical_roots, q.opposite_roots);
    return q;
}

}  // namespace signlab
