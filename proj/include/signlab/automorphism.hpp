#pragma once

// Automorphisms of an enumerated group stored as index permutations, and
// the generalized index [K : K^m] on tagged subgroups.

#include <set>
#include <string>
#include <vector>

#include "signlab/matrix_group.hpp"

namespace signlab {

struct Automorphism {
    const MatrixGroup* group = nullptr;
    std::vector<std::uint32_t> perm;          // g -> phi(g), by element index
    std::vector<std::uint32_t> class_action;  // induced permutation of classes
    std::string label;

    std::uint32_t operator()(std::uint32_t i) const { return perm[i]; }

    bool is_involution() const {
        for (std::uint32_t i = 0; i < perm.size(); ++i)
            if (perm[perm[i]] != i) return false;
        return true;
    }

    bool is_identity_map() const {
        for (std::uint32_t i = 0; i < perm.size(); ++i)
            if (perm[i] != i) return false;
        return true;
    }
};

namespace detail {

inline Automorphism finish_automorphism(const MatrixGroup& g, std::vector<std::uint32_t> perm,
                                        std::string label) {
    Automorphism a{&g, std::move(perm), {}, std::move(label)};
    check(a.perm.size() == g.size(), "automorphism permutation has wrong length");
    std::vector<bool> seen(g.size(), false);
    for (const std::uint32_t v : a.perm) {
        check(v < g.size() && !seen[v], "automorphism is not a bijection");
        seen[v] = true;
    }
    check(a.perm[g.identity()] == g.identity(), "automorphism moves the identity");
    // Multiplicativity on the generators against everything; the full pair
    // check lives in the test suite.
    for (const std::uint32_t s : g.generators())
        for (std::uint32_t i = 0; i < g.size(); ++i)
            check(a.perm[g.mul(s, i)] == g.mul(a.perm[s], a.perm[i]),
                  "map is not multiplicative: " + a.label);
    a.class_action.resize(g.class_count());
    for (std::uint32_t c = 0; c < g.class_count(); ++c)
        a.class_action[c] = g.class_of(a.perm[g.cls(c).rep]);
    return a;
}

}  // namespace detail

inline Automorphism identity_automorphism(const MatrixGroup& g) {
    std::vector<std::uint32_t> perm(g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i) perm[i] = i;
    return detail::finish_automorphism(g, std::move(perm), "identity");
}

// g -> transpose(g)^-1. Throws closure_error when the image leaves the
// element set (e.g. on a Borel subgroup).
inline Automorphism transpose_inverse(const MatrixGroup& g) {
    std::vector<std::uint32_t> perm(g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        const auto ti = inverse(g.field(), transpose(g.elem(i)));
        check(ti.has_value(), "group element without inverse");
        perm[i] = g.require_index(*ti, "transpose-inverse image");
    }
    return detail::finish_automorphism(g, std::move(perm), "transpose-inverse");
}

inline Automorphism inner(const MatrixGroup& g, std::uint32_t h) {
    if (h >= g.size()) throw precondition_error("inner: element index out of range");
    std::vector<std::uint32_t> perm(g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i) perm[i] = g.conjugate(h, i);
    return detail::finish_automorphism(g, std::move(perm), "inner:" + to_string(g.elem(h)));
}

inline Automorphism inner(const MatrixGroup& g, const FqMat& h) {
    return inner(g, g.require_index(h, "inner automorphism element"));
}

// compose(phi, psi) = phi after psi, matching the usual notation
// (phi o psi)(g) = phi(psi(g)).
inline Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
    check(phi.group == psi.group, "composing automorphisms of different groups");
    std::vector<std::uint32_t> perm(phi.perm.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = phi.perm[psi.perm[i]];
    return detail::finish_automorphism(*phi.group, std::move(perm),
                                       phi.label + " o " + psi.label);
}

// Restriction to a tagged subgroup, as an automorphism of that subgroup's
// own enumeration. Requires the subgroup to be stable.
inline Automorphism restrict_automorphism(const Automorphism& phi, const MatrixGroup& parent,
                                          const MatrixGroup& sub) {
    std::vector<std::uint32_t> perm(sub.size());
    for (std::uint32_t i = 0; i < sub.size(); ++i) {
        const std::uint32_t pi = parent.require_index(sub.elem(i), "subgroup element");
        const FqMat image = parent.elem(phi.perm[pi]);
        const auto si = sub.index_of(image);
        if (!si)
            throw precondition_error("automorphism does not stabilize subgroup " + sub.name());
        perm[i] = *si;
    }
    return detail::finish_automorphism(sub, std::move(perm), phi.label + "|" + sub.name());
}

// Exhaustive multiplicativity for small groups, seeded random pairs above
// the threshold.
inline bool verify_multiplicative(const MatrixGroup& g, const Automorphism& a,
                                  std::uint32_t exhaustive_limit = 5000,
                                  std::size_t random_pairs = 100000,
                                  std::uint64_t seed = 2024) {
    if (g.size() <= exhaustive_limit) {
        for (std::uint32_t i = 0; i < g.size(); ++i)
            for (std::uint32_t j = 0; j < g.size(); ++j)
                if (a.perm[g.mul(i, j)] != g.mul(a.perm[i], a.perm[j])) return false;
        return true;
    }
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < random_pairs; ++t) {
        const auto i = static_cast<std::uint32_t>(rng.below(g.size()));
        const auto j = static_cast<std::uint32_t>(rng.below(g.size()));
        if (a.perm[g.mul(i, j)] != g.mul(a.perm[i], a.perm[j])) return false;
    }
    return true;
}

// [K : K^m] in the generalized sense, for K the unipotent radical of the
// tagged parabolic and m in its Levi. Over a finite field the two index
// factors agree, so the exact ratio is 1; the machinery computes it anyway.
inline Rational parabolic_index_ratio(const MatrixGroup& g, const ParabolicTags& tags,
                                      std::uint32_t m) {
    if (std::find(tags.levi.begin(), tags.levi.end(), m) == tags.levi.end())
        throw precondition_error("element is not in the tagged Levi");
    const std::uint32_t mi = g.inv(m);
    std::set<std::uint32_t> k(tags.nilradical.begin(), tags.nilradical.end());
    std::set<std::uint32_t> km;
    for (const std::uint32_t u : tags.nilradical) km.insert(g.mul(g.mul(mi, u), m));
    std::size_t inter = 0;
    for (const std::uint32_t u : km) inter += k.count(u);
    check(inter > 0, "K and K^m do not even share the identity");
    const Rational lhs(static_cast<long long>(k.size()), static_cast<long long>(inter));
    const Rational rhs(static_cast<long long>(km.size()), static_cast<long long>(inter));
    return lhs / rhs;
}

}  // namespace signlab
