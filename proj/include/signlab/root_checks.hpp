#pragma once

// Hypothesis checks on a lattice involution relative to a parabolic:
// order two, permutation of Phi, nilradical swap, Levi stability, and the
// modulus-character identity that follows from the swap condition.

#include <set>
#include <string>
#include <vector>

#include "signlab/root_datum.hpp"

namespace signlab {

struct HypothesisReport {
    bool order_two = false;
    bool permutes_roots = false;
    bool swaps_nilradicals = false;
    bool levi_stable = false;

    bool pass() const { return order_two && permutes_roots && swaps_nilradicals && levi_stable; }
};

inline void require_same_rank(const RootDatum& d, const LatticeInvolution& t) {
    if (t.rank() != d.rank)
        throw shape_error("involution rank " + std::to_string(t.rank()) +
                          " does not match datum rank " + std::to_string(d.rank));
}

inline HypothesisReport check_involution(const RootDatum& d, const LatticeInvolution& t,
                                         const ParabolicDatum& p) {
    require_same_rank(d, t);
    HypothesisReport rep;
    rep.order_two = is_identity(mat_mul(t.matrix, t.matrix));

    const auto roots = d.all_roots();
    const std::set<IntVec> all(roots.begin(), roots.end());
    rep.permutes_roots = true;
    for (const auto& r : roots)
        if (!all.count(t.apply(r))) {
            rep.permutes_roots = false;
            break;
        }

    const std::set<IntVec> nil(p.nilradical_roots.begin(), p.nilradical_roots.end());
    const std::set<IntVec> opp(p.opposite_roots.begin(), p.opposite_roots.end());
    std::set<IntVec> image;
    for (const auto& r : p.nilradical_roots) image.insert(t.apply(r));
    rep.swaps_nilradicals = (image == opp);

    const std::set<IntVec> levi(p.levi_roots.begin(), p.levi_roots.end());
    std::set<IntVec> levi_image;
    for (const auto& r : p.levi_roots) levi_image.insert(t.apply(r));
    rep.levi_stable = (levi_image == levi);

    return rep;
}

// Sum of the roots in Lie(N); split case, so every root counts once.
inline RatVec modulus_character(const RootDatum& d, const ParabolicDatum& p) {
    RatVec sum(static_cast<std::size_t>(d.rank), Rational(0));
    for (const auto& r : p.nilradical_roots)
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r[i];
    return sum;
}

// Does theta carry the modulus of P to the modulus of the opposite
// parabolic? Holds whenever the nilradical-swap condition does; still
// evaluated unconditionally so failing fixtures can be inspected.
inline bool verify_modulus_identity(const RootDatum& d, const LatticeInvolution& t,
                                    const ParabolicDatum& p) {
    require_same_rank(d, t);
    const RatVec delta_p = modulus_character(d, p);
    const RatVec delta_opp = modulus_character(d, opposite(p));
    return t.apply(delta_p) == delta_opp;
}

}  // namespace signlab
