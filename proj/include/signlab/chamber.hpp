#pragma once

// The negative chamber attached to a parabolic: characters nu with
// <a^vee, nu> = 0 on Theta and < 0 on the rest of Delta. Membership is
// decided with exact rational comparisons; the certificate below checks the
// structural reason nu -> -theta(nu) preserves the chamber, then exercises
// it on deterministic exact samples.

#include <optional>
#include <string>
#include <vector>

#include "signlab/root_checks.hpp"

namespace signlab {

inline bool in_subspace_of_levi(const RootDatum& d, const ParabolicDatum& p, const RatVec& nu) {
    for (const std::size_t t : p.theta)
        if (d.pair(d.positive_coroots[d.simple[t]], nu) != 0) return false;
    return true;
}

inline bool chamber_contains(const RootDatum& d, const ParabolicDatum& p, const RatVec& nu) {
    check(nu.size() == static_cast<std::size_t>(d.rank), "chamber_contains: bad vector length");
    if (!in_subspace_of_levi(d, p, nu)) return false;
    std::set<std::size_t> th(p.theta.begin(), p.theta.end());
    for (std::size_t s = 0; s < d.simple.size(); ++s) {
        if (th.count(s)) continue;
        if (d.pair(d.positive_coroots[d.simple[s]], nu) >= 0) return false;
    }
    return true;
}

struct StructuralWitness {
    std::size_t alpha_position;    // position in Delta, outside Theta
    std::size_t witness_position;  // position in Delta \ Theta carrying the negative coefficient
    Rational coefficient;
    bool ok = false;
};

struct ChamberCertificate {
    std::vector<StructuralWitness> structural;
    bool structural_pass = false;
    std::size_t samples_tested = 0;
    std::vector<std::size_t> samples_skipped;  // indices of inputs outside the Levi subspace
    std::size_t sample_failures = 0;
    bool pass() const { return structural_pass && sample_failures == 0; }
};

// Part (i): for each alpha in Delta \ Theta, theta(alpha) expanded in the
// Delta basis must have a negative coefficient on some member of
// Delta \ Theta. Part (ii): every supplied chamber point nu must satisfy
// chamber_contains(-theta(nu)). Points off the Levi subspace are skipped
// and reported.
inline ChamberCertificate chamber_certificate(const RootDatum& d, const LatticeInvolution& t,
                                              const ParabolicDatum& p,
                                              const std::vector<RatVec>& samples) {
    require_same_rank(d, t);
    ChamberCertificate cert;
    std::set<std::size_t> th(p.theta.begin(), p.theta.end());

    cert.structural_pass = true;
    for (std::size_t s = 0; s < d.simple.size(); ++s) {
        if (th.count(s)) continue;
        StructuralWitness w;
        w.alpha_position = s;
        const IntVec image = t.apply(d.positive_roots[d.simple[s]]);
        const auto coeffs = d.expand_in_simple(image);
        if (coeffs) {
            for (std::size_t j = 0; j < coeffs->size(); ++j) {
                if (th.count(j)) continue;
                if ((*coeffs)[j] < 0) {
                    w.witness_position = j;
                    w.coefficient = (*coeffs)[j];
                    w.ok = true;
                    break;
                }
            }
        }
        if (!w.ok) cert.structural_pass = false;
        cert.structural.push_back(w);
    }

    for (std::size_t i = 0; i < samples.size(); ++i) {
        const RatVec& nu = samples[i];
        if (!in_subspace_of_levi(d, p, nu)) {
            cert.samples_skipped.push_back(i);
            continue;
        }
        if (!chamber_contains(d, p, nu)) {
            cert.samples_skipped.push_back(i);
            continue;
        }
        ++cert.samples_tested;
        RatVec image = t.apply(nu);
        for (auto& x : image) x = -x;
        if (!chamber_contains(d, p, image)) ++cert.sample_failures;
    }
    return cert;
}

// Deterministic exact chamber points: random rational coordinates on a
// kernel basis of the Theta pairing conditions, then a translation along an
// interior direction large enough to make every Delta \ Theta pairing
// strictly negative.
inline std::vector<RatVec> sample_chamber_points(const RootDatum& d, const ParabolicDatum& p,
                                                 std::size_t count, std::uint64_t seed) {
    const std::size_t rank = static_cast<std::size_t>(d.rank);
    std::set<std::size_t> th(p.theta.begin(), p.theta.end());

    RatMat theta_rows;
    for (const std::size_t t : p.theta) {
        const IntVec& cr = d.positive_coroots[d.simple[t]];
        theta_rows.emplace_back(cr.begin(), cr.end());
    }
    std::vector<RatVec> kernel;
    if (theta_rows.empty()) {
        for (std::size_t i = 0; i < rank; ++i) {
            RatVec e(rank, Rational(0));
            e[i] = 1;
            kernel.push_back(std::move(e));
        }
    } else {
        kernel = kernel_basis(theta_rows);
    }

    // Interior direction: pairing 0 on Theta coroots, -1 on the others.
    RatMat rows;
    RatVec rhs;
    for (std::size_t s = 0; s < d.simple.size(); ++s) {
        const IntVec& cr = d.positive_coroots[d.simple[s]];
        rows.emplace_back(cr.begin(), cr.end());
        rhs.push_back(th.count(s) ? Rational(0) : Rational(-1));
    }
    RatVec interior(rank, Rational(0));
    if (!rows.empty()) {
        auto w = solve_linear(rows, rhs);
        check(w.has_value(), "simple coroot system inconsistent");
        interior = *w;
    }

    SplitMix64 rng(seed);
    std::vector<RatVec> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        RatVec nu(rank, Rational(0));
        for (const auto& basis_vec : kernel) {
            const Rational c(rng.range(-24, 24), rng.range(1, 7));
            for (std::size_t i = 0; i < rank; ++i) nu[i] += c * basis_vec[i];
        }
        // Shift until all strict inequalities hold.
        Rational worst(0);
        for (std::size_t s = 0; s < d.simple.size(); ++s) {
            if (th.count(s)) continue;
            const Rational v = d.pair(d.positive_coroots[d.simple[s]], nu);
            if (v > worst) worst = v;
        }
        const Rational shift = worst + 1;
        for (std::size_t i = 0; i < rank; ++i) nu[i] += shift * interior[i];
        out.push_back(std::move(nu));
    }
    return out;
}

struct SiegelDatum {
    RootDatum datum;
    ParabolicDatum parabolic;
    LatticeInvolution involution;
};

// Type B_n with the Levi GL_n: Theta = {e_1-e_2, ..., e_{n-1}-e_n}, and the
// involution induced on the torus lattice is -identity. The hypothesis
// checks must all pass; this is asserted at construction.
inline SiegelDatum siegel_datum(int n) {
    if (n < 1) throw config_error("siegel datum needs rank >= 1, got " + std::to_string(n));
    SiegelDatum s{root_datum_type_b(n), {}, neg_identity(n)};
    s.involution.label = "siegel-int";
    std::vector<std::size_t> theta;
    for (int i = 0; i + 1 < n; ++i) theta.push_back(static_cast<std::size_t>(i));
    s.parabolic = make_parabolic(s.datum, theta);
    const auto rep = check_involution(s.datum, s.involution, s.parabolic);
    check(rep.pass(), "siegel datum failed its hypothesis checks");
    return s;
}

}  // namespace signlab
