#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "signlab/chamber.hpp"
#include "signlab/root_checks.hpp"
#include "signlab/root_datum.hpp"

using namespace signlab;

namespace {

LatticeInvolution gl2_swap_neg() {
    // e1 -> -e2, e2 -> -e1: order two, permutes roots, fixes e1 - e2.
    return make_involution({{0, -1}, {-1, 0}}, "swap-neg");
}

LatticeInvolution gl3_transposition() {
    // Swap e1 and e2, fix e3: a root-system automorphism that is not -w0.
    return make_involution({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, "swap12");
}

}  // namespace

TEST_CASE("type A data") {
    const auto d2 = root_datum_type_a(2);
    REQUIRE(d2.rank == 2);
    REQUIRE(d2.all_roots().size() == 2);
    REQUIRE(d2.positive_roots == std::vector<IntVec>{{1, -1}});
    REQUIRE(d2.simple.size() == 1);
    validate_root_datum(d2);

    const auto d3 = root_datum_type_a(3);
    REQUIRE(d3.positive_count() == 3);
    REQUIRE(d3.all_roots().size() == 6);
    validate_root_datum(d3);

    // Every positive root of GL4 is a 0/1 combination of Delta.
    const auto d4 = root_datum_type_a(4);
    validate_root_datum(d4);
    for (const auto& r : d4.positive_roots) {
        const auto c = d4.expand_in_simple(r);
        REQUIRE(c.has_value());
        for (const auto& x : *c) REQUIRE((x == 0 || x == 1));
    }

    REQUIRE_THROWS_AS(root_datum_type_a(1), config_error);
}

TEST_CASE("type B data") {
    const auto b2 = root_datum_type_b(2);
    REQUIRE(b2.all_roots().size() == 8);
    REQUIRE(b2.simple.size() == 2);
    REQUIRE(b2.positive_roots[b2.simple[0]] == IntVec{1, -1});
    REQUIRE(b2.positive_roots[b2.simple[1]] == IntVec{0, 1});
    validate_root_datum(b2);

    const auto b1 = root_datum_type_b(1);
    REQUIRE(b1.all_roots() == std::vector<IntVec>{{1}, {-1}});
    validate_root_datum(b1);

    // Short coroot pairing in B3: <(e2)^vee, e1 - e2> = -2.
    const auto b3 = root_datum_type_b(3);
    validate_root_datum(b3);
    const IntVec e2_coroot{0, 2, 0};
    REQUIRE(b3.pair(e2_coroot, RatVec{1, -1, 0}) == -2);

    REQUIRE_THROWS_AS(root_datum_type_b(0), config_error);
}

TEST_CASE("parabolic partition of the root system") {
    for (const auto& d : {root_datum_type_a(3), root_datum_type_a(4), root_datum_type_b(2),
                          root_datum_type_b(3)}) {
        const std::size_t k = d.simple.size();
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<std::size_t> theta;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) theta.push_back(i);
            const auto p = make_parabolic(d, theta);
            std::set<IntVec> pieces;
            for (const auto& r : p.levi_roots) REQUIRE(pieces.insert(r).second);
            for (const auto& r : p.nilradical_roots) REQUIRE(pieces.insert(r).second);
            for (const auto& r : p.opposite_roots) REQUIRE(pieces.insert(r).second);
            const auto all = d.all_roots();
            REQUIRE(pieces == std::set<IntVec>(all.begin(), all.end()));
            // Levi part closed under negation.
            for (const auto& r : p.levi_roots)
                REQUIRE(std::count(p.levi_roots.begin(), p.levi_roots.end(), negate(r)) == 1);
        }
    }
}

TEST_CASE("hypothesis checks: neg-identity passes for every theta") {
    for (int n : {2, 3, 4}) {
        const auto d = root_datum_type_a(n);
        const auto t = neg_identity(n);
        const std::size_t k = d.simple.size();
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<std::size_t> theta;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) theta.push_back(i);
            const auto p = make_parabolic(d, theta);
            const auto rep = check_involution(d, t, p);
            REQUIRE(rep.pass());
            REQUIRE(verify_modulus_identity(d, t, p));
        }
    }
}

TEST_CASE("hypothesis checks: failing fixtures fail condition (c) only") {
    const auto d = root_datum_type_a(2);
    const auto t = gl2_swap_neg();
    const auto p = make_parabolic(d, {});
    const auto rep = check_involution(d, t, p);
    REQUIRE(rep.order_two);
    REQUIRE(rep.permutes_roots);
    REQUIRE_FALSE(rep.swaps_nilradicals);
    REQUIRE(rep.levi_stable);  // vacuous for empty theta
    REQUIRE_FALSE(verify_modulus_identity(d, t, p));

    const auto d3 = root_datum_type_a(3);
    const auto t3 = gl3_transposition();
    const auto p3 = make_parabolic(d3, {});
    const auto rep3 = check_involution(d3, t3, p3);
    REQUIRE(rep3.order_two);
    REQUIRE(rep3.permutes_roots);
    REQUIRE_FALSE(rep3.swaps_nilradicals);
}

TEST_CASE("condition (c) implies Levi stability, by exhaustion over involutions") {
    // All signed permutation matrices of rank 3 of order <= 2, against all theta.
    const auto d = root_datum_type_a(3);
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& perm : perms) {
        for (int signs = 0; signs < 8; ++signs) {
            IntMat m(3, IntVec(3, 0));
            for (int i = 0; i < 3; ++i)
                m[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(i)] =
                    (signs >> i) & 1 ? -1 : 1;
            const auto t = make_involution(m, "enum");
            for (std::uint32_t mask = 0; mask < 4; ++mask) {
                std::vector<std::size_t> theta;
                for (std::size_t i = 0; i < 2; ++i)
                    if (mask & (1u << i)) theta.push_back(i);
                const auto p = make_parabolic(d, theta);
                const auto rep = check_involution(d, t, p);
                // The implication needs the full hypothesis set (a),(b),(c):
                // a sign pattern can swap the nilradicals without even
                // stabilizing Phi.
                if (rep.order_two && rep.permutes_roots && rep.swaps_nilradicals) {
                    REQUIRE(rep.levi_stable);
                    REQUIRE(verify_modulus_identity(d, t, p));
                }
            }
        }
    }
}

TEST_CASE("modulus character values") {
    const auto d2 = root_datum_type_a(2);
    REQUIRE(modulus_character(d2, make_parabolic(d2, {})) == RatVec{1, -1});

    const auto d3 = root_datum_type_a(3);
    REQUIRE(modulus_character(d3, make_parabolic(d3, {0})) == RatVec{1, 1, -2});

    // Modulus of P plus modulus of the opposite is zero.
    for (const auto& d : {root_datum_type_a(4), root_datum_type_b(3)}) {
        for (std::uint32_t mask = 0; mask < (1u << d.simple.size()); ++mask) {
            std::vector<std::size_t> theta;
            for (std::size_t i = 0; i < d.simple.size(); ++i)
                if (mask & (1u << i)) theta.push_back(i);
            const auto p = make_parabolic(d, theta);
            const auto a = modulus_character(d, p);
            const auto b = modulus_character(d, opposite(p));
            for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i] + b[i] == 0);
        }
    }
}

TEST_CASE("chamber membership") {
    const auto d = root_datum_type_a(3);
    const auto p = make_parabolic(d, {0});
    REQUIRE(chamber_contains(d, p, RatVec{1, 1, 2}));
    REQUIRE_FALSE(chamber_contains(d, p, RatVec{1, 0, 0}));
    REQUIRE_FALSE(chamber_contains(d, p, RatVec{0, 0, 0}));

    // Invariance under positive rational scaling.
    SplitMix64 rng(7);
    const auto pts = sample_chamber_points(d, p, 32, 11);
    for (const auto& nu : pts) {
        REQUIRE(chamber_contains(d, p, nu));
        const Rational scale(rng.range(1, 50), rng.range(1, 9));
        RatVec scaled = nu;
        for (auto& x : scaled) x *= scale;
        REQUIRE(chamber_contains(d, p, scaled));
    }
}

TEST_CASE("chamber certificate: structural witnesses and samples") {
    const auto d = root_datum_type_a(3);
    const auto t = neg_identity(3);
    const auto p = make_parabolic(d, {0});
    const auto samples = sample_chamber_points(d, p, 100, 5);
    const auto cert = chamber_certificate(d, t, p, samples);
    REQUIRE(cert.structural_pass);
    REQUIRE(cert.pass());
    REQUIRE(cert.samples_tested == 100);
    // alpha2 = e2 - e3 maps to -alpha2: coefficient -1 on itself.
    REQUIRE(cert.structural.size() == 1);
    REQUIRE(cert.structural[0].alpha_position == 1);
    REQUIRE(cert.structural[0].witness_position == 1);
    REQUIRE(cert.structural[0].coefficient == -1);
}

TEST_CASE("chamber certificate skips samples off the Levi subspace") {
    const auto d = root_datum_type_a(3);
    const auto t = neg_identity(3);
    const auto p = make_parabolic(d, {0});
    std::vector<RatVec> samples = {RatVec{1, 0, 0}, RatVec{1, 1, 2}};
    const auto cert = chamber_certificate(d, t, p, samples);
    REQUIRE(cert.samples_skipped == std::vector<std::size_t>{0});
    REQUIRE(cert.samples_tested == 1);
    REQUIRE(cert.sample_failures == 0);
}

TEST_CASE("siegel datum") {
    const auto s1 = siegel_datum(1);
    REQUIRE(s1.parabolic.theta.empty());
    REQUIRE(s1.datum.all_roots().size() == 2);

    const auto s2 = siegel_datum(2);
    const std::set<IntVec> nil(s2.parabolic.nilradical_roots.begin(),
                               s2.parabolic.nilradical_roots.end());
    REQUIRE(nil == std::set<IntVec>{{1, 1}, {1, 0}, {0, 1}});

    for (int n : {1, 2, 3, 4}) {
        const auto s = siegel_datum(n);  // constructor asserts the hypothesis report
        const auto rep = check_involution(s.datum, s.involution, s.parabolic);
        REQUIRE(rep.pass());
        REQUIRE(verify_modulus_identity(s.datum, s.involution, s.parabolic));
        // Levi root set {+-(e_i - e_j)} is stable under the involution.
        for (const auto& r : s.parabolic.levi_roots) {
            const auto img = s.involution.apply(r);
            REQUIRE(std::count(s.parabolic.levi_roots.begin(), s.parabolic.levi_roots.end(),
                               img) == 1);
        }
    }

    // B2 fixture: nu = (-1,-1) lies in the chamber and is fixed by nu -> -theta(nu).
    const auto s = siegel_datum(2);
    const RatVec nu{-1, -1};
    REQUIRE(chamber_contains(s.datum, s.parabolic, nu));
    RatVec img = s.involution.apply(nu);
    for (auto& x : img) x = -x;
    REQUIRE(img == nu);

    REQUIRE_THROWS_AS(siegel_datum(0), config_error);
}

TEST_CASE("pairing is invariant under the involution") {
    for (int n : {2, 3}) {
        const auto d = root_datum_type_b(n);
        const auto t = neg_identity(n);
        const auto tt = transpose(t.matrix);
        SplitMix64 rng(23);
        const auto coroots = d.all_coroots();
        for (int trial = 0; trial < 200; ++trial) {
            const auto& x = coroots[rng.below(coroots.size())];
            RatVec nu(static_cast<std::size_t>(n));
            for (auto& c : nu) c = Rational(rng.range(-9, 9), rng.range(1, 5));
            const auto tx = signlab::apply(tt, x);
            const auto tnu = t.apply(nu);
            REQUIRE(dot(tx, tnu) == dot(x, nu));
        }
    }
}

TEST_CASE("shape errors") {
    const auto d = root_datum_type_a(3);
    const auto t = neg_identity(2);
    const auto p = make_parabolic(d, {});
    REQUIRE_THROWS_AS(check_involution(d, t, p), shape_error);
    REQUIRE_THROWS_AS(make_parabolic(d, {5}), config_error);
    REQUIRE_THROWS_AS(make_involution({{1, 0}}, "ragged"), shape_error);
}

TEST_CASE("1000 exact samples map into the chamber under nu -> -theta(nu)") {
    struct Fixture {
        RootDatum d;
        LatticeInvolution t;
        ParabolicDatum p;
    };
    std::vector<Fixture> fixtures;
    for (int n : {2, 3, 4}) {
        const auto d = root_datum_type_a(n);
        fixtures.push_back({d, neg_identity(n), make_parabolic(d, {})});
        fixtures.push_back({d, neg_identity(n), make_parabolic(d, {0})});
    }
    for (int n : {1, 2, 3, 4}) {
        auto s = siegel_datum(n);
        fixtures.push_back({s.datum, s.involution, s.parabolic});
    }
    std::uint64_t seed = 1000;
    for (const auto& f : fixtures) {
        const auto samples = sample_chamber_points(f.d, f.p, 1000, seed++);
        const auto cert = chamber_certificate(f.d, f.t, f.p, samples);
        REQUIRE(cert.structural_pass);
        REQUIRE(cert.samples_tested == 1000);
        REQUIRE(cert.sample_failures == 0);
    }
}
