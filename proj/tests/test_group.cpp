#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "signlab/automorphism.hpp"
#include "signlab/matrix_group.hpp"

using namespace signlab;

TEST_CASE("group orders match the closed formula") {
    REQUIRE(build_gl(2, 2).size() == 6);
    REQUIRE(build_gl(2, 3).size() == 48);
    REQUIRE(build_gl(3, 2).size() == 168);
    REQUIRE(build_sl(2, 3).size() == 24);
    REQUIRE(build_gl(2, 4).size() == 180);
    REQUIRE(build_sl(2, 2).size() == 6);
}

TEST_CASE("cap errors report the computed order") {
    try {
        build_gl(4, 3);
        FAIL("expected cap_error");
    } catch (const cap_error& e) {
        REQUIRE(std::string(e.what()).find("24261120") != std::string::npos);
    }
}

TEST_CASE("conjugacy class counts") {
    REQUIRE(build_gl(2, 2).class_count() == 3);   // isomorphic to S3
    REQUIRE(build_gl(2, 3).class_count() == 8);   // q^2 - 1
    REQUIRE(build_gl(3, 2).class_count() == 6);   // q^3 - q
    REQUIRE(build_sl(2, 3).class_count() == 7);
    REQUIRE(trivial_group().class_count() == 1);
}

TEST_CASE("class partition invariants") {
    for (const auto& g : {build_gl(2, 5), build_gl(3, 2), build_sl(2, 3)}) {
        std::uint64_t total = 0;
        std::set<std::uint32_t> seen;
        for (std::size_t c = 0; c < g.class_count(); ++c) {
            const auto& cc = g.cls(c);
            total += cc.size;
            REQUIRE(g.size() % cc.size == 0);
            REQUIRE(cc.rep == cc.members.front());
            for (const auto m : cc.members) REQUIRE(seen.insert(m).second);
            // members actually conjugate to the rep: spot-check closure of
            // class under conjugation by the generators
            for (const auto m : cc.members)
                for (const auto s : g.generators())
                    REQUIRE(g.class_of(g.conjugate(s, m)) == c);
        }
        REQUIRE(total == g.size());
        REQUIRE(g.cls(0).rep == g.identity());
        // class ordering: size ascending, minimal member as tiebreak
        for (std::size_t c = 1; c < g.class_count(); ++c) {
            const auto &a = g.cls(c - 1), &b = g.cls(c);
            REQUIRE((a.size < b.size || (a.size == b.size && a.rep < b.rep)));
        }
    }
}

TEST_CASE("parabolic tags decompose as Levi times nilradical") {
    for (const auto& g : {build_gl(2, 3), build_gl(3, 2), build_gl(3, 3)}) {
        const int n = g.n();
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            const auto tags = parabolic_tags(g, mask);
            REQUIRE(tags.parabolic.size() == tags.levi.size() * tags.nilradical.size());
            REQUIRE(tags.nilradical.size() == tags.opposite_nilradical.size());
            // M and N meet only in the identity.
            std::set<std::uint32_t> levi(tags.levi.begin(), tags.levi.end());
            std::size_t common = 0;
            for (const auto u : tags.nilradical) common += levi.count(u);
            REQUIRE(common == 1);
            // N is normal in P.
            std::set<std::uint32_t> nil(tags.nilradical.begin(), tags.nilradical.end());
            std::set<std::uint32_t> par(tags.parabolic.begin(), tags.parabolic.end());
            for (const auto p : tags.parabolic)
                for (const auto u : tags.nilradical) {
                    const auto c = g.conjugate(p, u);
                    REQUIRE(nil.count(c) == 1);
                    REQUIRE(par.count(c) == 1);
                }
            // unique factorization p = m u, checked by exhaustion
            std::set<std::uint32_t> products;
            for (const auto m : tags.levi)
                for (const auto u : tags.nilradical) REQUIRE(products.insert(g.mul(m, u)).second);
            REQUIRE(products == par);
        }
    }
}

TEST_CASE("transpose-inverse is an involutive automorphism") {
    const auto g = build_gl(2, 3);
    const auto theta = transpose_inverse(g);
    REQUIRE(theta.is_involution());
    REQUIRE(verify_multiplicative(g, theta));

    // diag(a,b) -> diag(a^-1, b^-1)
    FqMat d;
    d.n = 2;
    d.set(0, 0, 2);
    d.set(1, 1, 1);
    const auto i = g.require_index(d, "diag");
    FqMat di;
    di.n = 2;
    di.set(0, 0, g.field().inv(2));
    di.set(1, 1, 1);
    REQUIRE(theta(i) == g.require_index(di, "diag inverse"));

    const auto g2 = build_gl(2, 2);
    REQUIRE(transpose_inverse(g2).is_involution());
    REQUIRE_FALSE(transpose_inverse(g2).is_identity_map());
}

TEST_CASE("transpose-inverse fails on a Borel by closure") {
    const auto g = build_gl(2, 3);
    const auto tags = parabolic_tags(g, 0);
    const auto borel = build_subgroup(g, tags.parabolic, "borel(2,3)");
    REQUIRE(borel.size() == 12);
    REQUIRE_THROWS_AS(transpose_inverse(borel), closure_error);
}

TEST_CASE("transpose-inverse swaps the nilradical tags") {
    for (const auto& g : {build_gl(2, 3), build_gl(3, 2)}) {
        const auto theta = transpose_inverse(g);
        for (std::uint32_t mask = 0; mask < (1u << (g.n() - 1)); ++mask) {
            const auto tags = parabolic_tags(g, mask);
            std::set<std::uint32_t> opp(tags.opposite_nilradical.begin(),
                                        tags.opposite_nilradical.end());
            std::set<std::uint32_t> image;
            for (const auto u : tags.nilradical) image.insert(theta(u));
            REQUIRE(image == opp);
        }
    }
}

TEST_CASE("inner and composed automorphisms") {
    const auto g = build_gl(2, 3);
    const auto theta = transpose_inverse(g);

    REQUIRE(inner(g, g.identity()).is_identity_map());

    SplitMix64 rng(99);
    for (int t = 0; t < 10; ++t) {
        const auto h = static_cast<std::uint32_t>(rng.below(g.size()));
        const auto k = static_cast<std::uint32_t>(rng.below(g.size()));
        // Int(h) o Int(k) = Int(hk)
        const auto lhs = compose(inner(g, h), inner(g, k));
        const auto rhs = inner(g, g.mul(h, k));
        REQUIRE(lhs.perm == rhs.perm);
    }

    // compose(Int(h), theta) is an involution iff h theta(h) is central.
    std::size_t involutive = 0, non_involutive = 0;
    for (std::uint32_t h = 0; h < g.size(); ++h) {
        const auto composed = compose(inner(g, h), theta);
        const bool central = g.is_central(g.mul(h, theta(h)));
        REQUIRE(composed.is_involution() == central);
        (central ? involutive : non_involutive) += 1;
    }
    REQUIRE(involutive > 0);
    REQUIRE(non_involutive > 0);

    REQUIRE_THROWS_AS(inner(g, fq_identity(3)), closure_error);
}

TEST_CASE("automorphism multiplicativity, random pairs on a bigger group") {
    const auto g = build_gl(2, 7);  // order 2016
    const auto theta = transpose_inverse(g);
    REQUIRE(verify_multiplicative(g, theta, /*exhaustive_limit=*/100, /*random_pairs=*/100000));
}

TEST_CASE("center and torus tags") {
    const auto g = build_gl(2, 3);
    REQUIRE(g.center().size() == 2);   // scalars
    REQUIRE(g.torus().size() == 4);    // (q-1)^2
    const auto s = build_sl(2, 3);
    REQUIRE(s.center().size() == 2);   // +-identity
}

TEST_CASE("parabolic index ratio") {
    const auto g = build_gl(2, 3);
    const auto tags = parabolic_tags(g, 0);
    REQUIRE(tags.nilradical.size() == 3);
    REQUIRE(parabolic_index_ratio(g, tags, g.identity()) == 1);
    // m = diag(2,1)
    FqMat d;
    d.n = 2;
    d.set(0, 0, 2);
    d.set(1, 1, 1);
    REQUIRE(parabolic_index_ratio(g, tags, g.require_index(d, "m")) == 1);
    // every Levi element gives ratio |K| / |K^m| = 1
    for (const auto m : tags.levi) REQUIRE(parabolic_index_ratio(g, tags, m) == 1);
    // m outside the Levi is rejected
    FqMat u = fq_identity(2);
    u.set(0, 1, 1);
    REQUIRE_THROWS_AS(parabolic_index_ratio(g, tags, g.require_index(u, "u")),
                      precondition_error);
}

TEST_CASE("subgroup construction validates closure") {
    const auto g = build_gl(2, 3);
    const auto tags = parabolic_tags(g, 0);
    // the torus is closed
    const auto t = build_subgroup(g, g.torus(), "torus");
    REQUIRE(t.size() == 4);
    REQUIRE(t.class_count() == 4);  // abelian
    // a non-closed subset throws
    std::vector<std::uint32_t> bad = {g.identity(), tags.nilradical[1], tags.opposite_nilradical[1]};
    REQUIRE_THROWS_AS(build_subgroup(g, bad, "bad"), closure_error);
}
