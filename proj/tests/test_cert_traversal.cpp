#include <doctest.h>

#include "balance/cert_traversal.hpp"
#include "balance/generators.hpp"
#include "balance/json_io.hpp"
#include "balance/oracle.hpp"
#include "balance/scoring.hpp"
#include "support/random_graphs.hpp"

using namespace balance;

TEST_CASE("complete graphs certify") {
    auto c = traversal_certificate(complete_graph(20), 4, Rational(1, 2));
    CHECK(c.accept);
    CHECK(c.reason == TraversalReject::none);
    CHECK(c.radius == 1);
    CHECK(c.max_inner_ball == 1);
    CHECK(c.min_outer_ball == 20);
    CHECK(c.inner_ball_limit() == Rational(5, 2));
}

TEST_CASE("even cycle fails the inner-ball condition") {
    auto c = traversal_certificate(cycle_graph(6), 2, Rational(1, 10));
    CHECK_FALSE(c.accept);
    CHECK(c.reason == TraversalReject::ball_too_large);
    CHECK(c.radius == 3);
    CHECK(c.max_inner_ball == 5);
    CHECK(c.witness == Vertex(0));
    CHECK(to_string(c.reason) == "condition 2");
}

TEST_CASE("condition 1 and disconnected inputs") {
    auto c = traversal_certificate(path_graph(5), 1, Rational(10));
    CHECK_FALSE(c.accept);
    CHECK(c.reason == TraversalReject::full_reach);
    CHECK(c.witness == Vertex(0));
    auto d = traversal_certificate(empty_graph(3), 1, Rational(1));
    CHECK_FALSE(d.accept);
    CHECK(d.reason == TraversalReject::infinite_radius);
    CHECK(to_string(d.reason) == "infinite radius");
    CHECK_THROWS(traversal_certificate(complete_graph(3), 0, 1));
    CHECK_THROWS(traversal_certificate(complete_graph(3), 4, 1));
    CHECK_THROWS(traversal_certificate(complete_graph(3), 1, 0));
}

TEST_CASE("verification detects tampering and survives relabeling") {
    auto g = hypercube_graph(4);
    auto cert = traversal_certificate(g, 2, Rational(2));
    REQUIRE(cert.accept);
    CHECK(verify_traversal_certificate(g, cert));
    auto tampered = cert;
    tampered.radius += 1;
    CHECK_FALSE(verify_traversal_certificate(g, tampered));
    tampered = cert;
    tampered.max_inner_ball -= 1;
    CHECK_FALSE(verify_traversal_certificate(g, tampered));
    SplitMix64 rng(51);
    auto perm = testing::random_permutation(rng, g.num_vertices());
    CHECK(verify_traversal_certificate(g.relabeled(perm), cert));
    auto wrong_n = cert;
    wrong_n.n = 3;
    CHECK_THROWS(verify_traversal_certificate(g, wrong_n));
}

TEST_CASE("certificates round-trip through JSON") {
    for (const auto& cert : {traversal_certificate(cycle_graph(6), 2, Rational(1, 10)),
                             traversal_certificate(complete_graph(7), 2, Rational(1)),
                             traversal_certificate(empty_graph(3), 1, Rational(1))}) {
        CHECK(traversal_certificate_from_json(to_json(cert)) == cert);
    }
}

TEST_CASE("property: accepting larger delta keeps accepting") {
    SplitMix64 rng(52);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.below(30);
        auto g = testing::random_graph(rng, n, 0.3 + 0.6 * rng.uniform());
        const std::size_t k = 1 + rng.below(std::min<std::size_t>(n, 3));
        bool seen = false;
        for (int num = 1; num <= 40; ++num) {
            auto c = traversal_certificate(g, k, Rational(num, 10));
            if (seen) CHECK(c.accept);
            seen = seen || c.accept;
        }
    }
}

TEST_CASE("property: accepted graphs keep sampled scores inside the certified interval") {
    SplitMix64 rng(53);
    int accepted = 0;
    for (int trial = 0; trial < 400 && accepted < 60; ++trial) {
        const std::size_t n = 4 + rng.below(40);
        auto g = testing::random_graph(rng, n, 0.5 + 0.5 * rng.uniform());
        const std::size_t k = 1 + rng.below(3);
        if (k > n) continue;
        auto probe = traversal_certificate(g, k, Rational(1));
        if (probe.reason != TraversalReject::ball_too_large && !probe.accept) continue;
        const Rational delta = Rational(std::int64_t(k * probe.max_inner_ball), std::int64_t(n));
        auto c = traversal_certificate(g, k, delta);
        REQUIRE(c.accept);
        ++accepted;
        const Rational nn{std::int64_t(n)}, kk{std::int64_t(k)};
        const Rational lo = (nn - delta * nn) / kk, hi = delta * nn + nn / kk;
        for (int j = 0; j < 20; ++j) {
            auto report = scores(g, Placement(testing::random_placement(rng, n, k)));
            CHECK(report.min_score() >= lo);
            CHECK(report.max_score() <= hi);
        }
    }
    CHECK(accepted >= 30);
}
