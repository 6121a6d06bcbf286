#include <doctest.h>

#include <cmath>

#include "balance/cert_spectral.hpp"
#include "balance/dense_spectrum.hpp"
#include "balance/generators.hpp"
#include "balance/parallel.hpp"

using namespace balance;

namespace {
double rel_err(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-12); }
}  // namespace

TEST_CASE("iteration counts") {
    CHECK(power_iterations(1) == 1);
    CHECK(power_iterations(100) == std::size_t(std::ceil(40 * std::log(100.0))));
    CHECK(power_iterations(100, 1) == 5);
}

TEST_CASE("dense reference spectra") {
    auto k4 = dense_adjacency_spectrum(complete_graph(4));
    CHECK(k4[0] == doctest::Approx(3));
    for (int i = 1; i < 4; ++i) CHECK(k4[i] == doctest::Approx(-1));
    auto star = dense_adjacency_spectrum(star_graph(9));
    CHECK(star.front() == doctest::Approx(3));
    CHECK(star.back() == doctest::Approx(-3));
    CHECK(second_largest_magnitude(star) == doctest::Approx(3));
    CHECK(second_largest_magnitude(dense_adjacency_spectrum(cycle_graph(5))) ==
          doctest::Approx(2 * std::cos(std::acos(-1.0) / 5)));
    std::vector<double> single{4.0};
    CHECK(second_largest_magnitude(single) == 0.0);
}

TEST_CASE("top eigenpairs") {
    auto top = power_method_top(complete_graph(10), power_iterations(10), 1);
    CHECK(rel_err(top.value, 9) < 0.01);
    CHECK(rel_err(power_method_top(star_graph(9), power_iterations(10), 1).value, 3) < 0.01);
    CHECK(rel_err(power_method_top(cycle_graph(8), power_iterations(8), 1).value, 2) < 0.01);
    double norm = 0;
    for (double x : top.vector) norm += x * x;
    CHECK(norm == doctest::Approx(1));
    CHECK(power_method_top(empty_graph(4), 10, 1).value == 0.0);
}

TEST_CASE("second-eigenvalue estimates") {
    CHECK(rel_err(power_method_second(complete_graph(10), power_iterations(10), 2), 1) < 0.01);
    CHECK(rel_err(power_method_second(cycle_graph(4), power_iterations(4), 2), 2) < 0.01);
    CHECK(rel_err(power_method_second(star_graph(16), power_iterations(17), 2), 4) < 0.01);
    auto g = sample_gnd(500, 40, 4);
    const double want = second_largest_magnitude(dense_adjacency_spectrum(g));
    CHECK(rel_err(power_method_second(g, power_iterations(500), 4), want) < 0.01);
}

TEST_CASE("spectral certificate decisions") {
    auto k50 = spectral_certificate(complete_graph(50), 3);
    CHECK(k50.accept);
    CHECK(k50.roughly_regular);
    CHECK(k50.expected_degree == doctest::Approx(49));
    CHECK(k50.threshold == doctest::Approx(700));
    REQUIRE(k50.lambda2_estimate);
    CHECK(*k50.lambda2_estimate == doctest::Approx(1).epsilon(0.01));
    CHECK(k50.reject_step == 0);
    CHECK(k50.iterations == power_iterations(50));

    auto star = spectral_certificate(star_graph(100), 3);
    CHECK_FALSE(star.accept);
    CHECK(star.reject_step == 2);
    CHECK_FALSE(star.lambda2_estimate);
    CHECK(star.max_degree == 100);

    auto empty = spectral_certificate(empty_graph(5), 3);
    CHECK_FALSE(empty.accept);
    CHECK(empty.reject_step == 4);
    CHECK(spectral_certificate(Graph::from_edges(1, {}), 3).accept);
}

TEST_CASE("spectral certificates are deterministic in the seed and the worker count") {
    auto g = sample_gnd(600, 30, 8);
    set_max_threads(1);
    auto a = spectral_certificate(g, 99);
    set_max_threads(3);
    auto b = spectral_certificate(g, 99);
    set_max_threads(0);
    CHECK(a == b);
    CHECK(a.seed == 99);
}

TEST_CASE("acceptance estimates") {
    auto k = estimate_acceptance(complete_graph(30), 10, 5);
    CHECK(k.trials == 10);
    CHECK(k.accepts == 10);
    CHECK(k.probability == Rational(1));
    CHECK(k.exceeds_threshold);
    auto s = estimate_acceptance(star_graph(50), 10, 5);
    CHECK(s.accepts == 0);
    CHECK_FALSE(s.exceeds_threshold);
    CHECK_THROWS(estimate_acceptance(complete_graph(3), 0, 1));
}

TEST_CASE("expander mixing lemma checks") {
    auto k10 = complete_graph(10);
    std::vector<SubsetPair> pairs{{{0, 1, 2}, {3, 4, 5, 6}}, {{0, 1, 2, 3}, {0, 1, 2, 3}}};
    auto r = mixing_lemma_check(k10, 1.0, pairs);
    REQUIRE(r.size() == 2);
    CHECK(r[0].edges == 12);
    CHECK(r[0].expected == doctest::Approx(9.0 * 12 / 10));
    CHECK(r[0].pass);
    CHECK(r[1].edges == 12);
    CHECK(r[1].pass);

    auto c6 = cycle_graph(6);
    std::vector<SubsetPair> all{{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}}};
    auto full = mixing_lemma_check(c6, 2.0, all);
    CHECK(full[0].edges == 12);
    CHECK(full[0].expected == doctest::Approx(12));
    CHECK(full[0].pass);
    // The bipartite sides of C_6 deviate by exactly 3 = 1 * sqrt(3 * 3).
    std::vector<SubsetPair> sides{{{0, 2, 4}, {1, 3, 5}}};
    CHECK(mixing_lemma_check(c6, 1.0, sides)[0].pass);
    CHECK_FALSE(mixing_lemma_check(c6, 0.99, sides)[0].pass);

    CHECK_THROWS_AS(mixing_lemma_check(star_graph(4), 2.0, pairs), std::invalid_argument);
    CHECK_THROWS(mixing_lemma_check(k10, -1.0, pairs));
}
