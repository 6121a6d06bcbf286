#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "balance/cert_spectral.hpp"
#include "balance/cert_traversal.hpp"
#include "balance/dense_spectrum.hpp"
#include "balance/generators.hpp"
#include "balance/scoring.hpp"

namespace balance::experiments {

namespace {

Json summary(std::vector<double> xs) {
    if (xs.empty()) return nullptr;
    std::sort(xs.begin(), xs.end());
    auto q = [&](double p) {
        auto idx = std::size_t(std::ceil(p * double(xs.size()))) ;
        return xs[std::min(xs.size() - 1, idx == 0 ? 0 : idx - 1)];
    };
    double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / double(xs.size());
    return Json{{"count", xs.size()}, {"mean", mean}, {"min", xs.front()}, {"p50", q(0.5)},
                {"p95", q(0.95)},     {"max", xs.back()}};
}

double resolve_degree(double d, double exponent, std::size_t n) {
    return d > 0 ? d : std::pow(double(n), exponent);
}

std::vector<Vertex> random_subset(SplitMix64& rng, std::size_t n, std::size_t k) {
    // Partial Fisher-Yates over a sparse swap map.
    std::map<std::size_t, std::size_t> swapped;
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + rng.below(n - i);
        auto at = [&](std::size_t x) {
            auto it = swapped.find(x);
            return it == swapped.end() ? x : it->second;
        };
        std::size_t vi = at(i), vj = at(j);
        swapped[j] = vi;
        swapped[i] = vj;
        out.push_back(Vertex(vj));
    }
    return out;
}

}  // namespace

const std::vector<std::string>& names() {
    static const std::vector<std::string> all{"thm1-score-gap", "thm3-n2-profile", "spectral-gap", "cert-rates"};
    return all;
}

Json score_gap(const ScoreGapParams& p) {
    const double d = resolve_degree(p.d, p.exponent, p.n);
    const Rational share{std::int64_t(p.n), std::int64_t(p.k)};
    const double limit = p.fraction * double(p.n);
    std::size_t passing = 0, total = 0;
    std::vector<double> gaps;
    for (std::size_t i = 0; i < p.graphs; ++i) {
        const Seed gs = derive_seed(p.seed, i);
        auto g = sample_gnd(p.n, d, gs);
        SplitMix64 rng(derive_seed(gs, 0x706c61636575ULL));
        for (std::size_t j = 0; j < p.placements; ++j) {
            auto report = scores(g, Placement(random_subset(rng, p.n, p.k)));
            double gap = 0;
            for (const auto& s : report.scores) gap = std::max(gap, std::abs((s - share).to_double()));
            gaps.push_back(gap / double(p.n));
            ++total;
            passing += gap <= limit;
        }
    }
    return Json{{"n", p.n},
                {"d", d},
                {"k", p.k},
                {"graphs", p.graphs},
                {"placements_per_graph", p.placements},
                {"fraction", p.fraction},
                {"pairs", total},
                {"pairs_within", passing},
                {"rate_within", total ? double(passing) / double(total) : 0.0},
                {"max_gap_over_n", summary(gaps)}};
}

Json expander_profile(const ExpanderProfileParams& p) {
    auto inst = unbalanced_expander(p.n, p.seed);
    const auto& g = inst.graph;
    const double total = double(g.num_vertices());
    auto ball2 = [&](Vertex v) {
        auto d = bfs_distances(g, v);
        return double(std::count_if(d.dist.begin(), d.dist.end(), [](auto x) { return x <= 2; }));
    };
    SplitMix64 rng(derive_seed(p.seed, 0x6f726967ULL));
    std::vector<double> fractions, gaps;
    for (std::size_t i = 0; i < p.samples; ++i) {
        auto v = Vertex(rng.below(inst.originals));
        fractions.push_back(ball2(v) / total);
        auto report = scores(g, Placement({inst.root, v}));
        gaps.push_back(std::abs((report.scores[0] - report.scores[1]).to_double()) / total);
    }
    double mean = std::accumulate(fractions.begin(), fractions.end(), 0.0) / double(fractions.size());
    return Json{{"n", p.n},
                {"vertices", g.num_vertices()},
                {"edges", g.num_edges()},
                {"root", inst.root},
                {"seed_used", inst.seed_used},
                {"retries", inst.retries},
                {"root_n2_fraction", ball2(inst.root) / total},
                {"original_n2_fraction_mean", mean},
                {"original_n2_fraction", summary(fractions)},
                {"predicted_fraction", 1.0 - std::exp(-1.0)},
                {"root_vs_original_score_gap_over_vertices", summary(gaps)}};
}

Json spectral_gap(const SpectralGapParams& p) {
    const double root_d = std::sqrt(p.d);
    std::size_t in_band = 0;
    std::vector<double> lambda2, second, estimates;
    for (std::size_t i = 0; i < p.graphs; ++i) {
        const Seed gs = derive_seed(p.seed, i);
        auto g = sample_gnd(p.n, p.d, gs);
        auto spectrum = dense_adjacency_spectrum(g);
        lambda2.push_back(spectrum[1]);
        second.push_back(second_largest_magnitude(spectrum));
        estimates.push_back(power_method_second(g, power_iterations(p.n), gs));
        in_band += spectrum[1] >= p.band_low * root_d && spectrum[1] <= p.band_high * root_d;
    }
    return Json{{"n", p.n},
                {"d", p.d},
                {"graphs", p.graphs},
                {"band", {p.band_low * root_d, p.band_high * root_d}},
                {"in_band", in_band},
                {"all_in_band", in_band == p.graphs},
                {"lambda2", summary(lambda2)},
                {"lambda2_over_sqrt_d", summary([&] {
                     auto v = lambda2;
                     for (auto& x : v) x /= root_d;
                     return v;
                 }())},
                {"second_magnitude", summary(second)},
                {"power_method_estimate", summary(estimates)}};
}

Json cert_rates(const CertRateParams& p) {
    const double d = resolve_degree(p.d, p.exponent, p.n);
    std::size_t accepts = 0, spectral_graphs_over = 0;
    std::map<std::string, std::size_t> reasons;
    std::map<std::size_t, std::size_t> radii;
    std::vector<double> inner, spectral_rates;
    for (std::size_t i = 0; i < p.graphs; ++i) {
        const Seed gs = derive_seed(p.seed, i);
        auto g = sample_gnd(p.n, d, gs);
        auto cert = traversal_certificate(g, p.k, p.delta);
        accepts += cert.accept;
        ++reasons[cert.accept ? "accept" : to_string(cert.reason)];
        if (cert.reason != TraversalReject::infinite_radius) {
            ++radii[cert.radius];
            inner.push_back(double(cert.max_inner_ball));
        }
        if (p.spectral_trials > 0) {
            auto est = estimate_acceptance(g, p.spectral_trials, derive_seed(gs, 7));
            spectral_rates.push_back(est.probability.to_double());
            spectral_graphs_over += est.exceeds_threshold;
        }
    }
    Json radius_hist = Json::object();
    for (auto [r, c] : radii) radius_hist[std::to_string(r)] = c;
    Json reason_hist = Json::object();
    for (const auto& [r, c] : reasons) reason_hist[r] = c;
    Json out{{"n", p.n},
             {"d", d},
             {"k", p.k},
             {"delta", to_json(p.delta)},
             {"inner_ball_limit", (p.delta * Rational(std::int64_t(p.n)) / Rational(std::int64_t(p.k))).to_double()},
             {"graphs", p.graphs},
             {"traversal_accepts", accepts},
             {"traversal_acceptance", p.graphs ? double(accepts) / double(p.graphs) : 0.0},
             {"reasons", reason_hist},
             {"radius_histogram", radius_hist},
             {"max_inner_ball", summary(inner)}};
    if (p.spectral_trials > 0) {
        out["spectral_trials_per_graph"] = p.spectral_trials;
        out["spectral_acceptance"] = summary(spectral_rates);
        out["spectral_graphs_over_threshold"] = spectral_graphs_over;
    }
    return out;
}

}  // namespace balance::experiments
