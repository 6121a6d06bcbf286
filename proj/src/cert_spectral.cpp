#include "balance/cert_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "balance/parallel.hpp"

namespace balance {

namespace {

// y = (A + shift I) x; rows are independent so the result does not depend
// on how vertices are split across workers.
void multiply(const Graph& g, std::span<const double> x, std::span<double> y, double shift = 0.0) {
    auto rows = [&](std::size_t begin, std::size_t end) {
        for (std::size_t v = begin; v < end; ++v) {
            double acc = shift * x[v];
            for (Vertex u : g.neighbors(Vertex(v))) acc += x[u];
            y[v] = acc;
        }
    };
    constexpr std::size_t kParallelEntries = std::size_t{1} << 18;
    if (2 * g.num_edges() < kParallelEntries) {
        rows(0, g.num_vertices());
    } else {
        parallel_for(g.num_vertices(), rows);
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double normalize(std::span<double> x) {
    double norm = std::sqrt(dot(x, x));
    if (norm > 0) {
        for (auto& xi : x) xi /= norm;
    }
    return norm;
}

void project_off(std::span<double> x, std::span<const double> unit) {
    double c = dot(x, unit);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * unit[i];
}

std::vector<double> gaussian_vector(std::size_t n, Seed seed) {
    SplitMix64 rng(seed);
    std::vector<double> x(n);
    for (auto& xi : x) xi = rng.normal();
    return x;
}

}  // namespace

std::size_t power_iterations(std::size_t n, double c_pow) {
    if (n <= 1) return 1;
    return std::max<std::size_t>(1, std::size_t(std::ceil(c_pow * std::log(double(n)))));
}

TopEigenpair power_method_top(const Graph& g, std::size_t t, Seed seed) {
    const auto n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("power method needs a nonempty graph");
    if (t < 1) throw std::invalid_argument("power method needs t >= 1");
    TopEigenpair out;
    out.vector = gaussian_vector(n, derive_seed(seed, 0));
    if (normalize(out.vector) == 0) out.vector.assign(n, 1.0 / std::sqrt(double(n)));
    if (g.num_edges() == 0) return out;

    const double shift = double(g.num_edges()) / double(n);  // mean degree / 2
    std::vector<double> y(n);
    for (std::size_t i = 0; i < t; ++i) {
        multiply(g, out.vector, y, shift);
        if (normalize(y) == 0) break;
        out.vector.swap(y);
        ++out.iterations;
    }
    multiply(g, out.vector, y);
    out.value = dot(out.vector, y);
    return out;
}

double power_method_second(const Graph& g, std::size_t t, Seed seed) {
    const auto n = g.num_vertices();
    auto top = power_method_top(g, t, seed);
    if (g.num_edges() == 0 || n < 2) return 0.0;

    auto x = gaussian_vector(n, derive_seed(seed, 1));
    project_off(x, top.vector);
    if (normalize(x) == 0) return 0.0;
    std::vector<double> y(n);
    double estimate = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
        multiply(g, x, y);
        project_off(y, top.vector);
        estimate = normalize(y);
        if (estimate == 0) break;
        x.swap(y);
    }
    return estimate;
}

SpectralCertificate spectral_certificate(const Graph& g, Seed seed, const SpectralOptions& options) {
    const auto n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("spectral certificate needs a nonempty graph");
    SpectralCertificate cert;
    cert.n = n;
    cert.m = g.num_edges();
    cert.seed = seed;
    cert.c_pow = options.c_pow;
    cert.iterations = power_iterations(n, options.c_pow);

    // Step 1: d is the observed mean degree.
    cert.expected_degree = 2.0 * double(cert.m) / double(n);
    cert.threshold = 100.0 * std::sqrt(cert.expected_degree);

    // Step 2.
    if (cert.m == 0) {
        cert.roughly_regular = true;
    } else {
        auto stats = degree_stats(g, cert.expected_degree, options.regularity_constant);
        cert.min_degree = stats.min_degree;
        cert.max_degree = stats.max_degree;
        cert.regularity_tolerance = stats.tolerance;
        cert.roughly_regular = stats.roughly_regular;
    }
    if (!cert.roughly_regular) {
        cert.reject_step = 2;
        return cert;
    }

    // Steps 3 and 4; below three vertices Step 4 accepts unconditionally.
    cert.lambda2_estimate = power_method_second(g, cert.iterations, seed);
    cert.accept = n < 3 || *cert.lambda2_estimate < cert.threshold;
    cert.reject_step = cert.accept ? 0 : 4;
    return cert;
}

AcceptanceEstimate estimate_acceptance(const Graph& g, std::size_t trials, Seed seed, const SpectralOptions& options) {
    if (trials < 1) throw std::invalid_argument("acceptance estimate needs at least one trial");
    AcceptanceEstimate est;
    est.trials = trials;
    est.seed = seed;
    for (std::size_t i = 0; i < trials; ++i) {
        if (spectral_certificate(g, derive_seed(seed, i), options).accept) ++est.accepts;
    }
    est.probability = Rational(std::int64_t(est.accepts), std::int64_t(trials));
    est.exceeds_threshold = est.probability > Rational(9, 10);
    return est;
}

std::vector<MixingResult> mixing_lemma_check(const Graph& g, double lambda, std::span<const SubsetPair> pairs) {
    const auto n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("mixing lemma needs a nonempty graph");
    if (!(lambda >= 0)) throw std::invalid_argument("lambda must be non-negative");
    const auto d = g.degree(0);
    for (Vertex v = 1; v < n; ++v) {
        if (g.degree(v) != d) throw std::invalid_argument("mixing lemma check requires an exactly regular graph");
    }
    auto as_set = [&](std::vector<Vertex> s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty() && s.back() >= n) throw std::out_of_range("subset vertex out of range");
        return s;
    };
    std::vector<MixingResult> out;
    out.reserve(pairs.size());
    std::vector<char> in_t(n);
    for (const auto& pair : pairs) {
        auto s = as_set(pair.s);
        auto t = as_set(pair.t);
        std::fill(in_t.begin(), in_t.end(), 0);
        for (Vertex v : t) in_t[v] = 1;
        MixingResult r;
        for (Vertex u : s) {
            for (Vertex w : g.neighbors(u)) r.edges += in_t[w];
        }
        const double st = double(s.size()) * double(t.size());
        r.expected = double(d) * st / double(n);
        r.bound = lambda * std::sqrt(st);
        // Squared comparison keeps the equality cases exact in integers.
        const long double gap = (long double)(r.edges) * n - (long double)(d) * st;
        r.pass = gap * gap <= (long double)(lambda) * lambda * st * n * n;
        out.push_back(r);
    }
    return out;
}

}  // namespace balance
