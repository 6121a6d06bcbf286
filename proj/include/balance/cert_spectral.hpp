#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "balance/graph.hpp"
#include "balance/random.hpp"
#include "balance/rational.hpp"

namespace balance {

inline constexpr double kDefaultPowerConstant = 40.0;
inline constexpr double kEpsilon = 0.01;
inline constexpr double kAcceptanceThreshold = 0.9;

/// max(1, ceil(c_pow * ln n)).
std::size_t power_iterations(std::size_t n, double c_pow = kDefaultPowerConstant);

struct TopEigenpair {
    double value = 0.0;          // Rayleigh quotient x^T A x
    std::vector<double> vector;  // unit norm
    std::size_t iterations = 0;
};

/// Power iteration on A + (mean degree / 2) I from a Gaussian start. The
/// shift separates lambda_1 from -lambda_1 on bipartite graphs; the
/// eigenvalue itself is reported for A. Edgeless graphs give exactly 0.
TopEigenpair power_method_top(const Graph& g, std::size_t t, Seed seed);

/// Estimate of max(lambda_2, |lambda_n|): t steps of power_method_top, then
/// t steps of x <- P A x / |P A x| with P the projector off the top
/// estimate. Returns the final |P A x| for unit x, which approaches the
/// target from below.
double power_method_second(const Graph& g, std::size_t t, Seed seed);

struct SpectralOptions {
    double c_pow = kDefaultPowerConstant;
    double regularity_constant = kRegularityConstant;
};

struct SpectralCertificate {
    std::size_t n = 0;
    std::size_t m = 0;
    double expected_degree = 0.0;     // 2m / n
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    double regularity_tolerance = 0.0;
    bool roughly_regular = false;
    std::optional<double> lambda2_estimate;  // absent when Step 2 rejects
    double threshold = 0.0;           // 100 sqrt(d)
    double epsilon = kEpsilon;
    double c_pow = kDefaultPowerConstant;
    std::size_t iterations = 0;
    Seed seed = 0;
    bool accept = false;
    int reject_step = 0;              // 0 on accept, else 2 or 4

    friend bool operator==(const SpectralCertificate&, const SpectralCertificate&) = default;
};

SpectralCertificate spectral_certificate(const Graph& g, Seed seed, const SpectralOptions& options = {});

struct AcceptanceEstimate {
    std::size_t trials = 0;
    std::size_t accepts = 0;
    Rational probability;             // accepts / trials
    double threshold = kAcceptanceThreshold;
    bool exceeds_threshold = false;   // probability > 0.9
    Seed seed = 0;
};

/// Trial i runs spectral_certificate with derive_seed(seed, i).
AcceptanceEstimate estimate_acceptance(const Graph& g, std::size_t trials, Seed seed,
                                       const SpectralOptions& options = {});

struct SubsetPair {
    std::vector<Vertex> s;
    std::vector<Vertex> t;
};

struct MixingResult {
    std::uint64_t edges = 0;   // E(S, T), edges inside S ∩ T counted twice
    double expected = 0.0;     // d |S| |T| / n
    double bound = 0.0;        // lambda sqrt(|S| |T|)
    bool pass = false;
};

/// Checks |E(S,T) - d|S||T|/n| <= lambda sqrt(|S||T|) for each pair.
/// Throws std::invalid_argument unless g is exactly d-regular.
std::vector<MixingResult> mixing_lemma_check(const Graph& g, double lambda, std::span<const SubsetPair> pairs);

}  // namespace balance
