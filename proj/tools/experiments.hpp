#pragma once

#include <string>
#include <vector>

#include "balance/json_io.hpp"
#include "balance/random.hpp"
#include "balance/rational.hpp"

namespace balance::experiments {

// Multi-seed batch runs. Every function is deterministic in its parameters;
// graph i of a run uses derive_seed(seed, i).

struct ScoreGapParams {
    std::size_t n = 1000;
    double d = 0.0;               // 0 selects n^exponent
    double exponent = 0.6;
    std::size_t k = 2;
    std::size_t graphs = 50;
    std::size_t placements = 100;
    double fraction = 0.1;        // a pair passes when max |score - n/k| <= fraction * n
    Seed seed = 1;
};
Json score_gap(const ScoreGapParams& p);

struct ExpanderProfileParams {
    std::size_t n = 2500;
    std::size_t samples = 50;
    Seed seed = 1;
};
Json expander_profile(const ExpanderProfileParams& p);

struct SpectralGapParams {
    std::size_t n = 500;
    double d = 50;
    std::size_t graphs = 20;
    double band_low = 0.5;        // in units of sqrt(d)
    double band_high = 10.0;
    Seed seed = 1;
};
Json spectral_gap(const SpectralGapParams& p);

struct CertRateParams {
    std::size_t n = 2000;
    double d = 0.0;               // 0 selects n^exponent
    double exponent = 0.6;
    std::size_t k = 2;
    Rational delta{1, 10};
    std::size_t graphs = 100;
    std::size_t spectral_trials = 0;  // per graph; 0 skips the spectral certificate
    Seed seed = 1;
};
Json cert_rates(const CertRateParams& p);

const std::vector<std::string>& names();

}  // namespace balance::experiments
