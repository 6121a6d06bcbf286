#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "balance/graph.hpp"
#include "balance/rational.hpp"
#include "balance/scoring.hpp"

namespace balance {

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

/// The exhaustive deciders refuse rather than sample when C(n, k) exceeds the cap.
class EnumerationCapExceeded : public std::runtime_error {
public:
    EnumerationCapExceeded(std::uint64_t needed, std::uint64_t cap);
    std::uint64_t needed;
    std::uint64_t cap;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// The rank-th k-subset of {0..n-1} in lexicographic order.
std::vector<Vertex> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank);

struct BalancednessVerdict {
    bool balanced = true;
    std::optional<Placement> witness;
    std::optional<Rational> witness_min_score;
    std::optional<Rational> witness_max_score;
    /// Placements scored before the verdict was settled; C(n, k) when balanced.
    std::uint64_t placements_examined = 0;
    std::uint64_t total_placements = 0;
};

struct UnbalancednessAnswer {
    bool answer = false;
    std::optional<Placement> witness;
    std::optional<Rational> witness_min_score;
    std::uint64_t placements_examined = 0;
    std::uint64_t total_placements = 0;
};

struct PlacementCount {
    std::uint64_t violating = 0;
    std::uint64_t total = 0;
};

/// Scores every k-subset (lexicographic order) and stops at the first one
/// outside the z-bounds. The witness is the lexicographically first violator.
BalancednessVerdict is_graph_z_balanced(const Graph& g, std::size_t k, const Rational& z,
                                        std::uint64_t cap = kDefaultEnumerationCap);

/// Is there a placement where some player scores strictly below s?
UnbalancednessAnswer unbalancedness_decision(const Graph& g, std::size_t k, const Rational& s,
                                             std::uint64_t cap = kDefaultEnumerationCap);

PlacementCount count_unbalanced_placements(const Graph& g, std::size_t k, const Rational& z,
                                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace balance
