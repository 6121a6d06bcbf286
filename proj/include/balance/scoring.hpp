#pragma once

#include <optional>
#include <span>
#include <vector>

#include "balance/graph.hpp"
#include "balance/rational.hpp"

namespace balance {

/// k distinct facility vertices; player i owns facilities()[i].
class Placement {
public:
    Placement() = default;
    /// Throws std::invalid_argument on an empty list or duplicate ids.
    explicit Placement(std::vector<Vertex> facilities);

    [[nodiscard]] std::size_t size() const { return facilities_.size(); }
    [[nodiscard]] std::span<const Vertex> facilities() const { return facilities_; }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return facilities_[i]; }

    /// Throws std::out_of_range if any facility id is >= n.
    void check_bounds(std::size_t n) const;

    friend bool operator==(const Placement&, const Placement&) = default;

private:
    std::vector<Vertex> facilities_;
};

/// For every vertex v, the players (0-based) whose facilities are at minimum
/// distance from v. Unreachable counts as equal to unreachable and farther
/// than any finite distance, so every set is nonempty.
struct ClosestSets {
    std::vector<std::vector<std::uint32_t>> members;

    [[nodiscard]] std::span<const std::uint32_t> of(Vertex v) const { return members[v]; }
};

struct ScoreReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Rational> scores;
    std::optional<Rational> z;
    std::optional<bool> balanced;

    [[nodiscard]] Rational min_score() const;
    [[nodiscard]] Rational max_score() const;
};

ClosestSets closest_sets(const Graph& g, const Placement& p);

/// score(i) = sum over v with i in C_v of 1 / |C_v|, held exactly.
ScoreReport scores(const Graph& g, const Placement& p);

/// Scores from precomputed per-player distance rows (rows[i][v] = d(v, u_i)).
ScoreReport scores_from_distances(std::size_t n, std::span<const std::span<const std::uint32_t>> rows);

/// Bounds [floor(n/k) - z, ceil(n/k) + z].
std::pair<Rational, Rational> balance_bounds(std::size_t n, std::size_t k, const Rational& z);

/// True iff every score lies within balance_bounds. Throws on z < 0.
bool is_z_balanced_placement(const ScoreReport& report, const Rational& z);

/// Copy of report with z and the verdict filled in.
ScoreReport with_verdict(ScoreReport report, const Rational& z);

}  // namespace balance
