#include "balance/scoring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace balance {

Placement::Placement(std::vector<Vertex> facilities) : facilities_(std::move(facilities)) {
    if (facilities_.empty()) throw std::invalid_argument("placement needs at least one facility");
    auto sorted = facilities_;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        throw std::invalid_argument("two facilities share vertex " + std::to_string(*dup));
    }
}

void Placement::check_bounds(std::size_t n) const {
    for (Vertex u : facilities_) {
        if (u >= n) throw std::out_of_range("facility vertex " + std::to_string(u) + " out of range");
    }
}

Rational ScoreReport::min_score() const { return *std::min_element(scores.begin(), scores.end()); }
Rational ScoreReport::max_score() const { return *std::max_element(scores.begin(), scores.end()); }

namespace {

std::vector<DistanceVector> facility_distances(const Graph& g, const Placement& p) {
    p.check_bounds(g.num_vertices());
    if (p.size() > g.num_vertices()) throw std::invalid_argument("more facilities than vertices");
    std::vector<DistanceVector> out;
    out.reserve(p.size());
    for (Vertex u : p.facilities()) out.push_back(bfs_distances(g, u));
    return out;
}

std::vector<std::span<const std::uint32_t>> as_rows(const std::vector<DistanceVector>& dists) {
    std::vector<std::span<const std::uint32_t>> rows;
    rows.reserve(dists.size());
    for (const auto& d : dists) rows.emplace_back(d.dist);
    return rows;
}

}  // namespace

ClosestSets closest_sets(const Graph& g, const Placement& p) {
    auto dists = facility_distances(g, p);
    const auto n = g.num_vertices();
    ClosestSets out;
    out.members.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        std::uint32_t best = DistanceVector::kUnreachable;
        for (const auto& d : dists) best = std::min(best, d.dist[v]);
        for (std::uint32_t i = 0; i < dists.size(); ++i) {
            if (dists[i].dist[v] == best) out.members[v].push_back(i);
        }
    }
    return out;
}

ScoreReport scores_from_distances(std::size_t n, std::span<const std::span<const std::uint32_t>> rows) {
    const std::size_t k = rows.size();
    // Tally, per player, how many won vertices had each tie size; the exact
    // sum is formed once at the end.
    std::vector<std::uint32_t> tie_size(n);
    std::vector<std::uint32_t> best(n, DistanceVector::kUnreachable);
    for (const auto& row : rows) {
        for (std::size_t v = 0; v < n; ++v) best[v] = std::min(best[v], row[v]);
    }
    for (const auto& row : rows) {
        for (std::size_t v = 0; v < n; ++v) tie_size[v] += row[v] == best[v];
    }
    std::vector<std::uint32_t> sizes(tie_size.begin(), tie_size.end());
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    std::vector<std::uint32_t> column(k + 1, 0);
    for (std::size_t j = 0; j < sizes.size(); ++j) column[sizes[j]] = std::uint32_t(j);

    std::vector<std::int64_t> hist(k * sizes.size(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& row = rows[i];
        auto* h = hist.data() + i * sizes.size();
        for (std::size_t v = 0; v < n; ++v) {
            if (row[v] == best[v]) ++h[column[tie_size[v]]];
        }
    }

    ScoreReport report;
    report.n = n;
    report.k = k;
    report.scores.assign(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            auto count = hist[i * sizes.size() + j];
            if (count != 0) report.scores[i] += Rational(count, sizes[j]);
        }
    }
    return report;
}

ScoreReport scores(const Graph& g, const Placement& p) {
    auto dists = facility_distances(g, p);
    auto rows = as_rows(dists);
    return scores_from_distances(g.num_vertices(), rows);
}

std::pair<Rational, Rational> balance_bounds(std::size_t n, std::size_t k, const Rational& z) {
    if (k == 0) throw std::invalid_argument("balance bounds need k >= 1");
    const Rational share{std::int64_t(n), std::int64_t(k)};
    return {Rational(share.floor()) - z, Rational(share.ceil()) + z};
}

bool is_z_balanced_placement(const ScoreReport& report, const Rational& z) {
    if (z < Rational(0)) throw std::invalid_argument("z must be non-negative");
    auto [lo, hi] = balance_bounds(report.n, report.k, z);
    return std::all_of(report.scores.begin(), report.scores.end(),
                       [&](const Rational& s) { return lo <= s && s <= hi; });
}

ScoreReport with_verdict(ScoreReport report, const Rational& z) {
    report.balanced = is_z_balanced_placement(report, z);
    report.z = z;
    return report;
}

}  // namespace balance
