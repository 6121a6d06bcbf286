#pragma once

// Reference implementations that share no code with the library's BFS,
// scoring, or enumeration paths: Floyd-Warshall distances, per-vertex
// rational accumulation, and recursive subset enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "balance/graph.hpp"
#include "balance/rational.hpp"

namespace balance::reference {

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

/// All-pairs hop distances, kInf when disconnected.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g) {
    const auto n = g.num_vertices();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
    for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (d[u][w] + d[w][v] < d[u][v]) d[u][v] = d[u][w] + d[w][v];
    return d;
}

/// Scores straight from the definition: each vertex adds 1/|C_v| to every closest player.
inline std::vector<Rational> scores(const std::vector<std::vector<std::uint32_t>>& apsp,
                                    const std::vector<Vertex>& placement) {
    const auto n = apsp.size();
    std::vector<Rational> out(placement.size(), Rational(0));
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> closest;
        for (std::size_t i = 0; i < placement.size(); ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < placement.size(); ++j) {
                if (apsp[v][placement[i]] > apsp[v][placement[j]]) ok = false;
            }
            if (ok) closest.push_back(i);
        }
        for (auto i : closest) out[i] += Rational(1, std::int64_t(closest.size()));
    }
    return out;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<Vertex>&)>& visit) {
    std::vector<Vertex> cur;
    std::function<bool(Vertex)> rec = [&](Vertex start) -> bool {
        if (cur.size() == k) return visit(cur);
        for (Vertex v = start; v < n; ++v) {
            cur.push_back(v);
            if (!rec(v + 1)) return false;
            cur.pop_back();
        }
        return true;
    };
    rec(0);
}

/// Exhaustive z-balancedness via all-pairs shortest paths.
inline bool is_z_balanced(const Graph& g, std::size_t k, const Rational& z) {
    auto apsp = floyd_warshall(g);
    const auto n = g.num_vertices();
    const Rational lo = Rational(std::int64_t(n / k)) - z;
    const Rational hi = Rational(std::int64_t((n + k - 1) / k)) + z;
    bool balanced = true;
    for_each_subset(n, k, [&](const std::vector<Vertex>& p) {
        for (const auto& s : scores(apsp, p)) {
            if (s < lo || s > hi) balanced = false;
        }
        return balanced;
    });
    return balanced;
}

inline bool dominates(const Graph& g, const std::vector<Vertex>& set) {
    std::vector<char> hit(g.num_vertices(), 0);
    for (Vertex s : set) {
        hit[s] = 1;
        for (Vertex w : g.neighbors(s)) hit[w] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

inline bool has_dominating_set(const Graph& g, std::size_t h) {
    bool found = false;
    for_each_subset(g.num_vertices(), h, [&](const std::vector<Vertex>& s) {
        found = dominates(g, s);
        return !found;
    });
    return found;
}

}  // namespace balance::reference
