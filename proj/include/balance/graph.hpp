#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace balance {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown by operations that need a finite radius.
class DisconnectedGraph : public std::runtime_error {
public:
    DisconnectedGraph() : std::runtime_error("infinite radius: graph is disconnected") {}
};

/// Immutable undirected simple graph in compressed sparse row form.
/// Neighbor lists are sorted ascending; vertex ids are 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Builds the graph, dropping repeated edges. Throws std::invalid_argument
    /// on self-loops and std::out_of_range on ids >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    [[nodiscard]] std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    [[nodiscard]] std::size_t num_edges() const { return adjacency_.size() / 2; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Graph with vertex v renamed to perm[v].
    [[nodiscard]] Graph relabeled(std::span<const Vertex> perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

struct DistanceVector {
    static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

    Vertex source = 0;
    std::vector<std::uint32_t> dist;

    [[nodiscard]] bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
};

/// Hop distances from source; O(n + m).
DistanceVector bfs_distances(const Graph& g, Vertex source);

/// T[v, i] = |N_i(v)| for i = 1..r, where r is the radius and N_i(v) the
/// closed i-hop ball. Rows are stored densely.
class NeighborhoodTable {
public:
    NeighborhoodTable(std::size_t rows, std::size_t radius, std::vector<std::uint32_t> cells)
        : rows_(rows), radius_(radius), cells_(std::move(cells)) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t radius() const { return radius_; }

    /// Ball size for 0 <= i <= radius; i = 0 gives 1 (N_0(v) = {v}).
    [[nodiscard]] std::uint32_t ball(Vertex v, std::size_t i) const {
        if (i == 0) return 1;
        return cells_[v * radius_ + (i - 1)];
    }
    [[nodiscard]] std::span<const std::uint32_t> row(Vertex v) const {
        return {cells_.data() + v * radius_, radius_};
    }

private:
    std::size_t rows_;
    std::size_t radius_;
    std::vector<std::uint32_t> cells_;
};

/// Exact neighborhood table via bit-parallel BFS from every vertex.
/// Throws DisconnectedGraph when some vertex cannot reach all others.
NeighborhoodTable neighborhood_table(const Graph& g);

/// min over v of eccentricity(v). Throws DisconnectedGraph.
std::size_t radius(const Graph& g);

/// max over v of eccentricity(v). Throws DisconnectedGraph.
std::size_t diameter(const Graph& g);

/// Full per-vertex ball profile: profile[i] = |N_i(v)| for i = 0..ecc(v)
/// restricted to v's component.
std::vector<std::vector<std::uint32_t>> ball_profiles(const Graph& g);

bool is_connected(const Graph& g);

struct DegreeStats {
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    double mean_degree = 0.0;
    double target_degree = 0.0;
    double tolerance = 0.0;
    bool roughly_regular = false;
};

/// Default constant c in tol(d, n) = c * sqrt(d * ln(max(n, 3))).
inline constexpr double kRegularityConstant = 3.0;

double regularity_tolerance(double d, std::size_t n, double c = kRegularityConstant);

/// Degree summary against target d > 0 with the roughly-regular flag
/// |deg(v) - d| <= tol(d, n) for all v.
DegreeStats degree_stats(const Graph& g, double d, double c = kRegularityConstant);

}  // namespace balance
