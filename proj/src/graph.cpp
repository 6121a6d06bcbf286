#include "balance/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "balance/parallel.hpp"

namespace balance {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<Edge> directed;
    directed.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") references a vertex outside 0.." + std::to_string(n) + "-1");
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        directed.emplace_back(u, v);
        directed.emplace_back(v, u);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : directed) ++g.offsets_[u + 1];
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adjacency_.reserve(directed.size());
    for (auto [u, v] : directed) g.adjacency_.push_back(v);
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != num_vertices()) throw std::invalid_argument("permutation size differs from vertex count");
    auto es = edges();
    for (auto& [u, v] : es) {
        u = perm[u];
        v = perm[v];
    }
    return from_edges(num_vertices(), es);
}

DistanceVector bfs_distances(const Graph& g, Vertex source) {
    const auto n = g.num_vertices();
    if (source >= n) throw std::out_of_range("BFS source " + std::to_string(source) + " out of range");
    DistanceVector out{source, std::vector<std::uint32_t>(n, DistanceVector::kUnreachable)};
    std::vector<Vertex> queue;
    queue.reserve(n);
    queue.push_back(source);
    out.dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (out.dist[w] == DistanceVector::kUnreachable) {
                out.dist[w] = out.dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> ball_profiles(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<std::uint32_t>> profiles(n);
    const std::size_t batches = (n + 63) / 64;

    // Up to 64 sources advance together: bit j of visited[v] says source
    // (batch_start + j) has reached v.
    parallel_for(batches, [&](std::size_t first_batch, std::size_t last_batch) {
        std::vector<std::uint64_t> visited(n), frontier(n), next(n);
        for (std::size_t batch = first_batch; batch < last_batch; ++batch) {
            const std::size_t base = batch * 64;
            const std::size_t width = std::min<std::size_t>(64, n - base);
            std::fill(visited.begin(), visited.end(), 0);
            std::fill(frontier.begin(), frontier.end(), 0);
            for (std::size_t j = 0; j < width; ++j) {
                visited[base + j] = frontier[base + j] = std::uint64_t{1} << j;
                profiles[base + j] = {1};
            }
            std::uint32_t gains[64];
            for (;;) {
                std::fill(std::begin(gains), std::end(gains), 0);
                bool any = false;
                for (Vertex v = 0; v < n; ++v) {
                    std::uint64_t acc = 0;
                    for (Vertex u : g.neighbors(v)) acc |= frontier[u];
                    acc &= ~visited[v];
                    next[v] = acc;
                    if (acc == 0) continue;
                    any = true;
                    visited[v] |= acc;
                    while (acc != 0) {
                        ++gains[std::countr_zero(acc)];
                        acc &= acc - 1;
                    }
                }
                if (!any) break;
                for (std::size_t j = 0; j < width; ++j) {
                    if (gains[j] != 0) profiles[base + j].push_back(profiles[base + j].back() + gains[j]);
                }
                frontier.swap(next);
            }
        }
    });
    return profiles;
}

NeighborhoodTable neighborhood_table(const Graph& g) {
    const std::size_t n = g.num_vertices();
    auto profiles = ball_profiles(g);
    std::size_t r = n;
    for (const auto& p : profiles) {
        if (p.back() != n) throw DisconnectedGraph();
        r = std::min(r, p.size() - 1);
    }
    if (n == 0) r = 0;
    std::vector<std::uint32_t> cells;
    cells.reserve(n * r);
    for (const auto& p : profiles) cells.insert(cells.end(), p.begin() + 1, p.begin() + 1 + r);
    return NeighborhoodTable(n, r, std::move(cells));
}

std::size_t radius(const Graph& g) { return neighborhood_table(g).radius(); }

std::size_t diameter(const Graph& g) {
    std::size_t d = 0;
    for (const auto& p : ball_profiles(g)) {
        if (p.back() != g.num_vertices()) throw DisconnectedGraph();
        d = std::max(d, p.size() - 1);
    }
    return d;
}

bool is_connected(const Graph& g) {
    if (g.num_vertices() == 0) return true;
    const auto d = bfs_distances(g, 0);
    return std::none_of(d.dist.begin(), d.dist.end(), [](auto x) { return x == DistanceVector::kUnreachable; });
}

double regularity_tolerance(double d, std::size_t n, double c) {
    return c * std::sqrt(d * std::log(double(std::max<std::size_t>(n, 3))));
}

DegreeStats degree_stats(const Graph& g, double d, double c) {
    if (!(d > 0)) throw std::invalid_argument("target degree must be positive");
    DegreeStats s;
    s.target_degree = d;
    s.tolerance = regularity_tolerance(d, g.num_vertices(), c);
    const auto n = g.num_vertices();
    if (n == 0) {
        s.roughly_regular = true;
        return s;
    }
    s.min_degree = g.degree(0);
    for (Vertex v = 0; v < n; ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    s.mean_degree = 2.0 * double(g.num_edges()) / double(n);
    s.roughly_regular = std::abs(double(s.min_degree) - d) <= s.tolerance &&
                        std::abs(double(s.max_degree) - d) <= s.tolerance;
    return s;
}

}  // namespace balance
