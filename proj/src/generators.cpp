#include "balance/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace balance {

Graph sample_gnd(std::size_t n, double d, Seed seed) {
    if (n < 2) throw std::invalid_argument("G(n, d) needs n >= 2");
    if (!(d >= 0.0) || d > double(n - 1)) {
        throw std::invalid_argument("G(n, d) needs 0 <= d <= n - 1, got d = " + std::to_string(d));
    }
    const double p = d / double(n - 1);
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(std::size_t(p * double(n) * double(n - 1) / 2.0 * 1.1) + 16);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.uniform() < p) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, Vertex((v + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph empty_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty graph needs n >= 1");
    return Graph::from_edges(n, {});
}

Graph star_graph(std::size_t leaves) {
    if (leaves == 0) throw std::invalid_argument("star needs m >= 1 leaves");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, edges);
}

Graph hypercube_graph(std::size_t dimension) {
    if (dimension == 0 || dimension > 20) throw std::invalid_argument("hypercube dimension must be in 1..20");
    const std::size_t n = std::size_t{1} << dimension;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t b = 0; b < dimension; ++b) {
            Vertex w = v ^ Vertex(1u << b);
            if (v < w) edges.emplace_back(v, w);
        }
    }
    return Graph::from_edges(n, edges);
}

ExpanderInstance unbalanced_expander(std::size_t n, Seed seed) {
    const auto side = std::size_t(std::llround(std::sqrt(double(n))));
    if (n < 4 || side * side != n) {
        throw std::invalid_argument("unbalanced expander needs a perfect square n >= 4, got " + std::to_string(n));
    }
    const std::size_t total = n + side + 1;
    const auto root = Vertex(total - 1);
    for (unsigned attempt = 0; attempt <= kMaxExpanderRetries; ++attempt) {
        const Seed s = seed + attempt;
        auto base = sample_gnd(n, double(side), s);
        auto edges = base.edges();
        std::vector<Vertex> hubs;
        for (std::size_t j = 0; j < side; ++j) {
            const auto hub = Vertex(n + j);
            hubs.push_back(hub);
            for (std::size_t i = 0; i < side; ++i) edges.emplace_back(hub, Vertex(j * side + i));
            edges.emplace_back(root, hub);
        }
        auto g = Graph::from_edges(total, edges);
        if (!is_connected(g)) continue;
        return ExpanderInstance{std::move(g), root, n, side, std::move(hubs), s, attempt};
    }
    throw std::runtime_error("unbalanced expander: every sample was disconnected after " +
                             std::to_string(kMaxExpanderRetries) + " retries");
}

Vertex LabeledGraph::id(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::out_of_range("no vertex labeled '" + label + "'");
    return Vertex(it - labels.begin());
}

LabeledGraph figure3_graph() {
    LabeledGraph out;
    out.labels.push_back("c");
    std::vector<Edge> edges;
    for (std::size_t len : {1, 2, 3, 5}) {
        Vertex prev = 0;
        for (std::size_t i = 1; i <= len; ++i) {
            auto v = Vertex(out.labels.size());
            out.labels.push_back(std::to_string(i) + "/" + std::to_string(len));
            edges.emplace_back(prev, v);
            prev = v;
        }
    }
    out.graph = Graph::from_edges(out.labels.size(), edges);
    return out;
}

ReducedInstance dominating_set_reduction(const Graph& g, std::size_t h, std::size_t bag_size) {
    if (h < 1) throw std::invalid_argument("dominating set budget h must be >= 1");
    if (bag_size < 1) throw std::invalid_argument("bag size must be >= 1");
    const std::size_t n = g.num_vertices();
    const std::size_t total = n + n * bag_size + 1;
    if (total > std::numeric_limits<Vertex>::max()) throw std::invalid_argument("reduced instance too large");

    ReducedInstance out;
    out.k = h + 1;
    out.s = Rational(std::int64_t(n));
    out.root = Vertex(total - 1);
    out.bag_size = bag_size;
    out.guarantees_void = double(bag_size) < double(n) * double(n) * double(n);
    for (Vertex i = 0; i < n; ++i) {
        out.original_ids.push_back(i);
        auto begin = Vertex(n + i * bag_size);
        out.bag_ranges.emplace_back(begin, Vertex(begin + bag_size));
    }

    std::vector<Edge> edges = g.edges();
    auto attach_bag = [&](Vertex original, Vertex owner) {
        auto [begin, end] = out.bag_ranges[owner];
        for (Vertex b = begin; b < end; ++b) edges.emplace_back(original, b);
    };
    for (Vertex i = 0; i < n; ++i) {
        auto [begin, end] = out.bag_ranges[i];
        for (Vertex a = begin; a < end; ++a) {
            for (Vertex b = a + 1; b < end; ++b) edges.emplace_back(a, b);
        }
        attach_bag(i, i);
        for (Vertex j : g.neighbors(i)) attach_bag(i, j);
        edges.emplace_back(out.root, i);
    }
    out.graph = Graph::from_edges(total, edges);
    return out;
}

}  // namespace balance
