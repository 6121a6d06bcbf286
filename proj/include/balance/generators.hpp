#pragma once

#include <string>
#include <utility>
#include <vector>

#include "balance/graph.hpp"
#include "balance/random.hpp"
#include "balance/rational.hpp"

namespace balance {

/// Erdos-Renyi G_{n,d}: each of the C(n,2) pairs, visited as (0,1), (0,2),
/// ..., (n-2,n-1), is an edge with probability d / (n - 1).
/// Requires n >= 2 and 0 <= d <= n - 1.
Graph sample_gnd(std::size_t n, double d, Seed seed);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);       // n >= 3
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph star_graph(std::size_t leaves);   // center 0, leaves 1..m
Graph hypercube_graph(std::size_t dimension);

/// Random graph on sqrt(n) * sqrt(n) originals plus sqrt(n) hub vertices and
/// one root. Hub j is joined to originals [j*sqrt(n), (j+1)*sqrt(n)) and to
/// the root. Ids: originals 0..n-1, hubs n..n+sqrt(n)-1, root last.
struct ExpanderInstance {
    Graph graph;
    Vertex root = 0;
    std::size_t originals = 0;
    std::size_t side = 0;            // sqrt(n)
    std::vector<Vertex> hubs;
    Seed seed_used = 0;              // seed of the accepted base sample
    unsigned retries = 0;            // disconnected samples discarded
};

inline constexpr unsigned kMaxExpanderRetries = 100;

/// Throws std::invalid_argument unless n >= 4 is a perfect square.
/// Resamples with seed + 1, seed + 2, ... while the result is disconnected.
ExpanderInstance unbalanced_expander(std::size_t n, Seed seed);

/// Twelve-vertex tree: center c plus branches of 1, 2, 3 and 5 vertices.
/// Labels are "c" and "i/L" for the i-th vertex of the length-L branch.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;

    [[nodiscard]] Vertex id(const std::string& label) const;
};

LabeledGraph figure3_graph();

/// Unbalancedness instance built from a Dominating Set instance (g, h).
/// Ids: originals 0..n-1, bag of original i at
/// [n + i*bag_size, n + (i+1)*bag_size), root last.
struct ReducedInstance {
    Graph graph;
    std::size_t k = 0;             // h + 1
    Rational s;                    // n
    Vertex root = 0;
    std::vector<Vertex> original_ids;
    std::vector<std::pair<Vertex, Vertex>> bag_ranges;  // half-open
    std::size_t bag_size = 0;
    bool guarantees_void = false;  // bag_size < n^3
};

ReducedInstance dominating_set_reduction(const Graph& g, std::size_t h, std::size_t bag_size);

}  // namespace balance
