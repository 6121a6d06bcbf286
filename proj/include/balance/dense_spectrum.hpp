#pragma once

#include <span>
#include <vector>

#include "balance/graph.hpp"

namespace balance {

// Full-spectrum reference eigensolver for small graphs (dense O(n^3)).

/// Eigenvalues of the adjacency matrix, descending.
std::vector<double> dense_adjacency_spectrum(const Graph& g);

/// Eigenvalues of a symmetric row-major n x n matrix, descending.
std::vector<double> dense_symmetric_spectrum(std::span<const double> matrix, std::size_t n);

/// max(lambda_2, |lambda_n|) of a descending spectrum; 0 for a single value.
double second_largest_magnitude(std::span<const double> descending);

}  // namespace balance
