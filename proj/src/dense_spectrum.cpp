#include "balance/dense_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

namespace balance {

std::vector<double> dense_symmetric_spectrum(std::span<const double> matrix, std::size_t n) {
    if (matrix.size() != n * n) throw std::invalid_argument("matrix is not n x n");
    Eigen::MatrixXd a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(Eigen::Index(i), Eigen::Index(j)) = matrix[i * n + j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("dense eigensolver did not converge");
    std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

std::vector<double> dense_adjacency_spectrum(const Graph& g) {
    const auto n = g.num_vertices();
    std::vector<double> a(n * n, 0.0);
    for (auto [u, v] : g.edges()) a[u * n + v] = a[v * n + u] = 1.0;
    return dense_symmetric_spectrum(a, n);
}

double second_largest_magnitude(std::span<const double> descending) {
    if (descending.size() < 2) return 0.0;
    return std::max(descending[1], std::abs(descending.back()));
}

}  // namespace balance
