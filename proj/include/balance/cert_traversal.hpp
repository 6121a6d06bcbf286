#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "balance/graph.hpp"
#include "balance/rational.hpp"

namespace balance {

enum class TraversalReject {
    none,
    infinite_radius,   // graph disconnected
    full_reach,        // |N_r(v)| < n for some v
    ball_too_large,    // |N_{r-1}(v)| > delta * n / k for some v
};

std::string to_string(TraversalReject reason);

/// Accept means every vertex reaches the whole graph in r hops while no
/// vertex reaches more than delta*n/k vertices in r - 1 hops; then every
/// score lies in [(n - delta*n)/k, delta*n + n/k] for any k facilities.
struct TraversalCertificate {
    std::size_t n = 0;
    std::size_t k = 0;
    Rational delta;
    std::size_t radius = 0;                    // 0 when rejected for infinite radius
    std::uint64_t max_inner_ball = 0;          // max over v of |N_{r-1}(v)|
    std::uint64_t min_outer_ball = 0;          // min over v of |N_r(v)|
    bool accept = false;
    TraversalReject reason = TraversalReject::none;
    std::optional<Vertex> witness;             // first violating vertex

    [[nodiscard]] Rational inner_ball_limit() const;   // delta * n / k
    friend bool operator==(const TraversalCertificate&, const TraversalCertificate&) = default;
};

/// Requires 1 <= k <= n and delta > 0.
TraversalCertificate traversal_certificate(const Graph& g, std::size_t k, const Rational& delta);

/// Recomputes the certificate from scratch and compares every field.
/// Throws std::invalid_argument when cert.n differs from the graph's order.
bool verify_traversal_certificate(const Graph& g, const TraversalCertificate& cert);

}  // namespace balance
