#include "balance/cert_traversal.hpp"

#include <algorithm>
#include <stdexcept>

namespace balance {

std::string to_string(TraversalReject reason) {
    switch (reason) {
        case TraversalReject::none: return "none";
        case TraversalReject::infinite_radius: return "infinite radius";
        case TraversalReject::full_reach: return "condition 1";
        case TraversalReject::ball_too_large: return "condition 2";
    }
    return "unknown";
}

Rational TraversalCertificate::inner_ball_limit() const {
    return delta * Rational(std::int64_t(n)) / Rational(std::int64_t(k));
}

TraversalCertificate traversal_certificate(const Graph& g, std::size_t k, const Rational& delta) {
    const auto n = g.num_vertices();
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (delta <= Rational(0)) throw std::invalid_argument("delta must be positive");

    TraversalCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.delta = delta;
    std::optional<NeighborhoodTable> table;
    try {
        table.emplace(neighborhood_table(g));
    } catch (const DisconnectedGraph&) {
        cert.reason = TraversalReject::infinite_radius;
        return cert;
    }
    const std::size_t r = table->radius();
    cert.radius = r;
    const Rational limit = cert.inner_ball_limit();
    cert.min_outer_ball = n;
    // N_{-1}(v) is empty, which only matters for the one-vertex graph (r = 0).
    auto inner = [&](Vertex v) -> std::uint64_t { return r == 0 ? 0 : table->ball(v, r - 1); };
    for (Vertex v = 0; v < n; ++v) {
        cert.min_outer_ball = std::min<std::uint64_t>(cert.min_outer_ball, table->ball(v, r));
        cert.max_inner_ball = std::max<std::uint64_t>(cert.max_inner_ball, inner(v));
    }
    for (Vertex v = 0; v < n && cert.reason == TraversalReject::none; ++v) {
        if (table->ball(v, r) != n) {
            cert.reason = TraversalReject::full_reach;
            cert.witness = v;
        }
    }
    for (Vertex v = 0; v < n && cert.reason == TraversalReject::none; ++v) {
        if (Rational(std::int64_t(inner(v))) > limit) {
            cert.reason = TraversalReject::ball_too_large;
            cert.witness = v;
        }
    }
    cert.accept = cert.reason == TraversalReject::none;
    return cert;
}

bool verify_traversal_certificate(const Graph& g, const TraversalCertificate& cert) {
    if (cert.n != g.num_vertices()) throw std::invalid_argument("certificate is for a graph of a different order");
    if (cert.k < 1 || cert.k > cert.n || cert.delta <= Rational(0)) return false;
    return traversal_certificate(g, cert.k, cert.delta) == cert;
}

}  // namespace balance
