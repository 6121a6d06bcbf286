#include "balance/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>
#include <vector>

namespace balance {

namespace {

// Splits a comment-stripped line into exactly two unsigned integers.
bool parse_pair(std::string_view s, std::uint64_t& a, std::uint64_t& b) {
    auto skip_ws = [&] {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    };
    auto take = [&](std::uint64_t& out) {
        skip_ws();
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc() || ptr == s.data()) return false;
        s.remove_prefix(std::size_t(ptr - s.data()));
        return s.empty() || s.front() == ' ' || s.front() == '\t' || s.front() == '\r';
    };
    if (!take(a) || !take(b)) return false;
    skip_ws();
    return s.empty();
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view body(line);
        if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        if (body.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        std::uint64_t a = 0, b = 0;
        if (!parse_pair(body, a, b)) {
            throw EdgeListError(lineno, have_header ? "expected two vertex ids \"u v\"" : "expected header \"n m\"");
        }
        if (!have_header) {
            if (a > std::numeric_limits<Vertex>::max()) throw EdgeListError(lineno, "vertex count too large");
            n = a;
            m = b;
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (edges.size() == m) throw EdgeListError(lineno, "more edge lines than the header's m = " + std::to_string(m));
        if (a >= n || b >= n) throw EdgeListError(lineno, "vertex id out of range for n = " + std::to_string(n));
        if (a == b) throw EdgeListError(lineno, "self-loop at vertex " + std::to_string(a));
        edges.emplace_back(Vertex(a), Vertex(b));
    }
    if (!have_header) throw EdgeListError(0, "empty edge list: missing header \"n m\"");
    if (edges.size() != m) {
        throw EdgeListError(lineno, "header declares " + std::to_string(m) + " edges but " +
                                        std::to_string(edges.size()) + " were given");
    }
    return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace balance
