#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "balance/graph.hpp"

namespace balance {

/// Malformed edge-list input; line() is 1-based, 0 when not tied to a line.
class EdgeListError : public std::runtime_error {
public:
    EdgeListError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Format: header "n m", then m lines "u v" with 0-based ids. Blank lines and
// anything after '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace balance
