#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "codis/graph.hpp"

namespace codis {

struct FormatError : std::runtime_error {
    size_t offset;  // byte offset (graph6/sparse6) or line number (edge lists)
    FormatError(const std::string& what, size_t off)
        : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

Graph parse_graph6(std::string_view text);
Graph parse_sparse6(std::string_view text);
// Dispatches on the ':' sparse6 prefix and strips optional format headers.
Graph parse_graph_line(std::string_view line);

std::string emit_graph6(const Graph& g);

}  // namespace codis
