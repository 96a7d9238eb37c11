#pragma once

#include "oddcore/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace oddcore {

// Text interchange format:
//   line 1: "n m"
//   then m lines "u v" with 0-based ids.
// Lines starting with '#' are comments; blank lines are skipped.
inline Graph read_edge_list(std::istream& in) {
    auto next_data_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_data_line(line)) throw input_error("edge list: missing header line");
    long long n = 0, m = 0;
    {
        std::istringstream iss(line);
        if (!(iss >> n >> m) || n < 0 || m < 0)
            throw input_error("edge list: malformed header '" + line + "'");
    }
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(line))
            throw input_error("edge list: expected " + std::to_string(m) +
                              " edges, got " + std::to_string(i));
        std::istringstream iss(line);
        long long u = 0, v = 0;
        if (!(iss >> u >> v))
            throw input_error("edge list: malformed edge line '" + line + "'");
        pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), pairs);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline Graph graph_from_edge_list_text(const std::string& text) {
    std::istringstream iss(text);
    return read_edge_list(iss);
}

inline std::string edge_list_text(const Graph& g) {
    std::ostringstream oss;
    write_edge_list(oss, g);
    return oss.str();
}

} // namespace oddcore
