#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddcore {

using Vertex = int;
using VertexList = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Thrown on malformed input (bad vertex ids, violated preconditions, ...).
// The CLI maps this to exit code 1.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown by operations that promise an exact answer when the node budget
// runs out before the search space is exhausted. Maps to exit code 2.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Path/walk parity is always the parity of the ORDER (number of vertices),
// never the number of edges.
enum class Parity { even, odd };

inline Parity parity_of_order(int order) {
    return order % 2 == 0 ? Parity::even : Parity::odd;
}

inline const char* to_string(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

enum class SearchStatus { found, absent, budget_exceeded };

inline const char* to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    default: return "budget_exceeded";
    }
}

// `absent` is only ever reported after exhausting the search space;
// a search that gives up early reports budget_exceeded instead.
template <class Witness> struct SearchOutcome {
    SearchStatus status = SearchStatus::absent;
    std::optional<Witness> witness;
    long long nodes_explored = 0;

    bool found() const { return status == SearchStatus::found; }
    bool absent() const { return status == SearchStatus::absent; }
    bool exhausted_budget() const { return status == SearchStatus::budget_exceeded; }
};

constexpr long long kDefaultBudget = 100'000'000;

// Simple path, listed endpoint to endpoint.
struct PathWitness {
    VertexList vertices;

    int order() const { return static_cast<int>(vertices.size()); }
    Parity parity() const { return parity_of_order(order()); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }

    bool operator==(const PathWitness&) const = default;
};

// Simple cycle, listed once around; vertices.front() is adjacent to
// vertices.back().
struct CycleWitness {
    VertexList vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    bool operator==(const CycleWitness&) const = default;
};

} // namespace oddcore
