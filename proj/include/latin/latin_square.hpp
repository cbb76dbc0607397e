#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latin {

/// Raised when a cell or color lies outside the board it is used with.
class DomainError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised when an operation is invoked with arguments it does not accept
/// (wrong parity, mismatched orders, bad palette).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A cell of the n x n board, 1-based.
struct Cell {
    std::uint32_t row = 1;
    std::uint32_t col = 1;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);

/// Throws DomainError naming the offending coordinate unless 1 <= row, col <= order.
void require_in_range(std::uint32_t order, const Cell& cell);

/// Label of cell (i, j) in the Cayley table of Z_n: (i + j - 2) mod n.
std::uint32_t label(std::uint32_t order, const Cell& cell);

/// True iff the two cells share a row, a column or a label. A cell is not
/// adjacent to itself.
bool adjacent(std::uint32_t order, const Cell& a, const Cell& b);

/// The cyclic Latin square of order n.
class CyclicLatinSquare {
public:
    explicit CyclicLatinSquare(std::uint32_t order);

    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t label(const Cell& cell) const { return latin::label(order_, cell); }

    /// Row-major table of labels.
    std::vector<std::vector<std::uint32_t>> table() const;

private:
    std::uint32_t order_;
};

/// Latin square graph of the cyclic Latin square: vertices are the n^2 cells,
/// vertex index (row - 1) * n + col. Adjacency lists are materialized at
/// construction and sorted ascending.
class LatinSquareGraph {
public:
    using Vertex = std::uint32_t; ///< 1-based vertex index
    using Edge = std::pair<Vertex, Vertex>;

    explicit LatinSquareGraph(std::uint32_t order);

    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t vertex_count() const noexcept { return order_ * order_; }
    std::uint64_t edge_count() const noexcept;

    Vertex vertex_index(const Cell& cell) const;
    Cell cell_at(Vertex v) const;

    /// Sorted neighbor indices of vertex v.
    const std::vector<Vertex>& neighbors(Vertex v) const;
    std::vector<Cell> neighbors(const Cell& cell) const;

    bool adjacent(const Cell& a, const Cell& b) const { return latin::adjacent(order_, a, b); }

    /// All edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

private:
    std::uint32_t order_;
    std::vector<std::vector<Vertex>> adjacency_;
};

LatinSquareGraph build_graph(std::uint32_t order);

} // namespace latin
