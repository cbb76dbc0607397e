#include "latin/latin_square.hpp"

#include <algorithm>

namespace latin {

std::string to_string(const Cell& cell)
{
    return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

void require_in_range(std::uint32_t order, const Cell& cell)
{
    if (cell.row < 1 || cell.row > order)
        throw DomainError("row " + std::to_string(cell.row) + " of cell " + to_string(cell) +
                          " outside 1.." + std::to_string(order));
    if (cell.col < 1 || cell.col > order)
        throw DomainError("column " + std::to_string(cell.col) + " of cell " + to_string(cell) +
                          " outside 1.." + std::to_string(order));
}

std::uint32_t label(std::uint32_t order, const Cell& cell)
{
    require_in_range(order, cell);
    return (cell.row + cell.col - 2) % order;
}

bool adjacent(std::uint32_t order, const Cell& a, const Cell& b)
{
    require_in_range(order, a);
    require_in_range(order, b);
    if (a == b)
        return false;
    return a.row == b.row || a.col == b.col || label(order, a) == label(order, b);
}

CyclicLatinSquare::CyclicLatinSquare(std::uint32_t order) : order_(order)
{
    if (order == 0)
        throw DomainError("order must be at least 1");
}

std::vector<std::vector<std::uint32_t>> CyclicLatinSquare::table() const
{
    std::vector<std::vector<std::uint32_t>> rows(order_, std::vector<std::uint32_t>(order_));
    for (std::uint32_t i = 1; i <= order_; ++i)
        for (std::uint32_t j = 1; j <= order_; ++j)
            rows[i - 1][j - 1] = label({i, j});
    return rows;
}

LatinSquareGraph::LatinSquareGraph(std::uint32_t order) : order_(order)
{
    if (order == 0)
        throw DomainError("order must be at least 1");
    const std::uint32_t n = order;
    adjacency_.resize(std::size_t{n} * n);
    // Row, column and label neighborhoods are disjoint apart from the cell
    // itself, so each list gets exactly 3(n-1) entries.
    for (std::uint32_t i = 1; i <= n; ++i) {
        for (std::uint32_t j = 1; j <= n; ++j) {
            auto& adj = adjacency_[vertex_index({i, j}) - 1];
            adj.reserve(3 * (n - 1));
            for (std::uint32_t t = 1; t <= n; ++t) {
                if (t != j)
                    adj.push_back(vertex_index({i, t}));
                if (t != i)
                    adj.push_back(vertex_index({t, j}));
                if (t != i) {
                    // the unique column in row t carrying the same label
                    const std::uint32_t col = ((i + j + n - t - 1) % n) + 1;
                    adj.push_back(vertex_index({t, col}));
                }
            }
            std::sort(adj.begin(), adj.end());
        }
    }
}

std::uint64_t LatinSquareGraph::edge_count() const noexcept
{
    const std::uint64_t n = order_;
    return n * n * 3 * (n - 1) / 2;
}

LatinSquareGraph::Vertex LatinSquareGraph::vertex_index(const Cell& cell) const
{
    require_in_range(order_, cell);
    return (cell.row - 1) * order_ + cell.col;
}

Cell LatinSquareGraph::cell_at(Vertex v) const
{
    if (v < 1 || v > vertex_count())
        throw DomainError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(vertex_count()));
    return {(v - 1) / order_ + 1, (v - 1) % order_ + 1};
}

const std::vector<LatinSquareGraph::Vertex>& LatinSquareGraph::neighbors(Vertex v) const
{
    if (v < 1 || v > vertex_count())
        throw DomainError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(vertex_count()));
    return adjacency_[v - 1];
}

std::vector<Cell> LatinSquareGraph::neighbors(const Cell& cell) const
{
    const auto& adj = neighbors(vertex_index(cell));
    std::vector<Cell> out;
    out.reserve(adj.size());
    for (Vertex v : adj)
        out.push_back(cell_at(v));
    return out;
}

std::vector<LatinSquareGraph::Edge> LatinSquareGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 1; u <= vertex_count(); ++u)
        for (Vertex v : adjacency_[u - 1])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

LatinSquareGraph build_graph(std::uint32_t order)
{
    return LatinSquareGraph(order);
}

} // namespace latin
