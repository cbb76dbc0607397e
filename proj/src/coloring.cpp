#include "latin/coloring.hpp"

#include <string>
#include <utility>

namespace latin {

namespace {

std::uint32_t mod_diff(std::int64_t value, std::uint32_t modulus)
{
    const auto m = static_cast<std::int64_t>(modulus);
    return static_cast<std::uint32_t>(((value % m) + m) % m);
}

} // namespace

Coloring::Coloring(std::uint32_t order, std::uint32_t num_colors, std::vector<std::uint32_t> residues)
    : order_(order), num_colors_(num_colors), residues_(std::move(residues))
{
    if (order == 0)
        throw DomainError("order must be at least 1");
    if (num_colors == 0)
        throw UsageError("num_colors must be at least 1");
    if (residues_.size() != std::size_t{order} * order)
        throw UsageError("coloring of order " + std::to_string(order) + " needs " +
                         std::to_string(std::size_t{order} * order) + " cells, got " +
                         std::to_string(residues_.size()));
    for (std::size_t i = 0; i < residues_.size(); ++i)
        if (residues_[i] >= num_colors)
            throw DomainError("color " + std::to_string(residues_[i]) + " at position " + std::to_string(i) +
                              " not below num_colors " + std::to_string(num_colors));
}

std::size_t Coloring::offset(const Cell& cell) const
{
    require_in_range(order_, cell);
    return std::size_t{cell.row - 1} * order_ + (cell.col - 1);
}

std::uint32_t Coloring::at(const Cell& cell) const
{
    return residues_[offset(cell)];
}

Coloring Coloring::with_swapped(const Cell& a, const Cell& b) const
{
    Coloring copy = *this;
    std::swap(copy.residues_[offset(a)], copy.residues_[offset(b)]);
    return copy;
}

std::uint32_t ExtendedBoard::at(std::uint32_t row, std::uint32_t col) const
{
    if (row < 1 || row > rows())
        throw DomainError("row " + std::to_string(row) + " outside 1.." + std::to_string(rows()));
    if (col < 1 || col > cols())
        throw DomainError("column " + std::to_string(col) + " outside 1.." + std::to_string(cols()));
    return residues_[std::size_t{row - 1} * cols() + (col - 1)];
}

std::vector<std::uint32_t> ExtendedBoard::row(std::uint32_t row) const
{
    std::vector<std::uint32_t> out;
    out.reserve(cols());
    for (std::uint32_t j = 1; j <= cols(); ++j)
        out.push_back(at(row, j));
    return out;
}

Coloring ExtendedBoard::restrict_to_square() const
{
    std::vector<std::uint32_t> cells;
    cells.reserve(std::size_t{order_} * order_);
    for (std::uint32_t i = 1; i <= order_; ++i)
        for (std::uint32_t j = 1; j <= order_; ++j)
            cells.push_back(at(i, j));
    return Coloring(order_, num_colors(), std::move(cells));
}

std::uint32_t closed_form_colors(std::uint32_t order)
{
    if (order == 0)
        throw DomainError("order must be at least 1");
    return order % 2 == 1 ? order : order + 2;
}

std::uint32_t color_cell_odd(std::uint32_t order, const Cell& cell)
{
    if (order % 2 == 0)
        throw UsageError("color_cell_odd needs an odd order, got " + std::to_string(order) +
                         "; use color_cell_even");
    require_in_range(order, cell);
    return mod_diff(std::int64_t{cell.col} - cell.row, order);
}

std::uint32_t color_cell_even(std::uint32_t order, const Cell& cell)
{
    if (order == 0 || order % 2 == 1)
        throw UsageError("color_cell_even needs an even order, got " + std::to_string(order) +
                         "; use color_cell_odd");
    if (cell.row < 1 || cell.row > order)
        throw DomainError("row " + std::to_string(cell.row) + " of cell " + to_string(cell) + " outside 1.." +
                          std::to_string(order));
    if (cell.col < 1 || cell.col > order + 2)
        throw DomainError("column " + std::to_string(cell.col) + " of cell " + to_string(cell) + " outside 1.." +
                          std::to_string(order + 2));
    const std::int64_t shift = cell.row <= order / 2 ? 0 : 1;
    return mod_diff(std::int64_t{cell.col} - cell.row - shift, order + 2);
}

Coloring color_board(std::uint32_t order)
{
    const std::uint32_t k = closed_form_colors(order);
    std::vector<std::uint32_t> cells;
    cells.reserve(std::size_t{order} * order);
    for (std::uint32_t i = 1; i <= order; ++i)
        for (std::uint32_t j = 1; j <= order; ++j)
            cells.push_back(order % 2 == 1 ? color_cell_odd(order, {i, j}) : color_cell_even(order, {i, j}));
    return Coloring(order, k, std::move(cells));
}

ExtendedBoard extended_board(std::uint32_t order)
{
    if (order == 0 || order % 2 == 1)
        throw UsageError("extended_board needs an even order, got " + std::to_string(order));
    std::vector<std::uint32_t> cells;
    cells.reserve(std::size_t{order} * (order + 2));
    for (std::uint32_t i = 1; i <= order; ++i)
        for (std::uint32_t j = 1; j <= order + 2; ++j)
            cells.push_back(color_cell_even(order, {i, j}));
    return ExtendedBoard(order, std::move(cells));
}

} // namespace latin
