#pragma once

#include "latin/latin_square.hpp"

#include <cstdint>
#include <vector>

namespace latin {

/// A total assignment of color residues 0..num_colors-1 to the cells of an
/// n x n board, stored row-major.
///
/// Residue r corresponds to the 1-based color r when r > 0 and to color
/// num_colors when r == 0.
class Coloring {
public:
    /// Throws UsageError if the cell count is not order^2 and DomainError if
    /// a residue is not below num_colors.
    Coloring(std::uint32_t order, std::uint32_t num_colors, std::vector<std::uint32_t> residues);

    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t num_colors() const noexcept { return num_colors_; }
    const std::vector<std::uint32_t>& residues() const noexcept { return residues_; }

    std::uint32_t at(const Cell& cell) const;

    /// Returns a copy with the colors of two cells exchanged.
    Coloring with_swapped(const Cell& a, const Cell& b) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::size_t offset(const Cell& cell) const;

    std::uint32_t order_;
    std::uint32_t num_colors_;
    std::vector<std::uint32_t> residues_;
};

/// The n+2 columns wide board on which the even-order coloring is a pure
/// row-shift pattern. Columns n+1 and n+2 lie outside the Latin square.
class ExtendedBoard {
public:
    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t rows() const noexcept { return order_; }
    std::uint32_t cols() const noexcept { return order_ + 2; }
    std::uint32_t num_colors() const noexcept { return order_ + 2; }

    /// Color at (row, col) with 1 <= col <= n + 2.
    std::uint32_t at(std::uint32_t row, std::uint32_t col) const;
    std::vector<std::uint32_t> row(std::uint32_t row) const;

    /// Columns 1..n as a Coloring.
    Coloring restrict_to_square() const;

private:
    friend ExtendedBoard extended_board(std::uint32_t order);
    ExtendedBoard(std::uint32_t order, std::vector<std::uint32_t> residues)
        : order_(order), residues_(std::move(residues)) {}

    std::uint32_t order_;
    std::vector<std::uint32_t> residues_;
};

/// Number of colors used by the closed-form coloring: n for odd n, n+2 for even n.
std::uint32_t closed_form_colors(std::uint32_t order);

/// (col - row) mod n. Requires odd n.
std::uint32_t color_cell_odd(std::uint32_t order, const Cell& cell);

/// (col - row) mod (n+2) for row <= n/2 and (col - row - 1) mod (n+2) below.
/// Requires even n; col may run up to n+2 to address the extended board.
std::uint32_t color_cell_even(std::uint32_t order, const Cell& cell);

Coloring color_board(std::uint32_t order);

ExtendedBoard extended_board(std::uint32_t order);

} // namespace latin
