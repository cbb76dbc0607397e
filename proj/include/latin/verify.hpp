#pragma once

#include "latin/coloring.hpp"
#include "latin/latin_square.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace latin {

using ClassSizes = std::map<std::uint32_t, std::uint64_t>;

struct VerificationReport {
    bool proper = true;
    std::vector<std::pair<Cell, Cell>> conflicts; ///< monochromatic edges, each once, first < second
    ClassSizes class_sizes;                       ///< every residue 0..k-1, zero counts included
    bool equitable = true;
    std::uint64_t max_class = 0;
    std::uint64_t min_class = 0;
};

/// Properness and class-size report. Throws UsageError on order mismatch.
VerificationReport check_proper(const LatinSquareGraph& graph, const Coloring& coloring);

ClassSizes color_class_sizes(const Coloring& coloring);

/// True iff the largest and smallest color classes differ by at most one.
/// Colors that are never used count as empty classes.
bool check_equitable(const Coloring& coloring);

enum class Parity { empty, even, odd, mixed };
std::string_view to_string(Parity parity);

/// Labels of one color class of an even-order coloring, split at row n/2.
struct ParityFinding {
    std::uint32_t color = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> first_half_labels;  ///< (row, label), row order
    std::vector<std::pair<std::uint32_t, std::uint32_t>> second_half_labels; ///< (row, label), row order
    Parity first_half_parity = Parity::empty;
    Parity second_half_parity = Parity::empty;
    bool distinct_within_halves = true;

    /// Neither half mixed, and opposite whenever both are nonempty.
    bool opposite_parities() const noexcept;
};

/// Parity finding for a color of the closed-form even coloring.
ParityFinding parity_structure(std::uint32_t order, std::uint32_t color);

/// Parity finding for a color of an arbitrary coloring of even order.
ParityFinding parity_structure(const Coloring& coloring, std::uint32_t color);

/// Walks each half of the closed-form even coloring and checks the step rule
/// for one color: labels in consecutive rows differ by 2 (mod n), labels with
/// two blank rows between them (color sitting in column n+1 or n+2) differ by
/// 4 (mod n). Requires even n >= 4.
bool label_sequence_check(std::uint32_t order, std::uint32_t color);

/// Same step rule on an arbitrary coloring of even order, where a blank row is
/// one in which the color does not occur. Stricter than the closed-form
/// variant: a row holding the color twice, or a run of blanks other than
/// two, fails.
bool label_sequence_check(const Coloring& coloring, std::uint32_t color);

/// True iff every row is the previous row cyclically shifted right by one
/// (by two entering row n/2 + 1 when n is even), with the closed-form number
/// of colors and ascending runs within each row.
bool check_shift_structure(const Coloring& coloring);

/// The four residues whose classes have n - 1 cells in the even closed-form
/// coloring: n/2, n/2 + 1, n + 1 and 0. Requires even n >= 4.
std::vector<std::uint32_t> large_class_residues(std::uint32_t order);

/// Everything the verify command reports on one coloring.
struct SuiteReport {
    VerificationReport properness;
    bool shift_structure = false;
    std::vector<ParityFinding> parity;   ///< one per residue, even n only
    std::vector<bool> sequence_ok;       ///< one per residue, even n >= 4 only

    bool parity_ok() const noexcept;
    bool sequences_ok() const noexcept;
    /// Properness, equitability and every structural check.
    bool all_ok() const noexcept;
};

SuiteReport verify_suite(const LatinSquareGraph& graph, const Coloring& coloring);

} // namespace latin
