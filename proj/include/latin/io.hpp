#pragma once

#include "latin/coloring.hpp"
#include "latin/latin_square.hpp"
#include "latin/verify.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latin {

/// Malformed coloring document. line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// DIMACS .col text: one comment line, the problem line, then "e u v" for
/// every edge with u < v in lexicographic order.
std::string export_dimacs(const LatinSquareGraph& graph);

/// JSON document with order, num_colors and the row-major cell colors, plus
/// a verification section when a report is given.
std::string export_coloring_json(const Coloring& coloring, const std::optional<VerificationReport>& report = {});

/// Reads a document written by export_coloring_json. Any verification section
/// is ignored.
Coloring import_coloring_json(std::string_view text);

enum class RenderFormat { text, svg };

struct RenderSpec {
    RenderFormat format = RenderFormat::text;
    bool show_labels = false;
    bool show_extended_columns = false;
    bool paper_colors = false;        ///< print residue 0 as k (text only)
    std::vector<std::string> palette; ///< SVG fill per residue
};

/// k evenly spaced hues as #rrggbb strings.
std::vector<std::string> default_palette(std::uint32_t num_colors);

/// Text grid or SVG document of the coloring. The two extra columns are drawn
/// only for even orders; each row must then miss exactly two colors, which
/// are placed so as to continue the row's cyclic run.
std::string render_grid(const Coloring& coloring, const RenderSpec& spec);

/// Text grid of the Latin square labels.
std::string render_labels(const CyclicLatinSquare& square);

} // namespace latin
