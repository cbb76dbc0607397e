#include "latin/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <sstream>

namespace latin {

using ordered_json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

namespace {

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void fail_at_key(std::string_view text, std::string_view key, const std::string& what)
{
    const auto pos = text.find("\"" + std::string(key) + "\"");
    const auto [line, column] = locate(text, pos == std::string_view::npos ? 0 : pos);
    throw ParseError(what, line, column);
}

std::uint32_t read_count(const ordered_json& doc, std::string_view text, const char* key)
{
    if (!doc.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"", 1, 1);
    const auto& value = doc.at(key);
    if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0 ||
        value.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max())
        fail_at_key(text, key, std::string("field \"") + key + "\" must be a positive integer");
    return value.get<std::uint32_t>();
}

std::string hex_color(double hue)
{
    // HSL with fixed saturation 0.65 and lightness 0.65.
    const double s = 0.65;
    const double l = 0.65;
    const double chroma = (1 - std::abs(2 * l - 1)) * s;
    const double h = hue / 60.0;
    const double x = chroma * (1 - std::abs(std::fmod(h, 2.0) - 1));
    double r = 0, g = 0, b = 0;
    if (h < 1) { r = chroma; g = x; }
    else if (h < 2) { r = x; g = chroma; }
    else if (h < 3) { g = chroma; b = x; }
    else if (h < 4) { g = x; b = chroma; }
    else if (h < 5) { r = x; b = chroma; }
    else { r = chroma; b = x; }
    const double m = l - chroma / 2;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<unsigned>(std::lround((r + m) * 255)),
                  static_cast<unsigned>(std::lround((g + m) * 255)), static_cast<unsigned>(std::lround((b + m) * 255)));
    return buf;
}

// Colors of the two appended columns of row i: the colors missing from the
// row, ordered to continue the run that ends at the row's last cell.
std::vector<std::uint32_t> extra_columns(const Coloring& coloring, std::uint32_t row)
{
    const std::uint32_t n = coloring.order();
    const std::uint32_t k = coloring.num_colors();
    std::vector<bool> present(k, false);
    for (std::uint32_t j = 1; j <= n; ++j)
        present[coloring.at({row, j})] = true;
    std::vector<std::uint32_t> missing;
    for (std::uint32_t c = 0; c < k; ++c)
        if (!present[c])
            missing.push_back(c);
    if (missing.size() != 2)
        throw UsageError("extended columns need every row to miss exactly two colors; row " + std::to_string(row) +
                         " misses " + std::to_string(missing.size()));
    const std::uint32_t next = (coloring.at({row, n}) + 1) % k;
    std::sort(missing.begin(), missing.end(),
              [&](std::uint32_t a, std::uint32_t b) { return (a + k - next) % k < (b + k - next) % k; });
    return missing;
}

std::string render_text(const Coloring& coloring, const RenderSpec& spec, bool extended)
{
    const std::uint32_t n = coloring.order();
    const std::uint32_t k = coloring.num_colors();
    auto shown = [&](std::uint32_t c) { return spec.paper_colors && c == 0 ? k : c; };
    const std::size_t color_width = std::to_string(spec.paper_colors ? k : k - 1).size();
    const std::size_t label_width = std::to_string(n - 1).size();

    std::ostringstream out;
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::vector<std::pair<std::uint32_t, std::optional<std::uint32_t>>> cells;
        for (std::uint32_t j = 1; j <= n; ++j)
            cells.emplace_back(coloring.at({i, j}), label(n, {i, j}));
        if (extended)
            for (auto c : extra_columns(coloring, i))
                cells.emplace_back(c, std::nullopt);
        for (std::size_t t = 0; t < cells.size(); ++t) {
            if (t > 0)
                out << ' ';
            out << std::setw(static_cast<int>(color_width)) << shown(cells[t].first);
            if (spec.show_labels) {
                out << ':' << std::setw(static_cast<int>(label_width));
                if (cells[t].second)
                    out << *cells[t].second;
                else
                    out << '-';
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string render_svg(const Coloring& coloring, const RenderSpec& spec, bool extended)
{
    if (spec.palette.size() < coloring.num_colors())
        throw UsageError("palette has " + std::to_string(spec.palette.size()) + " entries for " +
                         std::to_string(coloring.num_colors()) + " colors");
    const std::uint32_t n = coloring.order();
    const std::uint32_t cols = extended ? n + 2 : n;
    constexpr int cell = 40;
    constexpr int margin = 2;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cols * cell + 2 * margin
        << "\" height=\"" << n * cell + 2 * margin << "\">\n";
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::vector<std::uint32_t> extra;
        if (extended)
            extra = extra_columns(coloring, i);
        for (std::uint32_t j = 1; j <= cols; ++j) {
            const bool inside = j <= n;
            const std::uint32_t c = inside ? coloring.at({i, j}) : extra[j - n - 1];
            const int x = margin + static_cast<int>(j - 1) * cell;
            const int y = margin + static_cast<int>(i - 1) * cell;
            out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
                << "\" fill=\"" << spec.palette[c] << "\" stroke=\"#000000\""
                << (inside ? "" : " stroke-dasharray=\"4,2\"") << "/>\n";
            if (inside)
                out << "  <text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2
                    << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"monospace\" "
                       "font-size=\"16\">"
                    << label(n, {i, j}) << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string export_dimacs(const LatinSquareGraph& graph)
{
    std::ostringstream out;
    out << "c cyclic Latin square graph of order " << graph.order() << '\n';
    out << "p edge " << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
    for (const auto& [u, v] : graph.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

std::string export_coloring_json(const Coloring& coloring, const std::optional<VerificationReport>& report)
{
    ordered_json doc;
    doc["order"] = coloring.order();
    doc["num_colors"] = coloring.num_colors();
    doc["cells"] = coloring.residues();
    if (report) {
        ordered_json v;
        v["proper"] = report->proper;
        v["conflicts"] = report->conflicts.size();
        v["equitable"] = report->equitable;
        std::vector<std::uint64_t> sizes;
        for (const auto& [color, count] : report->class_sizes)
            sizes.push_back(count);
        v["class_sizes"] = sizes;
        doc["verification"] = v;
    }
    return doc.dump(2) + "\n";
}

Coloring import_coloring_json(std::string_view text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(e.what(), line, column);
    }
    if (!doc.is_object())
        throw ParseError("document must be an object", 1, 1);
    const std::uint32_t order = read_count(doc, text, "order");
    const std::uint32_t num_colors = read_count(doc, text, "num_colors");
    if (!doc.contains("cells") || !doc["cells"].is_array())
        fail_at_key(text, "cells", "field \"cells\" must be an array");
    const auto& cells = doc["cells"];
    if (cells.size() != std::uint64_t{order} * order)
        fail_at_key(text, "cells",
                    "expected " + std::to_string(std::uint64_t{order} * order) + " cells, got " +
                        std::to_string(cells.size()));
    std::vector<std::uint32_t> residues;
    residues.reserve(cells.size());
    for (const auto& c : cells) {
        if (!c.is_number_unsigned() || c.get<std::uint64_t>() >= num_colors)
            fail_at_key(text, "cells", "cell " + std::to_string(residues.size()) + " is not a color below " +
                                           std::to_string(num_colors));
        residues.push_back(c.get<std::uint32_t>());
    }
    return Coloring(order, num_colors, std::move(residues));
}

std::vector<std::string> default_palette(std::uint32_t num_colors)
{
    std::vector<std::string> palette;
    palette.reserve(num_colors);
    for (std::uint32_t c = 0; c < num_colors; ++c)
        palette.push_back(hex_color(360.0 * c / num_colors));
    return palette;
}

std::string render_grid(const Coloring& coloring, const RenderSpec& spec)
{
    const bool extended = spec.show_extended_columns && coloring.order() % 2 == 0;
    if (spec.format == RenderFormat::svg)
        return render_svg(coloring, spec, extended);
    return render_text(coloring, spec, extended);
}

std::string render_labels(const CyclicLatinSquare& square)
{
    const std::size_t width = std::to_string(square.order() - 1).size();
    std::ostringstream out;
    for (const auto& row : square.table()) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j > 0 ? " " : "") << std::setw(static_cast<int>(width)) << row[j];
        out << '\n';
    }
    return out.str();
}

} // namespace latin
