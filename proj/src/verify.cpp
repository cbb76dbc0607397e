#include "latin/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace latin {

namespace {

void require_even(std::uint32_t order, std::uint32_t min_order, const char* what)
{
    if (order % 2 == 1 || order < min_order)
        throw UsageError(std::string(what) + " needs an even order >= " + std::to_string(min_order) + ", got " +
                         std::to_string(order));
}

void require_color(std::uint32_t num_colors, std::uint32_t color)
{
    if (color >= num_colors)
        throw DomainError("color " + std::to_string(color) + " not below " + std::to_string(num_colors));
}

Parity parity_of(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& labels)
{
    if (labels.empty())
        return Parity::empty;
    const auto first = labels.front().second % 2;
    for (const auto& [row, lbl] : labels)
        if (lbl % 2 != first)
            return Parity::mixed;
    return first == 0 ? Parity::even : Parity::odd;
}

bool distinct_labels(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& labels)
{
    std::set<std::uint32_t> seen;
    for (const auto& [row, lbl] : labels)
        if (!seen.insert(lbl).second)
            return false;
    return true;
}

// One half of one color: row -> label, or nothing for a blank row.
using HalfSequence = std::vector<std::optional<std::uint32_t>>;

bool steps_conform(std::uint32_t order, const HalfSequence& half)
{
    std::optional<std::size_t> previous;
    for (std::size_t r = 0; r < half.size(); ++r) {
        if (!half[r])
            continue;
        if (previous) {
            const std::size_t gap = r - *previous;
            const std::uint32_t step = (*half[r] + order - *half[*previous]) % order;
            if (gap == 1 && step != 2 % order)
                return false;
            if (gap == 3 && step != 4 % order)
                return false;
            if (gap != 1 && gap != 3)
                return false;
        }
        previous = r;
    }
    return true;
}

} // namespace

VerificationReport check_proper(const LatinSquareGraph& graph, const Coloring& coloring)
{
    if (graph.order() != coloring.order())
        throw UsageError("coloring of order " + std::to_string(coloring.order()) + " checked against graph of order " +
                         std::to_string(graph.order()));
    VerificationReport report;
    const auto& colors = coloring.residues();
    for (const auto& [u, v] : graph.edges())
        if (colors[u - 1] == colors[v - 1])
            report.conflicts.emplace_back(graph.cell_at(u), graph.cell_at(v));
    report.proper = report.conflicts.empty();
    report.class_sizes = color_class_sizes(coloring);
    const auto [lo, hi] = std::minmax_element(report.class_sizes.begin(), report.class_sizes.end(),
                                              [](const auto& a, const auto& b) { return a.second < b.second; });
    report.min_class = lo->second;
    report.max_class = hi->second;
    report.equitable = report.max_class - report.min_class <= 1;
    return report;
}

ClassSizes color_class_sizes(const Coloring& coloring)
{
    ClassSizes sizes;
    for (std::uint32_t c = 0; c < coloring.num_colors(); ++c)
        sizes[c] = 0;
    for (auto c : coloring.residues())
        ++sizes[c];
    return sizes;
}

bool check_equitable(const Coloring& coloring)
{
    const auto sizes = color_class_sizes(coloring);
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end(),
                                              [](const auto& a, const auto& b) { return a.second < b.second; });
    return hi->second - lo->second <= 1;
}

std::string_view to_string(Parity parity)
{
    switch (parity) {
    case Parity::empty: return "empty";
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mixed: return "mixed";
    }
    return "?";
}

bool ParityFinding::opposite_parities() const noexcept
{
    if (first_half_parity == Parity::mixed || second_half_parity == Parity::mixed)
        return false;
    if (first_half_parity == Parity::empty || second_half_parity == Parity::empty)
        return true;
    return first_half_parity != second_half_parity;
}

ParityFinding parity_structure(std::uint32_t order, std::uint32_t color)
{
    require_even(order, 2, "parity_structure");
    require_color(order + 2, color);
    return parity_structure(color_board(order), color);
}

ParityFinding parity_structure(const Coloring& coloring, std::uint32_t color)
{
    const std::uint32_t n = coloring.order();
    require_even(n, 2, "parity_structure");
    require_color(coloring.num_colors(), color);
    ParityFinding finding;
    finding.color = color;
    for (std::uint32_t i = 1; i <= n; ++i) {
        auto& half = i <= n / 2 ? finding.first_half_labels : finding.second_half_labels;
        for (std::uint32_t j = 1; j <= n; ++j)
            if (coloring.at({i, j}) == color)
                half.emplace_back(i, label(n, {i, j}));
    }
    finding.first_half_parity = parity_of(finding.first_half_labels);
    finding.second_half_parity = parity_of(finding.second_half_labels);
    finding.distinct_within_halves =
        distinct_labels(finding.first_half_labels) && distinct_labels(finding.second_half_labels);
    return finding;
}

bool label_sequence_check(std::uint32_t order, std::uint32_t color)
{
    require_even(order, 4, "label_sequence_check");
    require_color(order + 2, color);
    const auto board = extended_board(order);
    for (const auto& [first, last] : {std::pair{1u, order / 2}, std::pair{order / 2 + 1, order}}) {
        HalfSequence half;
        for (std::uint32_t i = first; i <= last; ++i) {
            std::optional<std::uint32_t> entry;
            for (std::uint32_t j = 1; j <= order; ++j)
                if (board.at(i, j) == color)
                    entry = label(order, {i, j});
            half.push_back(entry);
        }
        // Consecutive labeled rows are one or three rows apart on the
        // extended board, so the strict walk applies unchanged.
        if (!steps_conform(order, half))
            return false;
    }
    return true;
}

bool label_sequence_check(const Coloring& coloring, std::uint32_t color)
{
    const std::uint32_t n = coloring.order();
    require_even(n, 4, "label_sequence_check");
    require_color(coloring.num_colors(), color);
    for (const auto& [first, last] : {std::pair{1u, n / 2}, std::pair{n / 2 + 1, n}}) {
        HalfSequence half;
        for (std::uint32_t i = first; i <= last; ++i) {
            std::optional<std::uint32_t> entry;
            for (std::uint32_t j = 1; j <= n; ++j) {
                if (coloring.at({i, j}) != color)
                    continue;
                if (entry)
                    return false;
                entry = label(n, {i, j});
            }
            half.push_back(entry);
        }
        if (!steps_conform(n, half))
            return false;
    }
    return true;
}

bool check_shift_structure(const Coloring& coloring)
{
    const std::uint32_t n = coloring.order();
    const std::uint32_t k = closed_form_colors(n);
    if (coloring.num_colors() != k)
        return false;
    std::uint32_t start = coloring.at({1, 1});
    for (std::uint32_t i = 1; i <= n; ++i) {
        if (i > 1) {
            const std::uint32_t shift = (n % 2 == 0 && i == n / 2 + 1) ? 2 : 1;
            start = (start + k - shift) % k;
        }
        for (std::uint32_t j = 1; j <= n; ++j)
            if (coloring.at({i, j}) != (start + j - 1) % k)
                return false;
    }
    return true;
}

std::vector<std::uint32_t> large_class_residues(std::uint32_t order)
{
    require_even(order, 4, "large_class_residues");
    return {order / 2, order / 2 + 1, order + 1, 0};
}

bool SuiteReport::parity_ok() const noexcept
{
    return std::all_of(parity.begin(), parity.end(),
                       [](const ParityFinding& f) { return f.opposite_parities() && f.distinct_within_halves; });
}

bool SuiteReport::sequences_ok() const noexcept
{
    return std::all_of(sequence_ok.begin(), sequence_ok.end(), [](bool ok) { return ok; });
}

bool SuiteReport::all_ok() const noexcept
{
    return properness.proper && properness.equitable && shift_structure && parity_ok() && sequences_ok();
}

SuiteReport verify_suite(const LatinSquareGraph& graph, const Coloring& coloring)
{
    SuiteReport report;
    report.properness = check_proper(graph, coloring);
    report.shift_structure = check_shift_structure(coloring);
    const std::uint32_t n = coloring.order();
    if (n % 2 == 0) {
        for (std::uint32_t c = 0; c < coloring.num_colors(); ++c) {
            report.parity.push_back(parity_structure(coloring, c));
            if (n >= 4)
                report.sequence_ok.push_back(label_sequence_check(coloring, c));
        }
    }
    return report;
}

} // namespace latin
