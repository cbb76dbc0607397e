#pragma once

#include "latin/coloring.hpp"
#include "latin/latin_square.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

namespace latin {

/// Limits on a search. Both empty means unbounded.
struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::duration<double>> max_time;

    static SearchBudget unbounded() { return {}; }
    bool is_unbounded() const noexcept { return !max_nodes && !max_time; }
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::chrono::duration<double> elapsed{0};
};

/// Which vertex wins among equally saturated, equally constrained candidates.
enum class TieBreak { lowest_index, highest_index };

enum class SearchStatus { found, not_found, inconclusive };
std::string_view to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::inconclusive;
    std::optional<Coloring> witness;
    SearchStats stats;
};

/// Bound on the chromatic number certified by a single row clique: n.
std::uint32_t clique_lower_bound(const LatinSquareGraph& graph);

/// Decides whether the graph has a proper coloring with k colors.
///
/// Backtracking with saturation-degree (DSATUR) vertex selection and forward
/// checking. The first row is a clique and is pre-colored 0..n-1; further
/// colors are introduced in ascending order only. not_found is returned only
/// after the whole tree is exhausted, inconclusive only when the budget runs
/// out.
SearchOutcome exists_coloring(const LatinSquareGraph& graph, std::uint32_t k, const SearchBudget& budget,
                              TieBreak tie_break = TieBreak::lowest_index);

enum class ChiStatus { exact, lower_and_upper_bounds, timeout };
std::string_view to_string(ChiStatus status);

struct ChiResult {
    ChiStatus status = ChiStatus::timeout;
    std::optional<std::uint32_t> chi;
    std::uint32_t lower_bound = 0;
    std::uint32_t upper_bound = 0;
    std::optional<Coloring> witness; ///< proper coloring with upper_bound colors
    SearchStats stats;
};

/// Exact chromatic number of the Latin square graph, or the best bounds the
/// budget allows.
///
/// Starts from the closed-form coloring as the upper-bound witness and tries
/// k = upper - 1, upper - 2, ... until a k is refuted. A bounded budget is
/// shared by all searches; the descent may use 7/8 of it, and if it stalls
/// the remainder goes to refuting small k upward from the clique bound.
ChiResult chromatic_number(const LatinSquareGraph& graph, const SearchBudget& budget);

enum class TheoremVerdict { match, mismatch, inconclusive };
std::string_view to_string(TheoremVerdict verdict);

struct TheoremReport {
    std::uint32_t order = 0;
    std::uint32_t expected_chi = 0; ///< n for odd n, n + 2 for even n
    TheoremVerdict verdict = TheoremVerdict::inconclusive;
    ChiResult result;
};

/// Compares the searched chromatic number with the closed-form value.
TheoremReport verify_theorem(std::uint32_t order, const SearchBudget& budget);

} // namespace latin
