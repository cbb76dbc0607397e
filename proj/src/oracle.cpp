#include "latin/oracle.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

namespace latin {

std::string_view to_string(SearchStatus status)
{
    switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::not_found: return "not_found";
    case SearchStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string_view to_string(ChiStatus status)
{
    switch (status) {
    case ChiStatus::exact: return "exact";
    case ChiStatus::lower_and_upper_bounds: return "lower_and_upper_bounds";
    case ChiStatus::timeout: return "timeout";
    }
    return "?";
}

std::string_view to_string(TheoremVerdict verdict)
{
    switch (verdict) {
    case TheoremVerdict::match: return "match";
    case TheoremVerdict::mismatch: return "mismatch";
    case TheoremVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::uint32_t clique_lower_bound(const LatinSquareGraph& graph)
{
    return graph.order();
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int32_t uncolored = -1;

// Deadline shared by consecutive searches of one chromatic_number run.
struct Limits {
    std::optional<std::uint64_t> max_nodes;
    std::optional<Clock::time_point> deadline;
};

Limits start_limits(const SearchBudget& budget, Clock::time_point start)
{
    Limits limits;
    limits.max_nodes = budget.max_nodes;
    if (budget.max_time)
        limits.deadline = start + std::chrono::duration_cast<Clock::duration>(*budget.max_time);
    return limits;
}

class Search {
public:
    Search(const LatinSquareGraph& graph, std::uint32_t k, const Limits& limits, TieBreak tie_break)
        : graph_(graph), n_(graph.vertex_count()), k_(k), limits_(limits), tie_break_(tie_break),
          color_(n_, uncolored), forbidden_(std::size_t{n_} * k, 0), domain_(n_, k),
          uncolored_degree_(n_)
    {
        for (std::uint32_t v = 0; v < n_; ++v)
            uncolored_degree_[v] = static_cast<std::uint32_t>(graph.neighbors(v + 1).size());
    }

    SearchStatus run()
    {
        const std::uint32_t order = graph_.order();
        if (k_ < order)
            return SearchStatus::not_found; // a row is a clique of size n
        // Any proper coloring gives the first row n distinct colors; renaming
        // them to 0..n-1 loses nothing.
        for (std::uint32_t c = 0; c < order; ++c) {
            if (!assign(c, c)) {
                return SearchStatus::not_found;
            }
        }
        used_ = order;
        const auto status = expand();
        return status;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

    Coloring witness() const
    {
        std::vector<std::uint32_t> cells(n_);
        for (std::uint32_t v = 0; v < n_; ++v)
            cells[v] = static_cast<std::uint32_t>(color_[v]);
        return Coloring(graph_.order(), k_, std::move(cells));
    }

private:
    bool out_of_budget()
    {
        if (limits_.max_nodes && nodes_ >= *limits_.max_nodes)
            return true;
        return limits_.deadline && Clock::now() >= *limits_.deadline;
    }

    // Colors v with c and updates neighbor domains. Returns false if some
    // uncolored neighbor is left without a color; the state is still updated
    // and must be undone with unassign.
    bool assign(std::uint32_t v, std::uint32_t c)
    {
        color_[v] = static_cast<std::int32_t>(c);
        --remaining_;
        bool ok = true;
        for (auto u1 : graph_.neighbors(v + 1)) {
            const std::uint32_t u = u1 - 1;
            --uncolored_degree_[u];
            if (color_[u] != uncolored)
                continue;
            if (forbidden_[std::size_t{u} * k_ + c]++ == 0 && --domain_[u] == 0)
                ok = false;
        }
        return ok;
    }

    void unassign(std::uint32_t v)
    {
        const auto c = static_cast<std::uint32_t>(color_[v]);
        for (auto u1 : graph_.neighbors(v + 1)) {
            const std::uint32_t u = u1 - 1;
            ++uncolored_degree_[u];
            if (color_[u] != uncolored)
                continue;
            if (--forbidden_[std::size_t{u} * k_ + c] == 0)
                ++domain_[u];
        }
        color_[v] = uncolored;
        ++remaining_;
    }

    std::uint32_t select_vertex() const
    {
        std::uint32_t best = n_;
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (color_[v] != uncolored)
                continue;
            if (best == n_ || domain_[v] < domain_[best]) {
                best = v;
                continue;
            }
            if (domain_[v] != domain_[best])
                continue;
            if (uncolored_degree_[v] > uncolored_degree_[best] ||
                (uncolored_degree_[v] == uncolored_degree_[best] && tie_break_ == TieBreak::highest_index))
                best = v;
        }
        return best;
    }

    SearchStatus expand()
    {
        if (remaining_ == 0)
            return SearchStatus::found;
        if (out_of_budget())
            return SearchStatus::inconclusive;
        ++nodes_;

        const std::uint32_t v = select_vertex();
        // Unused colors are interchangeable: only the lowest one is tried.
        const std::uint32_t limit = std::min(k_, used_ + 1);
        bool exhausted = true;
        for (std::uint32_t c = 0; c < limit; ++c) {
            if (forbidden_[std::size_t{v} * k_ + c] != 0)
                continue;
            const std::uint32_t saved_used = used_;
            used_ = std::max(used_, c + 1);
            SearchStatus status = SearchStatus::not_found;
            if (assign(v, c))
                status = expand();
            if (status == SearchStatus::found)
                return status;
            unassign(v);
            used_ = saved_used;
            if (status == SearchStatus::inconclusive) {
                exhausted = false;
                break;
            }
        }
        return exhausted ? SearchStatus::not_found : SearchStatus::inconclusive;
    }

    const LatinSquareGraph& graph_;
    std::uint32_t n_;
    std::uint32_t k_;
    Limits limits_;
    TieBreak tie_break_;
    std::vector<std::int32_t> color_;
    std::vector<std::uint32_t> forbidden_; // per (vertex, color): colored neighbors holding the color
    std::vector<std::uint32_t> domain_;    // per vertex: colors with zero forbidding neighbors
    std::vector<std::uint32_t> uncolored_degree_;
    std::uint32_t remaining_ = n_;
    std::uint32_t used_ = 0;
    std::uint64_t nodes_ = 0;
};

SearchOutcome run_search(const LatinSquareGraph& graph, std::uint32_t k, const Limits& limits,
                         TieBreak tie_break = TieBreak::lowest_index)
{
    const auto start = Clock::now();
    SearchOutcome outcome;
    Search search(graph, k, limits, tie_break);
    outcome.status = search.run();
    if (outcome.status == SearchStatus::found)
        outcome.witness = search.witness();
    outcome.stats.nodes = search.nodes();
    outcome.stats.elapsed = Clock::now() - start;
    return outcome;
}

} // namespace

SearchOutcome exists_coloring(const LatinSquareGraph& graph, std::uint32_t k, const SearchBudget& budget,
                              TieBreak tie_break)
{
    if (k == 0)
        throw UsageError("k must be at least 1");
    return run_search(graph, k, start_limits(budget, Clock::now()), tie_break);
}

ChiResult chromatic_number(const LatinSquareGraph& graph, const SearchBudget& budget)
{
    const auto start = Clock::now();
    const Limits overall = start_limits(budget, start);

    // The descent gets 7/8 of a bounded budget; the rest is kept for cheap
    // refutations of small k should the descent stall.
    Limits descent = overall;
    if (budget.max_nodes)
        descent.max_nodes = *budget.max_nodes - *budget.max_nodes / 8;
    if (budget.max_time)
        descent.deadline = start + std::chrono::duration_cast<Clock::duration>(*budget.max_time * 7 / 8);

    ChiResult result;
    result.lower_bound = clique_lower_bound(graph);
    result.witness = color_board(graph.order());
    result.upper_bound = result.witness->num_colors();

    std::uint64_t nodes_used = 0;
    auto search = [&](std::uint32_t k, Limits limits) {
        if (limits.max_nodes)
            limits.max_nodes = *limits.max_nodes - std::min(*limits.max_nodes, nodes_used);
        auto outcome = run_search(graph, k, limits);
        nodes_used += outcome.stats.nodes;
        return outcome;
    };

    bool stalled = false;
    while (result.lower_bound < result.upper_bound) {
        auto outcome = search(result.upper_bound - 1, descent);
        if (outcome.status == SearchStatus::found) {
            --result.upper_bound;
            result.witness = std::move(outcome.witness);
        } else if (outcome.status == SearchStatus::not_found) {
            result.lower_bound = result.upper_bound;
        } else {
            stalled = true;
            break;
        }
    }

    if (stalled) {
        while (result.lower_bound + 1 < result.upper_bound) {
            auto outcome = search(result.lower_bound, overall);
            if (outcome.status != SearchStatus::not_found)
                break;
            ++result.lower_bound;
        }
    }

    if (result.lower_bound == result.upper_bound) {
        result.status = ChiStatus::exact;
        result.chi = result.upper_bound;
    } else if (result.lower_bound > clique_lower_bound(graph)) {
        result.status = ChiStatus::lower_and_upper_bounds;
    } else {
        result.status = ChiStatus::timeout;
    }
    result.stats.nodes = nodes_used;
    result.stats.elapsed = Clock::now() - start;
    return result;
}

TheoremReport verify_theorem(std::uint32_t order, const SearchBudget& budget)
{
    TheoremReport report;
    report.order = order;
    report.expected_chi = closed_form_colors(order);
    report.result = chromatic_number(build_graph(order), budget);
    if (report.result.status != ChiStatus::exact)
        report.verdict = TheoremVerdict::inconclusive;
    else
        report.verdict = *report.result.chi == report.expected_chi ? TheoremVerdict::match : TheoremVerdict::mismatch;
    return report;
}

} // namespace latin
