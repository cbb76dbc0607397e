#include "latin/cli.hpp"

#include "latin/coloring.hpp"
#include "latin/io.hpp"
#include "latin/latin_square.hpp"
#include "latin/oracle.hpp"
#include "latin/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace latin {

namespace {

// Adjacency lists are materialized, so keep n^2 * 3(n-1) within memory.
constexpr std::uint32_t max_order = 128;
constexpr double default_max_time_s = 600.0;
constexpr std::size_t max_listed_conflicts = 20;

const char* yes_no(bool value) { return value ? "true" : "false"; }

int cmd_verify(std::uint32_t order, const std::string& coloring_file, std::ostream& out, std::ostream& err)
{
    std::optional<Coloring> coloring;
    if (coloring_file.empty()) {
        coloring = color_board(order);
    } else {
        std::ifstream in(coloring_file);
        if (!in) {
            err << "cannot read " << coloring_file << '\n';
            return exit_usage;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
            coloring = import_coloring_json(buffer.str());
        } catch (const ParseError& e) {
            err << coloring_file << ": " << e.what() << '\n';
            return exit_usage;
        } catch (const std::logic_error& e) {
            err << coloring_file << ": " << e.what() << '\n';
            return exit_usage;
        }
        if (coloring->order() != order) {
            err << coloring_file << ": coloring has order " << coloring->order() << ", expected " << order << '\n';
            return exit_usage;
        }
    }

    const auto graph = build_graph(order);
    const auto report = verify_suite(graph, *coloring);
    const auto& p = report.properness;

    out << "order: " << order << '\n';
    out << "coloring: " << (coloring_file.empty() ? "closed-form" : coloring_file) << '\n';
    out << "num_colors: " << coloring->num_colors() << '\n';
    out << "proper: " << yes_no(p.proper) << " (" << p.conflicts.size() << " conflicts)\n";
    for (std::size_t i = 0; i < std::min(p.conflicts.size(), max_listed_conflicts); ++i)
        out << "  conflict " << to_string(p.conflicts[i].first) << " " << to_string(p.conflicts[i].second)
            << " color " << coloring->at(p.conflicts[i].first) << '\n';
    out << "class_sizes:";
    for (const auto& [color, count] : p.class_sizes)
        out << ' ' << color << ':' << count;
    out << '\n';
    out << "equitable: " << yes_no(p.equitable) << " (max " << p.max_class << ", min " << p.min_class << ")\n";
    out << "shift_structure: " << yes_no(report.shift_structure) << '\n';
    if (order % 2 == 0) {
        out << "parity_structure: " << yes_no(report.parity_ok()) << '\n';
        if (order >= 4)
            out << "label_sequences: " << yes_no(report.sequences_ok()) << '\n';
    }

    // A supplied coloring only has to be proper; the closed-form one must
    // also show every structural property of the construction.
    const bool pass = coloring_file.empty() ? report.all_ok() : p.proper;
    out << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? exit_ok : exit_failed;
}

int cmd_chi(std::uint32_t order, std::optional<double> max_time, std::optional<std::uint64_t> max_nodes,
            std::ostream& out)
{
    SearchBudget budget;
    budget.max_nodes = max_nodes;
    if (max_time)
        budget.max_time = std::chrono::duration<double>(*max_time);
    else if (!max_nodes)
        budget.max_time = std::chrono::duration<double>(default_max_time_s);

    const auto report = verify_theorem(order, budget);
    const auto& r = report.result;
    out << "order: " << order << '\n';
    out << "status: " << to_string(r.status) << '\n';
    if (r.chi)
        out << "chi: " << *r.chi << '\n';
    out << "bounds: [" << r.lower_bound << ", " << r.upper_bound << "]\n";
    out << "expected: " << report.expected_chi << '\n';
    out << "verdict: " << to_string(report.verdict) << '\n';
    out << "nodes: " << r.stats.nodes << '\n';
    out << "elapsed_s: " << std::fixed << std::setprecision(3) << r.stats.elapsed.count() << '\n';
    switch (report.verdict) {
    case TheoremVerdict::match: return exit_ok;
    case TheoremVerdict::mismatch: return exit_failed;
    case TheoremVerdict::inconclusive: return exit_inconclusive;
    }
    return exit_failed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cyclic Latin square graphs: closed-form colorings, verification and exact chromatic numbers",
                 "latinsq"};
    app.require_subcommand(1);

    std::uint32_t order = 0;
    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order,-n", order, "order n of the Latin square")
            ->required()
            ->check(CLI::Range(1u, max_order));
    };

    auto* generate = app.add_subcommand("generate", "print the Latin square labels");
    add_order(generate);

    std::string color_format = "text";
    bool paper_colors = false;
    auto* color = app.add_subcommand("color", "print the closed-form coloring");
    add_order(color);
    color->add_option("--format", color_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    color->add_flag("--paper-colors", paper_colors, "show residue 0 as color k");

    std::string coloring_file;
    auto* verify = app.add_subcommand("verify", "verify a coloring (default: the closed-form one)");
    add_order(verify);
    verify->add_option("--coloring", coloring_file, "JSON coloring document");

    std::optional<double> max_time;
    std::optional<std::uint64_t> max_nodes;
    auto* chi = app.add_subcommand("chi", "exact chromatic number by search");
    add_order(chi);
    chi->add_option("--max-time", max_time, "wall-clock budget in seconds (default 600)")
        ->check(CLI::NonNegativeNumber);
    chi->add_option("--max-nodes", max_nodes, "search node budget");

    std::string export_format;
    auto* exp = app.add_subcommand("export", "write the graph (DIMACS) or the coloring (JSON)");
    add_order(exp);
    exp->add_option("--format", export_format, "dimacs or json")
        ->required()
        ->check(CLI::IsMember({"dimacs", "json"}));

    std::string render_format = "text";
    bool extended = false;
    bool labels = false;
    auto* render = app.add_subcommand("render", "draw the closed-form coloring");
    add_order(render);
    render->add_option("--format", render_format, "text or svg")->check(CLI::IsMember({"text", "svg"}));
    render->add_flag("--extended", extended, "draw the two extra columns (even orders)");
    render->add_flag("--labels", labels, "show Latin square labels (text)");
    render->add_flag("--paper-colors", paper_colors, "show residue 0 as color k (text)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0)
            return exit_ok;
        err << app.help();
        return exit_usage;
    }

    try {
        if (generate->parsed()) {
            out << render_labels(CyclicLatinSquare(order));
            return exit_ok;
        }
        if (color->parsed()) {
            const auto coloring = color_board(order);
            if (color_format == "json") {
                out << export_coloring_json(coloring);
            } else {
                RenderSpec spec;
                spec.paper_colors = paper_colors;
                out << render_grid(coloring, spec);
            }
            return exit_ok;
        }
        if (verify->parsed())
            return cmd_verify(order, coloring_file, out, err);
        if (chi->parsed())
            return cmd_chi(order, max_time, max_nodes, out);
        if (exp->parsed()) {
            if (export_format == "dimacs") {
                out << export_dimacs(build_graph(order));
            } else {
                const auto coloring = color_board(order);
                out << export_coloring_json(coloring, check_proper(build_graph(order), coloring));
            }
            return exit_ok;
        }
        if (render->parsed()) {
            const auto coloring = color_board(order);
            RenderSpec spec;
            spec.format = render_format == "svg" ? RenderFormat::svg : RenderFormat::text;
            spec.show_extended_columns = extended;
            spec.show_labels = labels;
            spec.paper_colors = paper_colors;
            spec.palette = default_palette(coloring.num_colors());
            out << render_grid(coloring, spec);
            return exit_ok;
        }
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    err << app.help();
    return exit_usage;
}

} // namespace latin
