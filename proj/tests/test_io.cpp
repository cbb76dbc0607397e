#include "latin/io.hpp"
#include "support/brute_force.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#ifndef LATIN_GOLDEN_DIR
#error "LATIN_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::vector<std::uint32_t>> parse_grid(const std::string& text)
{
    std::vector<std::vector<std::uint32_t>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::vector<std::uint32_t> row;
        std::uint32_t value;
        while (fields >> value)
            row.push_back(value);
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_CASE("DIMACS export matches the golden files")
{
    CHECK(latin::export_dimacs(latin::build_graph(2)) == read_file(LATIN_GOLDEN_DIR "/cyclic_2.col"));
    CHECK(latin::export_dimacs(latin::build_graph(5)) == read_file(LATIN_GOLDEN_DIR "/cyclic_5.col"));
}

TEST_CASE("DIMACS header and edge lines")
{
    const auto k4 = latin::export_dimacs(latin::build_graph(2));
    CHECK(k4.find("p edge 4 6\n") != std::string::npos);
    CHECK(k4.find("e 1 2\n") != std::string::npos);
    CHECK(k4.substr(k4.size() - 6) == "e 3 4\n");

    const auto one = latin::export_dimacs(latin::build_graph(1));
    CHECK(one == "c cyclic Latin square graph of order 1\np edge 1 0\n");

    const auto g5 = latin::export_dimacs(latin::build_graph(5));
    CHECK(g5.find("p edge 25 150\n") != std::string::npos);
    CHECK(latin::export_dimacs(latin::build_graph(5)) == g5);
}

TEST_CASE("JSON export of order 2")
{
    const auto text = latin::export_coloring_json(latin::color_board(2));
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["order"] == 2);
    CHECK(doc["num_colors"] == 4);
    CHECK(doc["cells"] == nlohmann::json::array({0, 1, 2, 3}));
    CHECK_FALSE(doc.contains("verification"));

    const auto with_report = nlohmann::json::parse(latin::export_coloring_json(
        latin::color_board(6), latin::check_proper(latin::build_graph(6), latin::color_board(6))));
    CHECK(with_report["verification"]["proper"] == true);
    CHECK(with_report["verification"]["equitable"] == true);
    CHECK(with_report["verification"]["class_sizes"] == nlohmann::json::array({5, 4, 4, 5, 5, 4, 4, 5}));
}

TEST_CASE("JSON round trip")
{
    for (std::uint32_t n = 1; n <= 12; ++n) {
        const auto coloring = latin::color_board(n);
        CHECK(latin::import_coloring_json(latin::export_coloring_json(coloring)) == coloring);
        const auto report = latin::check_proper(latin::build_graph(n), coloring);
        CHECK(latin::import_coloring_json(latin::export_coloring_json(coloring, report)) == coloring);
    }
    latin::Coloring odd(3, 7, {6, 0, 1, 2, 3, 4, 5, 6, 0});
    CHECK(latin::import_coloring_json(latin::export_coloring_json(odd)) == odd);
}

TEST_CASE("JSON import errors carry a position")
{
    try {
        latin::import_coloring_json("{\n  \"order\": 2,\n  \"num_colors\": 4,\n  \"cells\": [0, 1, 2]\n}\n");
        FAIL("expected a parse error");
    } catch (const latin::ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 3);
        CHECK(std::string(e.what()).find("expected 4 cells") != std::string::npos);
    }

    try {
        latin::import_coloring_json("{\n  \"order\": 2,\n  \"num_colors\": 4,\n  \"cells\": [0, 1, 2,, 3]\n}\n");
        FAIL("expected a parse error");
    } catch (const latin::ParseError& e) {
        CHECK(e.line() == 4);
    }

    CHECK_THROWS_AS(latin::import_coloring_json(R"({"order": 2, "cells": [0,1,2,3]})"), latin::ParseError);
    CHECK_THROWS_AS(latin::import_coloring_json(R"({"order": 0, "num_colors": 1, "cells": []})"), latin::ParseError);
    CHECK_THROWS_AS(latin::import_coloring_json(R"({"order": 1, "num_colors": 1, "cells": [1]})"), latin::ParseError);
    CHECK_THROWS_AS(latin::import_coloring_json(R"({"order": 1, "num_colors": 1, "cells": [-1]})"), latin::ParseError);
    CHECK_THROWS_AS(latin::import_coloring_json("[1, 2]"), latin::ParseError);
    CHECK_THROWS_AS(latin::import_coloring_json(""), latin::ParseError);
}

TEST_CASE("text render of an odd order rotates left row by row")
{
    latin::RenderSpec spec;
    const auto rows = parse_grid(latin::render_grid(latin::color_board(5), spec));
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
    for (std::size_t i = 1; i < 5; ++i) {
        REQUIRE(rows[i].size() == 5);
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(rows[i][(j + 1) % 5] == rows[i - 1][j]);
    }
}

TEST_CASE("extended text render shows the double shift")
{
    latin::RenderSpec spec;
    spec.show_extended_columns = true;
    for (std::uint32_t n = 2; n <= 12; n += 2) {
        const auto rows = parse_grid(latin::render_grid(latin::color_board(n), spec));
        REQUIRE(rows.size() == n);
        const auto board = latin::extended_board(n);
        for (std::uint32_t i = 1; i <= n; ++i)
            CHECK(rows[i - 1] == board.row(i));
    }
    const auto rows6 = parse_grid(latin::render_grid(latin::color_board(6), spec));
    CHECK(rows6[3][0] == (rows6[2][0] + 8 - 2) % 8);
    CHECK(rows6[2][0] == (rows6[1][0] + 8 - 1) % 8);

    // odd orders have no extra columns
    CHECK(parse_grid(latin::render_grid(latin::color_board(5), spec))[0].size() == 5);
}

TEST_CASE("render options")
{
    latin::RenderSpec spec;
    CHECK(latin::render_grid(latin::color_board(1), spec) == "0\n");

    spec.paper_colors = true;
    CHECK(latin::render_grid(latin::color_board(2), spec) == "4 1\n2 3\n");

    spec.paper_colors = false;
    spec.show_labels = true;
    CHECK(latin::render_grid(latin::color_board(2), spec) == "0:0 1:1\n2:1 3:0\n");
    spec.show_extended_columns = true;
    CHECK(latin::render_grid(latin::color_board(2), spec) == "0:0 1:1 2:- 3:-\n2:1 3:0 0:- 1:-\n");

    latin::Coloring uneven(2, 5, {0, 1, 2, 3});
    CHECK_THROWS_AS(latin::render_grid(uneven, spec), latin::UsageError);
}

TEST_CASE("SVG render")
{
    latin::RenderSpec spec;
    spec.format = latin::RenderFormat::svg;
    CHECK_THROWS_AS(latin::render_grid(latin::color_board(5), spec), latin::UsageError);
    spec.palette = latin::default_palette(4);
    CHECK_THROWS_AS(latin::render_grid(latin::color_board(5), spec), latin::UsageError);

    spec.palette = latin::default_palette(8);
    const auto svg = latin::render_grid(latin::color_board(6), spec);
    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1))
            ++n;
        return n;
    };
    CHECK(count("<rect") == 36);
    CHECK(count("<text") == 36);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg == latin::render_grid(latin::color_board(6), spec));

    spec.show_extended_columns = true;
    const auto wide = latin::render_grid(latin::color_board(6), spec);
    std::size_t rects = 0;
    for (auto pos = wide.find("<rect"); pos != std::string::npos; pos = wide.find("<rect", pos + 1))
        ++rects;
    CHECK(rects == 48);
}

TEST_CASE("default palette")
{
    const auto p = latin::default_palette(8);
    CHECK(p.size() == 8);
    for (const auto& c : p) {
        CHECK(c.size() == 7);
        CHECK(c[0] == '#');
    }
    CHECK(std::set<std::string>(p.begin(), p.end()).size() == 8);
}
