#include "primeray/plot.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "primeray/ray_geometry.hpp"
#include "primeray/wheel.hpp"

using namespace primeray;

namespace {

const PrimalityOracle kTrialOracle = [](std::uint64_t n) { return testoracle::trial_division_prime(n); };

std::vector<std::string> split_lines(const std::string& doc) {
    std::vector<std::string> lines;
    std::istringstream in(doc);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string attr(const std::string& line, const std::string& name) {
    const std::string needle = name + "=\"";
    const auto pos = line.find(needle);
    if (pos == std::string::npos) return "";
    const auto start = pos + needle.size();
    const auto end = line.find('"', start);
    return line.substr(start, end - start);
}

bool within(double v, double lo, double hi) {
    return v >= lo && v <= hi;
}

// every coordinate of one SVG element line, marker shapes and rays alike
std::vector<double> element_extent(const std::string& line) {
    std::vector<double> xs;
    const auto push = [&](const std::string& s) {
        if (!s.empty()) xs.push_back(std::stod(s));
    };
    if (line.find("<circle") != std::string::npos) {
        const double cx = std::stod(attr(line, "cx"));
        const double cy = std::stod(attr(line, "cy"));
        const double r = std::stod(attr(line, "r"));
        xs = {cx - r, cx + r, cy - r, cy + r};
    } else if (line.find("<rect") != std::string::npos) {
        const double x = std::stod(attr(line, "x"));
        const double y = std::stod(attr(line, "y"));
        const double w = std::stod(attr(line, "width"));
        const double h = std::stod(attr(line, "height"));
        xs = {x, x + w, y, y + h};
    } else if (line.find("<line") != std::string::npos) {
        push(attr(line, "x1"));
        push(attr(line, "x2"));
        push(attr(line, "y1"));
        push(attr(line, "y2"));
    } else if (line.find("<path") != std::string::npos) {
        std::istringstream d(attr(line, "d"));
        std::string token;
        while (d >> token) {
            if (token == "M" || token == "L") continue;
            xs.push_back(std::stod(token));
        }
    }
    return xs;
}

}  // namespace

TEST_CASE("ray scatter marks one point per number with the right weight") {
    PlotConfig config;
    config.max_n = 3600;
    const std::string doc = render_rays(config, kTrialOracle);

    int points = 0;
    int thick_points = 0;
    for (const std::string& line : split_lines(doc)) {
        if (line.find("class=\"pt ") == std::string::npos) continue;
        ++points;
        const std::uint64_t n = std::stoull(attr(line, "data-n"));
        const bool thick = line.find("pt thick") != std::string::npos;
        CHECK(thick == (ray_kind(n) == RayKind::Thick));
        if (thick) ++thick_points;

        const bool candidate = is_candidate(n);
        const bool prime = testoracle::trial_division_prime(n);
        if (!candidate) {
            CHECK(line.find("cross") != std::string::npos);
        } else if (prime) {
            CHECK(line.find("circle") != std::string::npos);
        } else {
            CHECK(line.find("square") != std::string::npos);
        }
    }
    CHECK(points == 3600);
    CHECK(thick_points == 3600 * 8 / 30);
}

TEST_CASE("ray scatter draws the 96 thick rays") {
    PlotConfig config;
    config.max_n = 360;
    const std::string doc = render_rays(config, kTrialOracle);
    int thick_rays = 0;
    int rays = 0;
    for (const std::string& line : split_lines(doc)) {
        if (line.find("class=\"ray ") == std::string::npos) continue;
        ++rays;
        if (line.find("ray thick") != std::string::npos) ++thick_rays;
    }
    CHECK(rays == 360);
    CHECK(thick_rays == 96);
}

TEST_CASE("a small viewport keeps every element inside the box") {
    PlotConfig config;
    config.max_n = 100;
    config.width_px = 64;
    config.height_px = 64;
    const std::string doc = render_rays(config, kTrialOracle);
    CHECK(doc.find("viewBox=\"0 0 64 64\"") != std::string::npos);
    for (const std::string& line : split_lines(doc)) {
        for (double v : element_extent(line)) {
            CHECK(within(v, 0.0, 64.0));
        }
    }
}

TEST_CASE("undersized viewports are rejected") {
    PlotConfig config;
    config.width_px = 32;
    CHECK_THROWS_AS(render_rays(config, kTrialOracle), std::invalid_argument);
    config.width_px = 800;
    config.height_px = 10;
    CHECK_THROWS_AS(render_cycle_strip(50, 30, kTrialOracle, config), std::invalid_argument);
    config.height_px = 800;
    config.max_n = 0;
    CHECK_THROWS_AS(render_rays(config, kTrialOracle), std::invalid_argument);
}

TEST_CASE("cycle strip squares sit exactly at 77 and 91") {
    const std::string doc = render_cycle_strip(50, 60, kTrialOracle, PlotConfig{});
    std::set<std::uint64_t> squares;
    std::set<std::uint64_t> circles;
    int crosses = 0;
    for (const std::string& line : split_lines(doc)) {
        if (line.find("class=\"mk") == std::string::npos) continue;
        const std::uint64_t n = std::stoull(attr(line, "data-n"));
        if (line.find("square") != std::string::npos) squares.insert(n);
        if (line.find("circle") != std::string::npos) circles.insert(n);
        if (line.find("cross") != std::string::npos) ++crosses;
    }
    CHECK(squares == std::set<std::uint64_t>{77, 91});
    CHECK(circles.size() == 14);
    CHECK(circles.count(53) == 1);
    CHECK(circles.count(109) == 1);
    CHECK(crosses == 44);
}

TEST_CASE("one cycle of the strip holds 8 wheel markers and 22 crosses") {
    const std::string doc = render_cycle_strip(50, 30, kTrialOracle, PlotConfig{});
    int wheel_markers = 0;
    int crosses = 0;
    for (const std::string& line : split_lines(doc)) {
        if (line.find("class=\"mk") == std::string::npos) continue;
        if (line.find("cross") != std::string::npos) {
            ++crosses;
        } else {
            ++wheel_markers;
        }
    }
    CHECK(wheel_markers == 8);
    CHECK(crosses == 22);
}

TEST_CASE("a single-number strip renders a single marker") {
    const std::string doc = render_cycle_strip(50, 1, kTrialOracle, PlotConfig{});
    int markers = 0;
    for (const std::string& line : split_lines(doc)) {
        if (line.find("class=\"mk") != std::string::npos) ++markers;
    }
    CHECK(markers == 1);
}

TEST_CASE("primes-only strips carry circles only") {
    const std::string doc =
        render_cycle_strip(50, 60, kTrialOracle, PlotConfig{}, StripContent::PrimesOnly);
    int circles = 0;
    for (const std::string& line : split_lines(doc)) {
        if (line.find("class=\"mk") == std::string::npos) continue;
        CHECK(line.find("circle") != std::string::npos);
        const std::uint64_t n = std::stoull(attr(line, "data-n"));
        CHECK(testoracle::trial_division_prime(n));
        ++circles;
    }
    CHECK(circles == 14);
}

TEST_CASE("rendering is byte-deterministic") {
    PlotConfig config;
    config.max_n = 720;
    CHECK(render_rays(config, kTrialOracle) == render_rays(config, kTrialOracle));
    CHECK(render_cycle_strip(50, 60, kTrialOracle, PlotConfig{}) ==
          render_cycle_strip(50, 60, kTrialOracle, PlotConfig{}));
}

TEST_CASE("points CSV layout and worked row") {
    const std::string body = points_csv(10);
    const auto lines = split_lines(body);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "n,x,y,ray_degree,kind");
    for (std::uint64_t n = 1; n <= 10; ++n) {
        CHECK(lines[n] == points_csv_row(n));
    }
    CHECK(body.find('\r') == std::string::npos);

    const std::string row = points_csv_row(7310033);
    std::vector<std::string> fields;
    std::istringstream in(row);
    std::string field;
    while (std::getline(in, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 5);
    CHECK(fields[0] == "7310033");
    CHECK(std::abs(std::stod(fields[1]) - (-4399287.68)) <= 0.5);
    CHECK(std::abs(std::stod(fields[2]) - (-5838051.93)) <= 0.5);
    CHECK(fields[3] == "233");
    CHECK(fields[4] == "thick");
}

TEST_CASE("points CSV writes are deterministic files") {
    const auto path = (std::filesystem::temp_directory_path() / "primeray_points_test.csv").string();
    CHECK(write_points_csv(10, path) == 10);
    std::ifstream first(path, std::ios::binary);
    std::stringstream a;
    a << first.rdbuf();
    first.close();

    CHECK(write_points_csv(10, path) == 10);
    std::ifstream second(path, std::ios::binary);
    std::stringstream b;
    b << second.rdbuf();
    second.close();

    CHECK(a.str() == b.str());
    CHECK(a.str() == points_csv(10));
    std::remove(path.c_str());

    CHECK_THROWS_WITH_AS(write_points_csv(5, "/nonexistent-dir/points.csv"),
                         doctest::Contains("/nonexistent-dir/points.csv"), std::runtime_error);
}
