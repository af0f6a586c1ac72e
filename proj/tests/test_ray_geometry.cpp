#include "primeray/ray_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "primeray/wheel.hpp"

using namespace primeray;

TEST_CASE("ray_degree is the exact mod-360 reduction") {
    CHECK(ray_degree(7310033) == 233);
    CHECK(ray_degree(7310037) == 237);
    CHECK(ray_degree(8751629) == 29);
    CHECK(ray_degree(8751657) == 57);
    CHECK(ray_degree(360) == 0);
    CHECK(ray_degree(719) == 359);
}

TEST_CASE("polar placement reproduces the published seven-digit coordinates") {
    struct Expected {
        std::uint64_t n;
        double x;
        double y;
    };
    const Expected cases[] = {
        {7310033, -4399287.68, -5838051.93},
        {7310037, -3981331.5, -6130712.88},
        {8751629, 7654347.19, 4242873.93},
        {8751657, 4766494.02, 7339757.15},
    };
    for (const Expected& c : cases) {
        const PolarPoint p = polar_coordinates(c.n);
        CHECK(std::abs(p.x - c.x) <= 0.5);
        CHECK(std::abs(p.y - c.y) <= 0.5);
        CHECK(p.ray_degree == static_cast<int>(c.n % 360));
    }
}

TEST_CASE("polar placement of a full turn lands on the positive x axis") {
    const PolarPoint p = polar_coordinates(360);
    CHECK(p.x == doctest::Approx(360.0).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.ray_degree == 0);
}

TEST_CASE("polar_coordinates rejects zero") {
    CHECK_THROWS_AS(polar_coordinates(0), std::invalid_argument);
}

TEST_CASE("radius is preserved") {
    const auto radius_ok = [](std::uint64_t n) {
        const PolarPoint p = polar_coordinates(n);
        const double r = std::hypot(p.x, p.y);
        return std::abs(r - static_cast<double>(n)) / static_cast<double>(n) <= 1e-9;
    };
    for (std::uint64_t n = 1; n <= 2'000; ++n) CHECK(radius_ok(n));
    for (std::uint64_t n : {std::uint64_t{7310033}, std::uint64_t{8751629}, std::uint64_t{9999991},
                            std::uint64_t{10'000'000}}) {
        CHECK(radius_ok(n));
    }
}

TEST_CASE("direction depends only on the ray degree") {
    for (std::uint64_t n : {std::uint64_t{1}, std::uint64_t{7}, std::uint64_t{233}, std::uint64_t{359},
                            std::uint64_t{360}}) {
        const PolarPoint a = polar_coordinates(n);
        const double ax = a.x / static_cast<double>(n);
        const double ay = a.y / static_cast<double>(n);
        for (std::uint64_t k : {std::uint64_t{1}, std::uint64_t{10}, std::uint64_t{100},
                                std::uint64_t{10'000}}) {
            const std::uint64_t m = n + 360 * k;
            const PolarPoint b = polar_coordinates(m);
            CHECK(std::abs(b.x / static_cast<double>(m) - ax) <= 1e-12);
            CHECK(std::abs(b.y / static_cast<double>(m) - ay) <= 1e-12);
        }
    }
}

TEST_CASE("the thick bundle has exactly 96 degrees, 8 per 30") {
    const auto& degrees = thick_ray_degrees();
    CHECK(degrees.size() == 96);
    CHECK(std::is_sorted(degrees.begin(), degrees.end()));
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(degrees[i] == kBaseResidues[i]);
    }
    for (int d : degrees) {
        CHECK(is_base_residue(d % 30));
        CHECK(is_thick_degree(d));
    }
    // nothing outside the listed 96
    int thick_count = 0;
    for (int d = 0; d < 360; ++d) {
        const bool listed = std::find(degrees.begin(), degrees.end(), d) != degrees.end();
        CHECK(is_thick_degree(d) == listed);
        if (listed) ++thick_count;
    }
    CHECK(thick_count == 96);
    CHECK(is_thick_degree(233));
}

TEST_CASE("ray_kind worked values") {
    CHECK(ray_kind(7310033) == RayKind::Thick);
    CHECK(ray_kind(7310037) == RayKind::Thin);
    CHECK(ray_kind(8751657) == RayKind::Thin);
    CHECK(ray_kind(1) == RayKind::Thick);
    CHECK(ray_kind(2) == RayKind::Thin);
    CHECK(ray_kind(3) == RayKind::Thin);
    CHECK(ray_kind(5) == RayKind::Thin);
}

TEST_CASE("ray_kind and wheel candidacy coincide") {
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        CHECK((ray_kind(n) == RayKind::Thick) == is_candidate(n));
    }
}
