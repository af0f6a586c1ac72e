#pragma once

#include <cstdint>
#include <string>

#include "primeray/primality.hpp"

// SVG figures and raw point dumps. Marker classes carry the verdicts
// (circle = candidate prime, square = candidate composite, cross =
// off-wheel), so emitted documents can be read back and checked as text.
// Rendering is byte-deterministic for a fixed input.

namespace primeray {

struct StrokeStyle {
    double width;
    std::string color;
};

struct PlotConfig {
    std::uint64_t max_n = 3600;
    int width_px = 800;
    int height_px = 800;
    StrokeStyle thick_style{1.1, "#1a1a1a"};
    StrokeStyle thin_style{0.35, "#c8c8c8"};
};

enum class StripContent {
    All,        // crosses, circles and squares for every number
    PrimesOnly  // circles at primes, everything else omitted
};

/// Polar scatter of 1..config.max_n with the 360 rays drawn underneath,
/// the 96 thick ones in the thick style. Throws std::invalid_argument when
/// the viewport is under 64 px a side or max_n == 0.
std::string render_rays(const PlotConfig& config, const PrimalityOracle& oracle);

/// Number-line strip of `count` values from `start`, wrapped 30 per row so
/// each row is one wheel cycle.
std::string render_cycle_strip(std::uint64_t start, std::uint64_t count, const PrimalityOracle& oracle,
                               const PlotConfig& config, StripContent content = StripContent::All);

/// One data row `n,x,y,ray_degree,kind`, without trailing newline.
std::string points_csv_row(std::uint64_t n);

/// CSV rows `n,x,y,ray_degree,kind` for n = 1..max_n, header included.
std::string points_csv(std::uint64_t max_n);

/// Writes points_csv to path; returns the number of data rows. Throws
/// std::runtime_error naming the destination on I/O failure.
std::uint64_t write_points_csv(std::uint64_t max_n, const std::string& path);

}  // namespace primeray
