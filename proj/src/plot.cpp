#include "primeray/plot.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "primeray/ray_geometry.hpp"
#include "primeray/wheel.hpp"

namespace primeray {

namespace {

void append_fixed2(std::string& out, double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 2);
    out.append(buf, res.ptr);
}

std::string fixed2(double value) {
    std::string s;
    append_fixed2(s, value);
    return s;
}

void check_viewport(const PlotConfig& config) {
    if (config.width_px < 64 || config.height_px < 64) {
        throw std::invalid_argument("plot: viewport must be at least 64 x 64 px");
    }
}

std::string svg_open(int width, int height) {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
    out += std::to_string(width);
    out += "\" height=\"";
    out += std::to_string(height);
    out += "\" viewBox=\"0 0 ";
    out += std::to_string(width);
    out += ' ';
    out += std::to_string(height);
    out += "\">\n";
    return out;
}

enum class Marker { Circle, Square, Cross };

Marker marker_for(std::uint64_t n, const PrimalityOracle& oracle) {
    if (!is_candidate(n)) return Marker::Cross;
    return oracle(n) ? Marker::Circle : Marker::Square;
}

// One element per marker; `classes` carries the verdict tokens tests key on.
void append_marker(std::string& out, Marker marker, double cx, double cy, double half,
                   const std::string& classes, std::uint64_t n, const std::string& color,
                   double stroke_width) {
    switch (marker) {
        case Marker::Circle:
            out += "<circle class=\"" + classes + " circle\" data-n=\"" + std::to_string(n) + "\" cx=\"" +
                   fixed2(cx) + "\" cy=\"" + fixed2(cy) + "\" r=\"" + fixed2(half) + "\" fill=\"" + color +
                   "\"/>\n";
            break;
        case Marker::Square:
            out += "<rect class=\"" + classes + " square\" data-n=\"" + std::to_string(n) + "\" x=\"" +
                   fixed2(cx - half) + "\" y=\"" + fixed2(cy - half) + "\" width=\"" + fixed2(2 * half) +
                   "\" height=\"" + fixed2(2 * half) + "\" fill=\"" + color + "\"/>\n";
            break;
        case Marker::Cross: {
            const double arm = 0.7 * half;
            out += "<path class=\"" + classes + " cross\" data-n=\"" + std::to_string(n) + "\" d=\"M " +
                   fixed2(cx - arm) + ' ' + fixed2(cy - arm) + " L " + fixed2(cx + arm) + ' ' +
                   fixed2(cy + arm) + " M " + fixed2(cx - arm) + ' ' + fixed2(cy + arm) + " L " +
                   fixed2(cx + arm) + ' ' + fixed2(cy - arm) + "\" stroke=\"" + color + "\" stroke-width=\"" +
                   fixed2(stroke_width) + "\" fill=\"none\"/>\n";
            break;
        }
    }
}

}  // namespace

std::string render_rays(const PlotConfig& config, const PrimalityOracle& oracle) {
    check_viewport(config);
    if (config.max_n == 0) throw std::invalid_argument("render_rays: max_n must be >= 1");

    const double cx = config.width_px / 2.0;
    const double cy = config.height_px / 2.0;
    const double radius = 0.48 * std::min(config.width_px, config.height_px);
    const double scale = radius / static_cast<double>(config.max_n);

    std::string out = svg_open(config.width_px, config.height_px);

    for (int d = 0; d < 360; ++d) {
        const bool thick = is_thick_degree(d);
        const StrokeStyle& style = thick ? config.thick_style : config.thin_style;
        // unit direction from the degree alone; same reduction the points use
        const PolarPoint tip = polar_coordinates(static_cast<std::uint64_t>(d == 0 ? 360 : d));
        const double ux = tip.x / static_cast<double>(tip.n);
        const double uy = tip.y / static_cast<double>(tip.n);
        out += std::string("<line class=\"ray ") + (thick ? "thick" : "thin") + "\" x1=\"" + fixed2(cx) +
               "\" y1=\"" + fixed2(cy) + "\" x2=\"" + fixed2(cx + radius * ux) + "\" y2=\"" +
               fixed2(cy - radius * uy) + "\" stroke=\"" + style.color + "\" stroke-width=\"" +
               fixed2(style.width) + "\"/>\n";
    }

    for (std::uint64_t n = 1; n <= config.max_n; ++n) {
        const PolarPoint point = polar_coordinates(n);
        const bool thick = ray_kind(n) == RayKind::Thick;
        const std::string classes = std::string("pt ") + (thick ? "thick" : "thin");
        const std::string& color = thick ? config.thick_style.color : config.thin_style.color;
        append_marker(out, marker_for(n, oracle), cx + point.x * scale, cy - point.y * scale, 1.0, classes,
                      n, color, 0.4);
    }

    out += "</svg>\n";
    return out;
}

std::string render_cycle_strip(std::uint64_t start, std::uint64_t count, const PrimalityOracle& oracle,
                               const PlotConfig& config, StripContent content) {
    check_viewport(config);
    if (start == 0) throw std::invalid_argument("render_cycle_strip: start must be >= 1");
    if (count == 0) throw std::invalid_argument("render_cycle_strip: count must be >= 1");
    if (count - 1 > UINT64_MAX - start) {
        throw std::invalid_argument("render_cycle_strip: range exceeds 64 bits");
    }

    constexpr double kCell = 20.0;
    constexpr double kRowHeight = 30.0;
    constexpr double kMargin = 14.0;
    const std::uint64_t columns = std::min<std::uint64_t>(count, 30);
    const std::uint64_t rows = (count + 29) / 30;
    const int width = static_cast<int>(2 * kMargin + static_cast<double>(columns) * kCell);
    const int height = static_cast<int>(2 * kMargin + static_cast<double>(rows) * kRowHeight);

    std::string out = svg_open(width, height);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t n = start + i;
        const double cx = kMargin + static_cast<double>(i % 30) * kCell + kCell / 2.0;
        const double cy = kMargin + static_cast<double>(i / 30) * kRowHeight + kCell / 2.0;

        if (content == StripContent::PrimesOnly) {
            if (!oracle(n)) continue;
            append_marker(out, Marker::Circle, cx, cy, 6.0, "mk", n, config.thick_style.color, 1.0);
        } else {
            const Marker marker = marker_for(n, oracle);
            const std::string& color =
                marker == Marker::Cross ? config.thin_style.color : config.thick_style.color;
            append_marker(out, marker, cx, cy, 6.0, "mk", n, color, 1.0);
        }
        out += "<text class=\"lbl\" x=\"" + fixed2(cx) + "\" y=\"" + fixed2(cy + kCell / 2.0 + 6.0) +
               "\" font-size=\"6\" text-anchor=\"middle\">" + std::to_string(n) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string points_csv_row(std::uint64_t n) {
    const PolarPoint point = polar_coordinates(n);
    std::string out = std::to_string(n);
    out += ',';
    append_fixed2(out, point.x);
    out += ',';
    append_fixed2(out, point.y);
    out += ',';
    out += std::to_string(point.ray_degree);
    out += ',';
    out += ray_kind(n) == RayKind::Thick ? "thick" : "thin";
    return out;
}

std::string points_csv(std::uint64_t max_n) {
    if (max_n == 0) throw std::invalid_argument("points_csv: max_n must be >= 1");
    std::string out = "n,x,y,ray_degree,kind\n";
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        out += points_csv_row(n);
        out += '\n';
    }
    return out;
}

std::uint64_t write_points_csv(std::uint64_t max_n, const std::string& path) {
    const std::string body = points_csv(max_n);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("write_points_csv: cannot open " + path);
    file.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!file) throw std::runtime_error("write_points_csv: write failed for " + path);
    return max_n;
}

}  // namespace primeray
