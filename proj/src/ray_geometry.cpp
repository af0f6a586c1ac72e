#include "primeray/ray_geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "primeray/wheel.hpp"

namespace primeray {

namespace {

constexpr std::array<int, 96> make_thick_degrees() {
    std::array<int, 96> out{};
    std::size_t i = 0;
    for (int d = 0; d < 360; ++d) {
        bool coprime = false;
        for (int r : kBaseResidues) coprime = coprime || (d % 30 == r);
        if (coprime) out[i++] = d;
    }
    return out;
}
inline constexpr std::array<int, 96> kThickDegrees = make_thick_degrees();

}  // namespace

int ray_degree(std::uint64_t n) {
    return static_cast<int>(n % 360);
}

PolarPoint polar_coordinates(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("polar_coordinates: n must be >= 1");
    const int deg = ray_degree(n);
    const double theta = static_cast<double>(deg) * std::numbers::pi / 180.0;
    const double radius = static_cast<double>(n);
    return PolarPoint{n, radius * std::cos(theta), radius * std::sin(theta), deg};
}

const std::array<int, 96>& thick_ray_degrees() noexcept {
    return kThickDegrees;
}

bool is_thick_degree(int degree) noexcept {
    return degree >= 0 && degree < 360 && is_base_residue(degree % 30);
}

RayKind ray_kind(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("ray_kind: n must be >= 1");
    return is_thick_degree(ray_degree(n)) ? RayKind::Thick : RayKind::Thin;
}

}  // namespace primeray
