#pragma once

#include <array>
#include <cstdint>

// Plane placement of the naturals: n sits at angle n degrees, radius n.
// Numbers sharing a value of n mod 360 stack onto one of 360 half-lines;
// the 96 half-lines whose degree is coprime to 30 carry every prime > 5.

namespace primeray {

struct PolarPoint {
    std::uint64_t n;
    double x;
    double y;
    int ray_degree;  // n mod 360, exact
};

enum class RayKind { Thick, Thin };

/// n mod 360, exact integer arithmetic.
int ray_degree(std::uint64_t n);

/// Placement of n: the angle comes from the reduced ray degree, not from
/// n itself, so large n do not lose precision inside the trig call.
/// Throws std::invalid_argument for n == 0.
PolarPoint polar_coordinates(std::uint64_t n);

/// The 96 degrees d in [0,360) with d mod 30 coprime to 30, ascending.
const std::array<int, 96>& thick_ray_degrees() noexcept;

bool is_thick_degree(int degree) noexcept;

/// Thick iff the ray degree of n lands on one of the 96 thick half-lines;
/// equivalent to wheel candidacy since n mod 30 == (n mod 360) mod 30.
RayKind ray_kind(std::uint64_t n);

}  // namespace primeray
