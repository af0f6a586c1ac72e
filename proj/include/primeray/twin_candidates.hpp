#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "primeray/primality.hpp"

// Positions where a twin prime pair (p, p+2) can occur at all: both members
// must be wheel candidates, which pins p to three offsets per 30-block once
// the count starts at 50. Realized twins are a strict subset.

namespace primeray {

// p = 30 * n + 50 + k
inline constexpr std::array<int, 3> kTwinOffsets{9, 21, 27};
// the residues mod 30 those offsets land on: 59 -> 29, 71 -> 11, 77 -> 17
inline constexpr std::array<int, 3> kTwinResidues{29, 11, 17};

struct TwinCandidate {
    std::uint64_t p;  // lower member; p and p + 2 are both candidates
    std::uint64_t n;
    int k;            // 9, 21 or 27

    friend bool operator==(const TwinCandidate&, const TwinCandidate&) noexcept = default;
};

/// Every twin-candidate position with p <= max_p, ascending by p.
/// Empty (not an error) when max_p < 59, the first position.
std::vector<TwinCandidate> twin_positions(std::uint64_t max_p);

struct TwinNecessityReport {
    std::uint64_t max_p = 0;
    std::uint64_t pairs_checked = 0;                // oracle twin pairs with 7 <= p <= max_p
    std::vector<std::uint64_t> residue_violations;  // p >= 7 with p mod 30 outside {11, 17, 29}
    std::vector<std::uint64_t> below_formula_base;  // pairs with 7 <= p < 53, before the 50-based count
    std::vector<std::uint64_t> special_pairs;       // pairs involving 3 or 5
    std::uint64_t covered_by_formula = 0;           // pairs with p >= 53 that twin_positions produces
    std::uint64_t formula_misses = 0;               // pairs with p >= 53 it fails to produce
};

/// Scans every oracle twin pair (p, p+2) with p <= max_p. Requires
/// oracle.limit() >= max_p + 2; throws std::invalid_argument otherwise.
TwinNecessityReport verify_twin_necessity(const PrimeSet& oracle, std::uint64_t max_p);

}  // namespace primeray
