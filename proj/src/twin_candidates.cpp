#include "primeray/twin_candidates.hpp"

#include <algorithm>
#include <stdexcept>

#include "primeray/wheel.hpp"

namespace primeray {

std::vector<TwinCandidate> twin_positions(std::uint64_t max_p) {
    std::vector<TwinCandidate> out;
    if (max_p < 59) return out;
    out.reserve(static_cast<std::size_t>((max_p - 50) / 30 + 1) * 3);
    for (std::uint64_t n = 0;; ++n) {
        const std::uint64_t base = 30 * n + 50;
        if (base > max_p) break;
        for (int k : kTwinOffsets) {
            const std::uint64_t p = base + static_cast<std::uint64_t>(k);
            if (p <= max_p) out.push_back(TwinCandidate{p, n, k});
        }
    }
    return out;
}

TwinNecessityReport verify_twin_necessity(const PrimeSet& oracle, std::uint64_t max_p) {
    if (max_p < 59) throw std::invalid_argument("verify_twin_necessity: max_p must be >= 59");
    if (oracle.limit() < max_p + 2) {
        throw std::invalid_argument("verify_twin_necessity: oracle does not cover max_p + 2");
    }

    TwinNecessityReport report;
    report.max_p = max_p;
    for (std::uint64_t p = 3; p <= max_p; p += 2) {
        if (!oracle.contains(p) || !oracle.contains(p + 2)) continue;
        if (p == 3 || p == 5) {
            report.special_pairs.push_back(p);
            continue;
        }
        ++report.pairs_checked;
        const int r = residue30(p);
        if (std::find(kTwinResidues.begin(), kTwinResidues.end(), r) == kTwinResidues.end()) {
            report.residue_violations.push_back(p);
        }
        if (p < 53) {
            report.below_formula_base.push_back(p);
            continue;
        }
        // the 50-based formula reaches p iff p = 30n + 50 + k with k in {9, 21, 27}
        const int k = static_cast<int>((p - 50) % 30);
        const bool produced =
            p >= 59 && std::find(kTwinOffsets.begin(), kTwinOffsets.end(), k) != kTwinOffsets.end();
        if (produced) {
            ++report.covered_by_formula;
        } else {
            ++report.formula_misses;
        }
    }
    return report;
}

}  // namespace primeray
