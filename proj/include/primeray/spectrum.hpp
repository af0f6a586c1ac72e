#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primeray/primality.hpp"

// The prime indicator over successive wheel candidates: 1 where the
// candidate is prime, 0 where it is a composite like 77 or 91. The
// candidate positions themselves repeat with period 8; knocking out the
// composite candidates destroys every exact period, which is what the
// power spectrum and the shift comparison below make checkable.

namespace primeray {

struct IndicatorSequence {
    std::uint64_t start = 0;
    std::vector<std::uint64_t> candidates;  // ascending candidates >= start
    std::vector<std::uint8_t> values;       // values[i] = oracle(candidates[i])
};

struct SpectrumBin {
    std::size_t frequency_index;
    double power;  // |transform|^2 / N of the mean-removed signal
};

/// Bits for the first `count` candidates at or past `start`.
/// Throws std::invalid_argument for start == 0 or count == 0.
IndicatorSequence indicator(std::uint64_t start, std::size_t count, const PrimalityOracle& oracle);

/// Full discrete power spectrum of the mean-removed indicator, one bin per
/// frequency index 0..N-1. Parseval holds: the powers sum to the energy of
/// the mean-removed signal. Throws std::invalid_argument for length < 2.
std::vector<SpectrumBin> power_spectrum(const IndicatorSequence& seq);

/// Smallest period p <= max_period such that the whole window repeats with
/// period p, or nullopt when no such period exists. Requires
/// 1 <= max_period < length / 2.
std::optional<std::size_t> aperiodicity_check(const IndicatorSequence& seq, std::size_t max_period);

std::string spectrum_csv(const std::vector<SpectrumBin>& bins);

/// Writes spectrum_csv to path. Throws std::runtime_error naming the
/// destination on I/O failure.
void write_spectrum_csv(const std::vector<SpectrumBin>& bins, const std::string& path);

}  // namespace primeray
