#include "primeray/spectrum.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "primeray/wheel.hpp"

namespace primeray {

IndicatorSequence indicator(std::uint64_t start, std::size_t count, const PrimalityOracle& oracle) {
    if (start == 0) throw std::invalid_argument("indicator: start must be >= 1");
    if (count == 0) throw std::invalid_argument("indicator: count must be >= 1");
    IndicatorSequence seq;
    seq.start = start;
    seq.candidates.reserve(count);
    seq.values.reserve(count);
    std::uint64_t c = first_candidate_at_or_after(start);
    while (seq.candidates.size() < count) {
        if (c == 0) throw std::overflow_error("indicator: candidate range exceeds 64 bits");
        seq.candidates.push_back(c);
        seq.values.push_back(oracle(c) ? 1 : 0);
        c = next_candidate(c);
    }
    return seq;
}

namespace {

void fft_in_place(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// O(n^2) fallback for lengths that are not a power of two. The twiddle
// factor for term (k, j) is looked up at index k*j mod n, so no angle
// accumulates rounding error.
std::vector<std::complex<double>> dft(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        roots[k] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            acc += x[j] * roots[(k * j) % n];
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace

std::vector<SpectrumBin> power_spectrum(const IndicatorSequence& seq) {
    const std::size_t n = seq.values.size();
    if (n < 2) throw std::invalid_argument("power_spectrum: need at least 2 samples");

    double mean = 0.0;
    for (std::uint8_t v : seq.values) mean += v;
    mean /= static_cast<double>(n);

    std::vector<std::complex<double>> transformed;
    if (std::has_single_bit(n)) {
        transformed.resize(n);
        for (std::size_t i = 0; i < n; ++i) transformed[i] = {seq.values[i] - mean, 0.0};
        fft_in_place(transformed);
    } else {
        std::vector<double> centered(n);
        for (std::size_t i = 0; i < n; ++i) centered[i] = seq.values[i] - mean;
        transformed = dft(centered);
    }

    std::vector<SpectrumBin> bins(n);
    for (std::size_t k = 0; k < n; ++k) {
        bins[k] = SpectrumBin{k, std::norm(transformed[k]) / static_cast<double>(n)};
    }
    return bins;
}

std::optional<std::size_t> aperiodicity_check(const IndicatorSequence& seq, std::size_t max_period) {
    const std::size_t n = seq.values.size();
    if (max_period < 1 || max_period >= n / 2) {
        throw std::invalid_argument("aperiodicity_check: need 1 <= max_period < length / 2");
    }
    for (std::size_t p = 1; p <= max_period; ++p) {
        bool periodic = true;
        for (std::size_t i = 0; i + p < n; ++i) {
            if (seq.values[i] != seq.values[i + p]) {
                periodic = false;
                break;
            }
        }
        if (periodic) return p;
    }
    return std::nullopt;
}

namespace {

void append_double(std::string& out, double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    out.append(buf, res.ptr);
}

}  // namespace

std::string spectrum_csv(const std::vector<SpectrumBin>& bins) {
    std::string out = "frequency_index,power\n";
    for (const SpectrumBin& bin : bins) {
        out += std::to_string(bin.frequency_index);
        out += ',';
        append_double(out, bin.power);
        out += '\n';
    }
    return out;
}

void write_spectrum_csv(const std::vector<SpectrumBin>& bins, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("write_spectrum_csv: cannot open " + path);
    const std::string body = spectrum_csv(bins);
    file.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!file) throw std::runtime_error("write_spectrum_csv: write failed for " + path);
}

}  // namespace primeray
