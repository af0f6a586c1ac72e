#include "primeray/primality.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "primeray/wheel.hpp"

namespace primeray {

PrimeSet::PrimeSet(std::uint64_t limit) : limit_(limit) {
    words_.assign((odd_bit_count() + 63) / 64, 0);
}

void PrimeSet::set_bit(std::uint64_t n) noexcept {
    const std::uint64_t i = n >> 1;
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void PrimeSet::clear_bit(std::uint64_t n) noexcept {
    const std::uint64_t i = n >> 1;
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

bool PrimeSet::test_bit(std::uint64_t n) const noexcept {
    const std::uint64_t i = n >> 1;
    return (words_[i >> 6] >> (i & 63)) & 1;
}

std::uint64_t PrimeSet::count() const noexcept {
    std::uint64_t total = 1;  // 2
    for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

namespace {

void check_sieve_limit(std::uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("sieve: limit must be >= 2");
    if (limit > kSieveLimitCap) throw std::invalid_argument("sieve: limit exceeds bulk cap");
}

}  // namespace

PrimeSet sieve(std::uint64_t limit, SieveStats* stats) {
    check_sieve_limit(limit);
    PrimeSet ps(limit);

    // every odd >= 3 starts presumed prime; bit 0 is n = 1
    ps.words_.assign(ps.words_.size(), ~std::uint64_t{0});
    ps.words_[0] &= ~std::uint64_t{1};
    const std::uint64_t bits = ps.odd_bit_count();
    if (bits % 64 != 0) ps.words_.back() &= (std::uint64_t{1} << (bits % 64)) - 1;

    SieveStats local;
    local.cells_enumerated = bits;

    for (std::uint64_t p = 3; p * p <= limit; p += 2) {
        if (!ps.test_bit(p)) continue;
        for (std::uint64_t m = p * p; m <= limit; m += 2 * p) {
            ps.clear_bit(m);
            ++local.composite_marks;
        }
    }
    if (stats != nullptr) *stats = local;
    return ps;
}

PrimeSet wheel_sieve(std::uint64_t limit, SieveStats* stats) {
    check_sieve_limit(limit);
    PrimeSet ps(limit);
    SieveStats local;

    // residue -> position within the 8-candidate block
    std::array<std::uint64_t, 30> pos_of{};
    for (std::size_t i = 0; i < kBaseResidues.size(); ++i) {
        pos_of[static_cast<std::size_t>(kBaseResidues[i])] = i;
    }
    // position -> distance to the next candidate residue (wrapping into the next block)
    constexpr std::array<std::uint64_t, 8> gap_by_pos{6, 4, 2, 4, 2, 4, 6, 2};

    // scratch bit per wheel candidate <= limit, in candidate order
    std::uint64_t cells = (limit / 30) * 8;
    for (int r : kBaseResidues) {
        if (static_cast<std::uint64_t>(r) <= limit % 30) ++cells;
    }
    local.cells_enumerated = cells;
    std::vector<std::uint64_t> alive((cells + 63) / 64, ~std::uint64_t{0});

    const auto cand_index = [&pos_of](std::uint64_t n) -> std::uint64_t {
        return (n / 30) * 8 + pos_of[n % 30];
    };
    const auto is_alive = [&](std::uint64_t idx) { return (alive[idx >> 6] >> (idx & 63)) & 1; };
    const auto kill = [&](std::uint64_t idx) { alive[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63)); };

    kill(0);  // 1 is a candidate but not prime
    for (std::uint64_t c = 7; c != 0 && c * c <= limit; c = next_candidate(c)) {
        if (!is_alive(cand_index(c))) continue;

        // Products c * q for candidate q = 30t + r_j split as
        // c*q = 30*(c*t + h_j) + s_j with c*r_j = 30*h_j + s_j, so the
        // scratch index is 8*c*t plus a per-residue constant. The walk
        // below needs no division.
        std::array<std::uint64_t, 8> base{};
        for (std::size_t j = 0; j < 8; ++j) {
            const std::uint64_t prod = c * static_cast<std::uint64_t>(kBaseResidues[j]);
            base[j] = (prod / 30) * 8 + pos_of[prod % 30];
        }
        const std::uint64_t qmax = limit / c;
        std::uint64_t q = c;
        std::uint64_t t = c / 30;
        std::size_t j = pos_of[c % 30];
        std::uint64_t row = 8 * c * t;
        while (q <= qmax) {
            kill(row + base[j]);
            ++local.composite_marks;
            q += gap_by_pos[j];
            ++j;
            if (j == 8) {
                j = 0;
                ++t;
                row += 8 * c;
            }
        }
    }

    if (limit >= 3) ps.set_bit(3);
    if (limit >= 5) ps.set_bit(5);
    // surviving candidates, straight off the scratch words
    for (std::uint64_t w = 0; w < alive.size(); ++w) {
        std::uint64_t word = alive[w];
        while (word != 0) {
            const int b = __builtin_ctzll(word);
            word &= word - 1;
            const std::uint64_t idx = (w << 6) + static_cast<std::uint64_t>(b);
            if (idx >= cells) break;
            const std::uint64_t n =
                30 * (idx >> 3) + static_cast<std::uint64_t>(kBaseResidues[idx & 7]);
            if (n >= 7) ps.set_bit(n);
        }
    }

    if (stats != nullptr) *stats = local;
    return ps;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>((u128)a * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// strong probable prime test to base a, with n - 1 = d * 2^s, d odd
bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) noexcept {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Sufficient for every n < 3.3e24, hence for all 64-bit inputs.
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;

    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        if (!strong_probable_prime(n, a, d, s)) return false;
    }
    return true;
}

}  // namespace primeray
