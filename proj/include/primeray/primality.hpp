#pragma once

#include <cstdint>
#include <functional>
#include <vector>

// Independent primality ground truth: bulk sieves for ranges and a
// deterministic single-number test for the full 64-bit range. Everything
// the wheel claims is verified against this module, never the other way
// around.

namespace primeray {

/// Exact primality test, any oracle implementation.
using PrimalityOracle = std::function<bool(std::uint64_t)>;

/// Bulk sieving refuses limits above this; use is_prime for single values.
inline constexpr std::uint64_t kSieveLimitCap = 1'000'000'000;

struct SieveStats {
    std::uint64_t cells_enumerated = 0;  // storage positions the sieve considers
    std::uint64_t composite_marks = 0;   // composite-marking operations performed
};

/// Immutable prime membership over [0, limit]. Odd numbers are bit-indexed;
/// 2 is implicit. Two sets over the same limit with the same membership
/// compare equal bit for bit.
class PrimeSet {
public:
    std::uint64_t limit() const noexcept { return limit_; }

    bool contains(std::uint64_t n) const noexcept {
        if (n == 2) return true;
        if (n < 2 || n > limit_ || (n & 1) == 0) return false;
        const std::uint64_t i = n >> 1;
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::uint64_t count() const noexcept;

    template <typename Fn>
    void for_each_prime(Fn&& fn) const {
        fn(std::uint64_t{2});
        const std::uint64_t bits = odd_bit_count();
        for (std::uint64_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                const int b = __builtin_ctzll(word);
                word &= word - 1;
                const std::uint64_t i = (w << 6) + static_cast<std::uint64_t>(b);
                if (i >= bits) return;
                fn(2 * i + 1);
            }
        }
    }

    friend bool operator==(const PrimeSet& a, const PrimeSet& b) noexcept = default;

private:
    explicit PrimeSet(std::uint64_t limit);

    std::uint64_t odd_bit_count() const noexcept { return (limit_ + 1) / 2; }
    void set_bit(std::uint64_t n) noexcept;    // odd n
    void clear_bit(std::uint64_t n) noexcept;  // odd n
    bool test_bit(std::uint64_t n) const noexcept;

    std::uint64_t limit_;
    std::vector<std::uint64_t> words_;

    friend PrimeSet sieve(std::uint64_t, SieveStats*);
    friend PrimeSet wheel_sieve(std::uint64_t, SieveStats*);
};

/// Plain Eratosthenes over odd storage. Requires 2 <= limit <= kSieveLimitCap;
/// throws std::invalid_argument otherwise.
PrimeSet sieve(std::uint64_t limit, SieveStats* stats = nullptr);

/// Same membership contract as sieve, but only wheel candidates are
/// enumerated and crossed off, roughly 8 of every 30 positions.
PrimeSet wheel_sieve(std::uint64_t limit, SieveStats* stats = nullptr);

/// Deterministic for all 64-bit n (strong-probable-prime test against a
/// fixed witness set proven sufficient for this range). Total: n < 2 is false.
bool is_prime(std::uint64_t n) noexcept;

}  // namespace primeray
