#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

// Mod-30 wheel arithmetic. A number is a wheel candidate when its residue
// mod 30 is coprime to 30; every prime above 5 is a candidate, and every
// non-candidate above 5 is composite. Candidacy says nothing further about
// primality (77 and 91 are candidates and composite).

namespace primeray {

// The eight residues coprime to 30, ascending.
inline constexpr std::array<int, 8> kBaseResidues{1, 7, 11, 13, 17, 19, 23, 29};

bool is_base_residue(int value) noexcept;

/// One of the eight residues in kBaseResidues. Construction is validated.
class BaseResidue {
public:
    static std::optional<BaseResidue> from_value(int value) noexcept;

    int value() const noexcept { return value_; }

    friend bool operator==(BaseResidue, BaseResidue) noexcept = default;

private:
    explicit constexpr BaseResidue(int v) noexcept : value_(v) {}
    int value_;
};

// 2, 3 and 5 sit off the wheel (their residues share a factor with 30)
// yet are prime, so they get their own verdict.
struct SpecialPrime {
    std::uint64_t value;
    friend bool operator==(const SpecialPrime&, const SpecialPrime&) noexcept = default;
};

/// A wheel candidate: exactly the number base + 30 * multiplier.
/// Note 1 is a candidate (base 1, multiplier 0) and is neither prime
/// nor composite.
struct Candidate {
    BaseResidue base;
    std::uint64_t multiplier;

    std::uint64_t value() const noexcept {
        return static_cast<std::uint64_t>(base.value()) + 30 * multiplier;
    }

    friend bool operator==(const Candidate&, const Candidate&) noexcept = default;
};

// Shares a factor with 30 and exceeds 5: composite with no further test.
struct CertainComposite {
    std::uint64_t value;
    friend bool operator==(const CertainComposite&, const CertainComposite&) noexcept = default;
};

using WheelClass = std::variant<SpecialPrime, Candidate, CertainComposite>;

/// n mod 30, exact integer arithmetic.
int residue30(std::uint64_t n) noexcept;

/// Wheel verdict for n >= 1. Throws std::invalid_argument for n == 0.
WheelClass classify(std::uint64_t n);

/// The number a verdict stands for; inverse of classify.
std::uint64_t wheel_value(const WheelClass& wc) noexcept;

bool holds_candidate(const WheelClass& wc) noexcept;
bool holds_special_prime(const WheelClass& wc) noexcept;
bool holds_certain_composite(const WheelClass& wc) noexcept;

/// Residue-only candidacy test for n >= 1 (true iff classify(n) is Candidate).
bool is_candidate(std::uint64_t n) noexcept;

/// Smallest candidate >= n. Returns 0 if the search would overflow.
std::uint64_t first_candidate_at_or_after(std::uint64_t n) noexcept;

/// Smallest candidate > n (n need not be a candidate itself).
std::uint64_t next_candidate(std::uint64_t n) noexcept;

/// All candidates in [lo, hi], ascending. 2, 3 and 5 never appear.
/// Throws std::invalid_argument when lo > hi or lo == 0.
std::vector<std::uint64_t> candidates_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace primeray
