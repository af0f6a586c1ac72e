#include "primeray/wheel.hpp"

#include <stdexcept>

namespace primeray {

namespace {

// residue -> is coprime to 30
constexpr std::array<bool, 30> make_candidate_table() {
    std::array<bool, 30> t{};
    for (int r : kBaseResidues) t[static_cast<std::size_t>(r)] = true;
    return t;
}
inline constexpr std::array<bool, 30> kIsCandidateResidue = make_candidate_table();

// residue of a candidate -> distance to the next candidate residue
constexpr std::array<int, 30> make_gap_table() {
    std::array<int, 30> t{};
    for (std::size_t i = 0; i < kBaseResidues.size(); ++i) {
        const int cur = kBaseResidues[i];
        const int next = (i + 1 < kBaseResidues.size()) ? kBaseResidues[i + 1] : kBaseResidues[0] + 30;
        t[static_cast<std::size_t>(cur)] = next - cur;
    }
    return t;
}
inline constexpr std::array<int, 30> kCandidateGap = make_gap_table();

}  // namespace

bool is_base_residue(int value) noexcept {
    return value >= 0 && value < 30 && kIsCandidateResidue[static_cast<std::size_t>(value)];
}

std::optional<BaseResidue> BaseResidue::from_value(int value) noexcept {
    if (!is_base_residue(value)) return std::nullopt;
    return BaseResidue(value);
}

int residue30(std::uint64_t n) noexcept {
    return static_cast<int>(n % 30);
}

WheelClass classify(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("classify: n must be >= 1");
    if (n == 2 || n == 3 || n == 5) return SpecialPrime{n};
    const int r = residue30(n);
    if (const auto base = BaseResidue::from_value(r)) {
        return Candidate{*base, (n - static_cast<std::uint64_t>(r)) / 30};
    }
    return CertainComposite{n};
}

std::uint64_t wheel_value(const WheelClass& wc) noexcept {
    return std::visit(
        [](const auto& v) -> std::uint64_t {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Candidate>) {
                return v.value();
            } else {
                return v.value;
            }
        },
        wc);
}

bool holds_candidate(const WheelClass& wc) noexcept {
    return std::holds_alternative<Candidate>(wc);
}

bool holds_special_prime(const WheelClass& wc) noexcept {
    return std::holds_alternative<SpecialPrime>(wc);
}

bool holds_certain_composite(const WheelClass& wc) noexcept {
    return std::holds_alternative<CertainComposite>(wc);
}

bool is_candidate(std::uint64_t n) noexcept {
    return kIsCandidateResidue[n % 30];
}

std::uint64_t first_candidate_at_or_after(std::uint64_t n) noexcept {
    if (n == 0) n = 1;
    for (std::uint64_t m = n;; ++m) {
        if (is_candidate(m)) return m;
        if (m == UINT64_MAX) return 0;
    }
}

std::uint64_t next_candidate(std::uint64_t n) noexcept {
    if (n == UINT64_MAX) return 0;
    if (is_candidate(n)) {
        const auto gap = static_cast<std::uint64_t>(kCandidateGap[n % 30]);
        return (n > UINT64_MAX - gap) ? 0 : n + gap;
    }
    return first_candidate_at_or_after(n + 1);
}

std::vector<std::uint64_t> candidates_in_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo == 0) throw std::invalid_argument("candidates_in_range: lo must be >= 1");
    if (lo > hi) throw std::invalid_argument("candidates_in_range: lo exceeds hi");
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>((hi - lo) / 30 + 1) * 8 + 8);
    for (std::uint64_t c = first_candidate_at_or_after(lo); c != 0 && c <= hi; c = next_candidate(c)) {
        out.push_back(c);
    }
    return out;
}

}  // namespace primeray
