#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

// 30-number cycle blocks aligned to 50. Candidacy depends only on the
// residue mod 30, so every block shows the same run structure: composite
// parcels of lengths 3-5-1-5-3-1-3-1 separated by single candidates, and
// candidate groups of sizes 1-2-1-2-2.

namespace primeray {

inline constexpr std::uint64_t kBlockOrigin = 50;
inline constexpr std::array<int, 8> kParcelRhythm{3, 5, 1, 5, 3, 1, 3, 1};
inline constexpr std::array<int, 5> kCandidateGroupRhythm{1, 2, 1, 2, 2};

// Offsets from block start at which candidates sit.
inline constexpr std::array<int, 8> kBlockCandidateOffsets{3, 9, 11, 17, 21, 23, 27, 29};

struct CycleBlock {
    std::uint64_t block_index;
    std::uint64_t start;                // 50 + 30 * block_index
    std::vector<int> parcels;           // maximal non-candidate run lengths, in order
    std::vector<int> candidate_groups;  // group sizes; a group ends where more than
                                        // one non-candidate separates two candidates
};

struct RhythmViolation {
    std::uint64_t block_index;
    std::vector<int> parcels;
    std::vector<int> candidate_groups;
};

struct RhythmReport {
    std::uint64_t blocks_checked = 0;
    std::optional<RhythmViolation> first_violation;
};

/// Scans the 30 numbers of block b. Throws std::overflow_error when the
/// block would not fit in 64 bits.
CycleBlock build_block(std::uint64_t block_index);

/// Checks blocks 0..max_block against the two canonical rhythms.
RhythmReport verify_rhythm(std::uint64_t max_block);

}  // namespace primeray
