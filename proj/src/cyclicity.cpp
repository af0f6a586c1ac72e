#include "primeray/cyclicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "primeray/wheel.hpp"

namespace primeray {

CycleBlock build_block(std::uint64_t block_index) {
    if (block_index > (UINT64_MAX - kBlockOrigin - 29) / 30) {
        throw std::overflow_error("build_block: block does not fit in 64 bits");
    }
    CycleBlock block;
    block.block_index = block_index;
    block.start = kBlockOrigin + 30 * block_index;

    int run = 0;             // current non-candidate run
    int group = 0;           // current candidate group
    int last_candidate = -2; // offset of the previous candidate
    for (int off = 0; off < 30; ++off) {
        if (is_candidate(block.start + static_cast<std::uint64_t>(off))) {
            if (run > 0) {
                block.parcels.push_back(run);
                run = 0;
            }
            if (group > 0 && off - last_candidate > 2) {
                // more than one composite since the previous candidate
                block.candidate_groups.push_back(group);
                group = 0;
            }
            ++group;
            last_candidate = off;
        } else {
            ++run;
        }
    }
    if (run > 0) block.parcels.push_back(run);
    if (group > 0) block.candidate_groups.push_back(group);
    return block;
}

RhythmReport verify_rhythm(std::uint64_t max_block) {
    RhythmReport report;
    for (std::uint64_t b = 0; b <= max_block; ++b) {
        const CycleBlock block = build_block(b);
        ++report.blocks_checked;
        const bool parcels_ok =
            std::equal(block.parcels.begin(), block.parcels.end(), kParcelRhythm.begin(), kParcelRhythm.end());
        const bool groups_ok = std::equal(block.candidate_groups.begin(), block.candidate_groups.end(),
                                          kCandidateGroupRhythm.begin(), kCandidateGroupRhythm.end());
        if (!parcels_ok || !groups_ok) {
            report.first_violation = RhythmViolation{b, block.parcels, block.candidate_groups};
            return report;
        }
    }
    return report;
}

}  // namespace primeray
