#pragma once

#include <cstdint>

namespace nodal_hodge::oracle::detail {

// Tallies r_index in [r_begin, r_end) for a fixed torus word. `base` is the
// histogram offset of the torus class; the slot of a choice is
// base + h1 * (k + 1) + h2.
void tally_r_segment_scalar(std::uint64_t base, int k, std::uint64_t r_begin,
                            std::uint64_t r_end, std::uint64_t* counts);

#if NODAL_HODGE_HAVE_AVX2
// Requires r_end <= 2^32.
void tally_r_segment_avx2(std::uint64_t base, int k, std::uint64_t r_begin,
                          std::uint64_t r_end, std::uint64_t* counts);
#endif

}  // namespace nodal_hodge::oracle::detail
