#include "census_kernels.hpp"

#include <immintrin.h>

#include <cstdint>

namespace nodal_hodge::oracle::detail {

namespace {

// floor(n / 3) for eight unsigned 32-bit lanes: (n * 0xAAAAAAAB) >> 33 is
// exact on the whole 32-bit range.
inline __m256i div3_epu32(__m256i n) {
  const __m256i magic = _mm256_set1_epi32(static_cast<int>(0xAAAAAAABu));
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(n, magic), 33);
  __m256i odd = _mm256_srli_epi64(_mm256_mul_epu32(_mm256_srli_epi64(n, 32), magic), 33);
  return _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0b10101010);
}

}  // namespace

void tally_r_segment_avx2(std::uint64_t base, int k, std::uint64_t r_begin,
                          std::uint64_t r_end, std::uint64_t* counts) {
  constexpr std::uint64_t kLanes = 8;
  const __m256i lane_offsets = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i two = _mm256_set1_epi32(2);
  const __m256i stride = _mm256_set1_epi32(k + 1);

  std::uint64_t r = r_begin;
  alignas(32) std::uint32_t slots[kLanes];
  for (; r + kLanes <= r_end; r += kLanes) {
    __m256i n = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(r)), lane_offsets);
    __m256i h1 = _mm256_setzero_si256();
    __m256i h2 = _mm256_setzero_si256();
    for (int d = 0; d < k; ++d) {
      const __m256i q = div3_epu32(n);
      const __m256i digit = _mm256_sub_epi32(n, _mm256_add_epi32(q, _mm256_add_epi32(q, q)));
      // cmpeq yields -1 on match.
      h1 = _mm256_sub_epi32(h1, _mm256_cmpeq_epi32(digit, one));
      h2 = _mm256_sub_epi32(h2, _mm256_cmpeq_epi32(digit, two));
      n = q;
    }
    const __m256i slot = _mm256_add_epi32(_mm256_mullo_epi32(h1, stride), h2);
    _mm256_store_si256(reinterpret_cast<__m256i*>(slots), slot);
    for (std::uint64_t j = 0; j < kLanes; ++j) ++counts[base + slots[j]];
  }
  if (r < r_end) tally_r_segment_scalar(base, k, r, r_end, counts);
}

}  // namespace nodal_hodge::oracle::detail
