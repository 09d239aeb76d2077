#include "census_kernels.hpp"

namespace nodal_hodge::oracle::detail {

void tally_r_segment_scalar(std::uint64_t base, int k, std::uint64_t r_begin,
                            std::uint64_t r_end, std::uint64_t* counts) {
  const std::uint64_t stride = static_cast<std::uint64_t>(k) + 1;
  for (std::uint64_t r = r_begin; r < r_end; ++r) {
    std::uint64_t n = r;
    std::uint64_t h1 = 0;
    std::uint64_t h2 = 0;
    for (int d = 0; d < k; ++d) {
      const std::uint64_t digit = n % 3;
      n /= 3;
      h1 += digit == 1;
      h2 += digit == 2;
    }
    ++counts[base + h1 * stride + h2];
  }
}

}  // namespace nodal_hodge::oracle::detail
