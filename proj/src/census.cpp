#include "nodal_hodge/census.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

#include "census_kernels.hpp"

namespace nodal_hodge::oracle {

namespace {

constexpr std::uint64_t kIndexLimit = std::uint64_t{1} << 62;

std::uint64_t pow3(int k) {
  std::uint64_t out = 1;
  for (int j = 0; j < k; ++j) out *= 3;
  return out;
}

void check_shape(int g0, int k) {
  if (g0 < 0 || k < 0) {
    throw std::invalid_argument("census: g0 and k must be non-negative");
  }
}

MixedHodgeTable table_from_histogram(const CensusHistogram& hist) {
  MixedHodgeTable table("census(g0=" + std::to_string(hist.g0) + ",k=" + std::to_string(hist.k) +
                        ")");
  for (int a = 0; a <= hist.g0; ++a) {
    for (int b = 0; b <= hist.g0; ++b) {
      for (int h1 = 0; h1 <= hist.k; ++h1) {
        for (int h2 = 0; h1 + h2 <= hist.k; ++h2) {
          const std::uint64_t count = hist.counts[hist.slot(a, b, h1, h2)];
          if (count == 0) continue;
          const int degree = a + b + h1 + 2 * h2;
          const int weight = a + b + 2 * h2;
          table.add(HodgePiece(degree, weight, a + h2, b + h2),
                    Multiplicity(static_cast<unsigned long>(count)));
        }
      }
    }
  }
  return table;
}

}  // namespace

HodgePiece GeneratorChoice::piece() const {
  const int a = std::popcount(torus_holo);
  const int b = std::popcount(torus_anti);
  int degree = a + b;
  int weight = a + b;
  int h2 = 0;
  for (RClass c : r_choices) {
    switch (c) {
      case RClass::H0:
        break;
      case RClass::H1:
        degree += 1;
        break;
      case RClass::H2:
        degree += 2;
        weight += 2;
        ++h2;
        break;
    }
  }
  return HodgePiece(degree, weight, a + h2, b + h2);
}

GeneratorChoice decode_choice(int g0, int k, std::uint64_t index) {
  check_shape(g0, k);
  const std::uint64_t r_size = pow3(k);
  std::uint64_t torus = index / r_size;
  std::uint64_t r = index % r_size;
  GeneratorChoice choice;
  const std::uint64_t mask = (std::uint64_t{1} << g0) - 1;
  choice.torus_holo = static_cast<std::uint32_t>(torus & mask);
  choice.torus_anti = static_cast<std::uint32_t>((torus >> g0) & mask);
  choice.r_choices.reserve(k);
  for (int j = 0; j < k; ++j) {
    choice.r_choices.push_back(static_cast<RClass>(r % 3));
    r /= 3;
  }
  return choice;
}

std::string_view kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::Auto:
      return "auto";
    case KernelKind::Scalar:
      return "scalar";
    case KernelKind::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if NODAL_HODGE_HAVE_AVX2
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

KernelKind resolve_kernel(KernelKind requested) {
  if (requested == KernelKind::Scalar) return KernelKind::Scalar;
  return avx2_available() ? KernelKind::Avx2 : KernelKind::Scalar;
}

CensusHistogram::CensusHistogram(int g0_, int k_) : g0(g0_), k(k_) {
  check_shape(g0, k);
  const std::size_t torus = static_cast<std::size_t>(g0 + 1) * (g0 + 1);
  const std::size_t r = static_cast<std::size_t>(k + 1) * (k + 1);
  counts.assign(torus * r, 0);
}

std::size_t CensusHistogram::slot(int a, int b, int h1, int h2) const {
  return ((static_cast<std::size_t>(a) * (g0 + 1) + b) * (k + 1) + h1) * (k + 1) + h2;
}

CensusHistogram& CensusHistogram::operator+=(const CensusHistogram& other) {
  if (other.g0 != g0 || other.k != k) {
    throw std::invalid_argument("CensusHistogram: shape mismatch");
  }
  for (std::size_t j = 0; j < counts.size(); ++j) counts[j] += other.counts[j];
  return *this;
}

void tally_range(KernelKind kind, std::uint64_t first, std::uint64_t last,
                 CensusHistogram& hist) {
  const int g0 = hist.g0;
  const int k = hist.k;
  const std::uint64_t r_size = pow3(k);
  const std::uint64_t mask = (std::uint64_t{1} << g0) - 1;
  const bool vector = resolve_kernel(kind) == KernelKind::Avx2 &&
                      r_size <= (std::uint64_t{1} << 32);

  std::uint64_t index = first;
  while (index < last) {
    const std::uint64_t torus = index / r_size;
    const std::uint64_t r_begin = index % r_size;
    const std::uint64_t r_end = std::min(r_size, r_begin + (last - index));
    const int a = std::popcount(torus & mask);
    const int b = std::popcount((torus >> g0) & mask);
    const std::uint64_t base = hist.slot(a, b, 0, 0);
#if NODAL_HODGE_HAVE_AVX2
    if (vector) {
      detail::tally_r_segment_avx2(base, k, r_begin, r_end, hist.counts.data());
    } else {
      detail::tally_r_segment_scalar(base, k, r_begin, r_end, hist.counts.data());
    }
#else
    (void)vector;
    detail::tally_r_segment_scalar(base, k, r_begin, r_end, hist.counts.data());
#endif
    index += r_end - r_begin;
  }
}

std::uint64_t census_size(int g0, int k, std::uint64_t cap) {
  check_shape(g0, k);
  std::uint64_t size = 1;
  auto grow = [&](std::uint64_t factor, int times) {
    for (int j = 0; j < times; ++j) {
      if (size > kIndexLimit / factor) {
        throw ResourceLimitError("census: 4^" + std::to_string(g0) + " * 3^" +
                                 std::to_string(k) + " choices overflow the index space");
      }
      size *= factor;
    }
  };
  grow(4, g0);
  grow(3, k);
  if (size > cap) {
    throw ResourceLimitError("census: " + std::to_string(size) + " generator choices for (g0=" +
                             std::to_string(g0) + ", k=" + std::to_string(k) +
                             ") exceed the enumeration cap " + std::to_string(cap));
  }
  return size;
}

MixedHodgeTable kunneth_basis_census(int g0, int k, const CensusOptions& options) {
  const std::uint64_t size = census_size(g0, k, options.cap);
  unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
  workers = std::max(1u, workers);
  if (size < std::uint64_t{1} << 16) workers = 1;

  std::vector<CensusHistogram> partial(workers, CensusHistogram(g0, k));
  if (workers == 1) {
    tally_range(options.kernel, 0, size, partial[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t first = size / workers * w;
      const std::uint64_t last = w + 1 == workers ? size : size / workers * (w + 1);
      threads.emplace_back([&, w, first, last] {
        tally_range(options.kernel, first, last, partial[w]);
      });
    }
  }
  for (unsigned w = 1; w < workers; ++w) partial[0] += partial[w];
  return table_from_histogram(partial[0]);
}

MixedHodgeTable census_from_partition(
    int g0, int k, std::span<const std::pair<std::uint64_t, std::uint64_t>> ranges,
    KernelKind kernel) {
  const std::uint64_t size = census_size(g0, k, kIndexLimit);
  CensusHistogram hist(g0, k);
  std::uint64_t covered = 0;
  for (const auto& [first, last] : ranges) {
    if (first > last || last > size) {
      throw std::invalid_argument("census_from_partition: range out of bounds");
    }
    covered += last - first;
    tally_range(kernel, first, last, hist);
  }
  if (covered != size) {
    throw std::invalid_argument("census_from_partition: ranges do not cover the choice space");
  }
  return table_from_histogram(hist);
}

}  // namespace nodal_hodge::oracle
