#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "nodal_hodge/hodge_table.hpp"

namespace nodal_hodge::oracle {

/// One Kunneth basis element of H*(J0 x R^k): a set of holomorphic and a set
/// of antiholomorphic degree-one torus generators, and one of H0/H1/H2 for
/// each copy of R.
enum class RClass : std::uint8_t { H0 = 0, H1 = 1, H2 = 2 };

struct GeneratorChoice {
  std::uint32_t torus_holo = 0;  // bit j set: generator j+1 of type (1,0)
  std::uint32_t torus_anti = 0;  // bit j set: generator j+1 of type (0,1)
  std::vector<RClass> r_choices;

  /// Piece this basis element spans.
  HodgePiece piece() const;
};

/// Decodes a flat choice index laid out as torus_word * 3^k + r_index, where
/// torus_word = torus_holo | (torus_anti << g0) and r_index lists r_choices
/// as base-3 digits, least significant first.
GeneratorChoice decode_choice(int g0, int k, std::uint64_t index);

enum class KernelKind { Auto, Scalar, Avx2 };

std::string_view kernel_name(KernelKind kind);

/// True when the AVX2 kernel is compiled in and the CPU reports AVX2.
bool avx2_available();

/// Kernel actually used for `requested` (Auto resolves to the fastest
/// available; an unavailable explicit request falls back to Scalar).
KernelKind resolve_kernel(KernelKind requested);

/// Histogram over choice classes. A choice with |holo| = a, |anti| = b and
/// h1, h2 copies of H1, H2 lands in slot ((a*(g0+1) + b)*(k+1) + h1)*(k+1) + h2.
struct CensusHistogram {
  int g0 = 0;
  int k = 0;
  std::vector<std::uint64_t> counts;

  CensusHistogram(int g0_, int k_);
  std::size_t slot(int a, int b, int h1, int h2) const;
  CensusHistogram& operator+=(const CensusHistogram& other);
};

/// Tallies every choice with flat index in [first, last) into `hist`.
void tally_range(KernelKind kind, std::uint64_t first, std::uint64_t last,
                 CensusHistogram& hist);

struct CensusOptions {
  std::uint64_t cap = std::uint64_t{1} << 28;
  unsigned workers = 1;  // 0 means hardware concurrency
  KernelKind kernel = KernelKind::Auto;
};

/// Number of generator choices, 4^g0 * 3^k; throws ResourceLimitError if it
/// exceeds `cap` or 2^62.
std::uint64_t census_size(int g0, int k, std::uint64_t cap);

/// Brute-force Kunneth basis enumeration of H*(J0 x R^k). Each generator
/// choice contributes one to its (degree, weight, p, q) slot. No binomial
/// coefficients are used on this path.
MixedHodgeTable kunneth_basis_census(int g0, int k, const CensusOptions& options = {});

/// Same tally from an explicit list of sub-ranges of the flat index space;
/// the ranges must partition [0, census_size). Used to check that the
/// result does not depend on how the space is split.
MixedHodgeTable census_from_partition(int g0, int k,
                                      std::span<const std::pair<std::uint64_t, std::uint64_t>> ranges,
                                      KernelKind kernel = KernelKind::Auto);

}  // namespace nodal_hodge::oracle
