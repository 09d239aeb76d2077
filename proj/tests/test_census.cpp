#include <random>

#include "doctest.h"
#include "nodal_hodge/census.hpp"
#include "nodal_hodge/hodge_table.hpp"
#include "nodal_hodge/table_io.hpp"
#include "test_support.hpp"

using namespace nodal_hodge;
using namespace nodal_hodge::oracle;

namespace {

// One decode_choice per index; no kernel involved.
MixedHodgeTable census_by_decoding(int g0, int k) {
  MixedHodgeTable out;
  const std::uint64_t size = census_size(g0, k, std::uint64_t{1} << 40);
  for (std::uint64_t n = 0; n < size; ++n) out.add(decode_choice(g0, k, n).piece(), 1);
  return out;
}

}  // namespace

TEST_CASE("spot values") {
  CHECK(kunneth_basis_census(0, 1) == nodal_rational_table());
  CHECK(kunneth_basis_census(1, 0) == jacobian_table(1));
  CHECK(kunneth_basis_census(0, 0) == unit_table());

  const auto t = kunneth_basis_census(0, 2);
  CHECK(testing::betti_vector(t) == std::vector<long>{1, 2, 3, 2, 1});
  CHECK(weight_dim(t, 2, 2) == 2);
}

TEST_CASE("GeneratorChoice maps to its Kunneth piece") {
  GeneratorChoice c;
  c.torus_holo = 0b101;
  c.torus_anti = 0b010;
  c.r_choices = {RClass::H2, RClass::H1, RClass::H0, RClass::H2};
  const HodgePiece x = c.piece();
  CHECK(x == HodgePiece(3 + 1 + 4, 3 + 4, 2 + 2, 1 + 2));

  const auto d = decode_choice(2, 3, 0);
  CHECK(d.torus_holo == 0);
  CHECK(d.torus_anti == 0);
  CHECK(d.r_choices == std::vector<RClass>(3, RClass::H0));
  // torus word 0b1101 = holo 0b01, anti 0b11; r digits 2,0,1 (lsd first) = 2 + 9.
  const auto e = decode_choice(2, 3, 13 * 27 + 11);
  CHECK(e.torus_holo == 0b01);
  CHECK(e.torus_anti == 0b11);
  CHECK(e.r_choices == std::vector<RClass>{RClass::H2, RClass::H0, RClass::H1});
}

TEST_CASE("census equals per-index decoding and the explicit product enumeration") {
  for (int g0 = 0; g0 <= 3; ++g0) {
    for (int k = 0; k <= 4; ++k) {
      CAPTURE(g0);
      CAPTURE(k);
      const auto census = kunneth_basis_census(g0, k);
      CHECK(census == census_by_decoding(g0, k));
      CHECK(census == testing::enumerate_product(g0, std::vector(k, testing::r_basis())));
      CHECK(census.is_conjugation_symmetric());
    }
  }
}

TEST_CASE("scalar and AVX2 kernels tally identically") {
  INFO("avx2 available: " << avx2_available());
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int g0 = static_cast<int>(rng() % 4);
    const int k = static_cast<int>(rng() % 8);
    const std::uint64_t size = census_size(g0, k, std::uint64_t{1} << 40);
    std::uint64_t first = rng() % (size + 1);
    std::uint64_t last = rng() % (size + 1);
    if (first > last) std::swap(first, last);
    CensusHistogram scalar(g0, k);
    CensusHistogram vector(g0, k);
    tally_range(KernelKind::Scalar, first, last, scalar);
    tally_range(KernelKind::Avx2, first, last, vector);
    CHECK(scalar.counts == vector.counts);
  }
  // Full ranges, including segments shorter than one vector.
  for (int k = 0; k <= 9; ++k) {
    CensusHistogram scalar(2, k);
    CensusHistogram vector(2, k);
    const std::uint64_t size = census_size(2, k, std::uint64_t{1} << 40);
    tally_range(KernelKind::Scalar, 0, size, scalar);
    tally_range(KernelKind::Avx2, 0, size, vector);
    CHECK(scalar.counts == vector.counts);
  }
}

TEST_CASE("kernel resolution") {
  CHECK(resolve_kernel(KernelKind::Scalar) == KernelKind::Scalar);
  CHECK(resolve_kernel(KernelKind::Auto) ==
        (avx2_available() ? KernelKind::Avx2 : KernelKind::Scalar));
  CHECK(kernel_name(KernelKind::Avx2) == "avx2");
}

TEST_CASE("any partition of the choice space gives the same tally") {
  std::mt19937_64 rng(5);
  const int g0 = 2;
  const int k = 4;
  const auto reference = kunneth_basis_census(g0, k);
  const std::uint64_t size = census_size(g0, k, std::uint64_t{1} << 40);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint64_t> cuts{0, size};
    const int pieces = 1 + static_cast<int>(rng() % 12);
    for (int j = 0; j < pieces; ++j) cuts.push_back(rng() % (size + 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) ranges.emplace_back(cuts[j], cuts[j + 1]);
    std::shuffle(ranges.begin(), ranges.end(), rng);
    CHECK(census_from_partition(g0, k, ranges) == reference);
  }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> short_ranges{{0, size - 1}};
  CHECK_THROWS_AS(census_from_partition(g0, k, short_ranges), std::invalid_argument);
}

TEST_CASE("worker count does not change the result") {
  const auto serial = kunneth_basis_census(4, 6, {.workers = 1});
  for (unsigned workers : {2u, 3u, 7u, 0u}) {
    const auto parallel = kunneth_basis_census(4, 6, {.workers = workers});
    CHECK(parallel == serial);
    CHECK(io::to_json({4, 6, parallel}) == io::to_json({4, 6, serial}));
  }
  CHECK(kunneth_basis_census(3, 5, {.workers = 4, .kernel = KernelKind::Scalar}) ==
        kunneth_basis_census(3, 5, {.workers = 1, .kernel = KernelKind::Avx2}));
}

TEST_CASE("enumeration cap") {
  CHECK(census_size(1, 1, 12) == 12);
  CHECK_THROWS_AS(census_size(1, 1, 11), ResourceLimitError);
  CHECK_THROWS_AS(kunneth_basis_census(0, 1, {.cap = 1}), ResourceLimitError);
  CHECK_THROWS_AS(census_size(40, 0, ~std::uint64_t{0}), ResourceLimitError);
  CHECK_THROWS_AS(census_size(-1, 0, 10), std::invalid_argument);
  try {
    census_size(2, 2, 100);
    FAIL("expected a resource error");
  } catch (const ResourceLimitError& e) {
    CHECK(std::string(e.what()).find("cap 100") != std::string::npos);
  }
}
