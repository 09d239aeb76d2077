#include <random>

#include "doctest.h"
#include "nodal_hodge/chain_complex.hpp"
#include "nodal_hodge/hodge_table.hpp"
#include "random_complex.hpp"

using namespace nodal_hodge;
using namespace nodal_hodge::oracle;
using nodal_hodge::testing::has_nonzero_differential;
using nodal_hodge::testing::random_planned_complex;

namespace {

// Plain Gauss-Jordan over mpq_class, used only to cross-check rank().
std::size_t rank_by_gauss(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const mpq_class f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const long num = static_cast<long>(rng() % 7) - 3;
      const long den = 1 + static_cast<long>(rng() % 3);
      m(i, j) = mpq_class(num, den);
      m(i, j).canonicalize();
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rank agrees with Gauss-Jordan on random rational matrices") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = rng() % 7;
    const std::size_t cols = rng() % 7;
    RationalMatrix m = random_matrix(rng, rows, cols);
    // Force some rank deficiency by duplicating a combination of rows.
    if (rows >= 3 && trial % 2 == 0) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * mpq_class(2, 3) - m(1, j);
    }
    CHECK(rank(m) == rank_by_gauss(m));
  }
  CHECK(rank(RationalMatrix(0, 4)) == 0);
  CHECK(rank(RationalMatrix(3, 3)) == 0);
  CHECK(rank(RationalMatrix::identity(5)) == 5);
}

TEST_CASE("homology_betti basic complexes") {
  CHECK(homology_betti(ChainComplex({1, 1, 1})) == std::vector<std::size_t>{1, 1, 1});
  RationalMatrix one(1, 1);
  one(0, 0) = 1;
  CHECK(homology_betti(ChainComplex({1, 1}, {one})) == std::vector<std::size_t>{0, 0});
  // Circle: two vertices, two edges.
  RationalMatrix d(2, 2);
  d(0, 0) = -1;
  d(1, 0) = 1;
  d(0, 1) = 1;
  d(1, 1) = -1;
  CHECK(homology_betti(ChainComplex({2, 2}, {d})) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("construction rejects malformed complexes") {
  CHECK_THROWS_AS(ChainComplex(std::vector<std::size_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(ChainComplex({1, 1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(ChainComplex({1, 2}, {RationalMatrix(2, 1)}), std::invalid_argument);
  RationalMatrix d1(1, 1);
  RationalMatrix d2(1, 1);
  d1(0, 0) = 1;
  d2(0, 0) = 1;
  CHECK_THROWS_AS(ChainComplex({1, 1, 1}, {d1, d2}), std::invalid_argument);
}

TEST_CASE("planned complexes have the planned homology") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto planned = random_planned_complex(rng);
    CHECK(has_nonzero_differential(planned.complex));
    CHECK(homology_betti(planned.complex) == planned.homology);
  }
}

TEST_CASE("tensor_complex") {
  const auto rr = tensor_complex(cw_nodal_rational(), cw_nodal_rational());
  CHECK(rr.dims() == std::vector<std::size_t>{1, 2, 3, 2, 1});
  CHECK(homology_betti(rr) == std::vector<std::size_t>{1, 2, 3, 2, 1});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_planned_complex(rng).complex;
    const auto with_point = tensor_complex(a, cw_point());
    CHECK(with_point.dims() == a.dims());
    for (std::size_t i = 1; i <= a.top_degree(); ++i) {
      CHECK(with_point.differential(i) == a.differential(i));
    }
    // d d = 0 is re-checked by the ChainComplex constructor.
    const auto b = random_planned_complex(rng).complex;
    CHECK_NOTHROW(tensor_complex(a, b));
  }
}

TEST_CASE("kunneth_check") {
  CHECK(kunneth_check(cw_nodal_rational(), cw_nodal_rational()));
  CHECK(kunneth_check(cw_torus(1), cw_nodal_rational()));
  CHECK(homology_betti(tensor_complex(cw_torus(1), cw_nodal_rational())) ==
        std::vector<std::size_t>{1, 3, 4, 3, 1});

  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_planned_complex(rng);
    const auto b = random_planned_complex(rng);
    CHECK(kunneth_check(a.complex, b.complex));
  }
  CHECK_THROWS_AS(kunneth_check(cw_torus(4), cw_point()), ResourceLimitError);
  CHECK(kunneth_check(cw_torus(4), cw_point(), 256));
}

TEST_CASE("CW models") {
  CHECK(homology_betti(cw_nodal_rational()) == std::vector<std::size_t>{1, 1, 1});
  CHECK(cw_torus(0).dims() == std::vector<std::size_t>{1});
  CHECK(homology_betti(cw_torus(2)) == std::vector<std::size_t>{1, 4, 6, 4, 1});
  CHECK_THROWS_AS(cw_torus(-1), std::invalid_argument);
}

TEST_CASE("convolve_betti") {
  CHECK(convolve_betti({1, 2, 1}, {1, 1, 1}) == std::vector<std::size_t>{1, 3, 4, 3, 1});
  CHECK(convolve_betti({1}, {2, 3}) == std::vector<std::size_t>{2, 3});
}
