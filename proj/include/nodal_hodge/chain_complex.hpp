#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace nodal_hodge::oracle {

/// Sparse matrix over Q, stored as one ordered column -> value map per row.
/// Complexes built from cellular models are mostly zero, and the product
/// complexes of the verification sweep reach ranks in the tens of thousands.
class RationalMatrix {
 public:
  using Row = std::map<std::size_t, mpq_class>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Mutable access; creates an explicit entry. Explicit zeros are ignored
  /// by every query.
  mpq_class& operator()(std::size_t r, std::size_t c);
  /// Value at (r, c), zero when absent.
  const mpq_class& operator()(std::size_t r, std::size_t c) const;

  const Row& row(std::size_t r) const { return data_[r]; }

  /// Number of stored nonzero entries.
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Rank over Q. Rows are cleared of denominators and reduced against an
/// echelon basis by fraction-free row combination (a*row - b*pivot, then
/// divided by the row content), so every intermediate is an exact integer.
std::size_t rank(const RationalMatrix& m);

/// Finite chain complex C_0 <- C_1 <- ... <- C_n over Q.
/// differential(i) is d_i : C_i -> C_{i-1}, a dims[i-1] x dims[i] matrix,
/// for 1 <= i <= n. Shapes and d_{i} d_{i+1} = 0 are checked on construction.
class ChainComplex {
 public:
  /// Zero-differential complex with the given ranks.
  explicit ChainComplex(std::vector<std::size_t> dims);
  /// `differentials[j]` is d_{j+1}; must have dims.size() - 1 entries.
  ChainComplex(std::vector<std::size_t> dims, std::vector<RationalMatrix> differentials);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t top_degree() const { return dims_.size() - 1; }
  std::size_t total_rank() const;

  /// d_i for 1 <= i <= top_degree(); a zero-size matrix otherwise.
  const RationalMatrix& differential(std::size_t i) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<RationalMatrix> differentials_;
  RationalMatrix empty_;
};

/// b_i = dims[i] - rank d_i - rank d_{i+1}.
std::vector<std::size_t> homology_betti(const ChainComplex& c);

/// Total complex of a (x) b with d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
/// Degree-n basis: blocks (i, n - i) by increasing i, each block
/// ordered x-major.
ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b);

/// Degree-wise convolution of two Betti vectors.
std::vector<std::size_t> convolve_betti(const std::vector<std::size_t>& a,
                                        const std::vector<std::size_t>& b);

/// Checks the field-coefficient Kunneth law on a pair of complexes. Each
/// complex must have total rank <= max_rank (ResourceLimitError otherwise).
bool kunneth_check(const ChainComplex& a, const ChainComplex& b, std::size_t max_rank = 64);

/// The point: Q in degree 0.
ChainComplex cw_point();

/// Cellular model of the rational nodal curve: one cell in each degree 0..2.
ChainComplex cw_nodal_rational();

/// Cellular model of a real 2*g0-torus: Pascal-row ranks, zero differentials.
ChainComplex cw_torus(int g0);

}  // namespace nodal_hodge::oracle
