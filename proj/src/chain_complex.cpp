#include "nodal_hodge/chain_complex.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

#include "nodal_hodge/hodge_table.hpp"

namespace nodal_hodge::oracle {

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

// Clears the denominators of a rational row.
IntRow integer_row(const RationalMatrix::Row& row) {
  mpz_class scale = 1;
  for (const auto& [c, x] : row) {
    if (x != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  }
  IntRow out;
  for (const auto& [c, x] : row) {
    if (x != 0) out.emplace_back(c, x.get_num() * (scale / x.get_den()));
  }
  return out;
}

// Divides out the content and makes the leading entry positive.
void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class content = 0;
  for (const auto& [c, x] : row) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content == 1) break;
  }
  if (row.front().second < 0) content = -content;
  if (content == 1) return;
  for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
}

// a * row - b * pivot, merged by column; drops cancelled entries.
IntRow combine(const mpz_class& a, const IntRow& row, const mpz_class& b, const IntRow& pivot) {
  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      mpz_class v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const mpq_class kZero(0);

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(j, j) = 1;
  return m;
}

mpq_class& RationalMatrix::operator()(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix: index out of range");
  return data_[r][c];
}

const mpq_class& RationalMatrix::operator()(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix: index out of range");
  auto it = data_[r].find(c);
  return it == data_[r].end() ? kZero : it->second;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const Row& row : data_) {
    for (const auto& [c, x] : row) n += x != 0;
  }
  return n;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    RationalMatrix::Row& target = out.data_[i];
    for (const auto& [l, x] : a.data_[i]) {
      if (x == 0) continue;
      for (const auto& [j, y] : b.data_[l]) {
        if (y != 0) target[j] += x * y;
      }
    }
    std::erase_if(target, [](const auto& entry) { return entry.second == 0; });
  }
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    auto nonzero = [](const auto& entry) { return entry.second != 0; };
    std::vector<std::pair<std::size_t, mpq_class>> x;
    std::vector<std::pair<std::size_t, mpq_class>> y;
    std::copy_if(a.data_[i].begin(), a.data_[i].end(), std::back_inserter(x), nonzero);
    std::copy_if(b.data_[i].begin(), b.data_[i].end(), std::back_inserter(y), nonzero);
    if (x != y) return false;
  }
  return true;
}

std::size_t rank(const RationalMatrix& m) {
  // pivots[c]: primitive integer row whose leading column is c.
  std::map<std::size_t, IntRow> pivots;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntRow row = integer_row(m.row(r));
    make_primitive(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const IntRow& pivot = it->second;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
      const mpz_class a = pivot.front().second / g;
      const mpz_class b = row.front().second / g;
      row = combine(a, row, b, pivot);
      make_primitive(row);
    }
    if (!row.empty()) pivots.emplace(row.front().first, std::move(row));
  }
  return pivots.size();
}

ChainComplex::ChainComplex(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("ChainComplex: need at least degree 0");
  for (std::size_t i = 1; i < dims_.size(); ++i) {
    differentials_.emplace_back(dims_[i - 1], dims_[i]);
  }
}

ChainComplex::ChainComplex(std::vector<std::size_t> dims, std::vector<RationalMatrix> differentials)
    : dims_(std::move(dims)), differentials_(std::move(differentials)) {
  if (dims_.empty()) throw std::invalid_argument("ChainComplex: need at least degree 0");
  if (differentials_.size() + 1 != dims_.size()) {
    throw std::invalid_argument("ChainComplex: expected " + std::to_string(dims_.size() - 1) +
                                " differentials, got " + std::to_string(differentials_.size()));
  }
  for (std::size_t i = 1; i < dims_.size(); ++i) {
    const RationalMatrix& d = differentials_[i - 1];
    if (d.rows() != dims_[i - 1] || d.cols() != dims_[i]) {
      throw std::invalid_argument("ChainComplex: d_" + std::to_string(i) + " has shape " +
                                  std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                  ", expected " + std::to_string(dims_[i - 1]) + "x" +
                                  std::to_string(dims_[i]));
    }
  }
  for (std::size_t i = 1; i + 1 < dims_.size(); ++i) {
    if (!(differentials_[i - 1] * differentials_[i]).is_zero()) {
      throw std::invalid_argument("ChainComplex: d_" + std::to_string(i) + " d_" +
                                  std::to_string(i + 1) + " != 0");
    }
  }
}

std::size_t ChainComplex::total_rank() const {
  std::size_t total = 0;
  for (std::size_t d : dims_) total += d;
  return total;
}

const RationalMatrix& ChainComplex::differential(std::size_t i) const {
  if (i == 0 || i > differentials_.size()) return empty_;
  return differentials_[i - 1];
}

std::vector<std::size_t> homology_betti(const ChainComplex& c) {
  const std::size_t n = c.dims().size();
  std::vector<std::size_t> ranks(n + 1, 0);  // ranks[i] = rank d_i
  for (std::size_t i = 1; i < n; ++i) ranks[i] = rank(c.differential(i));
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = c.dims()[i] - ranks[i] - ranks[i + 1];
  return out;
}

ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b) {
  const std::size_t top_a = a.top_degree();
  const std::size_t top_b = b.top_degree();
  const std::size_t top = top_a + top_b;

  // offsets[n][i]: start of block (i, n - i) inside degree n.
  std::vector<std::vector<std::size_t>> offsets(top + 1, std::vector<std::size_t>(top_a + 1, 0));
  std::vector<std::size_t> dims(top + 1, 0);
  for (std::size_t n = 0; n <= top; ++n) {
    for (std::size_t i = 0; i <= top_a; ++i) {
      offsets[n][i] = dims[n];
      if (n >= i && n - i <= top_b) dims[n] += a.dims()[i] * b.dims()[n - i];
    }
  }

  std::vector<RationalMatrix> differentials;
  for (std::size_t n = 1; n <= top; ++n) {
    RationalMatrix d(dims[n - 1], dims[n]);
    for (std::size_t i = 0; i <= top_a; ++i) {
      if (i > n || n - i > top_b) continue;
      const std::size_t j = n - i;
      const std::size_t dim_ai = a.dims()[i];
      const std::size_t dim_bj = b.dims()[j];
      const std::size_t source = offsets[n][i];
      // dx (x) y lands in block (i - 1, j).
      if (i >= 1) {
        const RationalMatrix& da = a.differential(i);
        const std::size_t target = offsets[n - 1][i - 1];
        for (std::size_t x2 = 0; x2 < da.rows(); ++x2) {
          for (const auto& [x, coeff] : da.row(x2)) {
            if (coeff == 0) continue;
            for (std::size_t y = 0; y < dim_bj; ++y) {
              d(target + x2 * dim_bj + y, source + x * dim_bj + y) += coeff;
            }
          }
        }
      }
      // (-1)^i x (x) dy lands in block (i, j - 1).
      if (j >= 1) {
        const RationalMatrix& db = b.differential(j);
        const std::size_t target = offsets[n - 1][i];
        const std::size_t dim_bj1 = b.dims()[j - 1];
        for (std::size_t y2 = 0; y2 < db.rows(); ++y2) {
          for (const auto& [y, coeff] : db.row(y2)) {
            if (coeff == 0) continue;
            const mpq_class signed_coeff = i % 2 == 0 ? coeff : mpq_class(-coeff);
            for (std::size_t x = 0; x < dim_ai; ++x) {
              d(target + x * dim_bj1 + y2, source + x * dim_bj + y) += signed_coeff;
            }
          }
        }
      }
    }
    differentials.push_back(std::move(d));
  }
  return ChainComplex(std::move(dims), std::move(differentials));
}

std::vector<std::size_t> convolve_betti(const std::vector<std::size_t>& a,
                                        const std::vector<std::size_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

bool kunneth_check(const ChainComplex& a, const ChainComplex& b, std::size_t max_rank) {
  for (const ChainComplex* c : {&a, &b}) {
    if (c->total_rank() > max_rank) {
      throw ResourceLimitError("kunneth_check: complex of total rank " +
                               std::to_string(c->total_rank()) + " exceeds the cap " +
                               std::to_string(max_rank));
    }
  }
  return homology_betti(tensor_complex(a, b)) == convolve_betti(homology_betti(a), homology_betti(b));
}

ChainComplex cw_point() { return ChainComplex({1}); }

ChainComplex cw_nodal_rational() { return ChainComplex({1, 1, 1}); }

ChainComplex cw_torus(int g0) {
  if (g0 < 0) throw std::invalid_argument("cw_torus: genus must be non-negative");
  // Pascal row 2*g0, built by repeated addition.
  std::vector<std::size_t> row{1};
  for (int step = 0; step < 2 * g0; ++step) {
    std::vector<std::size_t> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return ChainComplex(std::move(row));
}

}  // namespace nodal_hodge::oracle
