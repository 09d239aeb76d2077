#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nodal_hodge {

/// Dimensions are exact and unbounded; binomial products leave 64 bits quickly.
using Multiplicity = mpz_class;

/// Thrown when an enumeration or matrix would exceed a configured size bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One graded slot of a mixed Hodge table: cohomological degree, weight and
/// Hodge bidegree. The bidegree always sits on the weight antidiagonal.
class HodgePiece {
 public:
  HodgePiece(int degree, int weight, int p, int q);

  int degree() const { return degree_; }
  int weight() const { return weight_; }
  int p() const { return p_; }
  int q() const { return q_; }

  /// The piece with p and q exchanged.
  HodgePiece conjugate() const { return HodgePiece(degree_, weight_, q_, p_); }

  // Lexicographic on (degree, weight, p, q).
  auto operator<=>(const HodgePiece&) const = default;

 private:
  int degree_;
  int weight_;
  int p_;
  int q_;
};

/// Finitely supported map HodgePiece -> multiplicity, kept in canonical
/// sparse form (no stored zeros). Equality compares the support only; the
/// label is a free-form tag.
class MixedHodgeTable {
 public:
  using Storage = std::map<HodgePiece, Multiplicity>;

  MixedHodgeTable() = default;
  explicit MixedHodgeTable(std::string label) : label_(std::move(label)) {}

  /// Adds `count` to the multiplicity at `piece`. Negative resulting
  /// multiplicities are rejected.
  void add(const HodgePiece& piece, const Multiplicity& count);

  Multiplicity multiplicity(const HodgePiece& piece) const;

  const Storage& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }

  /// Largest supported degree, or nullopt for the zero table.
  std::optional<int> max_degree() const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Sum of all multiplicities.
  Multiplicity total_dimension() const;

  bool is_conjugation_symmetric() const;

  friend bool operator==(const MixedHodgeTable& a, const MixedHodgeTable& b) {
    return a.pieces_ == b.pieces_;
  }

 private:
  Storage pieces_;
  std::string label_;
};

// Builders.

/// Cohomology of a point; the tensor unit.
MixedHodgeTable unit_table();

/// Cohomology of the Jacobian of a smooth genus-g0 curve: pure of weight t in
/// degree t, with h^{r,s} = C(g0,r) C(g0,s).
MixedHodgeTable jacobian_table(int g0);

/// Cohomology of the rational nodal curve: H^0 and H^1 of weight 0 and type
/// (0,0), H^2 pure of weight 2 and type (1,1).
MixedHodgeTable nodal_rational_table();

/// Structural route: jacobian_table(g0) tensored with the k-th power of the
/// rational nodal curve table.
MixedHodgeTable compactified_jacobian_table(int g0, int k);

// Algebra.

MixedHodgeTable direct_sum(const MixedHodgeTable& a, const MixedHodgeTable& b);

/// Kunneth product: degrees, weights and Hodge bidegrees add.
MixedHodgeTable tensor(const MixedHodgeTable& a, const MixedHodgeTable& b);

MixedHodgeTable power(const MixedHodgeTable& a, int k);

/// Twist by Q(m): (i, w, p, q) -> (i, w - 2m, p - m, q - m). Restricted to
/// effective results; a twist pushing p or q below zero throws.
MixedHodgeTable tate_twist(const MixedHodgeTable& a, int m);

// Extraction.

Multiplicity betti(const MixedHodgeTable& a, int i);
Multiplicity weight_dim(const MixedHodgeTable& a, int i, int l);
Multiplicity hodge_number(const MixedHodgeTable& a, int i, int p, int q);

/// Betti numbers indexed by degree, trailing zeros trimmed.
std::vector<Multiplicity> poincare_polynomial(const MixedHodgeTable& a);

/// Signed Hodge-Deligne tally: (p,q) -> sum_i (-1)^i h^{p,q}(H^i). Every
/// (p,q) occurring in the support gets an entry, even when it cancels to 0.
std::map<std::pair<int, int>, mpz_class> e_polynomial(const MixedHodgeTable& a);

}  // namespace nodal_hodge
