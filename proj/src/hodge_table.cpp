#include "nodal_hodge/hodge_table.hpp"

#include <algorithm>
#include <string>

namespace nodal_hodge {

HodgePiece::HodgePiece(int degree, int weight, int p, int q)
    : degree_(degree), weight_(weight), p_(p), q_(q) {
  if (degree < 0 || weight < 0 || p < 0 || q < 0) {
    throw std::invalid_argument("HodgePiece: indices must be non-negative");
  }
  if (p + q != weight) {
    throw std::invalid_argument("HodgePiece: p + q must equal the weight (got p=" +
                                std::to_string(p) + ", q=" + std::to_string(q) +
                                ", weight=" + std::to_string(weight) + ")");
  }
}

void MixedHodgeTable::add(const HodgePiece& piece, const Multiplicity& count) {
  if (count == 0) return;
  auto it = pieces_.find(piece);
  if (it == pieces_.end()) {
    if (count < 0) throw std::invalid_argument("MixedHodgeTable: negative multiplicity");
    pieces_.emplace(piece, count);
    return;
  }
  it->second += count;
  if (it->second < 0) {
    it->second -= count;
    throw std::invalid_argument("MixedHodgeTable: negative multiplicity");
  }
  if (it->second == 0) pieces_.erase(it);
}

Multiplicity MixedHodgeTable::multiplicity(const HodgePiece& piece) const {
  auto it = pieces_.find(piece);
  return it == pieces_.end() ? Multiplicity(0) : it->second;
}

std::optional<int> MixedHodgeTable::max_degree() const {
  if (pieces_.empty()) return std::nullopt;
  // Keys are ordered by degree first.
  return pieces_.rbegin()->first.degree();
}

Multiplicity MixedHodgeTable::total_dimension() const {
  Multiplicity total = 0;
  for (const auto& [piece, mult] : pieces_) total += mult;
  return total;
}

bool MixedHodgeTable::is_conjugation_symmetric() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [this](const auto& entry) {
    return multiplicity(entry.first.conjugate()) == entry.second;
  });
}

MixedHodgeTable unit_table() {
  MixedHodgeTable t("point");
  t.add(HodgePiece(0, 0, 0, 0), 1);
  return t;
}

MixedHodgeTable jacobian_table(int g0) {
  if (g0 < 0) throw std::invalid_argument("jacobian_table: genus must be non-negative");
  std::vector<Multiplicity> row(g0 + 1);
  for (int r = 0; r <= g0; ++r) {
    mpz_bin_uiui(row[r].get_mpz_t(), static_cast<unsigned long>(g0),
                 static_cast<unsigned long>(r));
  }
  MixedHodgeTable t("J0(g0=" + std::to_string(g0) + ")");
  for (int r = 0; r <= g0; ++r) {
    for (int s = 0; s <= g0; ++s) {
      t.add(HodgePiece(r + s, r + s, r, s), row[r] * row[s]);
    }
  }
  return t;
}

MixedHodgeTable nodal_rational_table() {
  MixedHodgeTable t("R");
  t.add(HodgePiece(0, 0, 0, 0), 1);
  t.add(HodgePiece(1, 0, 0, 0), 1);
  t.add(HodgePiece(2, 2, 1, 1), 1);
  return t;
}

MixedHodgeTable compactified_jacobian_table(int g0, int k) {
  if (g0 < 0 || k < 0) {
    throw std::invalid_argument("compactified_jacobian_table: g0 and k must be non-negative");
  }
  auto t = tensor(jacobian_table(g0), power(nodal_rational_table(), k));
  t.set_label("Jbar(g0=" + std::to_string(g0) + ",k=" + std::to_string(k) + ")");
  return t;
}

MixedHodgeTable direct_sum(const MixedHodgeTable& a, const MixedHodgeTable& b) {
  MixedHodgeTable out = a;
  for (const auto& [piece, mult] : b.pieces()) out.add(piece, mult);
  return out;
}

MixedHodgeTable tensor(const MixedHodgeTable& a, const MixedHodgeTable& b) {
  MixedHodgeTable out;
  for (const auto& [x, mx] : a.pieces()) {
    for (const auto& [y, my] : b.pieces()) {
      out.add(HodgePiece(x.degree() + y.degree(), x.weight() + y.weight(), x.p() + y.p(),
                         x.q() + y.q()),
              mx * my);
    }
  }
  return out;
}

MixedHodgeTable power(const MixedHodgeTable& a, int k) {
  if (k < 0) throw std::invalid_argument("power: exponent must be non-negative");
  MixedHodgeTable result = unit_table();
  MixedHodgeTable base = a;
  // Square-and-multiply; tensor is associative and commutative.
  while (k > 0) {
    if (k & 1) result = tensor(result, base);
    k >>= 1;
    if (k > 0) base = tensor(base, base);
  }
  return result;
}

MixedHodgeTable tate_twist(const MixedHodgeTable& a, int m) {
  MixedHodgeTable out(a.label());
  for (const auto& [x, mult] : a.pieces()) {
    const int p = x.p() - m;
    const int q = x.q() - m;
    if (p < 0 || q < 0) {
      throw std::domain_error("tate_twist: twist by Q(" + std::to_string(m) +
                              ") leaves the effective range");
    }
    out.add(HodgePiece(x.degree(), x.weight() - 2 * m, p, q), mult);
  }
  return out;
}

Multiplicity betti(const MixedHodgeTable& a, int i) {
  Multiplicity sum = 0;
  for (const auto& [x, mult] : a.pieces()) {
    if (x.degree() == i) sum += mult;
  }
  return sum;
}

Multiplicity weight_dim(const MixedHodgeTable& a, int i, int l) {
  Multiplicity sum = 0;
  for (const auto& [x, mult] : a.pieces()) {
    if (x.degree() == i && x.weight() == l) sum += mult;
  }
  return sum;
}

Multiplicity hodge_number(const MixedHodgeTable& a, int i, int p, int q) {
  if (i < 0 || p < 0 || q < 0) return 0;
  return a.multiplicity(HodgePiece(i, p + q, p, q));
}

std::vector<Multiplicity> poincare_polynomial(const MixedHodgeTable& a) {
  std::vector<Multiplicity> out;
  for (const auto& [x, mult] : a.pieces()) {
    if (static_cast<int>(out.size()) <= x.degree()) out.resize(x.degree() + 1, 0);
    out[x.degree()] += mult;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::map<std::pair<int, int>, mpz_class> e_polynomial(const MixedHodgeTable& a) {
  std::map<std::pair<int, int>, mpz_class> out;
  for (const auto& [x, mult] : a.pieces()) {
    auto& coeff = out[{x.p(), x.q()}];
    if (x.degree() % 2 == 0) {
      coeff += mult;
    } else {
      coeff -= mult;
    }
  }
  return out;
}

}  // namespace nodal_hodge
