#include "nodal_hodge/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace nodal_hodge::closed_form {

void ClosedFormParams::validate() const {
  if (g0 < 0 || k < 0) {
    throw std::invalid_argument("closed form parameters must be non-negative (g0=" +
                                std::to_string(g0) + ", k=" + std::to_string(k) + ")");
  }
}

Multiplicity binom(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  Multiplicity out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

Multiplicity r_power_betti_closed(int k, int i) {
  if (k < 0) throw std::invalid_argument("r_power_betti_closed: k must be non-negative");
  Multiplicity sum = 0;
  for (int j = 0; j <= k; ++j) sum += binom(k, j) * binom(j, 2L * j - i);
  return sum;
}

Multiplicity r_power_weight_closed(int k, int i, int l) {
  if (k < 0) throw std::invalid_argument("r_power_weight_closed: k must be non-negative");
  if (l < 0 || l % 2 != 0) return 0;
  const long m = l / 2;
  return binom(k, i - m) * binom(i - m, i - 2 * m);
}

Multiplicity betti_closed(const ClosedFormParams& params, int i) {
  params.validate();
  Multiplicity sum = 0;
  for (int l = 0; l <= 2 * params.k; ++l) {
    sum += binom(2L * params.g0, i - l) * r_power_betti_closed(params.k, l);
  }
  return sum;
}

Multiplicity weight_closed_printed(const ClosedFormParams& params, int i, int l) {
  params.validate();
  Multiplicity sum = 0;
  for (int t = l % 2; t <= l; t += 2) {
    const long half = (l - t) / 2;
    sum += binom(2L * params.g0, t) * binom(params.k, i - half) *
           binom(i - half, static_cast<long>(i) - l + t);
  }
  return sum;
}

Multiplicity weight_closed_corrected(const ClosedFormParams& params, int i, int l) {
  params.validate();
  Multiplicity sum = 0;
  for (int t = l % 2; t <= l; t += 2) {
    sum += binom(2L * params.g0, t) * r_power_weight_closed(params.k, i - t, l - t);
  }
  return sum;
}

Multiplicity hodge_closed_printed(const ClosedFormParams& params, int i, int l, int hp, int hq) {
  params.validate();
  if (hp + hq != l || l < 0) return 0;
  Multiplicity sum = 0;
  for (int t = l % 2; t <= l; t += 2) {
    const long half = (l - t) / 2;
    sum += binom(params.g0, hp - half) * binom(params.g0, hq - half) *
           binom(params.k, i - half) * binom(i - half, static_cast<long>(i) - l + t);
  }
  return sum;
}

Multiplicity hodge_closed_corrected(const ClosedFormParams& params, int i, int l, int hp,
                                    int hq) {
  params.validate();
  if (hp + hq != l || l < 0) return 0;
  Multiplicity sum = 0;
  for (int t = l % 2; t <= l; t += 2) {
    const long half = (l - t) / 2;
    const long r_top = static_cast<long>(i) - t - half;
    sum += binom(params.g0, hp - half) * binom(params.g0, hq - half) * binom(params.k, r_top) *
           binom(r_top, static_cast<long>(i) - l);
  }
  return sum;
}

MixedHodgeTable closed_form_table(const ClosedFormParams& params) {
  params.validate();
  MixedHodgeTable table("closed(g0=" + std::to_string(params.g0) +
                        ",k=" + std::to_string(params.k) + ")");
  const int top = 2 * (params.g0 + params.k);
  for (int i = 0; i <= top; ++i) {
    for (int l = 0; l <= 2 * i; ++l) {
      for (int hp = 0; hp <= l; ++hp) {
        table.add(HodgePiece(i, l, hp, l - hp),
                  hodge_closed_corrected(params, i, l, hp, l - hp));
      }
    }
  }
  return table;
}

}  // namespace nodal_hodge::closed_form
