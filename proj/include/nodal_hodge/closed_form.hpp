#pragma once

#include "nodal_hodge/hodge_table.hpp"

namespace nodal_hodge::closed_form {

/// Genus of the normalisation and number of nodes. The arithmetic genus of
/// the nodal curve is g0 + k.
struct ClosedFormParams {
  int g0 = 0;
  int k = 0;

  /// Throws std::invalid_argument when either field is negative.
  void validate() const;
};

/// n choose r, with every out-of-range case (r < 0, r > n, n < 0) equal to 0.
Multiplicity binom(long n, long r);

/// dim H^i(R^k) for the k-fold product of the rational nodal curve.
Multiplicity r_power_betti_closed(int k, int i);

/// dim gr^W_l H^i(R^k). Odd weights vanish.
Multiplicity r_power_weight_closed(int k, int i, int l);

/// dim H^i of the compactified Jacobian, as a convolution of torus and
/// R^k Betti numbers.
Multiplicity betti_closed(const ClosedFormParams& params, int i);

// The "printed" evaluators transcribe the published weight and Hodge number
// formulas literally (reading g as g0). They carry an index slip in the R^k
// factor and exist only for the errata report; the "corrected" evaluators
// are the convolution those formulas were derived from.

Multiplicity weight_closed_printed(const ClosedFormParams& params, int i, int l);
Multiplicity weight_closed_corrected(const ClosedFormParams& params, int i, int l);

/// Both return 0 unless hp + hq == l.
Multiplicity hodge_closed_printed(const ClosedFormParams& params, int i, int l, int hp, int hq);
Multiplicity hodge_closed_corrected(const ClosedFormParams& params, int i, int l, int hp,
                                    int hq);

/// Table assembled from hodge_closed_corrected over the full index range;
/// the closed-form route as a MixedHodgeTable.
MixedHodgeTable closed_form_table(const ClosedFormParams& params);

}  // namespace nodal_hodge::closed_form
