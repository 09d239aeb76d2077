#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodal_hodge/hodge_table.hpp"

namespace nodal_hodge::strata {

/// One stratum of the singular-locus stratification, as an index set.
///
/// Upstream records live on the normalisation (the moduli of generalised
/// parabolic bundles) and carry a choice of preimage branch, 1 or 2, for
/// each node in the support. Downstream records live on the compactified
/// Jacobian, where the 2^r branch labelings over a support are identified.
/// Records describe index sets; no claim is made that a downstream locus is
/// connected.
struct StratumRecord {
  std::vector<int> support;                 // 1-based node indices, increasing
  std::optional<std::vector<int>> labeling;  // parallel to support, values in {1, 2}
  int codimension = 0;
  std::string local_model;

  friend bool operator==(const StratumRecord&, const StratumRecord&) = default;
};

/// binom(k, r) * 2^r labelled supports, lexicographic by (support, labeling).
std::vector<StratumRecord> enumerate_strata_upstream(int k, int r);

/// binom(k, r) supports in lexicographic order.
std::vector<StratumRecord> enumerate_strata_downstream(int k, int r);

/// Complete local ring at a point where the sheaf fails to be locally free
/// at r nodes: a product of r normal crossings.
std::string local_model(int r);

/// Number of generalised parabolic bundles over a sheaf non-free at r nodes.
Multiplicity gpb_fiber_count(int r);

}  // namespace nodal_hodge::strata
