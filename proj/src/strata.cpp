#include "nodal_hodge/strata.hpp"

#include <stdexcept>
#include <string>

namespace nodal_hodge::strata {

namespace {

void check_range(int k, int r) {
  if (k < 0 || r < 0 || r > k) {
    throw std::invalid_argument("strata: need 0 <= r <= k (got k=" + std::to_string(k) +
                                ", r=" + std::to_string(r) + ")");
  }
}

// Calls visit(support) for every r-subset of {1..k}, lexicographically.
template <class Visit>
void for_each_support(int k, int r, Visit&& visit) {
  std::vector<int> support(r);
  for (int j = 0; j < r; ++j) support[j] = j + 1;
  while (true) {
    visit(support);
    int j = r - 1;
    while (j >= 0 && support[j] == k - r + j + 1) --j;
    if (j < 0) return;
    ++support[j];
    for (int m = j + 1; m < r; ++m) support[m] = support[m - 1] + 1;
  }
}

}  // namespace

std::vector<StratumRecord> enumerate_strata_upstream(int k, int r) {
  check_range(k, r);
  std::vector<StratumRecord> out;
  // The normalisation is smooth.
  const std::string model = local_model(0);
  for_each_support(k, r, [&](const std::vector<int>& support) {
    for (unsigned bits = 0; bits < (1u << r); ++bits) {
      std::vector<int> labeling(r);
      // Most significant bit labels the first node, so labelings run in
      // lexicographic order.
      for (int j = 0; j < r; ++j) labeling[j] = 1 + static_cast<int>((bits >> (r - 1 - j)) & 1u);
      out.push_back({support, std::move(labeling), r, model});
    }
  });
  return out;
}

std::vector<StratumRecord> enumerate_strata_downstream(int k, int r) {
  check_range(k, r);
  std::vector<StratumRecord> out;
  const std::string model = local_model(r);
  for_each_support(k, r, [&](const std::vector<int>& support) {
    out.push_back({support, std::nullopt, r, model});
  });
  return out;
}

std::string local_model(int r) {
  if (r < 0) throw std::invalid_argument("local_model: r must be non-negative");
  if (r == 0) return "smooth";
  std::string vars;
  std::string relations;
  for (int j = 1; j <= r; ++j) {
    const std::string u = "u" + std::to_string(j);
    const std::string v = "v" + std::to_string(j);
    vars += (j > 1 ? "," : "") + u + "," + v;
    relations += (j > 1 ? ", " : "") + u + "*" + v;
  }
  return "C[[" + vars + "]]/(" + relations + ")";
}

Multiplicity gpb_fiber_count(int r) {
  if (r < 0) throw std::invalid_argument("gpb_fiber_count: r must be non-negative");
  Multiplicity out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(r));
  return out;
}

}  // namespace nodal_hodge::strata
