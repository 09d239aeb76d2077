#include "nodal_hodge/verify.hpp"

#include <sstream>

#include "json.hpp"
#include "nodal_hodge/closed_form.hpp"

namespace nodal_hodge::verify {

namespace {

void record_point(VerificationReport& report, VerificationRecord&& rec) {
  ++report.points_checked;
  const bool nonzero = rec.closed_corrected != 0 || rec.structural != 0 || rec.census != 0 ||
                       (rec.printed && *rec.printed != 0);
  if (!rec.routes_agree()) report.route_mismatches.push_back(rec);
  if (!rec.printed_agrees()) report.printed_disagreements.push_back(rec);
  if (nonzero || !rec.routes_agree() || !rec.printed_agrees()) {
    report.records.push_back(std::move(rec));
  }
}

std::string point_label(const VerificationRecord& r) {
  std::ostringstream out;
  out << "g0=" << r.g0 << " k=" << r.k << " " << level_name(r.level) << " i=" << r.i;
  if (r.l >= 0) out << " l=" << r.l;
  if (r.p >= 0) out << " p=" << r.p << " q=" << r.q;
  return out.str();
}

nlohmann::ordered_json record_json(const VerificationRecord& r) {
  nlohmann::ordered_json j;
  j["g0"] = r.g0;
  j["k"] = r.k;
  j["level"] = level_name(r.level);
  j["i"] = r.i;
  if (r.l >= 0) j["l"] = r.l;
  if (r.p >= 0) {
    j["p"] = r.p;
    j["q"] = r.q;
  }
  j["closed_corrected"] = r.closed_corrected.get_str();
  j["structural"] = r.structural.get_str();
  j["census"] = r.census.get_str();
  if (r.printed) j["printed"] = r.printed->get_str();
  j["routes_agree"] = r.routes_agree();
  j["printed_agrees"] = r.printed_agrees();
  return j;
}

}  // namespace

std::string level_name(Level level) {
  switch (level) {
    case Level::Betti:
      return "betti";
    case Level::Weight:
      return "weight";
    case Level::Hodge:
      return "hodge";
  }
  return "unknown";
}

VerificationReport run_verification(const VerifyConfig& config) {
  if (config.g0_max < 0 || config.k_max < 0) {
    throw std::invalid_argument("verify: sweep bounds must be non-negative");
  }
  for (int g0 = 0; g0 <= config.g0_max; ++g0) {
    for (int k = 0; k <= config.k_max; ++k) oracle::census_size(g0, k, config.census.cap);
  }

  VerificationReport report;
  report.config = config;
  for (int g0 = 0; g0 <= config.g0_max; ++g0) {
    for (int k = 0; k <= config.k_max; ++k) {
      const closed_form::ClosedFormParams params{g0, k};
      const MixedHodgeTable structural = compactified_jacobian_table(g0, k);
      const MixedHodgeTable census = oracle::kunneth_basis_census(g0, k, config.census);
      const int top = 2 * (g0 + k);
      // One past the top on each axis so that vanishing is checked too.
      for (int i = 0; i <= top + 1; ++i) {
        VerificationRecord b{.g0 = g0, .k = k, .level = Level::Betti, .i = i};
        b.closed_corrected = closed_form::betti_closed(params, i);
        b.structural = betti(structural, i);
        b.census = betti(census, i);
        record_point(report, std::move(b));

        for (int l = 0; l <= 2 * i; ++l) {
          VerificationRecord w{.g0 = g0, .k = k, .level = Level::Weight, .i = i, .l = l};
          w.closed_corrected = closed_form::weight_closed_corrected(params, i, l);
          w.structural = weight_dim(structural, i, l);
          w.census = weight_dim(census, i, l);
          w.printed = closed_form::weight_closed_printed(params, i, l);
          record_point(report, std::move(w));

          for (int p = 0; p <= l; ++p) {
            const int q = l - p;
            VerificationRecord h{.g0 = g0, .k = k, .level = Level::Hodge, .i = i, .l = l, .p = p, .q = q};
            h.closed_corrected = closed_form::hodge_closed_corrected(params, i, l, p, q);
            h.structural = hodge_number(structural, i, p, q);
            h.census = hodge_number(census, i, p, q);
            h.printed = closed_form::hodge_closed_printed(params, i, l, p, q);
            record_point(report, std::move(h));
          }
        }
      }
    }
  }
  return report;
}

std::string render_report_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "sweep: g0 <= " << report.config.g0_max << ", k <= " << report.config.k_max << "\n";
  out << "points checked: " << report.points_checked << "\n";
  out << "supported points: " << report.records.size() << "\n";
  out << "route mismatches (closed vs structural vs census): " << report.route_mismatches.size()
      << "\n";
  for (const auto& r : report.route_mismatches) {
    out << "  MISMATCH " << point_label(r) << ": closed=" << r.closed_corrected.get_str()
        << " structural=" << r.structural.get_str() << " census=" << r.census.get_str() << "\n";
  }
  out << "printed-formula disagreements: " << report.printed_disagreements.size() << "\n";
  for (const auto& r : report.printed_disagreements) {
    out << "  " << point_label(r) << ": printed=" << r.printed->get_str()
        << " census=" << r.census.get_str() << "\n";
  }
  out << (report.verified() ? "VERIFIED" : "FAILED") << "\n";
  return out.str();
}

std::string render_report_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["g0_max"] = report.config.g0_max;
  out["k_max"] = report.config.k_max;
  out["points_checked"] = report.points_checked;
  out["supported_points"] = report.records.size();
  out["verified"] = report.verified();
  out["route_mismatches"] = nlohmann::ordered_json::array();
  for (const auto& r : report.route_mismatches) out["route_mismatches"].push_back(record_json(r));
  out["printed_disagreements"] = nlohmann::ordered_json::array();
  for (const auto& r : report.printed_disagreements) {
    out["printed_disagreements"].push_back(record_json(r));
  }
  return out.dump(2) + "\n";
}

}  // namespace nodal_hodge::verify
