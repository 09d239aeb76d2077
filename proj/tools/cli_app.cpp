#include "cli_app.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nodal_hodge/census.hpp"
#include "nodal_hodge/closed_form.hpp"
#include "nodal_hodge/hodge_table.hpp"
#include "nodal_hodge/strata.hpp"
#include "nodal_hodge/table_io.hpp"
#include "nodal_hodge/verify.hpp"

namespace nodal_hodge::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Route { Closed, Structural, Census };
enum class Format { Table, Json, Csv };

struct RunConfig {
  std::optional<int> normalization_genus;
  std::optional<int> arithmetic_genus;
  std::optional<int> nodes;
  Route route = Route::Structural;
  Format format = Format::Table;
  std::string out_path;
  int g0_max = 4;
  int k_max = 6;
  std::uint64_t cap = std::uint64_t{1} << 28;
  unsigned workers = 1;
  oracle::KernelKind kernel = oracle::KernelKind::Auto;
};

struct CurveParams {
  int g0;
  int k;
};

CurveParams resolve_curve(const RunConfig& cfg) {
  if (!cfg.nodes) throw UsageError("--nodes is required");
  const int k = *cfg.nodes;
  if (k < 0) throw UsageError("--nodes must be non-negative");
  if (cfg.normalization_genus && cfg.arithmetic_genus) {
    throw UsageError("give only one of --normalization-genus and --arithmetic-genus");
  }
  if (cfg.normalization_genus) {
    if (*cfg.normalization_genus < 0) throw UsageError("--normalization-genus must be non-negative");
    return {*cfg.normalization_genus, k};
  }
  if (cfg.arithmetic_genus) {
    // The normalisation of a curve of arithmetic genus g with k nodes has genus g - k.
    const int g0 = *cfg.arithmetic_genus - k;
    if (g0 < 0) {
      throw UsageError("--arithmetic-genus " + std::to_string(*cfg.arithmetic_genus) +
                       " is smaller than --nodes " + std::to_string(k));
    }
    return {g0, k};
  }
  throw UsageError("one of --normalization-genus or --arithmetic-genus is required");
}

oracle::CensusOptions census_options(const RunConfig& cfg) {
  oracle::CensusOptions options;
  options.cap = cfg.cap;
  options.workers = cfg.workers;
  options.kernel = cfg.kernel;
  return options;
}

MixedHodgeTable build_table(const RunConfig& cfg, const CurveParams& curve) {
  switch (cfg.route) {
    case Route::Closed:
      return closed_form::closed_form_table({curve.g0, curve.k});
    case Route::Structural:
      return compactified_jacobian_table(curve.g0, curve.k);
    case Route::Census:
      return oracle::kunneth_basis_census(curve.g0, curve.k, census_options(cfg));
  }
  return {};
}

std::string route_name(Route route) {
  switch (route) {
    case Route::Closed:
      return "closed";
    case Route::Structural:
      return "structural";
    case Route::Census:
      return "census";
  }
  return "unknown";
}

// Right-aligned columns; the last column is left free so long labels fit.
std::string render_columns(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      if (c + 1 == row.size()) {
        out << row[c];
      } else {
        out << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

std::string render_rows(Format format, const CurveParams& curve, Route route,
                        const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
  switch (format) {
    case Format::Table:
      return render_columns(header, rows);
    case Format::Csv:
      return render_csv(header, rows);
    case Format::Json: {
      nlohmann::ordered_json out;
      out["g0"] = curve.g0;
      out["k"] = curve.k;
      out["route"] = route_name(route);
      out["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < header.size(); ++c) {
          // Index columns are numbers; the value column stays a decimal string.
          if (c + 1 == header.size()) {
            obj[header[c]] = row[c];
          } else {
            obj[header[c]] = std::stoi(row[c]);
          }
        }
        out["rows"].push_back(std::move(obj));
      }
      return out.dump(2) + "\n";
    }
  }
  return {};
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
  const CurveParams curve = resolve_curve(cfg);
  const auto poincare = poincare_polynomial(build_table(cfg, curve));
  if (cfg.format == Format::Table) {
    for (std::size_t i = 0; i < poincare.size(); ++i) out << (i ? " " : "") << poincare[i].get_str();
    out << '\n';
    return kSuccess;
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < poincare.size(); ++i) {
    rows.push_back({std::to_string(i), poincare[i].get_str()});
  }
  out << render_rows(cfg.format, curve, cfg.route, {"i", "dim"}, rows);
  return kSuccess;
}

int cmd_weights(const RunConfig& cfg, std::ostream& out) {
  const CurveParams curve = resolve_curve(cfg);
  const MixedHodgeTable table = build_table(cfg, curve);
  std::map<std::pair<int, int>, Multiplicity> grouped;
  for (const auto& [x, mult] : table.pieces()) grouped[{x.degree(), x.weight()}] += mult;
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, mult] : grouped) {
    rows.push_back({std::to_string(key.first), std::to_string(key.second), mult.get_str()});
  }
  out << render_rows(cfg.format, curve, cfg.route, {"i", "l", "dim"}, rows);
  return kSuccess;
}

int cmd_hodge(const RunConfig& cfg, std::ostream& out) {
  const CurveParams curve = resolve_curve(cfg);
  const MixedHodgeTable table = build_table(cfg, curve);
  std::vector<std::vector<std::string>> rows;
  for (const auto& [x, mult] : table.pieces()) {
    rows.push_back({std::to_string(x.degree()), std::to_string(x.weight()), std::to_string(x.p()),
                    std::to_string(x.q()), mult.get_str()});
  }
  out << render_rows(cfg.format, curve, cfg.route, {"i", "l", "p", "q", "dim"}, rows);
  return kSuccess;
}

int cmd_epoly(const RunConfig& cfg, std::ostream& out) {
  const CurveParams curve = resolve_curve(cfg);
  std::vector<std::vector<std::string>> rows;
  for (const auto& [pq, coeff] : e_polynomial(build_table(cfg, curve))) {
    rows.push_back({std::to_string(pq.first), std::to_string(pq.second), coeff.get_str()});
  }
  out << render_rows(cfg.format, curve, cfg.route, {"p", "q", "coeff"}, rows);
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  verify::VerifyConfig vc;
  vc.g0_max = cfg.g0_max;
  vc.k_max = cfg.k_max;
  if (vc.g0_max < 0 || vc.k_max < 0) throw UsageError("sweep bounds must be non-negative");
  vc.census = census_options(cfg);
  const auto report = verify::run_verification(vc);
  out << (cfg.format == Format::Json ? verify::render_report_json(report)
                                     : verify::render_report_text(report));
  return report.verified() ? kSuccess : kVerificationFailure;
}

int cmd_strata(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.nodes) throw UsageError("--nodes is required");
  const int k = *cfg.nodes;
  if (k < 0) throw UsageError("--nodes must be non-negative");
  std::vector<std::vector<std::string>> rows;
  std::size_t up_total = 0;
  std::size_t down_total = 0;
  for (int r = 0; r <= k; ++r) {
    const auto up = strata::enumerate_strata_upstream(k, r);
    const auto down = strata::enumerate_strata_downstream(k, r);
    up_total += up.size();
    down_total += down.size();
    rows.push_back({std::to_string(r), std::to_string(up.size()), std::to_string(down.size()),
                    strata::gpb_fiber_count(r).get_str(), strata::local_model(r)});
  }
  const std::vector<std::string> header{"r", "upstream", "downstream", "fiber", "local_model"};
  switch (cfg.format) {
    case Format::Table:
      out << render_columns(header, rows);
      out << "total upstream " << up_total << ", downstream " << down_total << '\n';
      break;
    case Format::Csv:
      out << render_csv(header, rows);
      break;
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["k"] = k;
      doc["strata"] = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        obj["r"] = std::stoi(row[0]);
        obj["upstream"] = std::stoull(row[1]);
        obj["downstream"] = std::stoull(row[2]);
        obj["fiber"] = row[3];
        obj["local_model"] = row[4];
        doc["strata"].push_back(std::move(obj));
      }
      doc["upstream_total"] = up_total;
      doc["downstream_total"] = down_total;
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kSuccess;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  const CurveParams curve = resolve_curve(cfg);
  if (cfg.out_path.empty()) throw UsageError("export needs --out PATH");
  const MixedHodgeTable table = build_table(cfg, curve);
  const std::string payload = cfg.format == Format::Csv
                                  ? io::to_csv(table)
                                  : io::to_json({curve.g0, curve.k, table});
  io::write_file(cfg.out_path, payload);
  out << "wrote " << table.size() << " pieces to " << cfg.out_path << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti numbers, weights and mixed Hodge numbers of compactified Jacobians of "
               "irreducible nodal curves",
               "nodal-hodge"};
  app.require_subcommand(1);

  RunConfig cfg;
  int g0 = 0;
  int g = 0;
  int k = 0;
  auto* g0_opt = app.add_option("--normalization-genus", g0, "Genus g0 of the normalisation");
  auto* g_opt = app.add_option("--arithmetic-genus", g, "Arithmetic genus g of the nodal curve");
  g0_opt->excludes(g_opt);
  auto* k_opt = app.add_option("--nodes", k, "Number of nodes k");

  const std::map<std::string, Route> routes{
      {"closed", Route::Closed}, {"structural", Route::Structural}, {"census", Route::Census}};
  const std::map<std::string, Format> formats{
      {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  const std::map<std::string, oracle::KernelKind> kernels{{"auto", oracle::KernelKind::Auto},
                                                          {"scalar", oracle::KernelKind::Scalar},
                                                          {"avx2", oracle::KernelKind::Avx2}};
  app.add_option("--route", cfg.route, "Which computation to report")
      ->transform(CLI::CheckedTransformer(routes, CLI::ignore_case))
      ->option_text("{closed,structural,census}  [structural]");
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("{table,json,csv}  [table]");
  app.add_option("--out", cfg.out_path, "Output path for export");
  app.add_option("--g0-max", cfg.g0_max, "Verification sweep bound on g0");
  app.add_option("--k-max", cfg.k_max, "Verification sweep bound on k");
  app.add_option("--cap", cfg.cap, "Census enumeration cap (number of generator choices)");
  app.add_option("--workers", cfg.workers, "Census worker threads (0 = all cores)");
  app.add_option("--kernel", cfg.kernel, "Census kernel")
      ->transform(CLI::CheckedTransformer(kernels, CLI::ignore_case))
      ->option_text("{auto,scalar,avx2}  [auto]");

  using Handler = int (*)(const RunConfig&, std::ostream&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands{
      {"betti", "Print the Betti numbers b_0 .. b_top", cmd_betti},
      {"weights", "Print dim gr^W_l H^i for every nonzero (i, l)", cmd_weights},
      {"hodge", "Print mixed Hodge numbers for every nonzero (i, l, p, q)", cmd_hodge},
      {"epoly", "Print the signed Hodge-Deligne coefficients", cmd_epoly},
      {"verify", "Cross-check closed-form, structural and census routes", cmd_verify},
      {"strata", "Census of the singular-locus stratification", cmd_strata},
      {"export", "Write the table as JSON or CSV", cmd_export},
  };
  std::map<const CLI::App*, Handler> handlers;
  for (const auto& [name, help, handler] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    handlers[sub] = handler;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kSuccess;
    }
    app.exit(e, out, err);
    return kUsageError;
  }

  if (*g0_opt) cfg.normalization_genus = g0;
  if (*g_opt) cfg.arithmetic_genus = g;
  if (*k_opt) cfg.nodes = k;

  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace nodal_hodge::cli
