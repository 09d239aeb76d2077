#include <filesystem>
#include <sstream>

#include "cli_app.hpp"
#include "doctest.h"
#include "json.hpp"
#include "nodal_hodge/table_io.hpp"

using namespace nodal_hodge;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("betti") {
  CHECK(run({"--normalization-genus", "0", "--nodes", "2", "betti"}).out == "1 2 3 2 1\n");
  CHECK(run({"--arithmetic-genus", "1", "--nodes", "1", "betti"}).out == "1 1 1\n");
  CHECK(run({"--normalization-genus", "1", "--nodes", "0", "betti"}).out == "1 2 1\n");
  CHECK(run({"betti", "--normalization-genus", "1", "--nodes", "1"}).out == "1 3 4 3 1\n");
  for (const char* route : {"closed", "structural", "census"}) {
    CHECK(run({"--normalization-genus", "2", "--nodes", "3", "--route", route, "betti"}).out ==
          run({"--normalization-genus", "2", "--nodes", "3", "betti"}).out);
  }
}

TEST_CASE("arithmetic genus is sugar for g0 = g - k") {
  for (const char* cmd : {"betti", "weights", "hodge", "epoly"}) {
    CHECK(run({"--arithmetic-genus", "5", "--nodes", "2", cmd}).out ==
          run({"--normalization-genus", "3", "--nodes", "2", cmd}).out);
  }
}

TEST_CASE("weights and hodge rows") {
  const auto w = run({"--normalization-genus", "0", "--nodes", "1", "--format", "csv", "weights"});
  CHECK(w.code == 0);
  CHECK(w.out == "i,l,dim\n0,0,1\n1,0,1\n2,2,1\n");

  const auto h = run({"--normalization-genus", "1", "--nodes", "0", "--format", "csv", "hodge"});
  CHECK(h.out == "i,l,p,q,dim\n0,0,0,0,1\n1,1,0,1,1\n1,1,1,0,1\n2,2,1,1,1\n");

  const auto j = nlohmann::json::parse(
      run({"--normalization-genus", "1", "--nodes", "1", "--format", "json", "weights"}).out);
  bool found = false;
  for (const auto& row : j.at("rows")) {
    if (row.at("i") == 2 && row.at("l") == 2) {
      CHECK(row.at("dim") == "2");
      found = true;
    }
  }
  CHECK(found);

  const auto table = run({"--normalization-genus", "0", "--nodes", "1", "weights"});
  CHECK(table.out.find("i  l  dim") != std::string::npos);
}

TEST_CASE("epoly") {
  const auto e = run({"--normalization-genus", "1", "--nodes", "0", "--format", "csv", "epoly"});
  CHECK(e.out == "p,q,coeff\n0,0,1\n0,1,-1\n1,0,-1\n1,1,1\n");
}

TEST_CASE("usage errors") {
  CHECK(run({"betti"}).code == cli::kUsageError);
  CHECK(run({"--normalization-genus", "1", "betti"}).code == cli::kUsageError);
  CHECK(run({"--arithmetic-genus", "1", "--nodes", "2", "betti"}).code == cli::kUsageError);
  CHECK(run({"--normalization-genus", "1", "--arithmetic-genus", "2", "--nodes", "1", "betti"})
            .code == cli::kUsageError);
  CHECK(run({"--normalization-genus", "-1", "--nodes", "1", "betti"}).code == cli::kUsageError);
  CHECK(run({"--normalization-genus", "0", "--nodes", "1", "--route", "nope", "betti"}).code ==
        cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("verify exit codes") {
  const auto small = run({"--g0-max", "0", "--k-max", "0", "verify"});
  CHECK(small.code == cli::kSuccess);
  CHECK(small.out.find("printed-formula disagreements: 0") != std::string::npos);

  const auto sweep = run({"--g0-max", "1", "--k-max", "1", "verify"});
  CHECK(sweep.code == cli::kSuccess);
  CHECK(sweep.out.find("g0=1 k=1 weight i=2 l=2: printed=1 census=2") != std::string::npos);
  CHECK(sweep.out.find("g0=1 k=0 hodge i=1 l=1 p=1 q=0: printed=0 census=1") != std::string::npos);

  CHECK(run({"--cap", "1", "verify"}).code == cli::kResourceLimit);
  CHECK(run({"--normalization-genus", "3", "--nodes", "3", "--route", "census", "--cap", "10",
             "betti"})
            .code == cli::kResourceLimit);
}

TEST_CASE("strata") {
  const auto s = run({"--nodes", "2", "--format", "csv", "strata"});
  CHECK(s.code == 0);
  CHECK(s.out ==
        "r,upstream,downstream,fiber,local_model\n"
        "0,1,1,1,smooth\n"
        "1,4,2,2,C[[u1,v1]]/(u1*v1)\n"
        "2,4,1,4,C[[u1,v1,u2,v2]]/(u1*v1, u2*v2)\n");
  const auto zero = run({"--nodes", "0", "--format", "csv", "strata"});
  CHECK(zero.out == "r,upstream,downstream,fiber,local_model\n0,1,1,1,smooth\n");
  const auto j = nlohmann::json::parse(run({"--nodes", "3", "--format", "json", "strata"}).out);
  CHECK(j.at("upstream_total") == 27);
  CHECK(j.at("downstream_total") == 8);
  CHECK(run({"strata"}).code == cli::kUsageError);
}

TEST_CASE("export") {
  const auto dir = std::filesystem::temp_directory_path() / "nodal_hodge_cli_test";
  std::filesystem::create_directories(dir);
  const auto json_path = (dir / "t.json").string();
  const auto csv_path = (dir / "t.csv").string();
  CHECK(run({"--normalization-genus", "2", "--nodes", "3", "--format", "json", "--out", json_path,
             "export"})
            .code == 0);
  CHECK(run({"--normalization-genus", "2", "--nodes", "3", "--format", "csv", "--out", csv_path,
             "export"})
            .code == 0);
  const auto doc = io::from_json(io::read_file(json_path));
  CHECK(doc.g0 == 2);
  CHECK(doc.k == 3);
  CHECK(doc.table == compactified_jacobian_table(2, 3));
  CHECK(io::from_csv(io::read_file(csv_path)) == doc.table);

  CHECK(run({"--normalization-genus", "2", "--nodes", "3", "export"}).code == cli::kUsageError);
  const auto bad = run({"--normalization-genus", "2", "--nodes", "3", "--out",
                        (dir / "missing" / "x.json").string(), "export"});
  CHECK(bad.code != 0);
  CHECK(bad.err.find("missing") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--normalization-genus", "3", "--nodes", "4", "--route",
                                      "census", "--workers", "0", "--format", "json", "hodge"};
  auto serial = args;
  serial[7] = "1";
  CHECK(run(args).out == run(serial).out);
}
