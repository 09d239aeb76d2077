#include "nodal_hodge/table_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nodal_hodge::io {

namespace {

Multiplicity parse_dim(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("invalid dimension '" + text + "'");
  }
  return Multiplicity(text, 10);
}

}  // namespace

std::string to_json(const TableDocument& doc) {
  nlohmann::ordered_json out;
  out["g0"] = doc.g0;
  out["k"] = doc.k;
  out["pieces"] = nlohmann::ordered_json::array();
  for (const auto& [x, mult] : doc.table.pieces()) {
    nlohmann::ordered_json row;
    row["i"] = x.degree();
    row["w"] = x.weight();
    row["p"] = x.p();
    row["q"] = x.q();
    row["dim"] = mult.get_str();
    out["pieces"].push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

TableDocument from_json(const std::string& text) {
  TableDocument doc;
  try {
    const auto in = nlohmann::json::parse(text);
    doc.g0 = in.at("g0").get<int>();
    doc.k = in.at("k").get<int>();
    for (const auto& row : in.at("pieces")) {
      doc.table.add(HodgePiece(row.at("i").get<int>(), row.at("w").get<int>(),
                               row.at("p").get<int>(), row.at("q").get<int>()),
                    parse_dim(row.at("dim").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("table json: ") + e.what());
  }
  return doc;
}

std::string to_csv(const MixedHodgeTable& table) {
  std::ostringstream out;
  out << "i,w,p,q,dim\n";
  for (const auto& [x, mult] : table.pieces()) {
    out << x.degree() << ',' << x.weight() << ',' << x.p() << ',' << x.q() << ',' << mult.get_str()
        << '\n';
  }
  return out.str();
}

MixedHodgeTable from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "i,w,p,q,dim") {
    throw std::invalid_argument("table csv: missing header 'i,w,p,q,dim'");
  }
  MixedHodgeTable table;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 5) {
      throw std::invalid_argument("table csv: line " + std::to_string(line_no) +
                                  " has " + std::to_string(fields.size()) + " fields");
    }
    try {
      table.add(HodgePiece(std::stoi(fields[0]), std::stoi(fields[1]), std::stoi(fields[2]),
                           std::stoi(fields[3])),
                parse_dim(fields[4]));
    } catch (const std::exception& e) {
      throw std::invalid_argument("table csv: line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return table;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace nodal_hodge::io
