#pragma once

#include <filesystem>
#include <string>

#include "nodal_hodge/hodge_table.hpp"

namespace nodal_hodge::io {

/// A table tagged with the curve parameters it was computed for.
struct TableDocument {
  int g0 = 0;
  int k = 0;
  MixedHodgeTable table;
};

// JSON: {"g0": N, "k": N, "pieces": [{"i","w","p","q","dim"}...]}, pieces in
// (i, w, p, q) order, "dim" a decimal string.
std::string to_json(const TableDocument& doc);
TableDocument from_json(const std::string& text);

// CSV: header "i,w,p,q,dim", one row per nonzero piece in (i, w, p, q) order.
std::string to_csv(const MixedHodgeTable& table);
MixedHodgeTable from_csv(const std::string& text);

/// Writes `contents` to `path`; failures throw std::runtime_error naming the path.
void write_file(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace nodal_hodge::io
