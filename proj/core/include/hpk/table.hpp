#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hpk/root_datum.hpp"

namespace hpk {

inline constexpr const char* kVersion = "0.1.0";

enum class TableFormat { Text, Csv, Tex, Json };
TableFormat parse_table_format(const std::string& s);  // throws std::invalid_argument

// Rectangular table with a header block of key/value lines.
struct Table {
  enum class Kind { Text, Number, Integer, Boolean };
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<std::string> columns;
  std::vector<Kind> kinds;                    // per column, for JSON
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> tex;  // optional TeX cells, same shape as rows

  void add_row(std::vector<std::string> cells, std::vector<std::string> tex_cells = {});
  std::string render(TableFormat fmt) const;
};

// datum, lattice, labels and version lines
std::vector<std::pair<std::string, std::string>> datum_header(const RootDatum& d, const LabelFunction& q);
std::string labels_text(const RootDatum& d, const LabelFunction& q);
std::string number_text(double x);  // 12 significant digits

}  // namespace hpk
