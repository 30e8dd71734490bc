#include "hpk/table.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hpk {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

std::string tex_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '_': case '&': case '%': case '#': case '$': case '{': case '}':
        o += '\\';
        o += c;
        break;
      case '^':
        o += "\\^{}";
        break;
      default:
        o += c;
    }
  }
  return o;
}

}  // namespace

TableFormat parse_table_format(const std::string& s) {
  if (s == "text") return TableFormat::Text;
  if (s == "csv") return TableFormat::Csv;
  if (s == "tex") return TableFormat::Tex;
  if (s == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown format " + s);
}

void Table::add_row(std::vector<std::string> cells, std::vector<std::string> tex_cells) {
  if (cells.size() != columns.size()) throw std::logic_error("row width differs from the column count");
  rows.push_back(std::move(cells));
  if (!tex_cells.empty()) {
    tex.resize(rows.size() - 1);
    tex.push_back(std::move(tex_cells));
  }
}

std::string Table::render(TableFormat fmt) const {
  std::ostringstream os;
  switch (fmt) {
    case TableFormat::Json: {
      nlohmann::ordered_json j;
      j["header"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : header) j["header"][k] = v;
      j["columns"] = columns;
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json o;
        for (size_t c = 0; c < columns.size(); ++c) {
          const Kind k = c < kinds.size() ? kinds[c] : Kind::Text;
          if (k == Kind::Number) o[columns[c]] = std::stod(r[c]);
          else if (k == Kind::Integer) o[columns[c]] = std::stoll(r[c]);
          else if (k == Kind::Boolean) o[columns[c]] = r[c] == "yes";
          else o[columns[c]] = r[c];
        }
        arr.push_back(std::move(o));
      }
      j["rows"] = std::move(arr);
      return j.dump(2) + "\n";
    }
    case TableFormat::Csv:
      for (const auto& [k, v] : header) os << "# " << k << ": " << v << "\n";
      for (size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << csv_cell(columns[c]);
      os << "\n";
      for (const auto& r : rows) {
        for (size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << csv_cell(r[c]);
        os << "\n";
      }
      return os.str();
    case TableFormat::Tex: {
      os << "\\documentclass{article}\n\\usepackage[landscape]{geometry}\n\\begin{document}\n";
      for (const auto& [k, v] : header) os << "% " << k << ": " << v << "\n";
      os << "\\begin{tabular}{" << std::string(columns.size(), 'l') << "}\n";
      for (size_t c = 0; c < columns.size(); ++c) os << (c ? " & " : "") << tex_escape(columns[c]);
      os << " \\\\\n\\hline\n";
      for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t c = 0; c < columns.size(); ++c) {
          os << (c ? " & " : "");
          if (i < tex.size() && !tex[i].empty()) os << tex[i][c];
          else os << "\\verb|" << rows[i][c] << "|";
        }
        os << " \\\\\n";
      }
      os << "\\end{tabular}\n\\end{document}\n";
      return os.str();
    }
    case TableFormat::Text:
    default: {
      for (const auto& [k, v] : header) os << "# " << k << ": " << v << "\n";
      std::vector<size_t> w(columns.size());
      for (size_t c = 0; c < columns.size(); ++c) {
        w[c] = columns[c].size();
        for (const auto& r : rows) w[c] = std::max(w[c], r[c].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (size_t c = 0; c < cells.size(); ++c) {
          s += cells[c];
          if (c + 1 < cells.size()) s += std::string(w[c] - cells[c].size() + 2, ' ');
        }
        os << s << "\n";
      };
      line(columns);
      for (const auto& r : rows) line(r);
      return os.str();
    }
  }
}

std::string labels_text(const RootDatum& d, const LabelFunction& q) {
  std::string s;
  for (const auto& [k, v] : node_labels(d, q)) s += (s.empty() ? "" : " ") + k + "=" + to_string(v);
  return s;
}

std::vector<std::pair<std::string, std::string>> datum_header(const RootDatum& d, const LabelFunction& q) {
  return {{"datum", d.name}, {"lattice", to_string(d.mode)}, {"labels", labels_text(d, q)}, {"version", kVersion}};
}

std::string number_text(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

}  // namespace hpk
