#include "spinorlab/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spinorlab/errors.hpp"
#include "spinorlab/spin_operators.hpp"

namespace spinorlab::io {

Format format_from_string(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ConfigError("unknown output format: " + s);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string render(const Table& table, Format format) {
  std::ostringstream out;
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      if (i) out << ',';
      out << table.header[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        out << (row[i].numeric ? format_double(row[i].value) : row[i].text);
      }
      out << '\n';
    }
  } else {
    out << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      out << "  {";
      for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
        if (i) out << ", ";
        const Cell& c = table.rows[r][i];
        out << '"' << table.header[i] << "\": ";
        if (c.numeric)
          out << format_double(c.value);
        else
          out << '"' << c.text << '"';
      }
      out << (r + 1 < table.rows.size() ? "},\n" : "}\n");
    }
    out << "]\n";
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << contents;
  if (!f) throw IoError("write failed: " + path);
}

Table observable_table(const std::vector<wp::ObservableRow>& rows) {
  Table t;
  t.header = {"t", "norm", "x_mean", "neg_energy"};
  for (spin::SpinKind k : spin::all_spin_kinds) t.header.push_back(spin::short_name(k));
  for (const auto& r : rows) {
    std::vector<Cell> row = {r.t, r.norm, r.x_mean, r.neg_energy};
    for (double s : r.spin) row.push_back(s);
    t.rows.push_back(std::move(row));
  }
  return t;
}

} // namespace spinorlab::io
