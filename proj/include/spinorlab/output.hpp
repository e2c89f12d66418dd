#pragma once

#include <string>
#include <vector>

#include "spinorlab/observables.hpp"

namespace spinorlab::io {

enum class Format {
  csv,
  json,
};

Format format_from_string(const std::string& s);

struct Cell {
  bool numeric;
  double value;
  std::string text;

  Cell(double v) : numeric(true), value(v) {} // NOLINT(google-explicit-constructor)
  Cell(std::string s) : numeric(false), value(0), text(std::move(s)) {}
  Cell(const char* s) : numeric(false), value(0), text(s) {}
};

// Record table: one mandatory header row; floats printed with 17 significant
// digits; comma separator, '\n' line endings.  JSON output is the same
// records as an array of objects keyed by the header names.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string render(const Table& table, Format format);
void write_file(const std::string& path, const std::string& contents);

// Time-series schema: t,norm,x_mean,neg_energy,S_P,S_FW,S_Cz,S_F,S_Ch,S_Pr,S_FG
Table observable_table(const std::vector<wp::ObservableRow>& rows);

std::string format_double(double v); // %.17g

} // namespace spinorlab::io
