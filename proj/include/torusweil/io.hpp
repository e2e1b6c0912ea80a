#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace torusweil {

/// Row-oriented output table; CSV with a header row, or JSON as an array of
/// records with the same fields. UTF-8, LF line endings.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  void emit_csv(std::FILE* out) const;
  void emit_json(std::FILE* out) const;
};

std::string fmt_double(double v);
std::string fmt_complex(double re, double im);

}  // namespace torusweil
