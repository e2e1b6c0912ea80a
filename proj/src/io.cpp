#include "torusweil/io.hpp"

#include <cmath>
#include <cstdlib>

namespace torusweil {

namespace {
bool needs_quotes(const std::string& s) {
  return s.find_first_of(",\"\n") != std::string::npos;
}

void emit_field(std::FILE* out, const std::string& s) {
  if (!needs_quotes(s)) {
    std::fputs(s.c_str(), out);
    return;
  }
  std::fputc('"', out);
  for (char c : s) {
    if (c == '"') std::fputc('"', out);
    std::fputc(c, out);
  }
  std::fputc('"', out);
}

void emit_json_string(std::FILE* out, const std::string& s) {
  std::fputc('"', out);
  for (char c : s) {
    if (c == '"' || c == '\\') std::fputc('\\', out);
    std::fputc(c, out);
  }
  std::fputc('"', out);
}

void emit_json_value(std::FILE* out, const std::string& s) {
  // Bare numerals stay numbers; everything else is a string.
  if (!s.empty()) {
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    if (end && *end == '\0') {
      std::fputs(s.c_str(), out);
      return;
    }
  }
  emit_json_string(out, s);
}
}  // namespace

void Table::emit_csv(std::FILE* out) const {
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) std::fputc(',', out);
    emit_field(out, header[i]);
  }
  std::fputc('\n', out);
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) std::fputc(',', out);
      emit_field(out, row[i]);
    }
    std::fputc('\n', out);
  }
}

void Table::emit_json(std::FILE* out) const {
  std::fputs("[\n", out);
  for (size_t r = 0; r < rows.size(); ++r) {
    std::fputs("  {", out);
    for (size_t i = 0; i < header.size() && i < rows[r].size(); ++i) {
      if (i) std::fputs(", ", out);
      emit_json_string(out, header[i]);
      std::fputs(": ", out);
      emit_json_value(out, rows[r][i]);
    }
    std::fputs(r + 1 < rows.size() ? "},\n" : "}\n", out);
  }
  std::fputs("]\n", out);
}

std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_complex(double re, double im) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", re, im);
  return buf;
}

}  // namespace torusweil
