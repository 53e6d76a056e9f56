#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace wanderlab {

// RFC-4180 CSV writer: UTF-8, '.' decimal separator, mandatory header.
// Doubles are printed with %.17g so repeated runs are byte-identical.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void header(const std::vector<std::string>& names) { row_strings(names); }

  void field(const std::string& s) {
    sep();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      os_ << '"';
      for (char c : s) {
        if (c == '"') os_ << '"';
        os_ << c;
      }
      os_ << '"';
    } else {
      os_ << s;
    }
  }
  void field(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    sep();
    os_ << buf;
  }
  void field(long long v) {
    sep();
    os_ << v;
  }
  void field(int v) { field(static_cast<long long>(v)); }
  void field(std::size_t v) { field(static_cast<long long>(v)); }
  void endrow() {
    os_ << "\r\n";
    first_ = true;
  }
  void row_strings(const std::vector<std::string>& vals) {
    for (const auto& v : vals) field(v);
    endrow();
  }

 private:
  void sep() {
    if (!first_) os_ << ',';
    first_ = false;
  }
  std::ostream& os_;
  bool first_ = true;
};

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace wanderlab
