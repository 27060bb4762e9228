#include <charconv>
#include <cstdio>
#include <sstream>

#include "fcip/error.hpp"
#include "fcip/io.hpp"

namespace fcip::io {

namespace {

bool numeric(const std::string& s) {
  if (s.empty()) return false;
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc{} && (ptr == s.data() + s.size() || (ptr + 1 == s.data() + s.size() && *ptr == '%'));
}

}  // namespace

TextTable::TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

TextTable& TextTable::row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw Error("table row has the wrong number of cells");
  rows_.push_back(std::move(cells));
  return *this;
}

std::string TextTable::render() const {
  std::vector<std::size_t> width(header_.size());
  for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
  for (const auto& r : rows_) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells, bool head) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << "  ";
      const auto pad = std::string(width[c] - cells[c].size(), ' ');
      if (!head && numeric(cells[c])) {
        out << pad << cells[c];
      } else if (c + 1 < cells.size()) {
        out << cells[c] << pad;
      } else {
        out << cells[c];
      }
    }
    out << "\n";
  };
  line(header_, true);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << "\n";
  for (const auto& r : rows_) line(r, false);
  return out.str();
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace fcip::io
