#include "fcip/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "fcip/error.hpp"

namespace fcip {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  // Drop trailing blank lines only; interior blanks are reported as malformed.
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

double parse_real(std::string_view text, std::size_t row, const char* field) {
  double v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw ParseError(row, field, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view text, std::size_t row, const char* field) {
  const double v = parse_real(text, row, field);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw ParseError(row, field, "not an integer: '" + std::string(text) + "'");
  }
  return static_cast<int>(v);
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

VariableStats stats_of(std::span<const double> xs) {
  VariableStats s;
  const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
  s.min = *mn;
  s.max = *mx;
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  // Guard against the mean drifting a rounding step outside [min, max].
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

}  // namespace

std::string_view driver_key(Driver d) {
  switch (d) {
    case Driver::area: return "area_ha";
    case Driver::length: return "length_m";
    case Driver::valves: return "valves";
    case Driver::year: return "year";
  }
  return "?";
}

std::string_view driver_symbol(Driver d) {
  switch (d) {
    case Driver::area: return "P1";
    case Driver::length: return "P3";
    case Driver::valves: return "P6";
    case Driver::year: return "P14";
  }
  return "?";
}

std::optional<Driver> parse_driver(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  if (n == "area_ha" || n == "area" || n == "p1") return Driver::area;
  if (n == "length_m" || n == "length" || n == "p3") return Driver::length;
  if (n == "valves" || n == "p6") return Driver::valves;
  if (n == "year" || n == "p14") return Driver::year;
  return std::nullopt;
}

double Drivers::operator[](Driver d) const {
  switch (d) {
    case Driver::area: return area_ha;
    case Driver::length: return length_m;
    case Driver::valves: return valves;
    case Driver::year: return year;
  }
  return 0;
}

double& Drivers::operator[](Driver d) {
  switch (d) {
    case Driver::area: return area_ha;
    case Driver::length: return length_m;
    case Driver::valves: return valves;
    case Driver::year: break;
  }
  return year;
}

void validate_case(const ProjectCase& c) {
  if (c.id.empty()) throw InputError("case id must not be empty");
  if (!(c.area_ha > 0)) throw InputError("case " + c.id + ": area_ha must be > 0");
  if (!(c.length_m > 0)) throw InputError("case " + c.id + ": length_m must be > 0");
  if (c.valves < 1) throw InputError("case " + c.id + ": valves must be >= 1");
  if (c.year < 1990 || c.year > 2100) throw InputError("case " + c.id + ": year must lie in [1990, 2100]");
  if (!(c.cost_le > 0)) throw InputError("case " + c.id + ": cost_le must be > 0");
}

std::string_view role_name(DatasetRole r) {
  switch (r) {
    case DatasetRole::training: return "training";
    case DatasetRole::validation: return "validation";
    case DatasetRole::combined: return "combined";
  }
  return "?";
}

Dataset::Dataset(std::vector<ProjectCase> cases, DatasetRole role)
    : cases_(std::move(cases)), role_(role) {
  if (cases_.empty()) throw InputError("empty dataset");
  std::unordered_set<std::string> seen;
  for (const auto& c : cases_) {
    validate_case(c);
    if (!seen.insert(c.id).second) throw InputError("duplicate id " + c.id);
  }
}

std::vector<double> Dataset::column(Driver d) const {
  std::vector<double> out;
  out.reserve(cases_.size());
  for (const auto& c : cases_) out.push_back(c.drivers()[d]);
  return out;
}

std::vector<double> Dataset::costs() const {
  std::vector<double> out;
  out.reserve(cases_.size());
  for (const auto& c : cases_) out.push_back(c.cost_le);
  return out;
}

std::vector<Drivers> Dataset::inputs() const {
  std::vector<Drivers> out;
  out.reserve(cases_.size());
  for (const auto& c : cases_) out.push_back(c.drivers());
  return out;
}

Dataset Dataset::head(std::size_t count) const {
  if (count == 0 || count > cases_.size()) throw InputError("head: count out of range");
  return Dataset({cases_.begin(), cases_.begin() + static_cast<std::ptrdiff_t>(count)}, role_);
}

Dataset parse_dataset(std::string_view csv, DatasetRole role) {
  if (!csv.empty() && csv.substr(0, 3) == "\xEF\xBB\xBF") csv.remove_prefix(3);
  const auto lines = split_lines(csv);
  if (lines.empty() || trim(lines.front()) != kDatasetHeader) {
    throw ParseError("header must be exactly '" + std::string(kDatasetHeader) + "'");
  }
  std::vector<ProjectCase> cases;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t row = i;  // 1-based data row number
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 6) {
      throw ParseError(row, "*", "expected 6 fields, found " + std::to_string(fields.size()));
    }
    ProjectCase c;
    c.id = std::string(fields[0]);
    if (c.id.empty()) throw ParseError(row, "id", "empty id");
    c.area_ha = parse_real(fields[1], row, "area_ha");
    c.length_m = parse_real(fields[2], row, "length_m");
    c.valves = parse_int(fields[3], row, "valves");
    c.year = parse_int(fields[4], row, "year");
    c.cost_le = parse_real(fields[5], row, "cost_le");
    if (!(c.area_ha > 0)) throw ParseError(row, "area_ha", "must be > 0");
    if (!(c.length_m > 0)) throw ParseError(row, "length_m", "must be > 0");
    if (c.valves < 1) throw ParseError(row, "valves", "must be >= 1");
    if (c.year < 1990 || c.year > 2100) throw ParseError(row, "year", "must lie in [1990, 2100]");
    if (!(c.cost_le > 0)) throw ParseError(row, "cost_le", "must be > 0");
    if (!seen.insert(c.id).second) throw ParseError(row, "id", "duplicate id " + c.id);
    cases.push_back(std::move(c));
  }
  if (cases.empty()) throw ParseError("empty dataset");
  return Dataset(std::move(cases), role);
}

std::string serialize_dataset(const Dataset& ds) {
  std::string out(kDatasetHeader);
  out += '\n';
  for (const auto& c : ds) {
    out += c.id + ',' + format_real(c.area_ha) + ',' + format_real(c.length_m) + ',' +
           std::to_string(c.valves) + ',' + std::to_string(c.year) + ',' + format_real(c.cost_le) + '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dataset load_dataset(const std::filesystem::path& path, DatasetRole role) {
  return parse_dataset(read_text_file(path), role);
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("FCIP_DATA"); env != nullptr && *env != '\0') return env;
  return FCIP_DATA_DIR;
}

double equivalent_diameter(std::span<const PipeSegment> segments) {
  if (segments.empty()) throw InputError("equivalent_diameter: no pipe segments");
  double weighted = 0;
  double total = 0;
  for (const auto& s : segments) {
    if (!(s.diameter_mm > 0) || !(s.length_m > 0)) {
      throw InputError("equivalent_diameter: diameter and length must be > 0");
    }
    weighted += s.diameter_mm * s.length_m;
    total += s.length_m;
  }
  return weighted / total;
}

std::pair<Dataset, Dataset> split(const Dataset& ds, std::size_t boundary) {
  if (boundary == 0 || boundary >= ds.size()) {
    throw InputError("split boundary must satisfy 0 < boundary < " + std::to_string(ds.size()));
  }
  const auto mid = ds.begin() + static_cast<std::ptrdiff_t>(boundary);
  return {Dataset({ds.begin(), mid}, DatasetRole::training),
          Dataset({mid, ds.end()}, DatasetRole::validation)};
}

DescriptiveStats describe(const Dataset& ds) {
  DescriptiveStats out;
  for (auto d : kAllDrivers) out.drivers[static_cast<std::size_t>(d)] = stats_of(ds.column(d));
  out.cost = stats_of(ds.costs());
  return out;
}

DriverBounds DriverBounds::of(const Dataset& ds) {
  const auto st = describe(ds);
  DriverBounds b;
  for (std::size_t i = 0; i < kDriverCount; ++i) {
    b.lo[i] = st.drivers[i].min;
    b.hi[i] = st.drivers[i].max;
  }
  return b;
}

ExtendedDataset parse_extended_dataset(std::string_view csv) {
  if (!csv.empty() && csv.substr(0, 3) == "\xEF\xBB\xBF") csv.remove_prefix(3);
  const auto lines = split_lines(csv);
  if (lines.empty()) throw ParseError("empty document");
  const auto header = split_fields(lines.front());
  if (header.size() < 3 || header.front() != "id" || header.back() != "cost_le") {
    throw ParseError("extended header must be 'id,p1,...,p17,cost_le'");
  }
  ExtendedDataset out;
  std::unordered_set<int> seen_vars;
  for (std::size_t j = 1; j + 1 < header.size(); ++j) {
    const auto h = header[j];
    int index = 0;
    if (h.size() < 2 || (h[0] != 'p' && h[0] != 'P')) throw ParseError("bad column '" + std::string(h) + "'");
    const auto [ptr, ec] = std::from_chars(h.data() + 1, h.data() + h.size(), index);
    if (ec != std::errc{} || ptr != h.data() + h.size() || index < 1 || index > 17 ||
        !seen_vars.insert(index).second) {
      throw ParseError("bad column '" + std::string(h) + "'");
    }
    out.variables.push_back("P" + std::to_string(index));
  }
  std::unordered_set<std::string> ids;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i]);
    if (fields.size() != header.size()) {
      throw ParseError(i, "*", "expected " + std::to_string(header.size()) + " fields");
    }
    std::string id(fields.front());
    if (id.empty()) throw ParseError(i, "id", "empty id");
    if (!ids.insert(id).second) throw ParseError(i, "id", "duplicate id " + id);
    std::vector<std::optional<double>> row;
    for (std::size_t j = 1; j + 1 < fields.size(); ++j) {
      if (fields[j].empty()) {
        row.emplace_back();
      } else {
        row.emplace_back(parse_real(fields[j], i, out.variables[j - 1].c_str()));
      }
    }
    const double cost = parse_real(fields.back(), i, "cost_le");
    if (!(cost > 0)) throw ParseError(i, "cost_le", "must be > 0");
    out.ids.push_back(std::move(id));
    out.values.push_back(std::move(row));
    out.cost_le.push_back(cost);
  }
  if (out.ids.empty()) throw ParseError("empty dataset");
  return out;
}

}  // namespace fcip
