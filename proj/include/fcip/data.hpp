#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fcip {

/// The four key cost drivers, in model-input order.
enum class Driver { area, length, valves, year };

inline constexpr std::array<Driver, 4> kAllDrivers{Driver::area, Driver::length, Driver::valves,
                                                   Driver::year};
inline constexpr std::size_t kDriverCount = 4;

/// Column name used in CSV files and JSON bodies ("area_ha", ...).
std::string_view driver_key(Driver d);
/// Short symbol used in selection traces ("P1", "P3", "P6", "P14").
std::string_view driver_symbol(Driver d);
/// Accepts keys, symbols and short aliases ("length", "p3", ...).
std::optional<Driver> parse_driver(std::string_view name);

/// Real-valued model input. Valves and year are integral in recorded cases but
/// may be fractional in perturbation studies.
struct Drivers {
  double area_ha = 0;
  double length_m = 0;
  double valves = 0;
  double year = 0;

  double operator[](Driver d) const;
  double& operator[](Driver d);
  std::array<double, kDriverCount> values() const { return {area_ha, length_m, valves, year}; }
};

struct ProjectCase {
  std::string id;
  double area_ha = 0;
  double length_m = 0;
  int valves = 0;
  int year = 0;
  double cost_le = 0;

  Drivers drivers() const {
    return {area_ha, length_m, static_cast<double>(valves), static_cast<double>(year)};
  }
};

/// Throws InputError naming the violated field.
void validate_case(const ProjectCase& c);

enum class DatasetRole { training, validation, combined };

std::string_view role_name(DatasetRole r);

/// Ordered, non-empty collection of cases with unique ids.
class Dataset {
 public:
  Dataset(std::vector<ProjectCase> cases, DatasetRole role);

  const std::vector<ProjectCase>& cases() const noexcept { return cases_; }
  DatasetRole role() const noexcept { return role_; }
  std::size_t size() const noexcept { return cases_.size(); }
  const ProjectCase& operator[](std::size_t i) const { return cases_[i]; }
  auto begin() const noexcept { return cases_.begin(); }
  auto end() const noexcept { return cases_.end(); }

  std::vector<double> column(Driver d) const;
  std::vector<double> costs() const;
  std::vector<Drivers> inputs() const;

  /// First `count` cases as a new dataset with the same role.
  Dataset head(std::size_t count) const;

 private:
  std::vector<ProjectCase> cases_;
  DatasetRole role_;
};

inline constexpr std::string_view kDatasetHeader = "id,area_ha,length_m,valves,year,cost_le";

Dataset parse_dataset(std::string_view csv, DatasetRole role);
std::string serialize_dataset(const Dataset& ds);
Dataset load_dataset(const std::filesystem::path& path, DatasetRole role);

/// `FCIP_DATA` when set, otherwise the directory bundled with the build.
std::filesystem::path data_directory();

struct PipeSegment {
  double diameter_mm = 0;
  double length_m = 0;
};

/// Length-weighted mean diameter of a pipeline.
double equivalent_diameter(std::span<const PipeSegment> segments);

/// Positional split: the first `boundary` cases train, the rest validate.
std::pair<Dataset, Dataset> split(const Dataset& ds, std::size_t boundary);

struct VariableStats {
  double min = 0;
  double max = 0;
  double mean = 0;
  double sd = 0;  // sample standard deviation, 0 for a single case
};

struct DescriptiveStats {
  std::array<VariableStats, kDriverCount> drivers;
  VariableStats cost;

  const VariableStats& operator[](Driver d) const { return drivers[static_cast<std::size_t>(d)]; }
};

DescriptiveStats describe(const Dataset& ds);

/// Per-driver [min, max] box, normally taken from training data.
struct DriverBounds {
  std::array<double, kDriverCount> lo{};
  std::array<double, kDriverCount> hi{};

  double lower(Driver d) const { return lo[static_cast<std::size_t>(d)]; }
  double upper(Driver d) const { return hi[static_cast<std::size_t>(d)]; }
  static DriverBounds of(const Dataset& ds);
};

/// Rows of the 17-variable screening schema `id,p1,...,p17,cost_le`.
/// Any of p1..p17 may be empty; cost_le is required.
struct ExtendedDataset {
  std::vector<std::string> ids;
  std::vector<std::string> variables;  // "P1".."P17" for the columns present
  std::vector<std::vector<std::optional<double>>> values;  // row-major, one entry per variable
  std::vector<double> cost_le;

  std::size_t rows() const noexcept { return ids.size(); }
};

ExtendedDataset parse_extended_dataset(std::string_view csv);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace fcip
