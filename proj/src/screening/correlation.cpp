#include <algorithm>
#include <cmath>
#include <numeric>

#include "fcip/error.hpp"
#include "fcip/screening.hpp"

namespace fcip::screening {

std::string_view method_name(CorrelationMethod m) {
  return m == CorrelationMethod::spearman ? "spearman" : "pearson";
}

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

namespace {

double pearson(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw InputError("zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace

double correlate(std::span<const double> x, std::span<const double> y, CorrelationMethod method) {
  if (x.size() != y.size()) throw InputError("correlated series differ in length");
  if (x.size() < 3) throw InputError("correlation needs at least three observations");
  if (method == CorrelationMethod::pearson) return pearson(x, y);
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

CorrelationMatrix correlation_matrix(const Eigen::MatrixXd& columns, std::vector<std::string> names,
                                     CorrelationMethod method) {
  const auto p = columns.cols();
  if (static_cast<std::size_t>(p) != names.size()) throw InputError("column names do not match the data");
  CorrelationMatrix out{std::move(names), Eigen::MatrixXd::Identity(p, p), method};
  std::vector<std::vector<double>> cols(static_cast<std::size_t>(p));
  for (Eigen::Index j = 0; j < p; ++j) {
    cols[static_cast<std::size_t>(j)].assign(columns.col(j).data(), columns.col(j).data() + columns.rows());
  }
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = i + 1; j < p; ++j) {
      const double r = correlate(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)], method);
      out.r(i, j) = r;
      out.r(j, i) = r;
    }
  }
  return out;
}

DesignData DesignData::from_dataset(const Dataset& ds) {
  DesignData d;
  const auto n = static_cast<Eigen::Index>(ds.size());
  d.x.resize(n, static_cast<Eigen::Index>(kDriverCount));
  d.y.resize(n);
  for (Driver drv : kAllDrivers) d.names.emplace_back(driver_symbol(drv));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto v = ds[static_cast<std::size_t>(i)].drivers().values();
    for (std::size_t j = 0; j < kDriverCount; ++j) d.x(i, static_cast<Eigen::Index>(j)) = v[j];
    d.y(i) = ds[static_cast<std::size_t>(i)].cost_le;
  }
  return d;
}

DesignData DesignData::from_extended(const ExtendedDataset& ds) {
  // Columns with no values at all are dropped before complete-case filtering.
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < ds.variables.size(); ++j) {
    const bool any = std::any_of(ds.values.begin(), ds.values.end(), [&](const auto& row) { return row[j].has_value(); });
    if (any) cols.push_back(j);
  }
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    const bool complete = std::all_of(cols.begin(), cols.end(), [&](std::size_t j) { return ds.values[i][j].has_value(); });
    if (complete) rows.push_back(i);
  }
  if (rows.empty() || cols.empty()) throw InputError("no complete rows in extended dataset");
  DesignData d;
  for (auto j : cols) d.names.push_back(ds.variables[j]);
  d.x.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  d.y.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      d.x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = *ds.values[rows[r]][cols[c]];
    }
    d.y(static_cast<Eigen::Index>(r)) = ds.cost_le[rows[r]];
  }
  return d;
}

DesignData DesignData::subset(std::span<const std::size_t> columns) const {
  DesignData d;
  d.response = response;
  d.y = y;
  d.x.resize(x.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] >= cols()) throw InputError("column index out of range");
    d.x.col(static_cast<Eigen::Index>(c)) = x.col(static_cast<Eigen::Index>(columns[c]));
    d.names.push_back(names[columns[c]]);
  }
  return d;
}

namespace {

std::vector<double> column_values(const Eigen::MatrixXd& x, std::size_t j) {
  const auto c = x.col(static_cast<Eigen::Index>(j));
  return {c.data(), c.data() + c.size()};
}

}  // namespace

FilterResult correlation_filter(const DesignData& data, const FilterRule& rule) {
  if (!(rule.hi > rule.lo)) throw InputError("filter needs hi > lo");
  FilterResult out;
  const std::vector<double> y(data.y.data(), data.y.data() + data.y.size());
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < data.cols(); ++j) {
    const auto xj = column_values(data.x, j);
    bool collinear = false;
    for (auto k : kept) {
      if (std::fabs(correlate(xj, column_values(data.x, k))) >= rule.hi) {
        collinear = true;
        break;
      }
    }
    if (collinear) {
      out.dropped_collinear.push_back(data.names[j]);
    } else {
      kept.push_back(j);
    }
  }
  for (auto j : kept) {
    if (rule.apply_lo && std::fabs(correlate(column_values(data.x, j), y)) <= rule.lo) {
      out.dropped_weak.push_back(data.names[j]);
    } else {
      out.retained.push_back(j);
    }
  }
  return out;
}

}  // namespace fcip::screening
