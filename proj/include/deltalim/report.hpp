#pragma once

#include <span>
#include <string>
#include <vector>

#include "deltalim/airy.hpp"
#include "deltalim/potential.hpp"
#include "deltalim/radial3d.hpp"
#include "deltalim/resolvent.hpp"
#include "deltalim/resonance.hpp"

namespace deltalim::report {

/// 15 significant digits, "inf"/"-inf"/"nan" for non-finite values.
std::string fmt(double v);
double parse_number(const std::string& s);

/// Plain CSV table: header line plus rows, no quoting (cells never contain
/// commas).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  explicit Table(std::vector<std::string> cols = {}) : columns(std::move(cols)) {}

  void add(std::vector<std::string> row);
  void add_numbers(std::span<const double> row);
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;

  std::string to_csv() const;
  /// Array of objects; numeric-looking cells become JSON numbers.
  std::string to_json() const;
  static Table from_csv(const std::string& text);
};

Table resonance_table(const Potential& v, std::span<const ResonanceHit> hits);
Table airy_table(std::span<const double> xs);
Table profile_table(std::span<const ProfileSample> samples);
Table convergence_table(const ConvergenceStudy& study);

void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace deltalim::report
