#include "deltalim/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "deltalim/errors.hpp"
#include "json.hpp"

namespace deltalim::report {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double parse_number(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw Error(ErrorKind::InvalidArgument, "not a number: '" + s + "'");
  }
  return v;
}

void Table::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw Error(ErrorKind::InvalidArgument, "row width does not match header");
  }
  rows.push_back(std::move(row));
}

void Table::add_numbers(std::span<const double> row) {
  std::vector<std::string> cells;
  cells.reserve(row.size());
  for (double v : row) cells.push_back(fmt(v));
  add(std::move(cells));
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw Error(ErrorKind::InvalidArgument, "no column '" + name + "'");
}

double Table::number(std::size_t row, const std::string& name) const {
  return parse_number(rows.at(row).at(column(name)));
}

std::string Table::to_csv() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string Table::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) {
      try {
        const double v = parse_number(r[i]);
        obj[columns[i]] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(r[i]);
      } catch (const Error&) {
        obj[columns[i]] = r[i];
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

Table Table::from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(l);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!l.empty() && l.back() == ',') cells.emplace_back();
    return cells;
  };
  Table t;
  bool header = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      t.columns = split(line);
      header = false;
    } else {
      t.add(split(line));
    }
  }
  if (header) throw Error(ErrorKind::InvalidArgument, "empty CSV");
  return t;
}

Table resonance_table(const Potential& v, std::span<const ResonanceHit> hits) {
  Table t({"theta", "residual", "psi_M", "integral_I", "dG_dtheta", "alpha_per_omega"});
  for (const auto& h : hits) {
    const double row[] = {h.theta, h.residual, h.psi_M, h.integral_I, h.dG_dtheta,
                          robin_alpha(v, h, 1.0)};
    t.add_numbers(row);
  }
  return t;
}

Table airy_table(std::span<const double> xs) {
  Table t({"x", "Ai", "dAi", "Bi", "dBi"});
  for (double x : xs) {
    const auto q = airy_quad(x);
    const double row[] = {x, q.ai, q.dai, q.bi, q.dbi};
    t.add_numbers(row);
  }
  return t;
}

Table profile_table(std::span<const ProfileSample> samples) {
  Table t({"r", "Psi"});
  for (const auto& s : samples) {
    const double row[] = {s.r, s.psi};
    t.add_numbers(row);
  }
  return t;
}

Table convergence_table(const ConvergenceStudy& study) {
  Table t({"epsilon", "lambda", "error_L2", "alpha_estimate", "reference_kind"});
  for (const auto& r : study.rows) {
    t.add({fmt(r.eps), fmt(r.lambda), fmt(r.error_l2), fmt(r.alpha_estimate), r.reference_kind});
  }
  return t;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  os << text;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace deltalim::report
