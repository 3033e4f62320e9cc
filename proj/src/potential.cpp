#include "deltalim/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "deltalim/errors.hpp"

namespace deltalim {

Potential::Potential(PotentialKind kind, double xi,
                     std::vector<double> breakpoints, std::vector<Cubic> pieces)
    : kind_(kind),
      xi_(xi),
      breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)) {}

Potential Potential::square() {
  return Potential(PotentialKind::Square, 0.0, {0.0, 1.0}, {Cubic{{1, 0, 0, 0}}});
}

Potential Potential::linear(double xi) {
  if (!std::isfinite(xi)) {
    throw Error(ErrorKind::InvalidArgument, "linear potential needs finite xi");
  }
  return Potential(PotentialKind::Linear, xi, {0.0, 1.0},
                   {Cubic{{1.0, -xi, 0, 0}}});
}

Potential Potential::zero(double support_end) {
  return piecewise({0.0, support_end}, {Cubic{}});
}

Potential Potential::piecewise(std::vector<double> breakpoints,
                               std::vector<Cubic> pieces) {
  if (breakpoints.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "need at least two breakpoints");
  }
  if (breakpoints.front() != 0.0) {
    throw Error(ErrorKind::InvalidArgument, "first breakpoint must be 0");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1]) || !std::isfinite(breakpoints[i])) {
      throw Error(ErrorKind::InvalidArgument,
                  "breakpoints must be finite and strictly increasing");
    }
  }
  if (pieces.size() + 1 != breakpoints.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "expected one coefficient row per piece");
  }
  for (const auto& p : pieces) {
    for (double c : p.c) {
      if (!std::isfinite(c)) {
        throw Error(ErrorKind::InvalidArgument, "non-finite coefficient");
      }
    }
  }
  return Potential(PotentialKind::Piecewise, 0.0, std::move(breakpoints),
                   std::move(pieces));
}

std::size_t Potential::piece_index(double x) const {
  if (x >= breakpoints_.back()) return pieces_.size() - 1;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it == breakpoints_.begin()) return 0;
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

double Potential::operator()(double x) const {
  if (x > breakpoints_.back()) return 0.0;
  return pieces_[piece_index(x)](x);
}

std::string Potential::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case PotentialKind::Square: os << "square"; break;
    case PotentialKind::Linear: os << "linear(xi=" << xi_ << ")"; break;
    case PotentialKind::Piecewise:
      os << "piecewise(" << pieces_.size() << " pieces, M=" << support_end() << ")";
      break;
  }
  return os.str();
}

Potential potential_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("potential JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(ErrorKind::InvalidArgument, "potential JSON needs a string \"kind\"");
  }
  const auto kind = j["kind"].get<std::string>();
  try {
    if (kind == "square") return Potential::square();
    if (kind == "linear") return Potential::linear(j.at("xi").get<double>());
    if (kind == "piecewise") {
      auto bps = j.at("breakpoints").get<std::vector<double>>();
      std::vector<Cubic> pieces;
      for (const auto& row : j.at("coeffs")) {
        auto cs = row.get<std::vector<double>>();
        if (cs.empty() || cs.size() > 4) {
          throw Error(ErrorKind::InvalidArgument,
                      "coefficient rows hold 1 to 4 entries");
        }
        Cubic p;
        std::copy(cs.begin(), cs.end(), p.c.begin());
        pieces.push_back(p);
      }
      return Potential::piecewise(std::move(bps), std::move(pieces));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("potential JSON: ") + e.what());
  }
  throw Error(ErrorKind::InvalidArgument, "unknown potential kind '" + kind + "'");
}

Potential load_potential_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return potential_from_json(ss.str());
}

std::string potential_to_json(const Potential& v) {
  nlohmann::json j;
  switch (v.kind()) {
    case PotentialKind::Square: j["kind"] = "square"; break;
    case PotentialKind::Linear:
      j["kind"] = "linear";
      j["xi"] = v.xi();
      break;
    case PotentialKind::Piecewise: {
      j["kind"] = "piecewise";
      j["breakpoints"] = std::vector<double>(v.breakpoints().begin(), v.breakpoints().end());
      auto rows = nlohmann::json::array();
      for (const auto& p : v.pieces()) rows.push_back(p.c);
      j["coeffs"] = rows;
      break;
    }
  }
  return j.dump();
}

}  // namespace deltalim
