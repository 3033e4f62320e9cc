#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

namespace deltalim {

/// Cubic polynomial c0 + c1 x + c2 x^2 + c3 x^3 in the global coordinate x.
struct Cubic {
  std::array<double, 4> c{};

  double operator()(double x) const noexcept {
    return ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
  }
};

enum class PotentialKind { Square, Linear, Piecewise };

/// Real potential with compact support [0, M], polynomial on each piece.
///
/// Piece i covers [x_i, x_{i+1}); the last piece is closed at M. Outside the
/// support the potential is exactly zero. Immutable after construction.
class Potential {
 public:
  /// V = 1 on [0, 1].
  static Potential square();
  /// V = 1 - xi x on [0, 1].
  static Potential linear(double xi);
  /// V = 0 on [0, M]; handy as a free reference.
  static Potential zero(double support_end = 1.0);
  /// Throws Error(InvalidArgument) unless breakpoints start at 0, increase
  /// strictly, and there is one coefficient set per piece.
  static Potential piecewise(std::vector<double> breakpoints,
                             std::vector<Cubic> pieces);

  double operator()(double x) const;
  double eval(double x) const { return (*this)(x); }

  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const Cubic> pieces() const noexcept { return pieces_; }
  const Cubic& piece(std::size_t i) const { return pieces_.at(i); }
  std::size_t piece_count() const noexcept { return pieces_.size(); }
  /// Index of the piece containing x in [0, M].
  std::size_t piece_index(double x) const;

  double support_end() const noexcept { return breakpoints_.back(); }
  PotentialKind kind() const noexcept { return kind_; }
  /// Slope parameter of the linear family (0 for other kinds).
  double xi() const noexcept { return xi_; }

  std::string describe() const;

 private:
  Potential(PotentialKind kind, double xi, std::vector<double> breakpoints,
            std::vector<Cubic> pieces);

  PotentialKind kind_;
  double xi_ = 0.0;
  std::vector<double> breakpoints_;
  std::vector<Cubic> pieces_;
};

/// Parses the JSON potential description
/// {"kind":"square"} | {"kind":"linear","xi":x} |
/// {"kind":"piecewise","breakpoints":[...],"coeffs":[[c0,c1,c2,c3],...]}.
/// Coefficient rows may be shorter than four entries.
Potential potential_from_json(const std::string& text);
Potential load_potential_file(const std::string& path);
std::string potential_to_json(const Potential& v);

}  // namespace deltalim
