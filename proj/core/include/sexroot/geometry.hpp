#pragma once

// Conic-section constructions for positive roots of cubics.
//
// CircleHyperbola: hyperbola xy = bc and circle
//   (x - (c-a)/2)^2 + (y - b)^2 = ((a+c)/2)^2,
// meeting where x^3 + a x^2 + b^2 x = b^2 c.
//
// ParabolaSemicircle: parabola y = x^2/b and semicircle on the diameter
// [0, c], meeting where x^3 + b^2 x = b^2 c.
//
// b is irrational in the cases of interest, so it is carried as b^2.

#include "sexroot/poly.hpp"
#include "sexroot/sexnum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sexroot {

enum class ConicKind { CircleHyperbola, ParabolaSemicircle };

struct ConicConstruction {
  ConicKind kind = ConicKind::CircleHyperbola;
  BigRational a;  // unused by ParabolaSemicircle
  BigRational b_sq;
  BigRational c;

  /// Throws DomainError unless b_sq > 0 and c > 0.
  static ConicConstruction make(ConicKind kind, BigRational a, BigRational b_sq, BigRational c);
  /// a = 2, b^2 = 10, c = 2.
  static ConicConstruction fibonacci_circle_hyperbola();
  /// b^2 = 26/3, c = 352/117.
  static ConicConstruction depressed_parabola_semicircle();
};

std::string to_string(ConicKind kind);
ConicKind parse_conic_kind(std::string_view text);

/// The cubic whose positive root is the intersection abscissa.
Poly reduced_cubic(const ConicConstruction& cons);

/// Circle equation with the other curve substituted for y, denominators
/// cleared (times x^2 for the hyperbola, times b^2 for the parabola).
Poly identity_lhs(const ConicConstruction& cons);

/// target(x) * (x - c) for CircleHyperbola, target(x) * x for ParabolaSemicircle.
Poly identity_rhs(const ConicConstruction& cons, const Poly& target);

/// Exact polynomial equality of identity_lhs and identity_rhs.
bool verify_identity(const ConicConstruction& cons, const Poly& target);
/// Against the Fibonacci cubic (CircleHyperbola) or its depressed form.
bool verify_identity(const ConicConstruction& cons);

/// Intersection abscissa truncated to `places` (<= 12) by exact bisection in
/// (0, c + a). Throws DomainError if no root lies there.
SexNum intersect_abscissa(const ConicConstruction& cons, int places, int radix = kDefaultRadix);

struct CurveSample {
  std::string curve;  // "hyperbola", "circle", "parabola", "semicircle", "intersection"
  BigRational x;
  std::optional<BigRational> y_squared;  // empty where y^2 is irrational
  double y_approx = 0;
};

/// n_points evenly spaced abscissas per curve over the construction's
/// window plus one "intersection" row.
std::vector<CurveSample> sample_curves(const ConicConstruction& cons, int n_points);

/// Header `curve,x,y_squared,y_approx`; y_approx has 15 significant digits.
std::string to_csv(const std::vector<CurveSample>& samples);

}  // namespace sexroot
