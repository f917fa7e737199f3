#include "sexroot/geometry.hpp"

#include "sexroot/error.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sexroot {

ConicConstruction ConicConstruction::make(ConicKind kind, BigRational a, BigRational b_sq,
                                          BigRational c) {
  if (b_sq <= 0 || c <= 0) {
    throw DomainError("conic construction needs b^2 > 0 and c > 0");
  }
  if (kind == ConicKind::ParabolaSemicircle) a = 0;
  return {kind, std::move(a), std::move(b_sq), std::move(c)};
}

ConicConstruction ConicConstruction::fibonacci_circle_hyperbola() {
  return make(ConicKind::CircleHyperbola, 2, 10, 2);
}

ConicConstruction ConicConstruction::depressed_parabola_semicircle() {
  return make(ConicKind::ParabolaSemicircle, 0, rational(26, 3), rational(352, 117));
}

std::string to_string(ConicKind kind) {
  return kind == ConicKind::CircleHyperbola ? "circle-hyperbola" : "parabola-semicircle";
}

ConicKind parse_conic_kind(std::string_view text) {
  if (text == "circle-hyperbola") return ConicKind::CircleHyperbola;
  if (text == "parabola-semicircle") return ConicKind::ParabolaSemicircle;
  throw ParseError("unknown conic construction '" + std::string(text) + "'");
}

Poly reduced_cubic(const ConicConstruction& cons) {
  return Poly(std::vector<BigRational>{BigRational(-cons.b_sq * cons.c), cons.b_sq, cons.a, 1});
}

Poly identity_lhs(const ConicConstruction& cons) {
  const Poly x = Poly::x();
  if (cons.kind == ConicKind::CircleHyperbola) {
    // x^2 [ (x - (c-a)/2)^2 + (y - b)^2 - r^2 ] with y = bc/x, where
    // x^2 (y - b)^2 = (bc - bx)^2 = b^2 (c - x)^2.
    BigRational center = (cons.c - cons.a) / 2;
    BigRational r = (cons.a + cons.c) / 2;
    Poly dx = x - Poly::constant(center);
    Poly dy_times_x = Poly::constant(cons.c) - x;
    return x * x * (dx * dx - Poly::constant(r * r)) + cons.b_sq * (dy_times_x * dy_times_x);
  }
  // b^2 [ (x - c/2)^2 + y^2 - (c/2)^2 ] with y = x^2/b, so b^2 y^2 = x^4.
  BigRational half = cons.c / 2;
  Poly dx = x - Poly::constant(half);
  return cons.b_sq * (dx * dx - Poly::constant(half * half)) + x * x * x * x;
}

Poly identity_rhs(const ConicConstruction& cons, const Poly& target) {
  const Poly x = Poly::x();
  if (cons.kind == ConicKind::CircleHyperbola) return target * (x - Poly::constant(cons.c));
  return target * x;
}

bool verify_identity(const ConicConstruction& cons, const Poly& target) {
  return identity_lhs(cons) == identity_rhs(cons, target);
}

bool verify_identity(const ConicConstruction& cons) {
  return verify_identity(cons, cons.kind == ConicKind::CircleHyperbola
                                   ? cubics::fibonacci()
                                   : cubics::fibonacci_depressed());
}

SexNum intersect_abscissa(const ConicConstruction& cons, int places, int radix) {
  if (places < 0 || places > 12) throw DomainError("intersect_abscissa supports 0..12 places");
  Poly cubic = reduced_cubic(cons);
  BigRational hi = cons.c + cons.a;
  if (!(eval(cubic, 0) < 0 && eval(cubic, hi) > 0)) {
    throw DomainError("no intersection with abscissa in (0, " + to_string(hi) + ")");
  }
  return truncated_root(cubic, 0, hi, places, radix);
}

namespace {

double approx_sqrt(const BigRational& v) { return std::sqrt(to_double(v)); }

std::vector<BigRational> abscissas(const BigRational& lo, const BigRational& hi, int n) {
  std::vector<BigRational> xs;
  for (int i = 0; i < n; ++i) xs.push_back(lo + (hi - lo) * i / (n - 1));
  return xs;
}

}  // namespace

std::vector<CurveSample> sample_curves(const ConicConstruction& cons, int n_points) {
  if (n_points < 2) throw DomainError("sample_curves needs at least two points");
  std::vector<CurveSample> out;
  const double b = approx_sqrt(cons.b_sq);
  const BigRational root = to_rational(intersect_abscissa(cons, 12));

  if (cons.kind == ConicKind::CircleHyperbola) {
    const BigRational center = (cons.c - cons.a) / 2;
    const BigRational r = (cons.a + cons.c) / 2;
    const auto xs = abscissas(-cons.a, cons.c, n_points);
    for (const auto& x : xs) {
      if (x <= 0) continue;
      BigRational y_sq = cons.b_sq * cons.c * cons.c / (x * x);
      out.push_back({"hyperbola", x, y_sq, approx_sqrt(y_sq)});
    }
    for (const auto& x : xs) {
      // Upper half: y = b + sqrt(r^2 - (x - center)^2).
      BigRational s_sq = r * r - (x - center) * (x - center);
      if (s_sq < 0) s_sq = 0;
      std::optional<BigRational> y_sq;
      if (s_sq == 0) y_sq = cons.b_sq;
      out.push_back({"circle", x, y_sq, b + approx_sqrt(s_sq)});
    }
    BigRational y_sq = cons.b_sq * cons.c * cons.c / (root * root);
    out.push_back({"intersection", root, y_sq, approx_sqrt(y_sq)});
    return out;
  }

  const auto xs = abscissas(0, cons.c, n_points);
  for (const auto& x : xs) {
    BigRational y_sq = x * x * x * x / cons.b_sq;
    out.push_back({"parabola", x, y_sq, approx_sqrt(y_sq)});
  }
  for (const auto& x : xs) {
    BigRational y_sq = cons.c * x - x * x;
    out.push_back({"semicircle", x, y_sq, approx_sqrt(y_sq)});
  }
  BigRational y_sq = root * root * root * root / cons.b_sq;
  out.push_back({"intersection", root, y_sq, approx_sqrt(y_sq)});
  return out;
}

std::string to_csv(const std::vector<CurveSample>& samples) {
  std::ostringstream out;
  out << "curve,x,y_squared,y_approx\n";
  for (const auto& s : samples) {
    char approx[32];
    std::snprintf(approx, sizeof approx, "%.15g", s.y_approx);
    out << s.curve << ',' << to_string(s.x) << ',' << (s.y_squared ? to_string(*s.y_squared) : "")
        << ',' << approx << '\n';
  }
  return out.str();
}

}  // namespace sexroot
