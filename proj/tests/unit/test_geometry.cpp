#include "sexroot/error.hpp"
#include "sexroot/geometry.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace sexroot;

TEST(Geometry, CircleHyperbolaIdentity) {
  auto c = ConicConstruction::fibonacci_circle_hyperbola();
  EXPECT_TRUE(verify_identity(c));
  EXPECT_EQ(reduced_cubic(c), cubics::fibonacci());
  EXPECT_FALSE(verify_identity(c, cubics::albiruni()));
}

TEST(Geometry, IdentityHoldsPointwise) {
  // Substituting y = bc/x into the circle gives target(x)(x - c)/x^2 at rational points.
  auto c = ConicConstruction::fibonacci_circle_hyperbola();
  const std::vector<oracle::Rat> fib{-20, 10, 2, 1};
  for (int k = 1; k <= 7; ++k) {
    oracle::Rat x = oracle::frac(k, 3);
    oracle::Rat lhs = eval(identity_lhs(c), x);
    EXPECT_EQ(lhs, oracle::eval(fib, x) * (x - 2)) << k;
  }
}

TEST(Geometry, ParabolaSemicircleIsDepressedCubic) {
  auto c = ConicConstruction::depressed_parabola_semicircle();
  EXPECT_TRUE(verify_identity(c));
  EXPECT_EQ(reduced_cubic(c), depress(cubics::fibonacci()).poly);
  EXPECT_EQ(c.a, 0);
}

TEST(Geometry, Abscissas) {
  EXPECT_EQ(format(intersect_abscissa(ConicConstruction::fibonacci_circle_hyperbola(), 1)), "1;22");
  EXPECT_EQ(format(intersect_abscissa(ConicConstruction::depressed_parabola_semicircle(), 6)),
            "2;2,7,42,33,4,38");
  EXPECT_THROW(intersect_abscissa(ConicConstruction::fibonacci_circle_hyperbola(), 13),
               DomainError);
}

TEST(Geometry, MakeValidates) {
  EXPECT_THROW(ConicConstruction::make(ConicKind::CircleHyperbola, 1, 0, 1), DomainError);
  EXPECT_THROW(ConicConstruction::make(ConicKind::CircleHyperbola, 1, 1, -1), DomainError);
  auto p = ConicConstruction::make(ConicKind::ParabolaSemicircle, 5, 2, 3);
  EXPECT_EQ(p.a, 0);
  EXPECT_EQ(parse_conic_kind(to_string(ConicKind::ParabolaSemicircle)),
            ConicKind::ParabolaSemicircle);
  EXPECT_THROW(parse_conic_kind("ellipse"), ParseError);
}

TEST(Geometry, Samples) {
  auto c = ConicConstruction::fibonacci_circle_hyperbola();
  auto s = sample_curves(c, 21);
  int hyperbola = 0, circle = 0, meet = 0;
  for (const auto& row : s) {
    if (row.curve == "hyperbola") {
      ++hyperbola;
      EXPECT_GT(row.x, 0);
      ASSERT_TRUE(row.y_squared.has_value());
      EXPECT_EQ(*row.y_squared * row.x * row.x, c.b_sq * c.c * c.c);
    }
    if (row.curve == "circle") ++circle;
    if (row.curve == "intersection") ++meet;
  }
  EXPECT_EQ(circle, 21);
  EXPECT_EQ(hyperbola, 10);  // x = 0.2, 0.4, ..., 2
  EXPECT_EQ(meet, 1);
  std::string csv = to_csv(s);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "curve,x,y_squared,y_approx");
  EXPECT_THROW(sample_curves(c, 1), DomainError);
}
