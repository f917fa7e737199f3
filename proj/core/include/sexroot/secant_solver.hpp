#pragma once

// Iterated linear interpolation in positional arithmetic.
//
// regula_falsi_fixed keeps one endpoint fixed and truncates every
// interpolation subexpression (p(x_n), the product, the quotient) to a fixed
// number of fractional digits. secant_glushkov runs the plain secant through
// the two newest points with exact residuals and a digit count that grows by
// one whenever a new truncated iterate would repeat the current one.

#include "sexroot/poly.hpp"
#include "sexroot/sexnum.hpp"

#include <string>
#include <vector>

namespace sexroot {

struct SecantState {
  SexNum x_prev;
  SexNum x_curr;
  int frac_places = 1;
  int iteration = 0;
};

struct SecantRow {
  int iteration = 0;
  SexNum x_prev;  // for regula falsi, the fixed endpoint
  SexNum x_curr;
  int frac_places = 0;
  SexNum new_iterate;
  int residual_sign = 0;  // sign of p(new_iterate), exact
};

struct SecantRun {
  SexNum result;
  std::vector<SecantRow> rows;
  int poly_evals = 0;
  int rounded_ops = 0;  // arithmetic operations performed with rounding

  /// First iteration from which every later iterate truncated to `places`
  /// equals the final iterate truncated to `places`; 0 for an empty run.
  int stabilization_iteration(int places) const;
};

/// Throws DomainError unless p(a) < 0 < p(b), or on a degenerate chord.
SecantRun regula_falsi_fixed(const Poly& p, const SexNum& a, const SexNum& b, int frac_places,
                             int iters);

struct GlushkovOptions {
  int initial_places = 1;
  int max_places = 40;
};

SecantRun secant_glushkov(const Poly& p, const SexNum& x_prev, const SexNum& x_curr,
                          int max_iters, const GlushkovOptions& options = {});

/// Header `iter,x_prev,x_curr,frac_places,new_iterate,residual_sign`.
std::string to_csv(const std::vector<SecantRow>& rows);

}  // namespace sexroot
