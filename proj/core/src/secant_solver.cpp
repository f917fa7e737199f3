#include "sexroot/secant_solver.hpp"

#include "sexroot/error.hpp"

#include "csv.hpp"

#include <sstream>

namespace sexroot {

int SecantRun::stabilization_iteration(int places) const {
  if (rows.empty()) return 0;
  auto cut = [places](const SexNum& s) {
    return from_rational(to_rational(s), places, RoundingMode::TruncateTowardZero, s.radix());
  };
  const SexNum final_value = cut(rows.back().new_iterate);
  int first = rows.back().iteration;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (cut(it->new_iterate) != final_value) break;
    first = it->iteration;
  }
  return first;
}

SecantRun regula_falsi_fixed(const Poly& p, const SexNum& a, const SexNum& b, int frac_places,
                             int iters) {
  if (a.radix() != b.radix()) throw DomainError("endpoints have different radices");
  if (frac_places < 0 || iters < 0) throw DomainError("places and iterations must be >= 0");
  const auto trunc = RoundingMode::TruncateTowardZero;
  const int radix = a.radix();

  SecantRun run;
  BigRational pa = eval(p, to_rational(a));
  BigRational pb_exact = eval(p, to_rational(b));
  run.poly_evals += 2;
  if (!(pa < 0 && pb_exact > 0)) {
    throw DomainError("regula falsi needs p(a) < 0 < p(b)");
  }
  const SexNum pb = from_rational(pb_exact, frac_places, trunc, radix);
  SexNum x = from_rational(to_rational(a), frac_places, trunc, radix);
  BigRational px_exact = pa;

  for (int n = 1; n <= iters; ++n) {
    SexNum px = from_rational(px_exact, frac_places, trunc, radix);
    SexNum span = fixed_arith(b, x, ArithOp::Subtract, frac_places, trunc);
    SexNum product = fixed_arith(px, span, ArithOp::Multiply, frac_places, trunc);
    SexNum rise = fixed_arith(pb, px, ArithOp::Subtract, frac_places, trunc);
    if (rise.is_zero()) throw DomainError("degenerate chord: equal ordinates");
    SexNum quotient = fixed_arith(product, rise, ArithOp::Divide, frac_places, trunc);
    SexNum next = fixed_arith(x, quotient, ArithOp::Subtract, frac_places, trunc);
    run.rounded_ops += 6;

    px_exact = eval(p, to_rational(next));
    ++run.poly_evals;
    run.rows.push_back({n, b, x, frac_places, next, sign_of(px_exact)});
    x = next;
  }
  run.result = x;
  return run;
}

SecantRun secant_glushkov(const Poly& p, const SexNum& x_prev, const SexNum& x_curr,
                          int max_iters, const GlushkovOptions& options) {
  if (x_prev.radix() != x_curr.radix()) throw DomainError("iterates have different radices");
  if (to_rational(x_prev) == to_rational(x_curr)) {
    throw DomainError("secant needs two distinct starting points");
  }
  if (options.initial_places < 0 || options.max_places < options.initial_places) {
    throw DomainError("bad secant digit limits");
  }
  const int radix = x_curr.radix();
  SecantRun run;
  SecantState state{x_prev, x_curr, options.initial_places, 0};
  BigRational f_prev = eval(p, to_rational(state.x_prev));
  BigRational f_curr = eval(p, to_rational(state.x_curr));
  run.poly_evals += 2;

  while (state.iteration < max_iters) {
    if (f_curr == f_prev) throw DomainError("secant through points with equal ordinates");
    BigRational xc = to_rational(state.x_curr);
    BigRational xp = to_rational(state.x_prev);
    BigRational raw = xc - f_curr * (xc - xp) / (f_curr - f_prev);
    run.rounded_ops += 1;

    SexNum next = from_rational(raw, state.frac_places, RoundingMode::TruncateTowardZero, radix);
    while (to_rational(next) == xc && state.frac_places < options.max_places) {
      ++state.frac_places;
      next = from_rational(raw, state.frac_places, RoundingMode::TruncateTowardZero, radix);
      run.rounded_ops += 1;
    }
    ++state.iteration;
    BigRational f_next = eval(p, to_rational(next));
    ++run.poly_evals;
    run.rows.push_back(
        {state.iteration, state.x_prev, state.x_curr, state.frac_places, next, sign_of(f_next)});
    if (to_rational(next) == xc) break;  // digit budget exhausted

    state.x_prev = std::move(state.x_curr);
    state.x_curr = next;
    f_prev = f_curr;
    f_curr = f_next;
    if (f_curr == 0) break;
  }
  run.result = state.x_curr;
  return run;
}

std::string to_csv(const std::vector<SecantRow>& rows) {
  std::ostringstream out;
  out << "iter,x_prev,x_curr,frac_places,new_iterate,residual_sign\n";
  for (const auto& r : rows) {
    out << r.iteration << ',' << detail::csv_field(format(r.x_prev)) << ','
        << detail::csv_field(format(r.x_curr)) << ',' << r.frac_places << ','
        << detail::csv_field(format(r.new_iterate)) << ',' << r.residual_sign << '\n';
  }
  return out.str();
}

}  // namespace sexroot
