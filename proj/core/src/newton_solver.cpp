#include "sexroot/newton_solver.hpp"

#include "sexroot/error.hpp"

#include "csv.hpp"

#include <sstream>

namespace sexroot {

std::pair<SexNum, NrRow> nr_step(const Poly& p, const SexNum& x, const NrScheduleEntry& entry) {
  if (entry.iterate_places < 0 || (entry.correction_places && *entry.correction_places < 0)) {
    throw DomainError("schedule places must be nonnegative");
  }
  const int radix = x.radix();
  NrRow row;
  row.x_before = x;
  BigRational xv = to_rational(x);
  row.residual = eval(p, xv);
  row.denominator = entry.derivative_override ? to_rational(*entry.derivative_override)
                                              : eval(derivative(p), xv);
  if (row.denominator == 0) {
    throw DomainError("zero Newton denominator at x=" + format(x));
  }
  row.raw_correction = -row.residual / row.denominator;

  BigRational correction = row.raw_correction;
  if (entry.correction_places) {
    correction = round_rational(correction, *entry.correction_places, entry.correction_rounding,
                                radix);
  }
  row.iterate = from_rational(xv + correction, entry.iterate_places,
                              RoundingMode::TruncateTowardZero, radix);
  if (entry.correction_places) {
    row.applied_correction = from_rational(correction, *entry.correction_places,
                                           RoundingMode::TruncateTowardZero, radix);
  } else {
    int places = std::max(entry.iterate_places, x.frac_places());
    row.applied_correction = from_rational(to_rational(row.iterate) - xv, places,
                                           RoundingMode::TruncateTowardZero, radix);
  }
  return {row.iterate, row};
}

NrTrace run_schedule(const Poly& p, const SexNum& x0, std::span<const NrScheduleEntry> schedule) {
  NrTrace trace;
  SexNum x = x0;
  for (const auto& entry : schedule) {
    auto [next, row] = nr_step(p, x, entry);
    trace.push_back(std::move(row));
    x = std::move(next);
  }
  return trace;
}

std::vector<NrScheduleEntry> gram_schedule() {
  const auto nearest = RoundingMode::NearestHalfAwayFromZero;
  const SexNum slope = SexNum::from_digits(1, {21}, {5});
  return {
      {1, nearest, std::nullopt, 1},
      {2, nearest, std::nullopt, 2},
      {5, nearest, slope, 5},
      {6, nearest, slope, 6},
  };
}

SexNum gram_seed() { return SexNum::from_digits(1, {2}, {}); }

NrTrace run_gram() {
  const auto schedule = gram_schedule();
  return run_schedule(cubics::fibonacci_depressed(), gram_seed(), schedule);
}

NrTrace run_vetter(int max_iters, const VetterOptions& options) {
  return run_vetter(cubics::fibonacci(), max_iters, options);
}

NrTrace run_vetter(const Poly& p, int max_iters, const VetterOptions& options) {
  if (max_iters < 1) throw DomainError("run_vetter needs at least one iteration");
  std::optional<SexNum> divisor;
  for (int places = 0; places <= 12 && !divisor; ++places) {
    SexNum d = from_rational(options.divisor, places, RoundingMode::TruncateTowardZero,
                             options.seed.radix());
    if (to_rational(d) == options.divisor) divisor = d;
  }
  if (!divisor || options.divisor <= 0) {
    throw DomainError("Vetter divisor must be positive and finite in the seed's radix");
  }
  NrTrace trace;
  SexNum x = options.seed;
  for (int i = 0; i < max_iters; ++i) {
    NrScheduleEntry entry{std::nullopt, RoundingMode::TruncateTowardZero, divisor,
                          x.frac_places() + 1};
    auto [next, row] = nr_step(p, x, entry);
    bool settled = to_rational(next) == to_rational(x);
    trace.push_back(std::move(row));
    x = std::move(next);
    if (settled) break;
  }
  return trace;
}

std::string to_csv(const NrTrace& trace) {
  std::ostringstream out;
  out << "iter,x_before,residual,denominator,raw_correction,applied_correction,iterate\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& r = trace[i];
    out << i + 1 << ',' << detail::csv_field(format(r.x_before)) << ','
        << to_string(r.residual) << ',' << to_string(r.denominator) << ','
        << to_string(r.raw_correction) << ',' << detail::csv_field(format(r.applied_correction))
        << ',' << detail::csv_field(format(r.iterate)) << '\n';
  }
  return out.str();
}

}  // namespace sexroot
