#pragma once

// Newton-Raphson in positional arithmetic with per-iteration rounding.
// A run is driven by a schedule: one entry per iteration saying how the
// correction is rounded, whether the derivative is replaced by a fixed
// value, and how many places the new iterate keeps.

#include "sexroot/poly.hpp"
#include "sexroot/sexnum.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sexroot {

struct NrScheduleEntry {
  std::optional<int> correction_places;  // nullopt: correction kept exact
  RoundingMode correction_rounding = RoundingMode::TruncateTowardZero;
  std::optional<SexNum> derivative_override;
  int iterate_places = 0;  // new iterate truncated toward zero to this many places
};

struct NrRow {
  SexNum x_before;
  BigRational residual;     // p(x_before)
  BigRational denominator;  // p'(x_before) or the override
  BigRational raw_correction;
  // The rounded correction when correction_places is set, otherwise the
  // step actually taken (iterate - x_before).
  SexNum applied_correction;
  SexNum iterate;
};

using NrTrace = std::vector<NrRow>;

std::pair<SexNum, NrRow> nr_step(const Poly& p, const SexNum& x, const NrScheduleEntry& entry);

NrTrace run_schedule(const Poly& p, const SexNum& x0, std::span<const NrScheduleEntry> schedule);

// Four iterations on x^3 + 8;40 x = 26;4,26,40 from x0 = 2: corrections
// rounded to 1, 2, 5, 6 places (nearest), derivative 21;5 in the last two.
std::vector<NrScheduleEntry> gram_schedule();
SexNum gram_seed();
NrTrace run_gram();

struct VetterOptions {
  SexNum seed = SexNum::from_digits(1, {1}, {});
  BigRational divisor = 20;
};

// Constant-divisor Newton on x^3+2x^2+10x-20. Each new iterate is truncated
// to one more place than the previous one; stops after max_iters or when two
// successive iterates are equal.
NrTrace run_vetter(int max_iters, const VetterOptions& options = {});
// The same iteration on any polynomial.
NrTrace run_vetter(const Poly& p, int max_iters, const VetterOptions& options = {});

// Header `iter,x_before,residual,denominator,raw_correction,applied_correction,iterate`.
std::string to_csv(const NrTrace& trace);

}  // namespace sexroot
