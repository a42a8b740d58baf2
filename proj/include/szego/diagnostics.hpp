#ifndef SZEGO_DIAGNOSTICS_HPP
#define SZEGO_DIAGNOSTICS_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "szego/types.hpp"

namespace szego {

enum class LpVerdict { Converged, LogDivergent, PowerDivergent, Inconclusive };

std::string_view to_string(LpVerdict v);

struct PartialNorm {
  std::size_t horizon;
  double sum;  // sum_{k < horizon} |x_k|^p
};

struct LpFit {
  double slope = 0.0;
  double intercept = 0.0;
  double exponent = 0.0;  // power-model s in c + a*N^s; 0 for the log model
  double rms_residual = std::numeric_limits<double>::quiet_NaN();
};

// Evidence report for lp membership of a sequence. Membership is undecidable
// from finitely many terms; the verdict is the best-supported model, never a
// theorem.
struct LpDiagnostics {
  double p = 2.0;
  std::vector<PartialNorm> partial_norms;
  LpVerdict verdict = LpVerdict::Inconclusive;
  LpFit log_fit;    // S_N ~ c + a*log N
  LpFit power_fit;  // S_N ~ c + a*N^s
  bool converged_by_increment = false;  // rule fired before any model fit
  double last_increment_ratio = 0.0;    // last dyadic increment / |S_N|

  const LpFit& best_fit() const {
    return (power_fit.rms_residual < log_fit.rms_residual) ? power_fit : log_fit;
  }
  std::string_view best_model() const {
    return (power_fit.rms_residual < log_fit.rms_residual) ? "power" : "log";
  }
};

// Verdict rule, frozen:
//   1. converged when the last two dyadic increments are below
//      1e-6 * |S_N| (or the sums are identically zero);
//   2. otherwise fit both models over the top half of the horizons and pick
//      the smaller residual; the power model maps to power-divergent for
//      s > 0 and to converged for s < 0 (partial sums approach a limit);
//   3. inconclusive when the residuals differ by less than 10%.
inline constexpr double kConvergedIncrementTol = 1e-6;
inline constexpr double kInconclusiveMargin = 0.10;

// Diagnose a precomputed partial-sum curve (must be nondecreasing in N).
LpDiagnostics diagnose_partial_sums(std::span<const PartialNorm> sums, double p);

// Partial sums of |x_k|^p at the given horizons, compensated summation.
std::vector<PartialNorm> lp_partial_norms(std::span<const Cplx> x, double p,
                                          std::span<const std::size_t> horizons);
std::vector<PartialNorm> lp_partial_norms(std::span<const double> x, double p,
                                          std::span<const std::size_t> horizons);

// Requires p >= 1, at least 3 strictly increasing horizons, and the last
// horizon within the sequence length; throws std::invalid_argument otherwise.
LpDiagnostics lp_diagnose(std::span<const Cplx> x, double p,
                          std::span<const std::size_t> horizons);
LpDiagnostics lp_diagnose(std::span<const double> x, double p,
                          std::span<const std::size_t> horizons);

// Dyadic horizon ladder {lo, 2lo, 4lo, ...} capped at hi (hi always included).
std::vector<std::size_t> dyadic_horizons(std::size_t lo, std::size_t hi);

}  // namespace szego

#endif  // SZEGO_DIAGNOSTICS_HPP
