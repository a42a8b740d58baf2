#include "szego/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace szego {

std::string_view to_string(LpVerdict v) {
  switch (v) {
    case LpVerdict::Converged: return "converged";
    case LpVerdict::LogDivergent: return "log-divergent";
    case LpVerdict::PowerDivergent: return "power-divergent";
    case LpVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

LinearFit fit_linear(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  LinearFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = ys[i] - (f.intercept + f.slope * xs[i]);
    rss += d * d;
  }
  f.rms = std::sqrt(rss / static_cast<double>(n));
  return f;
}

// Power exponents near 0 are indistinguishable from the log model on any
// finite window, so the grid excludes them.
constexpr double kPowerSMin = -2.0;
constexpr double kPowerSMax = 1.5;
constexpr double kPowerSStep = 0.01;
constexpr double kPowerSExcl = 0.02;

void check_horizons(std::span<const std::size_t> horizons, std::size_t max_len) {
  if (horizons.size() < 3)
    throw std::invalid_argument("lp_diagnose: need at least 3 horizons");
  for (std::size_t i = 1; i < horizons.size(); ++i)
    if (horizons[i] <= horizons[i - 1])
      throw std::invalid_argument("lp_diagnose: horizons must be strictly increasing");
  if (horizons.back() > max_len)
    throw std::invalid_argument("lp_diagnose: horizon exceeds sequence length");
}

template <class T>
std::vector<PartialNorm> partial_norms_impl(std::span<const T> x, double p,
                                            std::span<const std::size_t> horizons) {
  std::vector<PartialNorm> out;
  out.reserve(horizons.size());
  KahanSum acc;
  std::size_t k = 0;
  for (const std::size_t n : horizons) {
    for (; k < n; ++k) acc.add(std::pow(std::abs(x[k]), p));
    out.push_back({n, acc.value()});
  }
  return out;
}

}  // namespace

std::vector<PartialNorm> lp_partial_norms(std::span<const Cplx> x, double p,
                                          std::span<const std::size_t> horizons) {
  check_horizons(horizons, x.size());
  return partial_norms_impl(x, p, horizons);
}

std::vector<PartialNorm> lp_partial_norms(std::span<const double> x, double p,
                                          std::span<const std::size_t> horizons) {
  check_horizons(horizons, x.size());
  return partial_norms_impl(x, p, horizons);
}

LpDiagnostics diagnose_partial_sums(std::span<const PartialNorm> sums, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_diagnose: p must be >= 1");
  if (sums.size() < 3)
    throw std::invalid_argument("lp_diagnose: need at least 3 partial sums");

  LpDiagnostics d;
  d.p = p;
  d.partial_norms.assign(sums.begin(), sums.end());

  const std::size_t n = sums.size();
  const double s_last = sums[n - 1].sum;
  const double scale = std::max(std::abs(s_last), 1e-300);
  const double d1 = sums[n - 2].sum - sums[n - 3].sum;
  const double d2 = sums[n - 1].sum - sums[n - 2].sum;
  d.last_increment_ratio = d2 / scale;
  if (d1 < kConvergedIncrementTol * scale && d2 < kConvergedIncrementTol * scale) {
    d.verdict = LpVerdict::Converged;
    d.converged_by_increment = true;
    // fall through so the fits are still reported
  }

  const std::size_t window = std::max<std::size_t>(3, n / 2);
  std::vector<double> ns(window), ys(window);
  for (std::size_t i = 0; i < window; ++i) {
    ns[i] = static_cast<double>(sums[n - window + i].horizon);
    ys[i] = sums[n - window + i].sum;
  }

  {
    std::vector<double> lx(window);
    for (std::size_t i = 0; i < window; ++i) lx[i] = std::log(ns[i]);
    const LinearFit f = fit_linear(lx, ys);
    d.log_fit = {f.slope, f.intercept, 0.0, f.rms};
  }
  {
    LinearFit best;
    double best_s = 0.0;
    bool have = false;
    std::vector<double> px(window);
    for (double s = kPowerSMin; s <= kPowerSMax + 1e-12; s += kPowerSStep) {
      if (std::abs(s) < kPowerSExcl) continue;
      for (std::size_t i = 0; i < window; ++i) px[i] = std::pow(ns[i], s);
      const LinearFit f = fit_linear(px, ys);
      if (!have || f.rms < best.rms) {
        best = f;
        best_s = s;
        have = true;
      }
    }
    d.power_fit = {best.slope, best.intercept, best_s, best.rms};
  }

  if (d.converged_by_increment) return d;

  const double r_log = d.log_fit.rms_residual;
  const double r_pow = d.power_fit.rms_residual;
  const double r_max = std::max(r_log, r_pow);
  if (r_max <= 0.0 || std::abs(r_log - r_pow) < kInconclusiveMargin * r_max) {
    d.verdict = LpVerdict::Inconclusive;
  } else if (r_log < r_pow) {
    d.verdict = LpVerdict::LogDivergent;
  } else {
    d.verdict = d.power_fit.exponent < 0.0 ? LpVerdict::Converged : LpVerdict::PowerDivergent;
  }
  return d;
}

LpDiagnostics lp_diagnose(std::span<const Cplx> x, double p,
                          std::span<const std::size_t> horizons) {
  if (p < 1.0) throw std::invalid_argument("lp_diagnose: p must be >= 1");
  return diagnose_partial_sums(lp_partial_norms(x, p, horizons), p);
}

LpDiagnostics lp_diagnose(std::span<const double> x, double p,
                          std::span<const std::size_t> horizons) {
  if (p < 1.0) throw std::invalid_argument("lp_diagnose: p must be >= 1");
  return diagnose_partial_sums(lp_partial_norms(x, p, horizons), p);
}

std::vector<std::size_t> dyadic_horizons(std::size_t lo, std::size_t hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("dyadic_horizons: need 1 <= lo <= hi");
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n < hi; n *= 2) out.push_back(n);
  out.push_back(hi);
  return out;
}

}  // namespace szego
