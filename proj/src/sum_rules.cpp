#include "szego/sum_rules.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "szego/diagnostics.hpp"
#include "szego/opuc.hpp"
#include "szego/random.hpp"

namespace szego {

namespace {

// 2 log(1 - z) + 2z + z^2 for z = |alpha|^2. The direct form loses all
// relative accuracy for small z (the result is O(z^3) from O(z) terms), so
// switch to the series -2 sum_{m>=3} z^m / m there.
double log_remainder(double z) {
  if (z < 1e-3) {
    double acc = 0.0;
    double zp = z * z * z;
    for (int m = 3; m < 64; ++m) {
      const double term = zp / m;
      acc += term;
      if (term < acc * 1e-18) break;
      zp *= z;
    }
    return -2.0 * acc;
  }
  return 2.0 * std::log1p(-z) + 2.0 * z + z * z;
}

}  // namespace

double term_L(Cplx a) { return log_remainder(std::norm(a)); }

double term_E(const AlphaWindow& w) {
  return -0.5 * (1.0 - std::norm(w.b) - std::norm(w.c)) * std::norm(w.a - w.b - w.c + w.d);
}

double term_G(const AlphaWindow& w) {
  const double q = std::norm(w.a - 2.0 * w.b + w.c);
  return -q * q / 32.0;
}

Cplx term_J(const AlphaWindow& w) {
  const Cplx a = w.a, b = w.b, c = w.c;
  const Cplx bb = std::conj(b), cb = std::conj(c), ab = std::conj(a);
  const double na = std::norm(a), nb = std::norm(b), nc = std::norm(c);
  return 0.75 * a * bb * cb + 1.25 * nc * bb + 1.125 * na * cb + 0.5 * bb * bb * c +
         cb * nb + (23.0 / 16.0) * nc * cb - 1.25 * na * bb - 0.75 * ab * bb * c +
         (1.0 / 16.0) * a * cb * cb + 0.25 * nc * ab;
}

Cplx term_H(const AlphaWindow& w) { return (w.a - w.c) * term_J(w); }

Cplx term_F(const AlphaWindow& w) {
  const Cplx a = w.a, b = w.b;
  const Cplx bb = std::conj(b), cb = std::conj(w.c), db = std::conj(w.d);
  const double nb = std::norm(b), nc = std::norm(w.c);
  return -a * db * nb * nc - a * a * bb * cb * nb - a * b * cb * cb * nb -
         a * a * a * bb * bb * bb / 3.0;
}

Cplx term_I(Cplx a, Cplx b, Cplx c) {
  const Cplx bb = std::conj(b), cb = std::conj(c);
  const double na = std::norm(a), nb = std::norm(b), nc = std::norm(c);
  return -1.5 * na - nb - 0.5 * nc + a * cb + b * cb + 0.5 * na * nc -
         (31.0 / 32.0) * na * na - (31.0 / 32.0) * nb * nb - 0.75 * a * a * bb * bb +
         na * a * bb - nb * b * cb - nb * a * cb - na * a * cb - na * b * cb +
         0.5 * nb * nc;
}

double term_s(const AlphaWindow& w) {
  const Cplx a = w.a, b = w.b;
  const Cplx bb = std::conj(b), cb = std::conj(w.c), db = std::conj(w.d);
  const double r1 = 1.0 - std::norm(b);
  const double r2 = 1.0 - std::norm(w.c);
  const Cplx poly = a * bb + 2.0 * a * cb * r1 - a * a * bb * bb - a * db * r1 * r2 +
                    a * a * bb * cb * r1 + a * b * cb * cb * r1 -
                    a * a * a * bb * bb * bb / 3.0;
  return 2.0 * std::log1p(-std::norm(a)) + poly.real();
}

TermRow term_row(const AlphaWindow& w) {
  TermRow r;
  r.L = term_L(w.a);
  r.E = term_E(w);
  r.G = term_G(w);
  r.J = term_J(w);
  r.H = term_H(w);
  r.F = term_F(w);
  r.I = term_I(w.a, w.b, w.c);
  r.s = term_s(w);
  return r;
}

AlphaWindow window_at(const VerblunskySequence& alpha, std::int64_t k) {
  return {alpha.ext(k), alpha.ext(k - 1), alpha.ext(k - 2), alpha.ext(k - 3)};
}

namespace {

std::size_t row_count(const VerblunskySequence& alpha) { return alpha.length() + 3; }

template <class Fn>
void for_each_row(const VerblunskySequence& alpha, Fn&& fn) {
  const std::size_t rows = row_count(alpha);
  for (std::size_t k = 0; k < rows; ++k)
    fn(k, term_row(window_at(alpha, static_cast<std::int64_t>(k))));
}

}  // namespace

MomentSums moments_sum(const VerblunskySequence& alpha) {
  KahanSum w0;
  KahanSumC w1, w2, w3;
  const std::size_t n = alpha.length();
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t kk = static_cast<std::int64_t>(k);
    const Cplx a = alpha.value(k);
    const Cplx b = alpha.ext(kk - 1);
    const Cplx bb = std::conj(b);
    const Cplx cb = std::conj(alpha.ext(kk - 2));
    const Cplx db = std::conj(alpha.ext(kk - 3));
    const double r1 = alpha.rho2(kk - 1);
    const double r2 = alpha.rho2(kk - 2);
    w0.add(std::log1p(-std::norm(a)));
    w1.add(-a * bb);
    w2.add(-a * cb * r1 + 0.5 * a * a * bb * bb);
    w3.add(-a * db * r1 * r2 + a * a * bb * cb * r1 + a * b * cb * cb * r1 -
           a * a * a * bb * bb * bb / 3.0);
  }
  return {Cplx(w0.value(), 0.0), w1.value(), w2.value(), w3.value()};
}

double z_from_moments(const MomentSums& m) {
  return 0.25 * (2.0 * m.w0 - m.w1 - 2.0 * m.w2 + m.w3).real();
}

TermTable term_table(const VerblunskySequence& alpha) {
  TermTable t;
  t.horizon = alpha.length();
  t.rows.reserve(row_count(alpha));
  for_each_row(alpha, [&](std::size_t, const TermRow& r) { t.rows.push_back(r); });
  t.I_minus1 = term_I(alpha.ext(-1), alpha.ext(-2), alpha.ext(-3));
  return t;
}

double z_sum(const VerblunskySequence& alpha) {
  KahanSum acc;
  const std::size_t n = alpha.length();
  for (std::size_t k = 0; k < n; ++k)
    acc.add(term_s(window_at(alpha, static_cast<std::int64_t>(k))));
  return 0.25 * acc.value();
}

namespace {

std::vector<double> prefix_scan(const VerblunskySequence& alpha,
                                std::span<const std::size_t> horizons, bool use_s,
                                double factor) {
  const std::size_t rows = row_count(alpha);
  for (std::size_t i = 0; i < horizons.size(); ++i) {
    if (horizons[i] > rows) throw std::invalid_argument("prefix horizon exceeds row count");
    if (i > 0 && horizons[i] <= horizons[i - 1])
      throw std::invalid_argument("prefix horizons must be strictly increasing");
  }
  std::vector<double> out;
  out.reserve(horizons.size());
  KahanSum acc;
  std::size_t k = 0;
  for (const std::size_t h : horizons) {
    for (; k < h; ++k) {
      const AlphaWindow w = window_at(alpha, static_cast<std::int64_t>(k));
      acc.add(use_s ? term_s(w) : term_G(w));
    }
    out.push_back(factor * acc.value());
  }
  return out;
}

}  // namespace

std::vector<double> z_sum_prefixes(const VerblunskySequence& alpha,
                                   std::span<const std::size_t> horizons) {
  return prefix_scan(alpha, horizons, true, 0.25);
}

std::vector<double> g_sum_prefixes(const VerblunskySequence& alpha,
                                   std::span<const std::size_t> horizons) {
  return prefix_scan(alpha, horizons, false, 1.0);
}

InteriorIdentityCheck identity_check_interior(std::size_t draws, double radius,
                                              std::uint64_t seed) {
  if (!(radius < 1.0)) throw std::invalid_argument("identity_check_interior: radius must be < 1");
  std::mt19937_64 rng(seed);
  InteriorIdentityCheck out;
  out.draws = draws;
  out.radius = radius;
  out.seed = seed;
  for (std::size_t i = 0; i < draws; ++i) {
    AlphaWindow w{random_in_disk(rng, radius), random_in_disk(rng, radius),
                  random_in_disk(rng, radius), random_in_disk(rng, radius)};
    const double L = term_L(w.a), E = term_E(w), G = term_G(w);
    const Cplx H = term_H(w), F = term_F(w);
    const Cplx Ik = term_I(w.a, w.b, w.c), Ik1 = term_I(w.b, w.c, w.d);
    const double rhs = L + E + G + (H + F + Ik - Ik1).real();
    const double resid = std::abs(term_s(w) - rhs);
    const double scale = std::max(1.0, std::abs(L) + std::abs(E) + std::abs(G) +
                                           std::abs(H) + std::abs(F) + std::abs(Ik) +
                                           std::abs(Ik1));
    out.max_abs_residual = std::max(out.max_abs_residual, resid);
    if (resid / scale > out.max_rel_residual) {
      out.max_rel_residual = resid / scale;
      out.worst = w;
    }
  }
  return out;
}

std::string_view to_string(BoundaryConvention c) {
  switch (c) {
    case BoundaryConvention::FullRowsWithTelescope: return "full-rows+telescope";
    case BoundaryConvention::FullRowsNoTelescope: return "full-rows";
    case BoundaryConvention::InteriorRowsWithTelescope: return "interior-rows+telescope";
    case BoundaryConvention::InteriorRowsNoTelescope: return "interior-rows";
  }
  return "unknown";
}

namespace {

struct FamilyAggregate {
  double full = 0.0;      // sum over rows k >= 0 of Re(L+E+G+H+F)
  double interior = 0.0;  // same over rows k >= 3
  double tele_full = 0.0;
  double tele_interior = 0.0;
};

FamilyAggregate family_aggregate(const VerblunskySequence& alpha) {
  KahanSum full, interior;
  for_each_row(alpha, [&](std::size_t k, const TermRow& r) {
    const double v = r.L + r.E + r.G + r.H.real() + r.F.real();
    full.add(v);
    if (k >= 3) interior.add(v);
  });
  FamilyAggregate agg;
  agg.full = full.value();
  agg.interior = interior.value();
  agg.tele_full = -term_I(alpha.ext(-1), alpha.ext(-2), alpha.ext(-3)).real();
  agg.tele_interior = -term_I(alpha.ext(2), alpha.ext(1), alpha.ext(0)).real();
  return agg;
}

double candidate_value(const FamilyAggregate& agg, BoundaryConvention c) {
  switch (c) {
    case BoundaryConvention::FullRowsWithTelescope: return 0.25 * (agg.full + agg.tele_full);
    case BoundaryConvention::FullRowsNoTelescope: return 0.25 * agg.full;
    case BoundaryConvention::InteriorRowsWithTelescope:
      return 0.25 * (agg.interior + agg.tele_interior);
    case BoundaryConvention::InteriorRowsNoTelescope: return 0.25 * agg.interior;
  }
  return 0.0;
}

constexpr BoundaryConvention kAllConventions[] = {
    BoundaryConvention::FullRowsWithTelescope,
    BoundaryConvention::FullRowsNoTelescope,
    BoundaryConvention::InteriorRowsWithTelescope,
    BoundaryConvention::InteriorRowsNoTelescope,
};

}  // namespace

double z_families(const VerblunskySequence& alpha, BoundaryConvention convention) {
  return candidate_value(family_aggregate(alpha), convention);
}

BoundaryReport boundary_reconcile(const VerblunskySequence& alpha, double tol,
                                  double quad_tol) {
  const FamilyAggregate agg = family_aggregate(alpha);
  BoundaryReport report;
  report.tolerance = tol;
  QuadratureOptions opts;
  opts.tol = quad_tol;
  report.z_reference = z_quad(BernsteinSzegoMeasure(alpha), TrigWeight::z_weight(), opts);

  for (const BoundaryConvention c : kAllConventions) {
    BoundaryCandidate cand;
    cand.convention = c;
    cand.value = candidate_value(agg, c);
    cand.residual = std::abs(cand.value - report.z_reference);
    cand.matches = cand.residual <= tol;
    report.candidates.push_back(cand);
  }

  // The frozen default wins whenever it matches; otherwise the matching
  // candidate with the smallest residual.
  bool any = false;
  double best_residual = 0.0;
  for (const BoundaryCandidate& cand : report.candidates) {
    if (!cand.matches) continue;
    if (!any || cand.residual < best_residual) {
      report.selected = cand.convention;
      best_residual = cand.residual;
      any = true;
    }
  }
  for (const BoundaryCandidate& cand : report.candidates)
    if (cand.convention == kFrozenConvention && cand.matches) report.selected = kFrozenConvention;

  if (!any) {
    std::ostringstream msg;
    msg << "boundary_reconcile: no convention reproduces z_quad = " << report.z_reference
        << " within " << tol << ";";
    for (const BoundaryCandidate& cand : report.candidates)
      msg << " " << to_string(cand.convention) << " residual " << cand.residual << ";";
    throw ReconciliationError(msg.str());
  }
  report.selected_is_frozen_default = (report.selected == kFrozenConvention);
  return report;
}

Lemma31Report lemma31_bounds(const VerblunskySequence& alpha,
                             std::span<const std::size_t> checkpoints) {
  const std::size_t rows = row_count(alpha);
  Lemma31Report rep;
  rep.rows = rows;
  std::vector<std::size_t> cps;
  if (checkpoints.empty()) {
    cps = dyadic_horizons(std::min<std::size_t>(8, rows), rows);
  } else {
    cps.assign(checkpoints.begin(), checkpoints.end());
    for (std::size_t i = 0; i < cps.size(); ++i) {
      if (cps[i] > rows) throw std::invalid_argument("lemma31_bounds: checkpoint beyond rows");
      if (i > 0 && cps[i] <= cps[i - 1])
        throw std::invalid_argument("lemma31_bounds: checkpoints must increase");
    }
  }
  rep.checkpoints = cps;

  KahanSum sL, sE, sH, sF;
  std::size_t next = 0;
  for_each_row(alpha, [&](std::size_t k, const TermRow& r) {
    while (next < cps.size() && cps[next] == k) {
      rep.l1_L.push_back(sL.value());
      rep.l1_E.push_back(sE.value());
      rep.l1_H.push_back(sH.value());
      rep.l1_F.push_back(sF.value());
      ++next;
    }
    sL.add(std::abs(r.L));
    sE.add(std::abs(r.E));
    sH.add(std::abs(r.H));
    sF.add(std::abs(r.F));

    const AlphaWindow w = window_at(alpha, static_cast<std::int64_t>(k));
    const double mag = std::abs(w.a);
    if (mag > 0.0 && mag <= 0.5) {
      const double bound = (8.0 / 9.0) * std::pow(mag, 6.0);
      const double ratio = std::abs(r.L) / bound;
      rep.L_bound_max_ratio = std::max(rep.L_bound_max_ratio, ratio);
      if (ratio > 1.0) rep.L_bound_ok = false;
    }
    const double e_rhs = 0.5 * std::norm(w.a - w.b - w.c + w.d);
    if (e_rhs > 0.0) {
      const double ratio = std::abs(r.E) / e_rhs;
      rep.E_bound_max_ratio = std::max(rep.E_bound_max_ratio, ratio);
      if (ratio > 1.0 + 1e-12) rep.E_bound_ok = false;
    }
  });
  while (next < cps.size()) {
    rep.l1_L.push_back(sL.value());
    rep.l1_E.push_back(sE.value());
    rep.l1_H.push_back(sH.value());
    rep.l1_F.push_back(sF.value());
    ++next;
  }
  rep.total_L = sL.value();
  rep.total_E = sE.value();
  rep.total_H = sH.value();
  rep.total_F = sF.value();
  return rep;
}

}  // namespace szego
