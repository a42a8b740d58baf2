#include "szego/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace szego {

DecompResult decompose(const VerblunskySequence& alpha, std::span<const ComplexPoly> ps,
                       std::span<const double> exponents,
                       std::span<const std::size_t> horizons) {
  if (!exponents.empty() && exponents.size() != ps.size())
    throw std::invalid_argument("decompose: need one exponent per polynomial");

  BezoutSystem bez = bezout_system(ps);

  DecompResult out;
  out.cofactors = bez.cofactors;
  out.bezout_residual = bez.residual;

  const std::size_t n = alpha.length();
  std::vector<Cplx> recon(n, Cplx(0.0));
  for (std::size_t j = 0; j < ps.size(); ++j) {
    ComplexPoly op = out.cofactors[j];
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (i != j) op *= ps[i];
    std::vector<Cplx> beta = apply_shift_poly(op, alpha);
    for (std::size_t k = 0; k < n; ++k) recon[k] += beta[k];
    out.components.push_back(std::move(beta));
  }
  double resid = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    resid = std::max(resid, std::abs(alpha.value(k) - recon[k]));
  out.reconstruction_residual = resid;

  if (!exponents.empty() && n > 0) {
    std::vector<std::size_t> ladder;
    if (horizons.empty()) {
      // Stay clear of the last few rows, where the shift operators read the
      // truncation's zero padding rather than sequence values.
      const std::size_t top = n > 16 ? n - 8 : n;
      ladder = dyadic_horizons(std::min<std::size_t>(8, top), top);
    } else {
      ladder.assign(horizons.begin(), horizons.end());
    }
    if (ladder.size() >= 3) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        ComponentDiagnostics diag;
        diag.p = exponents[j];
        diag.beta_lp = lp_diagnose(std::span<const Cplx>(out.components[j]), exponents[j], ladder);
        const std::vector<Cplx> pj_beta = apply_shift_poly(ps[j], out.components[j]);
        diag.pj_beta_l2 = lp_diagnose(std::span<const Cplx>(pj_beta), 2.0, ladder);
        out.diagnostics.push_back(std::move(diag));
      }
    }
  }
  return out;
}

}  // namespace szego
