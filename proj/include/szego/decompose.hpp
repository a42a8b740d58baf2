#ifndef SZEGO_DECOMPOSE_HPP
#define SZEGO_DECOMPOSE_HPP

#include <optional>
#include <span>
#include <vector>

#include "szego/diagnostics.hpp"
#include "szego/polyring.hpp"
#include "szego/sequence.hpp"

namespace szego {

struct ComponentDiagnostics {
  double p = 2.0;
  LpDiagnostics beta_lp;       // lp_diagnose(beta_j, p_j)
  LpDiagnostics pj_beta_l2;    // lp_diagnose(P_j(S) beta_j, 2)
};

// Components beta_j = U_j(S) prod_{i != j} P_i(S) alpha with their Bezout
// cofactors; the residuals are reported, never silently absorbed.
struct DecompResult {
  std::vector<ComplexPoly> cofactors;
  std::vector<std::vector<Cplx>> components;
  double bezout_residual = 0.0;
  double reconstruction_residual = 0.0;  // sup-norm of alpha - sum_j beta_j
  std::vector<ComponentDiagnostics> diagnostics;  // empty unless exponents given
};

// Decomposes alpha across the coprime system P_1..P_l. When per-component
// exponents p_j are supplied, attaches the lp evidence for beta_j in l^{p_j}
// and P_j(S) beta_j in l^2 (horizons default to a dyadic ladder over the
// sequence length; at least 3 are required for diagnostics).
DecompResult decompose(const VerblunskySequence& alpha, std::span<const ComplexPoly> ps,
                       std::span<const double> exponents = {},
                       std::span<const std::size_t> horizons = {});

}  // namespace szego

#endif  // SZEGO_DECOMPOSE_HPP
