#ifndef SZEGO_OPUC_HPP
#define SZEGO_OPUC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "szego/polyring.hpp"
#include "szego/sequence.hpp"
#include "szego/types.hpp"

namespace szego {

// Orthonormal polynomial phi_n and its reversed polynomial phi_n^*; the
// coefficients of phi_star are the reversed conjugates of phi's, and all
// roots of phi lie strictly inside the unit disk.
struct SzegoPolyPair {
  int n = 0;
  ComplexPoly phi = ComplexPoly::one();
  ComplexPoly phi_star = ComplexPoly::one();
};

// Forward recursion phi_{n+1} = (z phi_n - conj(alpha_n) phi_n^*) / rho_n
// starting from phi_0 = phi_0^* = 1. Requires n <= horizon of alpha.
SzegoPolyPair szego_recurse(const VerblunskySequence& alpha, int n);

// Reversed conjugate z^n conj(p(1/conj(z))) for a degree-n slot.
ComplexPoly reversed_conjugate(const ComplexPoly& p, int n);

// Purely absolutely continuous measure with weight 1/|phi_n(e^{i theta})|^2;
// the Verblunsky coefficients are alpha truncated after `level` terms.
class BernsteinSzegoMeasure {
 public:
  explicit BernsteinSzegoMeasure(const VerblunskySequence& alpha);
  BernsteinSzegoMeasure(const VerblunskySequence& alpha, int level);

  int level() const { return pair_.n; }
  const SzegoPolyPair& pair() const { return pair_; }
  double weight(double theta) const;
  double log_weight(double theta) const;

 private:
  SzegoPolyPair pair_;
};

// Finite Laurent expansion sum_m c_m e^{i m theta} with c_{-m} = conj(c_m).
struct LaurentSeries {
  int max_order = 0;
  std::vector<Cplx> coeffs;  // index m + max_order, m in [-max_order, max_order]
  Cplx at(int m) const {
    const int i = m + max_order;
    return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[static_cast<std::size_t>(i)]
                                                           : Cplx(0.0);
  }
};

// Nonnegative trigonometric weight prod_k (1 - cos(theta - theta_k))^{m_k}.
class TrigWeight {
 public:
  struct Factor {
    double theta;
    int multiplicity;
  };

  explicit TrigWeight(std::vector<Factor> factors);
  // The weight (1 - cos theta)^2 (1 + cos theta) of the Z functional.
  static TrigWeight z_weight();
  // Parses "theta=0,m=2;theta=pi,m=1".
  static TrigWeight parse(std::string_view text);

  std::span<const Factor> factors() const { return factors_; }
  double eval(double theta) const;
  LaurentSeries laurent() const;
  double eval_laurent(double theta) const;  // independent evaluation path
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

struct QuadratureOptions {
  double tol = 1e-11;
  int min_nodes = 256;
  // Roots of phi_n within ~1e-5 of the circle need a few million uniform
  // nodes before the doubling criterion meets tol.
  int max_nodes = 1 << 22;
};

// Quadrature-backed operations refuse levels beyond this; root clustering
// toward the circle degrades the uniform rule's economy.
inline constexpr int kMaxQuadratureLevel = 4096;

// m-th moment of log weight, int e^{-im theta} log w(theta) dtheta/2pi, by
// the uniform trapezoidal rule with node doubling (spectral accuracy for
// this analytic periodic integrand). Throws AccuracyError when the
// tolerance is not met at maximum refinement.
Cplx log_moment_quad(const BernsteinSzegoMeasure& mu, int order,
                     const QuadratureOptions& opts = {});

// int T(theta) log w(theta) dtheta/2pi by the same rule.
double z_quad(const BernsteinSzegoMeasure& mu, const TrigWeight& t,
              const QuadratureOptions& opts = {});

}  // namespace szego

#endif  // SZEGO_OPUC_HPP
