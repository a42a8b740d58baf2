#ifndef SZEGO_POLYRING_HPP
#define SZEGO_POLYRING_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "szego/types.hpp"

namespace szego {

// Dense polynomial over complex coefficients, coeffs()[j] = coefficient of
// z^j. Doubles as a shift-operator symbol P(S). The zero polynomial has an
// empty coefficient list and degree -1.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<Cplx> coeffs) { assign(std::move(coeffs), 0.0); }
  ComplexPoly(std::initializer_list<Cplx> coeffs)
      : ComplexPoly(std::vector<Cplx>(coeffs)) {}

  static ComplexPoly zero() { return ComplexPoly(); }
  static ComplexPoly one() { return ComplexPoly({Cplx(1.0)}); }
  static ComplexPoly z() { return ComplexPoly({Cplx(0.0), Cplx(1.0)}); }
  static ComplexPoly constant(Cplx c) { return ComplexPoly({c}); }
  // (z - root)
  static ComplexPoly from_root(Cplx root) { return ComplexPoly({-root, Cplx(1.0)}); }
  // (z - e^{-i theta})^m, the factor form of the spectral conditions.
  static ComplexPoly circle_root(double theta, int multiplicity);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Cplx coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Cplx(0.0); }
  std::span<const Cplx> coeffs() const { return coeffs_; }
  Cplx leading() const { return coeffs_.empty() ? Cplx(0.0) : coeffs_.back(); }
  double max_abs_coeff() const;

  Cplx eval(Cplx x) const;
  // |p(e^{i theta})|^2 with coefficient prescaling; log form avoids overflow
  // at moderate degree.
  double log_abs2_on_circle(double theta) const;

  ComplexPoly monic() const;
  ComplexPoly pow(int exponent) const;

  ComplexPoly operator-() const;
  ComplexPoly& operator+=(const ComplexPoly& rhs);
  ComplexPoly& operator-=(const ComplexPoly& rhs);
  ComplexPoly& operator*=(const ComplexPoly& rhs);
  ComplexPoly& operator*=(Cplx scalar);

  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
  friend ComplexPoly operator*(ComplexPoly a, const ComplexPoly& b) { return a *= b; }
  friend ComplexPoly operator*(Cplx s, ComplexPoly p) { return p *= s; }
  friend ComplexPoly operator*(ComplexPoly p, Cplx s) { return p *= s; }

  // a = q*b + r with deg r < deg b; coefficients trimmed at kPolyEps relative
  // to the inputs' magnitude. Division by the zero polynomial throws.
  static std::pair<ComplexPoly, ComplexPoly> divmod(const ComplexPoly& a,
                                                    const ComplexPoly& b);

  // Trims leading coefficients below kPolyEps * max(scale, own magnitude).
  void trim(double scale);

  std::string to_string() const;

 private:
  void assign(std::vector<Cplx> coeffs, double scale);
  std::vector<Cplx> coeffs_;
};

// Sup-norm of the coefficientwise difference.
double sup_coeff_dist(const ComplexPoly& a, const ComplexPoly& b);

struct ExtendedGcd {
  ComplexPoly g;  // monic
  ComplexPoly s;
  ComplexPoly t;
  double residual = 0.0;  // sup-norm of s*a + t*b - g
};

// Floating-point Euclid over C[x]; g is monic and (s, t) is the reduced
// representative with deg s < deg b - deg g, deg t < deg a - deg g whenever
// those bounds are meaningful. The residual is the authoritative success
// criterion; kPolyEps only guards degree bookkeeping.
ExtendedGcd extended_gcd(const ComplexPoly& a, const ComplexPoly& b);

struct BezoutSystem {
  std::vector<ComplexPoly> cofactors;
  double residual = 0.0;  // sup-norm coefficients of sum_j U_j prod_{i!=j} P_i - 1
};

// Cofactors U_j with sum_j U_j prod_{i!=j} P_i = 1 for pairwise coprime P_j,
// in canonical reduced form (U_j reduced mod P_j, last cofactor repaired).
// Throws CoprimalityError naming the offending pair.
BezoutSystem bezout_system(std::span<const ComplexPoly> ps);

// Residual of a candidate cofactor set against the identity.
double bezout_residual(std::span<const ComplexPoly> ps,
                       std::span<const ComplexPoly> cofactors);

// Parses "(z-1)^2*(z+1)", "z^3 - z", "root:theta=3.14159,m=2" and products of
// such factors. The token "pi" is accepted wherever an angle is expected.
ComplexPoly parse_poly(std::string_view text);

}  // namespace szego

#endif  // SZEGO_POLYRING_HPP
