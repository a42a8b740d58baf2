#ifndef SZEGO_SEQUENCE_HPP
#define SZEGO_SEQUENCE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "szego/polyring.hpp"
#include "szego/types.hpp"

namespace szego {

enum class SequenceKind { Explicit, Formula };

// Finitely supported sequence of Verblunsky coefficients, |value(k)| < 1
// strictly for k < length(). The extended accessor carries the index
// conventions alpha_{-1} = -1 and alpha_k = 0 for k <= -2.
class VerblunskySequence {
 public:
  static VerblunskySequence from_values(std::vector<Cplx> values);
  // alpha_n = scale * (1 + (-1)^n) / (n+1)^exponent, dense up to `horizon`.
  static VerblunskySequence formula(const std::string& name, double scale,
                                    double exponent, std::size_t horizon);
  // The counterexample sequence alpha_n = (1 + (-1)^n) / (3 (n+1)^{1/4}).
  static VerblunskySequence corollary(std::size_t horizon);

  std::size_t length() const { return values_.size(); }
  Cplx value(std::size_t k) const { return values_[k]; }
  std::span<const Cplx> values() const { return values_; }

  Cplx ext(std::int64_t k) const {
    if (k >= 0)
      return k < static_cast<std::int64_t>(values_.size()) ? values_[static_cast<std::size_t>(k)]
                                                           : Cplx(0.0);
    return k == -1 ? Cplx(-1.0) : Cplx(0.0);
  }
  // 1 - |ext(k)|^2; equals 0 at k = -1 and 1 for k <= -2 by the convention.
  double rho2(std::int64_t k) const {
    const Cplx a = ext(k);
    return 1.0 - (a.real() * a.real() + a.imag() * a.imag());
  }

  SequenceKind kind() const { return kind_; }
  const std::string& formula_name() const { return formula_name_; }
  double formula_scale() const { return scale_; }
  double formula_exponent() const { return exponent_; }

  std::string describe() const;

 private:
  VerblunskySequence() = default;
  std::vector<Cplx> values_;
  SequenceKind kind_ = SequenceKind::Explicit;
  std::string formula_name_;
  double scale_ = 0.0;
  double exponent_ = 0.0;
};

// (P(S) x)_n = sum_j c_j x_{n+j} for n in [0, N); indices past the horizon
// read as zero. Linear in x; apply(P*Q, x) == apply(P, apply(Q, x)) exactly
// up to roundoff. Throws std::invalid_argument for the zero polynomial.
std::vector<Cplx> apply_shift_poly(const ComplexPoly& p, std::span<const Cplx> x);
std::vector<Cplx> apply_shift_poly(const ComplexPoly& p, const VerblunskySequence& x);

}  // namespace szego

#endif  // SZEGO_SEQUENCE_HPP
