#include "szego/sequence.hpp"

#include <cmath>
#include <sstream>

namespace szego {

VerblunskySequence VerblunskySequence::from_values(std::vector<Cplx> values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!(std::abs(values[k]) < 1.0)) {
      std::ostringstream msg;
      msg << "Verblunsky coefficient alpha_" << k << " = (" << values[k].real() << ", "
          << values[k].imag() << ") has |alpha| >= 1";
      throw std::invalid_argument(msg.str());
    }
  }
  VerblunskySequence s;
  s.values_ = std::move(values);
  s.kind_ = SequenceKind::Explicit;
  return s;
}

VerblunskySequence VerblunskySequence::formula(const std::string& name, double scale,
                                               double exponent, std::size_t horizon) {
  if (name != "corollary")
    throw std::invalid_argument("unknown formula name: " + name);
  std::vector<Cplx> values(horizon);
  for (std::size_t n = 0; n < horizon; ++n) {
    const double numer = (n % 2 == 0) ? 2.0 * scale : 0.0;
    values[n] = Cplx(numer / std::pow(static_cast<double>(n) + 1.0, exponent), 0.0);
  }
  VerblunskySequence s = from_values(std::move(values));
  s.kind_ = SequenceKind::Formula;
  s.formula_name_ = name;
  s.scale_ = scale;
  s.exponent_ = exponent;
  return s;
}

VerblunskySequence VerblunskySequence::corollary(std::size_t horizon) {
  if (horizon < 1) throw std::invalid_argument("corollary: horizon must be >= 1");
  return formula("corollary", 1.0 / 3.0, 0.25, horizon);
}

std::string VerblunskySequence::describe() const {
  std::ostringstream os;
  if (kind_ == SequenceKind::Formula)
    os << "formula:" << formula_name_ << "(scale=" << scale_ << ",exponent=" << exponent_
       << ",horizon=" << values_.size() << ")";
  else
    os << "explicit[" << values_.size() << "]";
  return os.str();
}

std::vector<Cplx> apply_shift_poly(const ComplexPoly& p, std::span<const Cplx> x) {
  if (p.is_zero()) throw std::invalid_argument("apply_shift_poly: zero polynomial");
  const std::size_t n = x.size();
  const auto cs = p.coeffs();
  std::vector<Cplx> out(n, Cplx(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    Cplx acc(0.0);
    for (std::size_t j = 0; j < cs.size() && i + j < n; ++j) acc += cs[j] * x[i + j];
    out[i] = acc;
  }
  return out;
}

std::vector<Cplx> apply_shift_poly(const ComplexPoly& p, const VerblunskySequence& x) {
  return apply_shift_poly(p, x.values());
}

}  // namespace szego
