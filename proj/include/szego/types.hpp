#ifndef SZEGO_TYPES_HPP
#define SZEGO_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace szego {

using Cplx = std::complex<double>;

inline constexpr const char* kVersion = "szegokit 0.1.0";

// Relative threshold for degree trimming and approximate polynomial equality.
inline constexpr double kPolyEps = 1e-12;

// Raised when a polynomial set fails the pairwise-coprimality precondition.
class CoprimalityError : public std::runtime_error {
 public:
  CoprimalityError(std::size_t i, std::size_t j, const std::string& what_arg)
      : std::runtime_error(what_arg), first(i), second(j) {}
  std::size_t first;
  std::size_t second;
};

// Raised when quadrature fails to meet its tolerance at maximum refinement.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what_arg, double achieved_error)
      : std::runtime_error(what_arg), achieved(achieved_error) {}
  double achieved;
};

// Raised when no boundary convention reproduces the quadrature reference.
class ReconciliationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Compensated (Kahan) accumulator. Long partial sums of 1e6+ small terms
// must not lose the tail that separates log-divergence from convergence.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KahanSumC {
 public:
  void add(Cplx x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  Cplx value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_;
  KahanSum im_;
};

}  // namespace szego

#endif  // SZEGO_TYPES_HPP
