#include "szego/opuc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace szego {

ComplexPoly reversed_conjugate(const ComplexPoly& p, int n) {
  std::vector<Cplx> rev(static_cast<std::size_t>(n) + 1, Cplx(0.0));
  for (int j = 0; j <= n; ++j) rev[static_cast<std::size_t>(n - j)] = std::conj(p.coeff(j));
  return ComplexPoly(std::move(rev));
}

SzegoPolyPair szego_recurse(const VerblunskySequence& alpha, int n) {
  if (n < 0) throw std::invalid_argument("szego_recurse: negative degree");
  if (static_cast<std::size_t>(n) > alpha.length())
    throw std::invalid_argument("szego_recurse: degree exceeds sequence horizon");

  SzegoPolyPair pair;
  const ComplexPoly shift = ComplexPoly::z();
  for (int k = 0; k < n; ++k) {
    const Cplx a = alpha.value(static_cast<std::size_t>(k));
    const double rho2 = 1.0 - std::norm(a);
    if (!(rho2 > 0.0)) {
      std::ostringstream msg;
      msg << "szego_recurse: invalid coefficient |alpha_" << k << "| >= 1";
      throw std::invalid_argument(msg.str());
    }
    const double rho = std::sqrt(rho2);
    ComplexPoly next = (shift * pair.phi - std::conj(a) * pair.phi_star) * Cplx(1.0 / rho);
    pair.phi = std::move(next);
    pair.phi_star = reversed_conjugate(pair.phi, k + 1);
  }
  pair.n = n;
  return pair;
}

BernsteinSzegoMeasure::BernsteinSzegoMeasure(const VerblunskySequence& alpha)
    : pair_(szego_recurse(alpha, static_cast<int>(alpha.length()))) {}

BernsteinSzegoMeasure::BernsteinSzegoMeasure(const VerblunskySequence& alpha, int level)
    : pair_(szego_recurse(alpha, level)) {}

double BernsteinSzegoMeasure::weight(double theta) const {
  return std::exp(log_weight(theta));
}

double BernsteinSzegoMeasure::log_weight(double theta) const {
  return -pair_.phi.log_abs2_on_circle(theta);
}

// ---------------------------------------------------------------------------
// TrigWeight
// ---------------------------------------------------------------------------

TrigWeight::TrigWeight(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (const Factor& f : factors_)
    if (f.multiplicity < 1)
      throw std::invalid_argument("TrigWeight: multiplicities must be >= 1");
}

TrigWeight TrigWeight::z_weight() {
  return TrigWeight({{0.0, 2}, {std::numbers::pi, 1}});
}

TrigWeight TrigWeight::parse(std::string_view text) {
  std::vector<Factor> factors;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string part(text.substr(pos, end - pos));
    double theta = 0.0;
    int m = 0;
    const auto tpos = part.find("theta=");
    const auto mpos = part.find("m=");
    if (tpos == std::string::npos || mpos == std::string::npos)
      throw std::invalid_argument("TrigWeight::parse: expected theta=...,m=... in \"" +
                                  part + "\"");
    std::string tval = part.substr(tpos + 6, part.find(',', tpos) - (tpos + 6));
    if (tval == "pi")
      theta = std::numbers::pi;
    else if (tval == "-pi")
      theta = -std::numbers::pi;
    else
      theta = std::stod(tval);
    m = std::stoi(part.substr(mpos + 2));
    factors.push_back({theta, m});
    pos = end + 1;
  }
  if (factors.empty()) throw std::invalid_argument("TrigWeight::parse: empty spec");
  return TrigWeight(std::move(factors));
}

double TrigWeight::eval(double theta) const {
  double v = 1.0;
  for (const Factor& f : factors_) {
    const double base = 1.0 - std::cos(theta - f.theta);
    double p = 1.0;
    for (int i = 0; i < f.multiplicity; ++i) p *= base;
    v *= p;
  }
  return v;
}

LaurentSeries TrigWeight::laurent() const {
  // 1 - cos(theta - t0) has coefficients c_0 = 1, c_{+-1} = -e^{∓ i t0}/2;
  // the product is a convolution of such three-term factors.
  std::vector<Cplx> acc = {Cplx(1.0)};
  int order = 0;
  for (const Factor& f : factors_) {
    const Cplx cm = -0.5 * std::polar(1.0, f.theta);   // coefficient of e^{-i theta}
    const Cplx cp = -0.5 * std::polar(1.0, -f.theta);  // coefficient of e^{+i theta}
    for (int rep = 0; rep < f.multiplicity; ++rep) {
      std::vector<Cplx> next(acc.size() + 2, Cplx(0.0));
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i] += acc[i] * cm;
        next[i + 1] += acc[i];
        next[i + 2] += acc[i] * cp;
      }
      acc = std::move(next);
      ++order;
    }
  }
  LaurentSeries s;
  s.max_order = order;
  s.coeffs = std::move(acc);
  return s;
}

double TrigWeight::eval_laurent(double theta) const {
  const LaurentSeries s = laurent();
  KahanSum acc;
  for (int m = -s.max_order; m <= s.max_order; ++m)
    acc.add((s.at(m) * std::polar(1.0, m * theta)).real());
  return acc.value();
}

std::string TrigWeight::to_string() const {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ";";
    os << "theta=" << factors_[i].theta << ",m=" << factors_[i].multiplicity;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

namespace {

void check_level(const BernsteinSzegoMeasure& mu) {
  if (mu.level() > kMaxQuadratureLevel)
    throw std::invalid_argument("quadrature: level exceeds supported maximum " +
                                std::to_string(kMaxQuadratureLevel));
}

// Uniform rule over [0, 2pi), fixed summation order for reproducibility.
template <class F>
auto uniform_rule(int nodes, F&& f) {
  const double step = 2.0 * std::numbers::pi / nodes;
  using R = decltype(f(0.0));
  if constexpr (std::is_same_v<R, double>) {
    KahanSum acc;
    for (int j = 0; j < nodes; ++j) acc.add(f(j * step));
    return acc.value() / nodes;
  } else {
    KahanSumC acc;
    for (int j = 0; j < nodes; ++j) acc.add(f(j * step));
    return acc.value() / static_cast<double>(nodes);
  }
}

template <class F>
auto refine_to_tolerance(F&& f, const QuadratureOptions& opts, const char* what) {
  auto prev = uniform_rule(opts.min_nodes, f);
  double err = std::numeric_limits<double>::infinity();
  for (int nodes = opts.min_nodes * 2; nodes <= opts.max_nodes; nodes *= 2) {
    const auto cur = uniform_rule(nodes, f);
    err = std::abs(cur - prev);
    if (err < opts.tol) return cur;
    prev = cur;
  }
  std::ostringstream msg;
  msg << what << ": quadrature did not reach tolerance " << opts.tol << " at "
      << opts.max_nodes << " nodes (achieved " << err << ")";
  throw AccuracyError(msg.str(), err);
}

}  // namespace

Cplx log_moment_quad(const BernsteinSzegoMeasure& mu, int order,
                     const QuadratureOptions& opts) {
  check_level(mu);
  return refine_to_tolerance(
      [&](double theta) {
        return std::polar(1.0, -order * theta) * mu.log_weight(theta);
      },
      opts, "log_moment_quad");
}

double z_quad(const BernsteinSzegoMeasure& mu, const TrigWeight& t,
              const QuadratureOptions& opts) {
  check_level(mu);
  return refine_to_tolerance(
      [&](double theta) { return t.eval(theta) * mu.log_weight(theta); }, opts, "z_quad");
}

}  // namespace szego
