#include "szego/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace szego {

namespace {

double max_abs(std::span<const Cplx> cs) {
  double m = 0.0;
  for (const Cplx& c : cs) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

void ComplexPoly::assign(std::vector<Cplx> coeffs, double scale) {
  coeffs_ = std::move(coeffs);
  trim(scale);
}

void ComplexPoly::trim(double scale) {
  const double mag = std::max(scale, max_abs(coeffs_));
  const double cut = kPolyEps * mag;
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cut) coeffs_.pop_back();
}

ComplexPoly ComplexPoly::circle_root(double theta, int multiplicity) {
  if (multiplicity < 1) throw std::invalid_argument("circle_root: multiplicity must be >= 1");
  return from_root(std::polar(1.0, -theta)).pow(multiplicity);
}

double ComplexPoly::max_abs_coeff() const { return max_abs(coeffs_); }

Cplx ComplexPoly::eval(Cplx x) const {
  Cplx v(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

double ComplexPoly::log_abs2_on_circle(double theta) const {
  if (coeffs_.empty()) return -std::numeric_limits<double>::infinity();
  const double scale = max_abs(coeffs_);
  const Cplx x = std::polar(1.0, theta);
  Cplx v(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it / scale;
  return 2.0 * (std::log(std::abs(v)) + std::log(scale));
}

ComplexPoly ComplexPoly::monic() const {
  if (is_zero()) throw std::invalid_argument("monic: zero polynomial");
  ComplexPoly r = *this;
  const Cplx lead = r.coeffs_.back();
  for (Cplx& c : r.coeffs_) c /= lead;
  return r;
}

ComplexPoly ComplexPoly::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  ComplexPoly result = one();
  ComplexPoly base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

ComplexPoly ComplexPoly::operator-() const {
  ComplexPoly r = *this;
  for (Cplx& c : r.coeffs_) c = -c;
  return r;
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& rhs) {
  const double scale = std::max(max_abs(coeffs_), max_abs(rhs.coeffs_));
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Cplx(0.0));
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim(scale);
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& rhs) {
  const double scale = std::max(max_abs(coeffs_), max_abs(rhs.coeffs_));
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Cplx(0.0));
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  trim(scale);
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(const ComplexPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Cplx> out(coeffs_.size() + rhs.coeffs_.size() - 1, Cplx(0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  trim(0.0);
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(Cplx scalar) {
  if (scalar == Cplx(0.0)) {
    coeffs_.clear();
    return *this;
  }
  for (Cplx& c : coeffs_) c *= scalar;
  return *this;
}

std::pair<ComplexPoly, ComplexPoly> ComplexPoly::divmod(const ComplexPoly& a,
                                                        const ComplexPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  const double scale = std::max(max_abs(a.coeffs_), max_abs(b.coeffs_));
  if (a.degree() < b.degree()) return {zero(), a};
  std::vector<Cplx> rem(a.coeffs_);
  std::vector<Cplx> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Cplx(0.0));
  const Cplx lead = b.coeffs_.back();
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Cplx q = rem[i + db] / lead;
    quot[i] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeffs_[j];
  }
  rem.resize(db);  // deg r < deg b
  ComplexPoly qp, rp;
  qp.assign(std::move(quot), scale);
  rp.assign(std::move(rem), scale);
  return {std::move(qp), std::move(rp)};
}

double sup_coeff_dist(const ComplexPoly& a, const ComplexPoly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  double m = 0.0;
  for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::abs(a.coeff(j) - b.coeff(j)));
  return m;
}

ExtendedGcd extended_gcd(const ComplexPoly& a, const ComplexPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("extended_gcd: both inputs are zero");

  ComplexPoly r0 = a, r1 = b;
  ComplexPoly s0 = ComplexPoly::one(), s1 = ComplexPoly::zero();
  ComplexPoly t0 = ComplexPoly::zero(), t1 = ComplexPoly::one();
  const double scale = std::max({a.max_abs_coeff(), b.max_abs_coeff(), 1.0});

  while (!r1.is_zero()) {
    auto [q, r2] = ComplexPoly::divmod(r0, r1);
    r2.trim(scale);
    r0 = std::move(r1);
    r1 = std::move(r2);
    ComplexPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ComplexPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }

  const Cplx lead = r0.leading();
  ExtendedGcd out;
  out.g = r0 * (Cplx(1.0) / lead);
  out.s = s0 * (Cplx(1.0) / lead);
  out.t = t0 * (Cplx(1.0) / lead);

  // Reduced representative: s mod (b/g), then t recovered exactly from the
  // identity so the degree bounds deg s < deg b - deg g, deg t < deg a - deg g
  // hold.
  if (!b.is_zero()) {
    auto [bg, bg_rem] = ComplexPoly::divmod(b, out.g);
    (void)bg_rem;
    if (bg.degree() >= 0 && out.s.degree() >= bg.degree()) {
      auto [q, s_red] = ComplexPoly::divmod(out.s, bg);
      (void)q;
      out.s = std::move(s_red);
      auto [t_new, t_rem] = ComplexPoly::divmod(out.g - out.s * a, b);
      (void)t_rem;
      out.t = std::move(t_new);
    }
  }
  out.residual = sup_coeff_dist(out.s * a + out.t * b, out.g);
  return out;
}

BezoutSystem bezout_system(std::span<const ComplexPoly> ps) {
  if (ps.empty()) throw std::invalid_argument("bezout_system: empty polynomial list");
  for (std::size_t j = 0; j < ps.size(); ++j)
    if (ps[j].is_zero())
      throw std::invalid_argument("bezout_system: P_" + std::to_string(j + 1) + " is zero");

  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (extended_gcd(ps[i], ps[j]).g.degree() != 0) {
        std::ostringstream msg;
        msg << "bezout_system: P_" << (i + 1) << " = " << ps[i].to_string() << " and P_"
            << (j + 1) << " = " << ps[j].to_string() << " are not coprime";
        throw CoprimalityError(i, j, msg.str());
      }
    }
  }

  BezoutSystem out;
  if (ps.size() == 1) {
    // sum_j U_j prod_{i!=j} P_i degenerates to U_1 * (empty product) = U_1.
    out.cofactors = {ComplexPoly::one()};
    out.residual = bezout_residual(ps, out.cofactors);
    return out;
  }

  // Induction on l: extend cofactors for {P_1..P_m} to {P_1..P_{m+1}} via
  // s*(P_1...P_m) + t*P_{m+1} = 1, replacing U_j by t*U_j and appending s.
  ExtendedGcd eg = extended_gcd(ps[0], ps[1]);
  std::vector<ComplexPoly> cof = {eg.t, eg.s};
  ComplexPoly prod = ps[0] * ps[1];
  for (std::size_t m = 2; m < ps.size(); ++m) {
    ExtendedGcd step = extended_gcd(prod, ps[m]);
    for (ComplexPoly& u : cof) u *= step.t;
    cof.push_back(step.s);
    prod *= ps[m];
  }

  // Canonical representative: U_j mod P_j, then repair the last cofactor so
  // the identity holds exactly again.
  for (std::size_t j = 0; j < cof.size(); ++j) {
    if (ps[j].degree() >= 1 && cof[j].degree() >= ps[j].degree())
      cof[j] = ComplexPoly::divmod(cof[j], ps[j]).second;
  }
  {
    const std::size_t last = cof.size() - 1;
    ComplexPoly acc = ComplexPoly::one();
    for (std::size_t j = 0; j < last; ++j) {
      ComplexPoly term = cof[j];
      for (std::size_t i = 0; i < ps.size(); ++i)
        if (i != j) term *= ps[i];
      acc -= term;
    }
    ComplexPoly denom = ComplexPoly::one();
    for (std::size_t i = 0; i < last; ++i) denom *= ps[i];
    cof[last] = ComplexPoly::divmod(acc, denom).first;
  }

  out.cofactors = std::move(cof);
  out.residual = bezout_residual(ps, out.cofactors);
  return out;
}

double bezout_residual(std::span<const ComplexPoly> ps,
                       std::span<const ComplexPoly> cofactors) {
  ComplexPoly acc;
  for (std::size_t j = 0; j < cofactors.size(); ++j) {
    ComplexPoly term = cofactors[j];
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (i != j) term *= ps[i];
    acc += term;
  }
  return sup_coeff_dist(acc, ComplexPoly::one());
}

// ---------------------------------------------------------------------------
// Parser for the CLI polynomial syntax.
//
//   poly    := factor ('*' factor)*
//   factor  := primary ('^' uint)?
//   primary := '(' sum ')' | sum-without-parens | 'root:theta=<angle>,m=<uint>'
//   sum     := term (('+'|'-') term)*
//   term    := number? ('i')? ('z' ('^' uint)?)?
//   angle   := float | 'pi' | float '*' 'pi' is not supported; "pi" alone is.
// ---------------------------------------------------------------------------
namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  ComplexPoly parse() {
    ComplexPoly result = parse_factor();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      result *= parse_factor();
      skip_ws();
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse_poly: " + why + " at position " +
                                std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view kw) {
    if (text_.substr(pos_, kw.size()) == kw) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  unsigned parse_uint() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    unsigned v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (text_[pos_++] - '0');
    return v;
  }

  double parse_number() {
    skip_ws();
    std::size_t i = pos_;
    if (peek() == '+' || peek() == '-') ++i;
    std::size_t digits = i;
    while (i < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[i])) || text_[i] == '.'))
      ++i;
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      i = j;
    }
    if (i == digits) fail("expected number");
    const double v = std::stod(std::string(text_.substr(pos_, i - pos_)));
    pos_ = i;
    return v;
  }

  double parse_angle() {
    skip_ws();
    if (consume("pi")) return std::numbers::pi;
    if (consume("-pi")) return -std::numbers::pi;
    return parse_number();
  }

  ComplexPoly parse_factor() {
    skip_ws();
    if (consume("root:")) {
      if (!consume("theta=")) fail("expected theta= after root:");
      const double theta = parse_angle();
      skip_ws();
      if (!consume(",m=") && !(consume(","), consume("m="))) fail("expected ,m=");
      const unsigned m = parse_uint();
      return ComplexPoly::circle_root(theta, static_cast<int>(m));
    }
    ComplexPoly base;
    if (peek() == '(') {
      ++pos_;
      base = parse_sum(')');
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else {
      base = parse_sum('*');
    }
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      const unsigned e = parse_uint();
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  // Sum of terms; stops at `stop`, '*' following a complete term, or ')'.
  ComplexPoly parse_sum(char stop) {
    ComplexPoly acc;
    bool first = true;
    for (;;) {
      skip_ws();
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1.0 : 1.0;
        ++pos_;
      } else if (!first) {
        break;
      }
      acc += parse_term(sign);
      first = false;
      skip_ws();
      if (peek() == stop || peek() == ')' || peek() == '*' || peek() == '^' ||
          pos_ == text_.size())
        break;
    }
    if (first) fail("expected polynomial term");
    return acc;
  }

  ComplexPoly parse_term(double sign) {
    skip_ws();
    Cplx coef(sign, 0.0);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      coef *= parse_number();
      have_coef = true;
    }
    if (peek() == 'i' &&
        (pos_ + 1 == text_.size() ||
         !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      coef *= Cplx(0.0, 1.0);
      have_coef = true;
    }
    skip_ws();
    unsigned power = 0;
    if (peek() == 'z') {
      ++pos_;
      power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        power = parse_uint();
      }
    } else if (!have_coef) {
      fail("expected coefficient or z");
    }
    std::vector<Cplx> cs(power + 1, Cplx(0.0));
    cs[power] = coef;
    return ComplexPoly(std::move(cs));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_real(std::ostringstream& os, double v) {
  if (v == static_cast<long long>(v) && std::abs(v) < 1e15)
    os << static_cast<long long>(v);
  else
    os << v;
}

}  // namespace

ComplexPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string ComplexPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const Cplx c = coeffs_[j];
    if (c == Cplx(0.0)) continue;
    const bool pure_real = c.imag() == 0.0;
    double lead_val = pure_real ? c.real() : 0.0;
    if (!first) os << (pure_real && lead_val < 0 ? " - " : " + ");
    if (pure_real) {
      const double mag = first ? lead_val : std::abs(lead_val);
      if (std::abs(mag) != 1.0 || j == 0) {
        append_real(os, mag);
        if (j > 0) os << "*";
      } else if (mag < 0.0) {
        os << "-";
      }
    } else {
      os << "(";
      append_real(os, c.real());
      os << (c.imag() < 0 ? "-" : "+");
      append_real(os, std::abs(c.imag()));
      os << "i)";
      if (j > 0) os << "*";
    }
    if (j >= 1) os << "z";
    if (j >= 2) os << "^" << j;
    first = false;
  }
  return os.str();
}

}  // namespace szego
