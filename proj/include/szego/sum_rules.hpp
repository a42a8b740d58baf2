#ifndef SZEGO_SUM_RULES_HPP
#define SZEGO_SUM_RULES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "szego/sequence.hpp"
#include "szego/types.hpp"

namespace szego {

// Moments of log w as sums over Verblunsky coefficients, partial at the
// sequence horizon. w0 is real and nonpositive.
struct MomentSums {
  Cplx w0, w1, w2, w3;
};

MomentSums moments_sum(const VerblunskySequence& alpha);

// (1/4) Re(2 w0 - w1 - 2 w2 + w3).
double z_from_moments(const MomentSums& m);

// Window (alpha_k, alpha_{k-1}, alpha_{k-2}, alpha_{k-3}) feeding one row of
// the term families.
struct AlphaWindow {
  Cplx a, b, c, d;
};

// The term families. L, E, G are real by construction; H = (a - c) J.
double term_L(Cplx a);
double term_E(const AlphaWindow& w);
double term_G(const AlphaWindow& w);
Cplx term_J(const AlphaWindow& w);
Cplx term_H(const AlphaWindow& w);
Cplx term_F(const AlphaWindow& w);
Cplx term_I(Cplx a, Cplx b, Cplx c);
// The raw summand of the Z series (real).
double term_s(const AlphaWindow& w);

struct TermRow {
  double L, E, G, s;
  Cplx J, H, F, I;
};

TermRow term_row(const AlphaWindow& w);

// Per-index table of all families for rows k = 0 .. N+2 (every later row is
// identically zero for a horizon-N sequence). I_minus1 is the telescoped
// boundary value of the I family at k = -1.
struct TermTable {
  std::size_t horizon = 0;
  std::vector<TermRow> rows;
  Cplx I_minus1;
};

TermTable term_table(const VerblunskySequence& alpha);
AlphaWindow window_at(const VerblunskySequence& alpha, std::int64_t k);

// Z of the Bernstein-Szego measure as (1/4) sum_k s_k over k >= 0 with the
// extended index conventions. Agrees with z_from_moments(moments_sum(.))
// identically up to regrouped roundoff and with z_quad to quadrature
// tolerance.
double z_sum(const VerblunskySequence& alpha);
// Prefix values (1/4) sum_{k < H} s_k, i.e. z_sum of the truncation at H.
std::vector<double> z_sum_prefixes(const VerblunskySequence& alpha,
                                   std::span<const std::size_t> horizons);
// Prefix sums sum_{k < H} Re G_k.
std::vector<double> g_sum_prefixes(const VerblunskySequence& alpha,
                                   std::span<const std::size_t> horizons);

// Numerical verification of the termwise regrouping identity
// s_k = Re(L + E + G + H + F + I_k - I_{k-1}) on random interior windows.
struct InteriorIdentityCheck {
  std::size_t draws = 0;
  double radius = 0.0;
  std::uint64_t seed = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;  // relative to the row's term scale
  AlphaWindow worst{};
};

InteriorIdentityCheck identity_check_interior(std::size_t draws, double radius,
                                              std::uint64_t seed = 20240901);

// Candidate boundary conventions for summing the families of the regrouped
// series. Rows means the k = 0, 1, 2 rows (which mix in alpha_{-1} = -1);
// the telescope term is the residue -I at the lower summation edge.
enum class BoundaryConvention {
  FullRowsWithTelescope,      // rows k >= 0 plus -I_{-1}
  FullRowsNoTelescope,        // rows k >= 0, telescope dropped
  InteriorRowsWithTelescope,  // rows k >= 3 plus -I_2
  InteriorRowsNoTelescope,    // rows k >= 3
};

std::string_view to_string(BoundaryConvention c);

// Frozen module default, fixed by boundary_reconcile against the quadrature
// oracle: the termwise identity holds at boundary rows as well, so all rows
// are kept and the telescope contributes -I_{-1} = +79/32.
inline constexpr BoundaryConvention kFrozenConvention =
    BoundaryConvention::FullRowsWithTelescope;

// (1/4)[sum of Re(L+E+G+H+F) rows + telescope] under a convention.
double z_families(const VerblunskySequence& alpha,
                  BoundaryConvention convention = kFrozenConvention);

struct BoundaryCandidate {
  BoundaryConvention convention;
  double value = 0.0;
  double residual = 0.0;
  bool matches = false;
};

struct BoundaryReport {
  double z_reference = 0.0;  // z_quad with the Z weight
  double tolerance = 0.0;
  std::vector<BoundaryCandidate> candidates;
  BoundaryConvention selected = kFrozenConvention;
  bool selected_is_frozen_default = false;
};

// Evaluates every candidate against z_quad and reports which ones reproduce
// it; throws ReconciliationError (with per-candidate residuals in the
// message) when none does.
BoundaryReport boundary_reconcile(const VerblunskySequence& alpha, double tol = 1e-8,
                                  double quad_tol = 1e-11);

// Partial l1 norms of the summable families plus the pointwise bounds
// |L_k| <= (8/9)|alpha_k|^6 for |alpha_k| <= 1/2 and
// |E_k| <= (1/2)|alpha_k - alpha_{k-1} - alpha_{k-2} + alpha_{k-3}|^2.
struct Lemma31Report {
  std::vector<std::size_t> checkpoints;  // row counts
  std::vector<double> l1_L, l1_E, l1_H, l1_F;
  double total_L = 0.0, total_E = 0.0, total_H = 0.0, total_F = 0.0;
  bool L_bound_ok = true;
  double L_bound_max_ratio = 0.0;  // max |L_k| / ((8/9)|alpha_k|^6)
  bool E_bound_ok = true;
  double E_bound_max_ratio = 0.0;
  std::size_t rows = 0;
};

Lemma31Report lemma31_bounds(const VerblunskySequence& alpha,
                             std::span<const std::size_t> checkpoints = {});

}  // namespace szego

#endif  // SZEGO_SUM_RULES_HPP
