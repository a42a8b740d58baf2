#include <doctest.h>

#include <cmath>
#include <random>

#include "szego/diagnostics.hpp"
#include "szego/opuc.hpp"
#include "szego/random.hpp"
#include "szego/sum_rules.hpp"

using namespace szego;

namespace {

VerblunskySequence random_sequence(std::mt19937_64& rng, std::size_t len, double radius) {
  std::vector<Cplx> values(len);
  for (Cplx& v : values) v = random_in_disk(rng, radius);
  return VerblunskySequence::from_values(std::move(values));
}

constexpr double kZHalf = -0.32092436955922377;  // 1/4 (2 log 3/4 - 1/2 - 1/4 + 1/24)

}  // namespace

TEST_CASE("moments of the zero and empty sequences vanish") {
  for (std::size_t len : {std::size_t{0}, std::size_t{5}}) {
    const VerblunskySequence a =
        VerblunskySequence::from_values(std::vector<Cplx>(len, Cplx(0.0)));
    const MomentSums m = moments_sum(a);
    CHECK(std::abs(m.w0) == 0.0);
    CHECK(std::abs(m.w1) == 0.0);
    CHECK(std::abs(m.w2) == 0.0);
    CHECK(std::abs(m.w3) == 0.0);
  }
}

TEST_CASE("single-coefficient moments in closed form") {
  const Cplx a(0.3, 0.2);
  const MomentSums m = moments_sum(VerblunskySequence::from_values({a}));
  CHECK(std::abs(m.w0 - std::log(1.0 - std::norm(a))) < 1e-15);
  CHECK(std::abs(m.w1 - a) < 1e-15);
  CHECK(std::abs(m.w2 - a * a / 2.0) < 1e-15);
  CHECK(std::abs(m.w3 - a * a * a / 3.0) < 1e-15);
  CHECK(m.w0.real() <= 0.0);
  CHECK(m.w0.imag() == 0.0);
}

TEST_CASE("moment sums match the quadrature oracle") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 8; ++trial) {
    const VerblunskySequence a = random_sequence(rng, 1 + rng() % 6, 0.8);
    const BernsteinSzegoMeasure mu(a);
    const MomentSums m = moments_sum(a);
    CHECK(std::abs(m.w0 - log_moment_quad(mu, 0)) <= 1e-8);
    CHECK(std::abs(m.w1 - log_moment_quad(mu, 1)) <= 1e-8);
    CHECK(std::abs(m.w2 - log_moment_quad(mu, 2)) <= 1e-8);
    CHECK(std::abs(m.w3 - log_moment_quad(mu, 3)) <= 1e-8);
  }
}

TEST_CASE("z_sum golden values") {
  CHECK(z_sum(VerblunskySequence::from_values({})) == 0.0);
  const double z = z_sum(VerblunskySequence::from_values({Cplx(0.5)}));
  CHECK(z == doctest::Approx(kZHalf).epsilon(1e-13));
}

TEST_CASE("z_sum equals the regrouped moment assembly") {
  std::mt19937_64 rng(223);
  for (int trial = 0; trial < 10; ++trial) {
    const VerblunskySequence a = random_sequence(rng, 1 + rng() % 8, 0.9);
    const double zs = z_sum(a);
    const MomentSums m = moments_sum(a);
    const double zm = z_from_moments(m);
    CHECK(std::abs(zs - zm) <= 1e-13 * (1.0 + std::abs(zs)));
    CHECK(m.w0.imag() == 0.0);
    CHECK(m.w0.real() <= 0.0);
  }
  const VerblunskySequence big = VerblunskySequence::corollary(512);
  CHECK(std::abs(z_sum(big) - z_from_moments(moments_sum(big))) <=
        1e-13 * (1.0 + std::abs(z_sum(big))));
}

TEST_CASE("z_sum matches z_quad on the truncated corollary sequence") {
  const VerblunskySequence a = VerblunskySequence::corollary(64);
  const double zs = z_sum(a);
  const double zq = z_quad(BernsteinSzegoMeasure(a), TrigWeight::z_weight());
  CHECK(std::abs(zs - zq) <= 1e-8);
}

TEST_CASE("term table boundary rows of the zero sequence") {
  const VerblunskySequence zero =
      VerblunskySequence::from_values(std::vector<Cplx>(4, Cplx(0.0)));
  const TermTable t = term_table(zero);
  REQUIRE(t.rows.size() == 7);  // N + 3

  CHECK(t.rows[0].G == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(t.rows[1].G == doctest::Approx(-1.0 / 32.0).epsilon(1e-15));
  CHECK(t.rows[2].G == 0.0);
  CHECK(t.rows[1].H.real() == doctest::Approx(-23.0 / 16.0).epsilon(1e-15));
  CHECK(t.rows[1].H.imag() == 0.0);
  CHECK(t.rows[2].E == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(t.rows[0].I.real() == doctest::Approx(-63.0 / 32.0).epsilon(1e-15));
  CHECK(t.rows[1].I.real() == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(t.I_minus1.real() == doctest::Approx(-79.0 / 32.0).epsilon(1e-15));

  for (const TermRow& r : t.rows) {
    CHECK(r.s == 0.0);
    CHECK(r.L == 0.0);
    CHECK(std::abs(r.F) == 0.0);
  }
  // the families cancel against the telescope: Z(Lebesgue) = 0
  KahanSum families;
  for (const TermRow& r : t.rows) families.add(r.L + r.E + r.G + r.H.real() + r.F.real());
  CHECK(std::abs(families.value() - t.I_minus1.real()) < 1e-15);
}

TEST_CASE("fourth difference annihilates interior rows of a constant sequence") {
  const std::size_t n = 10;
  const VerblunskySequence a =
      VerblunskySequence::from_values(std::vector<Cplx>(n, Cplx(0.4, 0.1)));
  const TermTable t = term_table(a);
  for (std::size_t k = 3; k < n; ++k) CHECK(std::abs(t.rows[k].E) < 1e-15);
}

TEST_CASE("two-periodic sequence has the constant interior G value") {
  const std::size_t n = 12;
  std::vector<Cplx> values(n, Cplx(0.0));
  const Cplx a(0.35, 0.2);
  for (std::size_t k = 0; k < n; k += 2) values[k] = a;
  const TermTable t = term_table(VerblunskySequence::from_values(values));
  const double expected = -std::pow(std::abs(2.0 * a), 4.0) / 32.0;
  for (std::size_t k = 2; k < n; k += 2)
    CHECK(t.rows[k].G == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("H is exactly (alpha_k - alpha_{k-2}) J") {
  std::mt19937_64 rng(229);
  for (int trial = 0; trial < 50; ++trial) {
    const AlphaWindow w{random_in_disk(rng, 0.95), random_in_disk(rng, 0.95),
                        random_in_disk(rng, 0.95), random_in_disk(rng, 0.95)};
    CHECK(term_H(w) == (w.a - w.c) * term_J(w));
  }
}

TEST_CASE("sign structure: G <= 0 always, E <= 0 under the rho condition") {
  std::mt19937_64 rng(233);
  for (int trial = 0; trial < 200; ++trial) {
    const AlphaWindow w{random_in_disk(rng, 0.95), random_in_disk(rng, 0.95),
                        random_in_disk(rng, 0.95), random_in_disk(rng, 0.95)};
    CHECK(term_G(w) <= 0.0);
    if (1.0 - std::norm(w.b) - std::norm(w.c) >= 0.0) CHECK(term_E(w) <= 0.0);
  }
}

TEST_CASE("golden evaluation of the long formulas at a fixed tuple") {
  const AlphaWindow w{Cplx(0.31, -0.12), Cplx(-0.27, 0.44), Cplx(0.05, 0.63),
                      Cplx(-0.51, -0.08)};
  CHECK(term_L(w.a) == doctest::Approx(-0.0009812937524945383).epsilon(1e-13));
  CHECK(term_E(w) == doctest::Approx(-0.26950176500000006).epsilon(1e-13));
  CHECK(term_G(w) == doctest::Approx(-0.02801936281250001).epsilon(1e-13));
  const Cplx J = term_J(w);
  CHECK(J.real() == doctest::Approx(-0.23713625000000002).epsilon(1e-13));
  CHECK(J.imag() == doctest::Approx(-0.703648125).epsilon(1e-13));
  const Cplx H = term_H(w);
  CHECK(H.real() == doctest::Approx(-0.58939151875).epsilon(1e-13));
  CHECK(H.imag() == doctest::Approx(-0.005096324999999985).epsilon(1e-11));
  const Cplx F = term_F(w);
  CHECK(F.real() == doctest::Approx(0.012488803860000001).epsilon(1e-13));
  CHECK(F.imag() == doctest::Approx(0.0006438460383333365).epsilon(1e-13));
  const Cplx Ik = term_I(w.a, w.b, w.c);
  CHECK(Ik.real() == doctest::Approx(-0.5313972218750002).epsilon(1e-13));
  CHECK(Ik.imag() == doctest::Approx(-0.03851760000000001).epsilon(1e-13));
  const Cplx Ik1 = term_I(w.b, w.c, w.d);
  CHECK(Ik1.real() == doctest::Approx(-1.0123203284375).epsilon(1e-13));
  CHECK(Ik1.imag() == doctest::Approx(-0.212989035).epsilon(1e-13));
  CHECK(term_s(w) == doctest::Approx(-0.39448202989249453).epsilon(1e-13));
}

TEST_CASE("interior identity: trivial, constant, and random windows") {
  const InteriorIdentityCheck zero = identity_check_interior(100, 0.0, 1);
  CHECK(zero.max_abs_residual == 0.0);

  // constant tuple: the E term vanishes and the identity still holds
  std::mt19937_64 rng(239);
  for (int trial = 0; trial < 20; ++trial) {
    const Cplx v = random_in_disk(rng, 0.9);
    const AlphaWindow w{v, v, v, v};
    CHECK(term_E(w) == 0.0);
    const double rhs = term_L(w.a) + term_E(w) + term_G(w) +
                       (term_H(w) + term_F(w) + term_I(w.a, w.b, w.c) -
                        term_I(w.b, w.c, w.d))
                           .real();
    CHECK(std::abs(term_s(w) - rhs) < 1e-13);
  }

  const InteriorIdentityCheck c = identity_check_interior(10'000, 0.9);
  CHECK(c.max_rel_residual <= 1e-12);
  CHECK(c.draws == 10'000);

  CHECK_THROWS_AS(identity_check_interior(10, 1.0), std::invalid_argument);
}

TEST_CASE("boundary reconciliation selects the frozen convention") {
  // alpha = 0: Z(Lebesgue) = 0
  const VerblunskySequence zero =
      VerblunskySequence::from_values(std::vector<Cplx>(4, Cplx(0.0)));
  const BoundaryReport r0 = boundary_reconcile(zero);
  CHECK(r0.selected == kFrozenConvention);
  CHECK(r0.selected_is_frozen_default);
  CHECK(std::abs(r0.z_reference) < 1e-9);
  for (const BoundaryCandidate& cand : r0.candidates)
    if (cand.convention == kFrozenConvention) CHECK(cand.residual <= 1e-8);

  // alpha = (1/2): the golden Z value, and the no-telescope candidate misses
  const VerblunskySequence half = VerblunskySequence::from_values({Cplx(0.5)});
  const BoundaryReport rh = boundary_reconcile(half);
  CHECK(rh.selected == kFrozenConvention);
  for (const BoundaryCandidate& cand : rh.candidates) {
    if (cand.convention == kFrozenConvention) {
      CHECK(cand.matches);
      CHECK(cand.value == doctest::Approx(kZHalf).epsilon(1e-8));
    }
    if (cand.convention == BoundaryConvention::FullRowsNoTelescope) CHECK(!cand.matches);
  }

  std::mt19937_64 rng(241);
  for (int trial = 0; trial < 5; ++trial) {
    const VerblunskySequence a = random_sequence(rng, 6, 0.8);
    const BoundaryReport r = boundary_reconcile(a);
    CHECK(r.selected == kFrozenConvention);
    CHECK(r.selected_is_frozen_default);
  }
}

TEST_CASE("reconciliation failure reports per-candidate residuals") {
  const VerblunskySequence half = VerblunskySequence::from_values({Cplx(0.5)});
  try {
    boundary_reconcile(half, -1.0);  // unattainable tolerance
    FAIL("expected ReconciliationError");
  } catch (const ReconciliationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("full-rows+telescope") != std::string::npos);
    CHECK(msg.find("residual") != std::string::npos);
  }
}

TEST_CASE("family sum under the frozen convention equals z_sum") {
  std::mt19937_64 rng(251);
  for (int trial = 0; trial < 10; ++trial) {
    const VerblunskySequence a = random_sequence(rng, 1 + rng() % 8, 0.9);
    CHECK(std::abs(z_families(a) - z_sum(a)) <= 1e-12 * (1.0 + std::abs(z_sum(a))));
  }
}

TEST_CASE("lemma bounds: the |alpha| = 1/2 edge and the zero sequence") {
  const double L = term_L(Cplx(0.5));
  CHECK(std::abs(L) == doctest::Approx(0.012864144903561803).epsilon(1e-12));
  CHECK(std::abs(L) <= (8.0 / 9.0) * std::pow(0.5, 6.0));

  const VerblunskySequence zero =
      VerblunskySequence::from_values(std::vector<Cplx>(4, Cplx(0.0)));
  const Lemma31Report rep = lemma31_bounds(zero);
  CHECK(rep.L_bound_ok);
  CHECK(rep.E_bound_ok);
  CHECK(rep.total_L == 0.0);
  // the boundary rows leave |E_2| = 1/2 and |H_1| = 23/16 in the l1 sums
  CHECK(rep.total_E == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rep.total_H == doctest::Approx(23.0 / 16.0).epsilon(1e-15));
  CHECK(rep.total_F == 0.0);
}

TEST_CASE("lemma bound holds across random and corollary sequences") {
  std::mt19937_64 rng(257);
  for (int trial = 0; trial < 10; ++trial) {
    const Lemma31Report rep = lemma31_bounds(random_sequence(rng, 1 + rng() % 8, 0.9));
    CHECK(rep.L_bound_ok);
    CHECK(rep.E_bound_ok);
  }
  const Lemma31Report rep = lemma31_bounds(VerblunskySequence::corollary(100'000));
  CHECK(rep.L_bound_ok);
  CHECK(rep.L_bound_max_ratio <= 1.0);
  CHECK(rep.E_bound_ok);
}

TEST_CASE("corollary mechanism: summable families vs divergent G") {
  const std::size_t n = 100'000;
  const VerblunskySequence a = VerblunskySequence::corollary(n);
  const std::vector<std::size_t> horizons = dyadic_horizons(64, n);

  const Lemma31Report fam = lemma31_bounds(a, horizons);
  const auto diag = [&](const std::vector<double>& sums) {
    std::vector<PartialNorm> pn(horizons.size());
    for (std::size_t i = 0; i < horizons.size(); ++i) pn[i] = {horizons[i], sums[i]};
    return diagnose_partial_sums(pn, 1.0).verdict;
  };
  CHECK(diag(fam.l1_L) == LpVerdict::Converged);
  CHECK(diag(fam.l1_E) == LpVerdict::Converged);
  CHECK(diag(fam.l1_H) == LpVerdict::Converged);
  CHECK(diag(fam.l1_F) == LpVerdict::Converged);

  const std::vector<double> gsums = g_sum_prefixes(a, horizons);
  std::vector<PartialNorm> neg(horizons.size());
  for (std::size_t i = 0; i < horizons.size(); ++i) neg[i] = {horizons[i], -gsums[i]};
  const LpDiagnostics dg = diagnose_partial_sums(neg, 4.0);
  CHECK(dg.verdict == LpVerdict::LogDivergent);
  CHECK(dg.log_fit.slope == doctest::Approx(8.0 / 81.0).epsilon(0.25));

  // Z(mu_N) - (1/4) sum G_k stays bounded while the G sum diverges
  const std::vector<double> zpref = z_sum_prefixes(a, horizons);
  for (std::size_t i = horizons.size() / 2; i < horizons.size(); ++i) {
    const double r_i = zpref[i] - 0.25 * gsums[i];
    const double r_last = zpref.back() - 0.25 * gsums.back();
    CHECK(std::abs(r_i - r_last) < 0.05);
  }
}

TEST_CASE("prefix scans validate their horizons") {
  const VerblunskySequence a = VerblunskySequence::corollary(16);
  const std::vector<std::size_t> bad = {4, 4, 8};
  CHECK_THROWS_AS(z_sum_prefixes(a, bad), std::invalid_argument);
  const std::vector<std::size_t> beyond = {4, 8, 64};
  CHECK_THROWS_AS(g_sum_prefixes(a, beyond), std::invalid_argument);
}
