// Command-line front end: every operation of the toolkit with file-based
// input/output. Exit codes: 0 success, 2 validation error, 3 numerical
// tolerance failure.

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "szego/experiments.hpp"
#include "szego/io_json.hpp"
#include "szego/opuc.hpp"

using nlohmann::json;
using namespace szego;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --seq accepts inline JSON (leading '{') or a file path.
VerblunskySequence load_sequence(const std::string& spec) {
  const std::string text = (!spec.empty() && spec.front() == '{') ? spec : read_file(spec);
  return sequence_from_json(json::parse(text));
}

std::vector<std::size_t> parse_size_list(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(static_cast<std::size_t>(std::stoull(tok)));
  }
  if (out.empty()) throw std::invalid_argument("empty list: " + csv);
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  return out;
}

double parse_angle(const std::string& s) {
  if (s == "pi") return std::numbers::pi;
  if (s == "-pi") return -std::numbers::pi;
  return std::stod(s);
}

struct Emitter {
  std::string format = "json";
  std::string out_path;
  json config;

  void write(const std::string& payload) const {
    if (out_path.empty()) {
      std::cout << payload;
      if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::invalid_argument("cannot write file: " + out_path);
      out << payload;
    }
  }

  // Every run echoes its fully resolved config for reproducibility.
  void emit_json(const json& result) const {
    write(json{{"config", config}, {"result", result}}.dump(2));
  }
  void emit_csv(const std::string& csv) const {
    write("# config: " + config.dump() + "\n" + csv);
  }
  void emit_text(const std::string& text) const {
    write("# config: " + config.dump() + "\n" + text);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order Szego functionals from Verblunsky coefficients"};
  app.require_subcommand(1);

  std::string seq_spec, poly_single, weight_spec = "theta=0,m=2;theta=pi,m=1";
  std::vector<std::string> poly_specs;
  std::string horizons_csv, checkpoints_csv, p_csv, out_path, format = "json";
  std::string theta_csv;
  double quad_tol = 1e-11, p_value = 2.0, radius = 0.9, tol = 1e-12;
  std::size_t truncate = 0, draws = 10'000, count = 100, max_len = 6, grid = 0;
  std::uint64_t seed = 20240901;

  auto* recurse = app.add_subcommand("recurse", "Szego recursion: phi_n and phi_n^*");
  recurse->add_option("--seq", seq_spec, "sequence JSON (inline or file)")->required();
  recurse->add_option("--truncate", truncate, "degree n (default: horizon)");
  recurse->add_option("--out", out_path);
  recurse->add_option("--format", format);

  auto* weight = app.add_subcommand("weight", "Bernstein-Szego weight 1/|phi_n|^2");
  weight->add_option("--seq", seq_spec)->required();
  weight->add_option("--truncate", truncate);
  weight->add_option("--theta", theta_csv, "comma list of angles (pi accepted)");
  weight->add_option("--grid", grid, "evaluate on a uniform grid of this size");
  weight->add_option("--out", out_path);
  weight->add_option("--format", format);

  auto* moments = app.add_subcommand("moments", "moments w0..w3 of log w as coefficient sums");
  moments->add_option("--seq", seq_spec)->required();
  bool check_quad = false;
  moments->add_flag("--check-quad", check_quad, "also compare against quadrature");
  moments->add_option("--quad-tol", quad_tol);
  moments->add_option("--out", out_path);
  moments->add_option("--format", format);

  auto* zsum = app.add_subcommand("zsum", "Z via the coefficient sum rule");
  zsum->add_option("--seq", seq_spec)->required();
  zsum->add_option("--out", out_path);
  zsum->add_option("--format", format);

  auto* zquad = app.add_subcommand("zquad", "Z via direct quadrature");
  zquad->add_option("--seq", seq_spec)->required();
  zquad->add_option("--weight", weight_spec, "trig weight, e.g. theta=0,m=2;theta=pi,m=1");
  zquad->add_option("--quad-tol", quad_tol);
  zquad->add_option("--out", out_path);
  zquad->add_option("--format", format);

  auto* terms = app.add_subcommand("terms", "per-index table of the term families");
  terms->add_option("--seq", seq_spec)->required();
  terms->add_option("--checkpoints", checkpoints_csv,
                    "row counts at which to expose family partial sums, e.g. 10,100,1000");
  terms->add_option("--out", out_path);
  terms->add_option("--format", format, "json|csv");

  auto* idcheck = app.add_subcommand("identity-check", "termwise regrouping identity residual");
  idcheck->add_option("--draws", draws);
  idcheck->add_option("--radius", radius);
  idcheck->add_option("--seed", seed);
  idcheck->add_option("--tol", tol, "exit 3 when the max residual exceeds this");
  idcheck->add_option("--out", out_path);
  idcheck->add_option("--format", format);

  auto* reconcile = app.add_subcommand("reconcile", "select the boundary convention against z_quad");
  reconcile->add_option("--seq", seq_spec)->required();
  double rec_tol = 1e-8;
  reconcile->add_option("--tol", rec_tol);
  reconcile->add_option("--quad-tol", quad_tol);
  reconcile->add_option("--out", out_path);
  reconcile->add_option("--format", format);

  auto* decomp = app.add_subcommand("decompose", "Bezout decomposition across coprime polynomials");
  decomp->add_option("--seq", seq_spec)->required();
  decomp->add_option("--poly", poly_specs, "polynomial factor (repeatable)")->required();
  decomp->add_option("--p", p_csv, "per-component exponents, e.g. 6,4");
  decomp->add_option("--horizons", horizons_csv);
  decomp->add_option("--out", out_path);
  decomp->add_option("--format", format);

  auto* lp = app.add_subcommand("lp", "lp partial-norm diagnostics");
  lp->add_option("--seq", seq_spec)->required();
  lp->add_option("--poly", poly_single, "apply this shift polynomial first");
  lp->add_option("--p", p_value)->required();
  lp->add_option("--horizons", horizons_csv);
  lp->add_option("--out", out_path);
  lp->add_option("--format", format);

  auto* corollary = app.add_subcommand("corollary", "the counterexample scenario");
  corollary->add_option("--horizons", horizons_csv);
  corollary->add_option("--out", out_path);
  corollary->add_option("--format", format, "json|text");

  auto* sweep = app.add_subcommand("sweep", "bulk oracle cross-validation");
  sweep->add_option("--count", count);
  sweep->add_option("--max-len", max_len);
  sweep->add_option("--radius", radius);
  sweep->add_option("--seed", seed);
  sweep->add_option("--out", out_path);
  sweep->add_option("--format", format, "json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Emitter em;
  em.format = format;
  em.out_path = out_path;

  const auto emit_report = [&](const ScenarioReport& rep) {
    if (format == "text")
      em.emit_text(rep.to_text());
    else
      em.emit_json(rep.to_json());
    return rep.passed() ? 0 : 3;
  };

  try {
    if (*recurse) {
      const VerblunskySequence a = load_sequence(seq_spec);
      const std::size_t n = truncate == 0 ? a.length() : truncate;
      em.config = {{"subcommand", "recurse"}, {"seq", sequence_to_json(a)}, {"truncate", n}};
      const SzegoPolyPair pair = szego_recurse(a, static_cast<int>(n));
      em.emit_json({{"n", pair.n},
                    {"phi", poly_to_json(pair.phi)},
                    {"phi_star", poly_to_json(pair.phi_star)}});
    } else if (*weight) {
      const VerblunskySequence a = load_sequence(seq_spec);
      const std::size_t n = truncate == 0 ? a.length() : truncate;
      em.config = {{"subcommand", "weight"},
                   {"seq", sequence_to_json(a)},
                   {"truncate", n},
                   {"grid", grid},
                   {"theta", theta_csv}};
      const BernsteinSzegoMeasure mu(a, static_cast<int>(n));
      json points = json::array();
      if (grid > 0) {
        for (std::size_t j = 0; j < grid; ++j) {
          const double th = 2.0 * std::numbers::pi * static_cast<double>(j) /
                            static_cast<double>(grid);
          points.push_back({{"theta", th}, {"weight", mu.weight(th)}});
        }
      }
      if (!theta_csv.empty()) {
        std::stringstream ss(theta_csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) {
            const double th = parse_angle(tok);
            points.push_back({{"theta", th}, {"weight", mu.weight(th)}});
          }
      }
      if (points.empty()) points.push_back({{"theta", 0.0}, {"weight", mu.weight(0.0)}});
      em.emit_json({{"level", mu.level()}, {"points", points}});
    } else if (*moments) {
      const VerblunskySequence a = load_sequence(seq_spec);
      em.config = {{"subcommand", "moments"},
                   {"seq", sequence_to_json(a)},
                   {"check_quad", check_quad},
                   {"quad_tol", quad_tol}};
      const MomentSums m = moments_sum(a);
      json result = moments_to_json(m);
      if (check_quad) {
        const BernsteinSzegoMeasure mu(a);
        QuadratureOptions opts;
        opts.tol = quad_tol;
        double worst = 0.0;
        json quads = json::array();
        const Cplx ws[4] = {m.w0, m.w1, m.w2, m.w3};
        for (int order = 0; order <= 3; ++order) {
          const Cplx q = log_moment_quad(mu, order, opts);
          worst = std::max(worst, std::abs(q - ws[order]));
          quads.push_back(complex_to_json(q));
        }
        result["quad"] = quads;
        result["max_diff_vs_quad"] = worst;
      }
      if (format == "csv") {
        std::ostringstream os;
        os.precision(17);
        os << "m,re,im\n";
        const Cplx ws[4] = {m.w0, m.w1, m.w2, m.w3};
        for (int order = 0; order <= 3; ++order)
          os << order << ',' << ws[order].real() << ',' << ws[order].imag() << '\n';
        em.emit_csv(os.str());
      } else {
        em.emit_json(result);
      }
    } else if (*zsum) {
      const VerblunskySequence a = load_sequence(seq_spec);
      em.config = {{"subcommand", "zsum"}, {"seq", sequence_to_json(a)}};
      const MomentSums m = moments_sum(a);
      em.emit_json({{"z_sum", z_sum(a)}, {"z_from_moments", z_from_moments(m)}});
    } else if (*zquad) {
      const VerblunskySequence a = load_sequence(seq_spec);
      const TrigWeight w = TrigWeight::parse(weight_spec);
      em.config = {{"subcommand", "zquad"},
                   {"seq", sequence_to_json(a)},
                   {"weight", w.to_string()},
                   {"quad_tol", quad_tol}};
      QuadratureOptions opts;
      opts.tol = quad_tol;
      em.emit_json({{"z_quad", z_quad(BernsteinSzegoMeasure(a), w, opts)}});
    } else if (*terms) {
      const VerblunskySequence a = load_sequence(seq_spec);
      std::vector<std::size_t> cps;
      if (!checkpoints_csv.empty()) cps = parse_size_list(checkpoints_csv);
      em.config = {{"subcommand", "terms"},
                   {"seq", sequence_to_json(a)},
                   {"checkpoints", cps}};
      const TermTable t = term_table(a);
      json partials;
      std::string partial_csv;
      if (!cps.empty()) {
        const Lemma31Report fam = lemma31_bounds(a, cps);
        const std::vector<double> g = g_sum_prefixes(a, cps);
        const std::vector<double> zp = z_sum_prefixes(a, cps);
        partials = {{"checkpoints", cps}, {"l1_L", fam.l1_L},   {"l1_E", fam.l1_E},
                    {"l1_H", fam.l1_H},   {"l1_F", fam.l1_F},   {"sum_G", g},
                    {"z_prefix", zp}};
        std::ostringstream os;
        os.precision(17);
        os << "\nN,l1_L,l1_E,l1_H,l1_F,sum_G,z_prefix\n";
        for (std::size_t i = 0; i < cps.size(); ++i)
          os << cps[i] << ',' << fam.l1_L[i] << ',' << fam.l1_E[i] << ',' << fam.l1_H[i]
             << ',' << fam.l1_F[i] << ',' << g[i] << ',' << zp[i] << '\n';
        partial_csv = os.str();
      }
      if (format == "csv") {
        em.emit_csv(term_table_to_csv(t) + partial_csv);
      } else {
        json result = term_table_to_json(t);
        if (!cps.empty()) result["family_partial_sums"] = partials;
        em.emit_json(result);
      }
    } else if (*idcheck) {
      em.config = {{"subcommand", "identity-check"},
                   {"draws", draws},
                   {"radius", radius},
                   {"seed", seed},
                   {"tol", tol}};
      const InteriorIdentityCheck c = identity_check_interior(draws, radius, seed);
      em.emit_json(identity_check_to_json(c));
      if (c.max_rel_residual > tol) return 3;
    } else if (*reconcile) {
      const VerblunskySequence a = load_sequence(seq_spec);
      em.config = {{"subcommand", "reconcile"},
                   {"seq", sequence_to_json(a)},
                   {"tol", rec_tol},
                   {"quad_tol", quad_tol}};
      em.emit_json(boundary_report_to_json(boundary_reconcile(a, rec_tol, quad_tol)));
    } else if (*decomp) {
      const VerblunskySequence a = load_sequence(seq_spec);
      std::vector<ComplexPoly> ps;
      for (const std::string& s : poly_specs) ps.push_back(parse_poly(s));
      const std::vector<double> exps = p_csv.empty() ? std::vector<double>{} : parse_double_list(p_csv);
      std::vector<std::size_t> hs;
      if (!horizons_csv.empty()) hs = parse_size_list(horizons_csv);
      em.config = {{"subcommand", "decompose"},
                   {"seq", sequence_to_json(a)},
                   {"poly", poly_specs},
                   {"p", exps},
                   {"horizons", hs}};
      em.emit_json(decomp_to_json(decompose(a, ps, exps, hs)));
    } else if (*lp) {
      const VerblunskySequence a = load_sequence(seq_spec);
      std::vector<Cplx> x(a.values().begin(), a.values().end());
      if (!poly_single.empty()) x = apply_shift_poly(parse_poly(poly_single), x);
      std::vector<std::size_t> hs = horizons_csv.empty()
                                        ? dyadic_horizons(std::min<std::size_t>(8, x.size()), x.size())
                                        : parse_size_list(horizons_csv);
      em.config = {{"subcommand", "lp"},
                   {"seq", sequence_to_json(a)},
                   {"poly", poly_single},
                   {"p", p_value},
                   {"horizons", hs}};
      em.emit_json(lp_to_json(lp_diagnose(std::span<const Cplx>(x), p_value, hs)));
    } else if (*corollary) {
      std::vector<std::size_t> hs = horizons_csv.empty() ? dyadic_horizons(64, 1u << 20)
                                                         : parse_size_list(horizons_csv);
      em.config = {{"subcommand", "corollary"}, {"horizons", hs}};
      return emit_report(run_corollary(hs));
    } else if (*sweep) {
      em.config = {{"subcommand", "sweep"},
                   {"count", count},
                   {"max_len", max_len},
                   {"radius", radius},
                   {"seed", seed}};
      return emit_report(run_oracle_sweep(count, max_len, radius, seed));
    }
  } catch (const AccuracyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ReconciliationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CoprimalityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
