#include "szego/io_json.hpp"

#include <sstream>

namespace szego {

using nlohmann::json;

VerblunskySequence sequence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("sequence: expected object with \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "explicit") {
    std::vector<Cplx> values;
    for (const json& v : j.at("values")) {
      if (v.is_array() && v.size() == 2)
        values.emplace_back(v[0].get<double>(), v[1].get<double>());
      else if (v.is_number())
        values.emplace_back(v.get<double>(), 0.0);
      else
        throw std::invalid_argument("sequence: values must be [re,im] pairs");
    }
    return VerblunskySequence::from_values(std::move(values));
  }
  if (kind == "formula") {
    const std::string name = j.at("name").get<std::string>();
    const json& params = j.at("params");
    const double scale = params.value("scale", 1.0 / 3.0);
    const double exponent = params.value("exponent", 0.25);
    const std::size_t horizon = j.at("horizon").get<std::size_t>();
    return VerblunskySequence::formula(name, scale, exponent, horizon);
  }
  throw std::invalid_argument("sequence: unknown kind \"" + kind + "\"");
}

json sequence_to_json(const VerblunskySequence& s) {
  if (s.kind() == SequenceKind::Formula) {
    return {{"kind", "formula"},
            {"name", s.formula_name()},
            {"params", {{"scale", s.formula_scale()}, {"exponent", s.formula_exponent()}}},
            {"horizon", s.length()}};
  }
  json values = json::array();
  for (const Cplx& v : s.values()) values.push_back({v.real(), v.imag()});
  return {{"kind", "explicit"}, {"values", values}};
}

json complex_to_json(Cplx v) { return {v.real(), v.imag()}; }

json poly_to_json(const ComplexPoly& p) {
  json coeffs = json::array();
  for (const Cplx& c : p.coeffs()) coeffs.push_back(complex_to_json(c));
  return {{"coeffs", coeffs}, {"degree", p.degree()}, {"text", p.to_string()}};
}

json moments_to_json(const MomentSums& m) {
  return {{"w0", complex_to_json(m.w0)},
          {"w1", complex_to_json(m.w1)},
          {"w2", complex_to_json(m.w2)},
          {"w3", complex_to_json(m.w3)},
          {"z", z_from_moments(m)}};
}

json lp_to_json(const LpDiagnostics& d) {
  json sums = json::array();
  for (const PartialNorm& pn : d.partial_norms) sums.push_back({pn.horizon, pn.sum});
  const auto fit_json = [](const LpFit& f) {
    return json{{"slope", f.slope},
                {"intercept", f.intercept},
                {"exponent", f.exponent},
                {"rms_residual", f.rms_residual}};
  };
  return {{"p", d.p},
          {"verdict", std::string(to_string(d.verdict))},
          {"best_model", std::string(d.best_model())},
          {"fit", fit_json(d.best_fit())},
          {"log_fit", fit_json(d.log_fit)},
          {"power_fit", fit_json(d.power_fit)},
          {"converged_by_increment", d.converged_by_increment},
          {"last_increment_ratio", d.last_increment_ratio},
          {"partial_norms", sums}};
}

json decomp_to_json(const DecompResult& d) {
  json cofactors = json::array();
  for (const ComplexPoly& u : d.cofactors) cofactors.push_back(poly_to_json(u));
  json components = json::array();
  for (const auto& beta : d.components) {
    json v = json::array();
    for (const Cplx& x : beta) v.push_back(complex_to_json(x));
    components.push_back(v);
  }
  json diagnostics = json::array();
  for (const ComponentDiagnostics& cd : d.diagnostics)
    diagnostics.push_back(
        {{"p", cd.p}, {"beta_lp", lp_to_json(cd.beta_lp)}, {"pj_beta_l2", lp_to_json(cd.pj_beta_l2)}});
  return {{"cofactors", cofactors},
          {"components", components},
          {"bezout_residual", d.bezout_residual},
          {"reconstruction_residual", d.reconstruction_residual},
          {"diagnostics", diagnostics}};
}

json term_table_to_json(const TermTable& t) {
  json rows = json::array();
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    const TermRow& r = t.rows[k];
    rows.push_back({{"k", k},
                    {"L", r.L},
                    {"E", r.E},
                    {"G", r.G},
                    {"J", complex_to_json(r.J)},
                    {"H", complex_to_json(r.H)},
                    {"F", complex_to_json(r.F)},
                    {"I", complex_to_json(r.I)},
                    {"s", r.s}});
  }
  return {{"horizon", t.horizon},
          {"I_minus1", complex_to_json(t.I_minus1)},
          {"rows", rows}};
}

std::string term_table_to_csv(const TermTable& t) {
  std::ostringstream os;
  os.precision(17);
  os << "k,L,E,G,J_re,J_im,H_re,H_im,F_re,F_im,I_re,I_im,s\n";
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    const TermRow& r = t.rows[k];
    os << k << ',' << r.L << ',' << r.E << ',' << r.G << ',' << r.J.real() << ','
       << r.J.imag() << ',' << r.H.real() << ',' << r.H.imag() << ',' << r.F.real() << ','
       << r.F.imag() << ',' << r.I.real() << ',' << r.I.imag() << ',' << r.s << '\n';
  }
  return os.str();
}

json boundary_report_to_json(const BoundaryReport& r) {
  json candidates = json::array();
  for (const BoundaryCandidate& c : r.candidates)
    candidates.push_back({{"convention", std::string(to_string(c.convention))},
                          {"value", c.value},
                          {"residual", c.residual},
                          {"matches", c.matches}});
  return {{"z_reference", r.z_reference},
          {"tolerance", r.tolerance},
          {"candidates", candidates},
          {"selected", std::string(to_string(r.selected))},
          {"selected_is_frozen_default", r.selected_is_frozen_default}};
}

json identity_check_to_json(const InteriorIdentityCheck& c) {
  return {{"draws", c.draws},
          {"radius", c.radius},
          {"seed", c.seed},
          {"max_abs_residual", c.max_abs_residual},
          {"max_rel_residual", c.max_rel_residual},
          {"worst_window",
           {complex_to_json(c.worst.a), complex_to_json(c.worst.b), complex_to_json(c.worst.c),
            complex_to_json(c.worst.d)}}};
}

json lemma31_to_json(const Lemma31Report& r) {
  return {{"checkpoints", r.checkpoints},
          {"l1_L", r.l1_L},
          {"l1_E", r.l1_E},
          {"l1_H", r.l1_H},
          {"l1_F", r.l1_F},
          {"total_L", r.total_L},
          {"total_E", r.total_E},
          {"total_H", r.total_H},
          {"total_F", r.total_F},
          {"L_bound_ok", r.L_bound_ok},
          {"L_bound_max_ratio", r.L_bound_max_ratio},
          {"E_bound_ok", r.E_bound_ok},
          {"E_bound_max_ratio", r.E_bound_max_ratio},
          {"rows", r.rows}};
}

json laurent_to_json(const LaurentSeries& s) {
  json coeffs = json::array();
  for (int m = -s.max_order; m <= s.max_order; ++m)
    coeffs.push_back({{"m", m}, {"c", complex_to_json(s.at(m))}});
  return {{"max_order", s.max_order}, {"coeffs", coeffs}};
}

}  // namespace szego
