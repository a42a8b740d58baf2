#ifndef SZEGO_IO_JSON_HPP
#define SZEGO_IO_JSON_HPP

#include <string>

#include <json.hpp>

#include "szego/decompose.hpp"
#include "szego/diagnostics.hpp"
#include "szego/opuc.hpp"
#include "szego/sequence.hpp"
#include "szego/sum_rules.hpp"

namespace szego {

// Sequence file format:
//   {"kind":"explicit","values":[[re,im],...]}
//   {"kind":"formula","name":"corollary",
//    "params":{"scale":0.3333,"exponent":0.25},"horizon":N}
// Values violating |alpha| < 1 are rejected at load time.
VerblunskySequence sequence_from_json(const nlohmann::json& j);
nlohmann::json sequence_to_json(const VerblunskySequence& s);

nlohmann::json complex_to_json(Cplx v);
nlohmann::json poly_to_json(const ComplexPoly& p);

nlohmann::json moments_to_json(const MomentSums& m);

nlohmann::json lp_to_json(const LpDiagnostics& d);

nlohmann::json decomp_to_json(const DecompResult& d);

nlohmann::json term_table_to_json(const TermTable& t);
std::string term_table_to_csv(const TermTable& t);

nlohmann::json boundary_report_to_json(const BoundaryReport& r);

nlohmann::json identity_check_to_json(const InteriorIdentityCheck& c);

nlohmann::json lemma31_to_json(const Lemma31Report& r);

nlohmann::json laurent_to_json(const LaurentSeries& s);

}  // namespace szego

#endif  // SZEGO_IO_JSON_HPP
