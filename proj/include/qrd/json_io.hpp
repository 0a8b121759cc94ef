#ifndef QRD_JSON_IO_HPP
#define QRD_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "qrd/code.hpp"
#include "qrd/design.hpp"
#include "qrd/harmonic.hpp"
#include "qrd/jacobi.hpp"
#include "qrd/perm_group.hpp"

namespace qrd {

using nlohmann::json;

// Code files: {q, n, k, modulus, generator_matrix, coordinate_labels}.
// Deterministic construction makes the round trip byte-exact.
json code_to_json(const LinearCode& code);
LinearCode code_from_json(const json& j);
void save_json(const std::string& path, const json& j);
json load_json(const std::string& path);

json group_to_json(const PermutationGroup& group);
json orbits_to_json(const SubsetOrbitPartition& orbits);

/// {n, t, terms: [{m0, m1, n0, n1, count}]} with terms sorted by (m1, n1).
json jacobi_to_json(const JacobiPolynomial& poly);
json jacobi_classes_to_json(const std::vector<JacobiClass>& classes);

json rational_to_json(const Rational& r);
json harmonic_to_json(const std::string& group_id, const InvariantHarmonicBasis& basis,
                      const std::vector<HarmonicEnumerator>& enumerators);

json design_verdict_to_json(const DesignVerdict& verdict);
json design_report_to_json(const DesignReport& report);
json am_trace_to_json(const AssmusMattsonTrace& trace);

}  // namespace qrd

#endif
