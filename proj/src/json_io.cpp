#include "qrd/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "qrd/subsets.hpp"

namespace qrd {

json code_to_json(const LinearCode& code) {
    json j;
    j["q"] = code.field->order();
    j["n"] = code.n;
    j["k"] = code.k;
    j["modulus"] = code.field->modulus();
    j["generator_matrix"] = code.generator;
    j["coordinate_labels"] = code.labels;
    return j;
}

LinearCode code_from_json(const json& j) {
    LinearCode code;
    const unsigned q = j.at("q").get<unsigned>();
    code.field = Field::of_order(q);
    if (j.at("modulus").get<std::vector<unsigned>>() != code.field->modulus())
        throw std::invalid_argument("code_from_json: modulus does not match the canonical field construction");
    code.n = j.at("n").get<unsigned>();
    code.k = j.at("k").get<unsigned>();
    code.generator = j.at("generator_matrix").get<std::vector<std::vector<unsigned>>>();
    code.labels = j.at("coordinate_labels").get<std::vector<std::string>>();
    if (code.generator.size() != code.k || code.labels.size() != code.n)
        throw std::invalid_argument("code_from_json: inconsistent dimensions");
    for (const auto& row : code.generator) {
        if (row.size() != code.n) throw std::invalid_argument("code_from_json: ragged generator matrix");
        for (unsigned c : row)
            if (c >= q) throw std::invalid_argument("code_from_json: entry out of field range");
    }
    auto copy = code.generator;
    if (row_reduce(copy, *code.field) != code.k || copy != code.generator)
        throw std::invalid_argument("code_from_json: generator matrix is not in reduced form of full rank");
    return code;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json j;
    in >> j;
    return j;
}

json group_to_json(const PermutationGroup& group) {
    json j;
    j["degree"] = group.degree;
    j["name"] = group.name;
    j["order"] = group.order();
    json gens = json::array();
    for (const auto& g : group.generators) gens.push_back(std::vector<unsigned>(g.begin(), g.end()));
    j["generators"] = gens;
    return j;
}

json orbits_to_json(const SubsetOrbitPartition& orbits) {
    json j;
    j["k"] = orbits.k;
    json reps = json::array();
    for (std::uint32_t mask : orbits.representatives) reps.push_back(mask_to_indices(mask));
    j["representatives"] = reps;
    j["orbit_sizes"] = orbits.orbit_sizes;
    return j;
}

json jacobi_to_json(const JacobiPolynomial& poly) {
    json j;
    j["n"] = poly.n;
    j["t"] = poly.t;
    json terms = json::array();
    for (const auto& term : poly.terms()) {
        json item;
        item["m0"] = term.m0;
        item["m1"] = term.m1;
        item["n0"] = term.n0;
        item["n1"] = term.n1;
        item["count"] = term.count;
        terms.push_back(item);
    }
    j["terms"] = terms;
    return j;
}

json jacobi_classes_to_json(const std::vector<JacobiClass>& classes) {
    json out = json::array();
    for (const auto& cls : classes) {
        json item;
        item["polynomial"] = jacobi_to_json(cls.poly);
        item["subset_count"] = cls.subset_count;
        json subsets = json::array();
        for (std::uint32_t mask : cls.subsets) subsets.push_back(mask_to_indices(mask));
        item["subsets"] = subsets;
        out.push_back(item);
    }
    return out;
}

json rational_to_json(const Rational& r) {
    json j;
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        throw std::overflow_error("rational_to_json: value exceeds int64");
    j["numerator"] = static_cast<std::int64_t>(r.get_num().get_si());
    j["denominator"] = static_cast<std::int64_t>(r.get_den().get_si());
    return j;
}

json harmonic_to_json(const std::string& group_id, const InvariantHarmonicBasis& basis,
                      const std::vector<HarmonicEnumerator>& enumerators) {
    json j;
    j["k"] = basis.k;
    j["group_id"] = group_id;
    j["dimension"] = basis.dimension();
    json basis_json = json::array();
    for (const auto& values : basis.orbit_values) {
        json item;
        json ov = json::array();
        for (const Integer& v : values) {
            if (!v.fits_slong_p()) throw std::overflow_error("harmonic_to_json: basis value exceeds int64");
            ov.push_back(static_cast<std::int64_t>(v.get_si()));
        }
        item["orbit_values"] = ov;
        basis_json.push_back(item);
    }
    j["basis"] = basis_json;
    json reps = json::array();
    for (std::uint32_t mask : basis.orbit_representatives) reps.push_back(mask_to_indices(mask));
    j["orbit_representatives"] = reps;
    json enums = json::array();
    for (const auto& e : enumerators) {
        json coeffs = json::array();
        for (unsigned w = 0; w <= e.n; ++w) {
            if (e.coefficients[w] == 0) continue;
            json entry = rational_to_json(e.coefficients[w]);
            entry["weight"] = w;
            coeffs.push_back(entry);
        }
        enums.push_back(coeffs);
    }
    j["enumerators"] = enums;
    return j;
}

json design_verdict_to_json(const DesignVerdict& verdict) {
    json j;
    j["t"] = verdict.t;
    j["is_design"] = verdict.is_design;
    j["b"] = verdict.block_count;
    if (verdict.is_design) {
        j["lambda"] = verdict.lambda;
    } else {
        j["lambda_range"] = {verdict.count_min, verdict.count_max};
        j["witness"] = {mask_to_indices(verdict.witness_min), mask_to_indices(verdict.witness_max)};
    }
    return j;
}

json am_trace_to_json(const AssmusMattsonTrace& trace) {
    json j;
    j["d"] = trace.min_weight;
    j["d_dual"] = trace.dual_min_weight;
    j["weights"] = trace.weights;
    j["dual_weights"] = trace.dual_weights;
    j["max_t"] = trace.max_t;
    json rows = json::array();
    for (const auto& row : trace.rows) {
        json r;
        r["t"] = row.t;
        r["dual_weights_in_range"] = row.dual_weights_in_range;
        r["code_weights_in_range"] = row.code_weights_in_range;
        r["dual_clause"] = row.dual_clause;
        r["code_clause"] = row.code_clause;
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

json design_report_to_json(const DesignReport& report) {
    json j;
    j["code_id"] = report.code_id;
    j["q"] = report.q;
    j["n"] = report.n;
    j["k"] = report.k;
    j["t_max"] = report.t_max;
    json shells = json::array();
    for (const auto& shell : report.shells) {
        json s;
        s["weight"] = shell.weight;
        s["b"] = shell.codeword_count;
        s["distinct_blocks"] = shell.distinct_blocks;
        s["complete"] = shell.complete_multiset;
        s["complete_distinct"] = shell.complete_distinct;
        json multiset = json::object(), distinct = json::object();
        for (const auto& [t, verdict] : shell.multiset) multiset[std::to_string(t)] = design_verdict_to_json(verdict);
        for (const auto& [t, verdict] : shell.distinct) distinct[std::to_string(t)] = design_verdict_to_json(verdict);
        s["modes"] = {{"multiset", multiset}, {"distinct", distinct}};
        shells.push_back(s);
    }
    j["shells"] = shells;
    j["delta"] = report.delta;
    j["s"] = report.s_excluding_complete;
    j["s_raw"] = report.s_raw;
    j["am_max_t"] = report.am.max_t;
    return j;
}

}  // namespace qrd
