// qrd: builds extended quadratic residue codes and verifies their
// combinatorial design structure (weight distributions, Jacobi
// polynomials, harmonic weight enumerators, direct lambda counting).

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include "qrd/design.hpp"
#include "qrd/errors.hpp"
#include "qrd/golden.hpp"
#include "qrd/harmonic.hpp"
#include "qrd/jacobi.hpp"
#include "qrd/json_io.hpp"
#include "qrd/subsets.hpp"
#include "qrd/threads.hpp"
#include "qrd/version.hpp"

using namespace qrd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

std::string g_threads_request = "default";

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

json make_manifest(const std::string& command, json parameters, const LinearCode* code,
                   const WeightDistribution* dist) {
    json m;
    m["command"] = command;
    m["parameters"] = std::move(parameters);
    m["version"] = kVersion;
    m["threads"] = g_threads_request;
    if (code != nullptr) {
        json fp;
        fp["q"] = code->field->order();
        fp["n"] = code->n;
        fp["k"] = code->k;
        if (code->has_extended_qr_labels()) fp["p"] = code->n - 1;
        if (dist != nullptr) fp["wdist"] = dist->digest();
        m["fingerprint"] = fp;
    }
    return m;
}

void emit(const json& payload, const std::string& out_path, bool json_stdout) {
    if (!out_path.empty()) save_json(out_path, payload);
    if (json_stdout) std::cout << payload.dump(2) << "\n";
}

LinearCode load_code(const std::string& path) { return code_from_json(load_json(path)); }

// ----------------------------------------------------------------- build

int cmd_build(unsigned q, unsigned p, const std::string& out_path) {
    LinearCode code = build_extended_qr_code(q, p);
    save_json(out_path, code_to_json(code));
    std::cout << "wrote [" << code.n << "," << code.k << "] code over GF(" << q << ") to " << out_path << "\n";
    return kExitOk;
}

// ----------------------------------------------------------------- wdist

int cmd_wdist(const std::string& file, const std::string& out_path, bool json_stdout) {
    LinearCode code = load_code(file);
    CodewordTable table = enumerate_codewords(code);
    WeightDistribution dist = weight_distribution(table);

    std::cout << "weight distribution of [" << code.n << "," << code.k << "] over GF("
              << code.field->order() << "):\n";
    for (auto [w, c] : dist.counts) std::printf("  A_%-2u = %lld\n", w, static_cast<long long>(c));

    json payload;
    payload["manifest"] = make_manifest("wdist", {{"file", file}}, &code, &dist);
    json rows = json::array();
    for (auto [w, c] : dist.counts) rows.push_back({{"weight", w}, {"count", c}});
    payload["result"] = {{"distribution", rows}, {"total", dist.total()}};
    emit(payload, out_path, json_stdout);
    return kExitOk;
}

// ---------------------------------------------------------------- jacobi

int cmd_jacobi(const std::string& file, unsigned t, bool orbits_mode, const std::string& out_path,
               bool json_stdout) {
    LinearCode code = load_code(file);
    CodewordTable table = enumerate_codewords(code);
    WeightDistribution dist = weight_distribution(table);

    std::vector<JacobiClass> classes;
    std::string mode_name;
    json group_json, orbit_json;
    if (orbits_mode) {
        PermutationGroup group = admissible_symmetry_group(code, table);
        auto orbits = orbits_on_k_subsets(group, t);
        classes = jacobi_distinct(table, t, SubsetMode::OrbitRepresentatives, &orbits);
        mode_name = "orbits(" + group.name + ")";
        group_json = group_to_json(group);
        orbit_json = orbits_to_json(orbits);
    } else {
        classes = jacobi_distinct(table, t, SubsetMode::AllSubsets);
        mode_name = "all";
    }

    std::cout << classes.size() << " distinct polynomial(s) over the size-" << t << " subsets (" << mode_name
              << "):\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::cout << "(" << (i + 1) << ") " << classes[i].subset_count << " subset(s):\n    "
                  << classes[i].poly.render() << "\n";
    }
    auto verdicts = jacobi_design_test(classes, dist, t);
    std::cout << "coefficient constancy at strength " << t << ":\n";
    for (const auto& [w, v] : verdicts) {
        if (v.is_design)
            std::printf("  weight %-2u: design, lambda = %lld\n", w, static_cast<long long>(v.lambda));
        else
            std::printf("  weight %-2u: not a design (coefficients %lld..%lld)\n", w,
                        static_cast<long long>(v.coef_min), static_cast<long long>(v.coef_max));
    }

    json payload;
    payload["manifest"] =
        make_manifest("jacobi", {{"file", file}, {"t", t}, {"mode", orbits_mode ? "orbits" : "all"}}, &code, &dist);
    payload["result"] = {{"classes", jacobi_classes_to_json(classes)}};
    if (orbits_mode) {
        payload["result"]["group"] = group_json;
        payload["result"]["orbits"] = orbit_json;
    }
    json verdict_json = json::object();
    for (const auto& [w, v] : verdicts) {
        json entry = {{"is_design", v.is_design}};
        if (v.is_design) entry["lambda"] = v.lambda;
        else entry["coefficient_range"] = {v.coef_min, v.coef_max};
        verdict_json[std::to_string(w)] = entry;
    }
    payload["result"]["design_test"] = verdict_json;
    emit(payload, out_path, json_stdout);
    return kExitOk;
}

// -------------------------------------------------------------- harmonic

int cmd_harmonic(const std::string& file, unsigned k, const std::string& out_path, bool json_stdout) {
    LinearCode code = load_code(file);
    CodewordTable table = enumerate_codewords(code);
    WeightDistribution dist = weight_distribution(table);
    PermutationGroup group = admissible_symmetry_group(code, table);
    auto orbits = orbits_on_k_subsets(group, k);
    InvariantHarmonicBasis basis = invariant_harmonic_basis(orbits);

    std::vector<HarmonicEnumerator> enumerators;
    for (const auto& f : basis.functions) enumerators.push_back(harmonic_weight_enumerator(table, f));

    std::cout << "group " << group.name << " (order " << group.order() << "), " << orbits.orbit_count()
              << " orbit(s) on " << k << "-subsets\n";
    std::cout << "invariant harmonic space dimension: " << basis.dimension() << "\n";
    for (std::size_t i = 0; i < enumerators.size(); ++i)
        std::cout << "enumerator " << (i + 1) << ": " << enumerators[i].render() << "\n";

    json payload;
    payload["manifest"] = make_manifest("harmonic", {{"file", file}, {"k", k}}, &code, &dist);
    payload["result"] = harmonic_to_json(group.name, basis, enumerators);
    payload["result"]["group"] = group_to_json(group);
    payload["result"]["orbits"] = orbits_to_json(orbits);
    emit(payload, out_path, json_stdout);
    return kExitOk;
}

// ---------------------------------------------------------------- design

int cmd_design(const std::string& file, unsigned t, bool distinct, const std::string& out_path,
               bool json_stdout) {
    LinearCode code = load_code(file);
    CodewordTable table = enumerate_codewords(code);
    WeightDistribution dist = weight_distribution(table);

    std::cout << (distinct ? "distinct-block" : "with-multiplicity") << " design verdicts at strength " << t
              << ":\n";
    json shells = json::array();
    for (auto [w, c] : dist.counts) {
        if (w == 0 || w < t) continue;
        BlockMultiset blocks = shell_blocks(table, w, distinct);
        DesignVerdict verdict = verify_design(blocks, t);
        const bool complete = blocks.is_complete();
        if (verdict.is_design)
            std::printf("  weight %-2u: %u-(%u,%u,%lld) design%s, b = %lld\n", w, t, verdict.v, verdict.k,
                        static_cast<long long>(verdict.lambda), complete ? " [complete]" : "",
                        static_cast<long long>(verdict.block_count));
        else
            std::printf("  weight %-2u: not a %u-design (counts %lld..%lld), b = %lld\n", w, t,
                        static_cast<long long>(verdict.count_min), static_cast<long long>(verdict.count_max),
                        static_cast<long long>(verdict.block_count));
        json row = design_verdict_to_json(verdict);
        row["weight"] = w;
        row["complete"] = complete;
        shells.push_back(row);
    }

    json payload;
    payload["manifest"] =
        make_manifest("design", {{"file", file}, {"t", t}, {"distinct", distinct}}, &code, &dist);
    payload["result"] = {{"shells", shells}};
    emit(payload, out_path, json_stdout);
    return kExitOk;
}

// -------------------------------------------------------------------- am

int cmd_am(const std::string& file, const std::string& out_path, bool json_stdout) {
    LinearCode code = load_code(file);
    CodewordTable table = enumerate_codewords(code);
    WeightDistribution dist = weight_distribution(table);
    AssmusMattsonTrace trace = assmus_mattson_max_t(code, dist);

    std::cout << "d = " << trace.min_weight << ", dual d = " << trace.dual_min_weight << "\n";
    for (const auto& row : trace.rows)
        std::printf("  t=%u: dual weights in [1,%u]: %zu (bound %d)%s; code weights: %zu (bound %d)%s\n", row.t,
                    code.n - row.t, row.dual_weights_in_range,
                    static_cast<int>(trace.min_weight) - static_cast<int>(row.t), row.dual_clause ? " OK" : "",
                    row.code_weights_in_range,
                    static_cast<int>(trace.dual_min_weight) - static_cast<int>(row.t),
                    row.code_clause ? " OK" : "");
    std::cout << "largest qualifying strength: " << trace.max_t << "\n";

    json payload;
    payload["manifest"] = make_manifest("am", {{"file", file}}, &code, &dist);
    payload["result"] = am_trace_to_json(trace);
    emit(payload, out_path, json_stdout);
    return kExitOk;
}

// ---------------------------------------------------------------- report

int cmd_report(const std::string& file, const std::string& out_path, bool json_stdout) {
    LinearCode code = load_code(file);
    CodewordTable table = enumerate_codewords(code);
    WeightDistribution dist = weight_distribution(table);
    DesignReport report = build_design_report(code, table);

    std::cout << "design report for " << report.code_id << ":\n";
    for (const auto& shell : report.shells) {
        std::printf("  weight %-2u b=%-6lld distinct=%-6lld %s\n", shell.weight,
                    static_cast<long long>(shell.codeword_count), static_cast<long long>(shell.distinct_blocks),
                    shell.complete_multiset ? "[complete]" : "");
        for (const auto& [t, v] : shell.multiset) {
            if (v.is_design)
                std::printf("    t=%u multiset: design lambda=%lld", t, static_cast<long long>(v.lambda));
            else
                std::printf("    t=%u multiset: no (%lld..%lld)", t, static_cast<long long>(v.count_min),
                            static_cast<long long>(v.count_max));
            const DesignVerdict& d = shell.distinct.at(t);
            if (d.is_design)
                std::printf(" | distinct: design lambda=%lld\n", static_cast<long long>(d.lambda));
            else
                std::printf(" | distinct: no (%lld..%lld)\n", static_cast<long long>(d.count_min),
                            static_cast<long long>(d.count_max));
        }
    }
    auto [d1, s1] = delta_s(report, true);
    auto [d0, s0] = delta_s(report, false);
    std::cout << "delta = " << d1 << ", s = " << s1 << " (complete shells excluded)\n";
    std::cout << "delta = " << d0 << ", s = " << s0 << " (raw; complete shells count)\n";
    std::cout << "largest strength reachable through the weight-counting hypothesis: " << report.am.max_t
              << "\n";

    json payload;
    payload["manifest"] = make_manifest("report", {{"file", file}}, &code, &dist);
    payload["result"] = design_report_to_json(report);
    payload["result"]["am"] = am_trace_to_json(report.am);
    emit(payload, out_path, json_stdout);
    return kExitOk;
}

// ----------------------------------------------------------------- audit

void audit_jacobi(const char* title, const std::vector<golden::JacobiTable>& tables) {
    std::cout << title << "\n";
    for (std::size_t i = 0; i < tables.size(); ++i)
        std::cout << "(" << (i + 1) << ")\n    " << golden::to_polynomial(tables[i]).render() << "\n";
}

void audit_harmonic(const char* title, unsigned n, const std::vector<std::pair<unsigned, std::int64_t>>& terms) {
    HarmonicEnumerator e;
    e.n = n;
    e.coefficients.assign(n + 1, Rational(0));
    for (auto [w, c] : terms) e.coefficients[w] = Rational(static_cast<long>(c));
    std::cout << title << "\n    " << e.render() << "\n";
}

int cmd_audit(const std::string& target) {
    const bool all = target == "all";
    if (all || target == "thm3.1") audit_jacobi("thm3.1 (ternary, |T| = 3):", golden::ternary_t3());
    if (all || target == "thm4.1") audit_jacobi("thm4.1 (quaternary, |T| = 3):", golden::quaternary_t3());
    if (all || target == "thm4.2") audit_jacobi("thm4.2 (quaternary, |T| = 4):", golden::quaternary_t4());
    if (all || target == "thm3.2") audit_harmonic("thm3.2 (ternary, degree 3):", 14, golden::ternary_harmonic3());
    if (all || target == "thm4.3")
        audit_harmonic("thm4.3 (quaternary, degree 3):", 18, golden::quaternary_harmonic3());
    return kExitOk;
}

// ------------------------------------------------------------- reproduce

struct Assertions {
    int failures = 0;
    void check(bool ok, const std::string& label) {
        std::cout << (ok ? "  [PASS] " : "  [FAIL] ") << label << "\n";
        if (!ok) ++failures;
    }
    template <typename T>
    void equals(const T& got, const T& expected, const std::string& label) {
        std::ostringstream msg;
        msg << label << " (got " << got << ", expected " << expected << ")";
        check(got == expected, msg.str());
    }
};

struct CodeBundle {
    LinearCode code;
    CodewordTable table;
    WeightDistribution dist;
};

CodeBundle bundle(unsigned q, unsigned p) {
    CodeBundle b{build_extended_qr_code(q, p), CodewordTable(0, 0), {}};
    b.table = enumerate_codewords(b.code);
    b.dist = weight_distribution(b.table);
    return b;
}

void match_distinct(Assertions& a, const std::vector<JacobiClass>& classes,
                    const std::vector<golden::JacobiTable>& tables, const std::string& label) {
    a.equals(classes.size(), tables.size(), label + ": distinct polynomial count");
    std::set<std::vector<std::int64_t>> got, expected;
    for (const auto& cls : classes) got.insert(cls.poly.counts);
    for (const auto& t : tables) expected.insert(golden::to_polynomial(t).counts);
    a.check(got == expected, label + ": coefficient tables match the reference verbatim");
}

int reproduce_thm11() {
    Assertions a;
    CodeBundle b = bundle(3, 13);
    DesignReport report = build_design_report(b.code, b.table, 4, false);
    for (const auto& shell : report.shells) {
        if (shell.complete_multiset) {
            a.check(shell.weight == 12 || shell.weight == 14,
                    "complete shell only at weights 12, 14 (weight " + std::to_string(shell.weight) + ")");
            continue;
        }
        a.check(shell.multiset.at(2).is_design,
                "weight " + std::to_string(shell.weight) + " is a 2-design");
        if (shell.weight == 10) {
            const DesignVerdict& v = shell.multiset.at(3);
            a.check(v.is_design && v.lambda == 180 && v.block_count == 546, "C_10 is a 3-(14,10,180) design");
            a.check(!shell.multiset.at(4).is_design, "C_10 is not a 4-design (direct count)");
            a.check(!is_integral(lambda_from_block_count(14, 10, 4, 546)),
                    "C_10 is not a 4-design (1260/11 is not integral)");
        } else {
            a.check(!shell.multiset.at(3).is_design,
                    "weight " + std::to_string(shell.weight) + " is not a 3-design");
        }
    }
    auto [delta, s] = delta_s(report, true);
    a.equals(delta, golden::kDelta, "delta");
    a.equals(s, golden::kS, "s (complete shells excluded)");
    return a.failures == 0 ? kExitOk : kExitMismatch;
}

int reproduce_thm12() {
    Assertions a;
    CodeBundle b = bundle(4, 17);
    DesignReport report = build_design_report(b.code, b.table, 4, false);
    for (const auto& shell : report.shells) {
        if (shell.complete_multiset) {
            a.check(shell.weight >= 16, "complete shell only at weights 16..18 (weight " +
                                            std::to_string(shell.weight) + ")");
            continue;
        }
        a.check(shell.multiset.at(2).is_design,
                "weight " + std::to_string(shell.weight) + " is a 2-design");
        if (shell.weight == 13) {
            const DesignVerdict& v = shell.multiset.at(3);
            a.check(v.is_design && v.lambda == 18018 && v.block_count == 51408,
                    "C_13 is a 3-(18,13,18018) design");
            a.check(!shell.multiset.at(4).is_design, "C_13 is not a 4-design (direct count)");
        } else {
            a.check(!shell.multiset.at(3).is_design,
                    "weight " + std::to_string(shell.weight) + " is not a 3-design");
        }
    }
    auto [delta, s] = delta_s(report, true);
    a.equals(delta, golden::kDelta, "delta");
    a.equals(s, golden::kS, "s (complete shells excluded)");
    return a.failures == 0 ? kExitOk : kExitMismatch;
}

int reproduce_rem13() {
    Assertions a;
    CodeBundle b = bundle(4, 17);
    bool saw_13 = false;
    for (auto [w, c] : b.dist.counts) {
        if (w == 0) continue;
        BlockMultiset blocks = shell_blocks(b.table, w, true);
        if (w == 13) {
            saw_13 = true;
            a.check(!blocks.is_complete(), "C_13 distinct blocks are not the complete set");
            a.check(!verify_design(blocks, 3).is_design, "C_13 distinct blocks do not form a 3-design");
            a.check(verify_design(blocks, 2).is_design, "C_13 distinct blocks form a 2-design");
            continue;
        }
        if (blocks.is_complete()) {
            std::cout << "  [note] weight " << w << " distinct blocks are the complete set (flagged)\n";
            continue;
        }
        a.check(verify_design(blocks, 2).is_design,
                "weight " + std::to_string(w) + " distinct blocks form a 2-design");
        DesignVerdict v3 = verify_design(blocks, 3);
        if (w == 10) {
            a.check(v3.is_design && v3.lambda == 315 && v3.block_count == 2142,
                    "C_10 distinct blocks form a 3-(18,10,315) design");
            a.check(!verify_design(blocks, 4).is_design, "C_10 distinct blocks do not form a 4-design");
        } else {
            a.check(!v3.is_design,
                    "weight " + std::to_string(w) + " distinct blocks do not form a 3-design");
        }
    }
    a.check(saw_13, "weight 13 shell present");
    return a.failures == 0 ? kExitOk : kExitMismatch;
}

int reproduce_thm31() {
    Assertions a;
    CodeBundle b = bundle(3, 13);
    auto classes = jacobi_distinct(b.table, 3, SubsetMode::AllSubsets);
    std::int64_t total = 0;
    for (const auto& cls : classes) total += cls.subset_count;
    a.equals(total, binom(14, 3), "all 364 subsets covered");
    match_distinct(a, classes, golden::ternary_t3(), "thm3.1");
    for (const auto& cls : classes) a.equals(cls.poly.at(3, 7), std::int64_t{180}, "coefficient at (m1=3,n1=7)");
    return a.failures == 0 ? kExitOk : kExitMismatch;
}

int reproduce_thm41() {
    Assertions a;
    CodeBundle b = bundle(4, 17);
    auto classes = jacobi_distinct(b.table, 3, SubsetMode::AllSubsets);
    std::int64_t total = 0;
    for (const auto& cls : classes) total += cls.subset_count;
    a.equals(total, binom(18, 3), "all 816 subsets covered");
    match_distinct(a, classes, golden::quaternary_t3(), "thm4.1");
    for (const auto& cls : classes)
        a.equals(cls.poly.at(3, 10), std::int64_t{18018}, "coefficient at (m1=3,n1=10)");
    return a.failures == 0 ? kExitOk : kExitMismatch;
}

int reproduce_thm42() {
    Assertions a;
    CodeBundle b = bundle(4, 17);
    auto classes = jacobi_distinct(b.table, 4, SubsetMode::AllSubsets);
    std::int64_t total = 0;
    for (const auto& cls : classes) total += cls.subset_count;
    a.equals(total, binom(18, 4), "all 3060 subsets covered");
    match_distinct(a, classes, golden::quaternary_t4(), "thm4.2");
    std::set<std::int64_t> coefs;
    for (const auto& cls : classes) coefs.insert(cls.poly.at(4, 9));
    a.check(coefs == std::set<std::int64_t>{12000, 12030},
            "coefficient at (m1=4,n1=9) takes exactly the values 12000 and 12030");
    return a.failures == 0 ? kExitOk : kExitMismatch;
}

int reproduce_harmonic(unsigned q, unsigned p, const std::vector<std::pair<unsigned, std::int64_t>>& reference,
                       unsigned design_weight, bool dimension_must_be_one) {
    Assertions a;
    CodeBundle b = bundle(q, p);
    PermutationGroup group = admissible_symmetry_group(b.code, b.table);
    auto orbits = orbits_on_k_subsets(group, 3);
    InvariantHarmonicBasis basis = invariant_harmonic_basis(orbits);
    if (dimension_must_be_one)
        a.equals(basis.dimension(), std::size_t{1}, "invariant space dimension");
    else
        a.check(basis.dimension() >= 1 && basis.dimension() <= 5, "invariant space dimension in 1..5 (got " +
                                                                      std::to_string(basis.dimension()) + ")");
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        HarmonicEnumerator e = harmonic_weight_enumerator(b.table, basis.functions[i]);
        a.check(!e.is_zero(), "enumerator " + std::to_string(i + 1) + " is nonzero");
        a.check(e.proportional_to(reference),
                "enumerator " + std::to_string(i + 1) + " is a rational multiple of the reference polynomial");
        for (auto [w, c] : b.dist.counts) {
            if (w == 0) continue;
            const bool complete = shell_blocks(b.table, w, false).is_complete();
            if (w == design_weight || complete)
                a.check(e.coefficients[w] == 0, "coefficient vanishes at weight " + std::to_string(w));
            else
                a.check(e.coefficients[w] != 0, "coefficient nonzero at weight " + std::to_string(w));
        }
    }
    return a.failures == 0 ? kExitOk : kExitMismatch;
}

int reproduce_rem52() {
    Assertions a;
    CodeBundle t = bundle(3, 13);
    a.check(t.dist.weight_set() == golden::ternary_weight_set(), "ternary weight set");
    a.equals(t.dist.at(10), golden::kTernaryA10, "A_10");
    AssmusMattsonTrace ta = assmus_mattson_max_t(t.code, t.dist);
    a.check(ta.max_t < 3, "ternary: the weight-counting hypothesis cannot reach strength 3 (max " +
                              std::to_string(ta.max_t) + ")");

    CodeBundle q = bundle(4, 17);
    a.check(q.dist.weight_set() == golden::quaternary_weight_set(), "quaternary weight set");
    a.equals(q.dist.at(13), golden::kQuaternaryA13, "A_13");
    AssmusMattsonTrace qa = assmus_mattson_max_t(q.code, q.dist);
    a.check(qa.max_t < 3, "quaternary: the weight-counting hypothesis cannot reach strength 3 (max " +
                              std::to_string(qa.max_t) + ")");
    return a.failures == 0 ? kExitOk : kExitMismatch;
}

int reproduce_ex22() {
    Assertions a;
    a.equals(psl2(13).order(), std::size_t{1092}, "|PSL2(13)|");
    a.equals(psl2(17).order(), std::size_t{2448}, "|PSL2(17)|");
    a.check(is_t_transitive(pgl2(13), 3), "PGL2(13) is 3-transitive");
    a.check(is_t_transitive(pgl2(17), 3), "PGL2(17) is 3-transitive");
    a.equals(orbits_on_k_subsets(psl2(13), 3).orbit_count(), std::size_t{2},
             "PSL2(13) orbits on 3-subsets");
    a.equals(orbits_on_k_subsets(psl2(17), 3).orbit_count(), std::size_t{2},
             "PSL2(17) orbits on 3-subsets");

    CodeBundle t = bundle(3, 13);
    bool certified = true;
    for (const auto& g : psl2(13).generators) certified = certified && preserves_shell_supports(t.table, g);
    a.check(certified, "PSL2(13) generators preserve the ternary shell supports");

    CodeBundle q = bundle(4, 17);
    certified = true;
    for (const auto& g : psl2(17).generators) certified = certified && preserves_shell_supports(q.table, g);
    a.check(certified, "PSL2(17) generators preserve the quaternary shell supports");
    return a.failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_reproduce(const std::string& target) {
    using Runner = int (*)();
    static const std::vector<std::pair<std::string, Runner>> runners = {
        {"thm1.1", reproduce_thm11},
        {"thm1.2", reproduce_thm12},
        {"rem1.3", reproduce_rem13},
        {"thm3.1", reproduce_thm31},
        {"thm3.2", [] { return reproduce_harmonic(3, 13, golden::ternary_harmonic3(), 10, false); }},
        {"thm4.1", reproduce_thm41},
        {"thm4.2", reproduce_thm42},
        {"thm4.3", [] { return reproduce_harmonic(4, 17, golden::quaternary_harmonic3(), 13, true); }},
        {"rem5.2", reproduce_rem52},
        {"ex2.2", reproduce_ex22},
    };
    int status = kExitOk;
    bool matched = false;
    for (const auto& [name, runner] : runners) {
        if (target != "all" && target != name) continue;
        matched = true;
        std::cout << "reproduce " << name << ":\n";
        const double start = now_seconds();
        const int rc = runner();
        std::fprintf(stderr, "%s took %.2fs\n", name.c_str(), now_seconds() - start);
        if (rc != kExitOk) status = kExitMismatch;
        std::cout << (rc == kExitOk ? "=> PASS " : "=> FAIL ") << name << "\n";
    }
    if (!matched) throw CLI::ValidationError("reproduce", "unknown target: " + target);
    return status;
}

// ------------------------------------------------------------------ scan

int cmd_scan(std::vector<unsigned> qs, unsigned max_len, const std::string& out_path, bool json_stdout) {
    json codes = json::array();
    struct GapShell {
        unsigned q, p, weight, strength;
    };
    std::vector<GapShell> exceptions;

    for (unsigned q : qs) {
        for (unsigned p = 3; p + 1 <= max_len; ++p) {
            if (!is_prime(p) || q % p == 0) continue;
            std::uint64_t legendre = 1, acc = q % p;
            for (unsigned e = (p - 1) / 2; e != 0; e >>= 1) {
                if (e & 1) legendre = legendre * acc % p;
                acc = acc * acc % p;
            }
            if (legendre != 1) continue;

            const double start = now_seconds();
            LinearCode code = build_extended_qr_code(q, p);
            CodewordTable table = enumerate_codewords(code);
            DesignReport report = build_design_report(code, table, 4, false);
            auto [delta, s] = delta_s(report, true);

            std::printf("q=%u p=%-2u [%2u,%2u]: delta=%u s=%u%s (%.1fs)\n", q, p, code.n, code.k, delta, s,
                        s > delta ? "  <-- gap" : "", now_seconds() - start);
            json entry = {{"q", q}, {"p", p}, {"n", code.n}, {"k", code.k}, {"delta", delta}, {"s", s}};
            json shell_rows = json::array();
            for (const auto& shell : report.shells) {
                unsigned strength = 0;
                for (const auto& [t, v] : shell.multiset)
                    if (v.is_design) strength = std::max(strength, t);
                if (shell.complete_multiset) strength = std::min(shell.weight, report.t_max);
                shell_rows.push_back({{"weight", shell.weight},
                                      {"b", shell.codeword_count},
                                      {"strength", strength},
                                      {"complete", shell.complete_multiset}});
                if (!shell.complete_multiset && strength > delta) {
                    exceptions.push_back({q, p, shell.weight, strength});
                    std::printf("    weight %u: %u-design beyond delta=%u\n", shell.weight, strength, delta);
                }
            }
            entry["shells"] = shell_rows;
            codes.push_back(entry);
        }
    }

    std::cout << exceptions.size() << " shell(s) with strength above their code's delta\n";
    for (const auto& e : exceptions)
        std::printf("  q=%u p=%u weight=%u strength=%u\n", e.q, e.p, e.weight, e.strength);

    json payload;
    payload["manifest"] = make_manifest("scan", {{"q", qs}, {"max_len", max_len}}, nullptr, nullptr);
    json exc = json::array();
    for (const auto& e : exceptions)
        exc.push_back({{"q", e.q}, {"p", e.p}, {"weight", e.weight}, {"strength", e.strength}});
    payload["result"] = {{"codes", codes}, {"exceptions", exc}};
    emit(payload, out_path, json_stdout);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended quadratic residue codes and their combinatorial designs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: all cores, or QRD_THREADS)");

    std::string out_path, file, target = "all";
    bool json_stdout = false, distinct = false, orbits_mode = false, all_mode = false;
    unsigned q = 0, p = 0, t = 3, k = 3, max_len = 20;
    std::vector<unsigned> scan_qs = {3, 4};

    auto* c_build = app.add_subcommand("build", "construct an extended QR code and write it as JSON");
    c_build->add_option("--q", q, "field order")->required();
    c_build->add_option("--p", p, "prime length of the cyclic stage")->required();
    c_build->add_option("--out", out_path, "output file")->required();

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "code JSON file")->required();
        cmd->add_option("--out", out_path, "write the JSON payload to this file");
        cmd->add_flag("--json", json_stdout, "print the JSON payload to stdout");
    };

    auto* c_wdist = app.add_subcommand("wdist", "weight distribution");
    add_common(c_wdist);

    auto* c_jacobi = app.add_subcommand("jacobi", "distinct Jacobi polynomials over the size-t subsets");
    add_common(c_jacobi);
    c_jacobi->add_option("--t", t, "subset size")->required();
    c_jacobi->add_flag("--all", all_mode, "brute force over every subset (default)");
    c_jacobi->add_flag("--orbits", orbits_mode, "orbit representatives of the certified symmetry group");

    auto* c_harmonic = app.add_subcommand("harmonic", "invariant harmonic basis and enumerators");
    add_common(c_harmonic);
    c_harmonic->add_option("--k", k, "harmonic degree")->required();

    auto* c_design = app.add_subcommand("design", "direct design verification at one strength");
    add_common(c_design);
    c_design->add_option("--t", t, "strength")->required();
    c_design->add_flag("--distinct", distinct, "collapse repeated blocks");

    auto* c_am = app.add_subcommand("am", "dual weight-counting trace for the design-strength hypothesis");
    add_common(c_am);

    auto* c_report = app.add_subcommand("report", "full design report including delta/s");
    add_common(c_report);

    auto* c_repro = app.add_subcommand("reproduce", "re-derive the published results and diff");
    c_repro->add_option("--target", target,
                        "thm1.1 thm1.2 rem1.3 thm3.1 thm3.2 thm4.1 thm4.2 thm4.3 rem5.2 ex2.2 or all");

    auto* c_scan = app.add_subcommand("scan", "sweep all valid extended QR codes up to a length");
    c_scan->add_option("--q", scan_qs, "field orders to scan")->delimiter(',');
    c_scan->add_option("--max-len", max_len, "largest extended length (p+1)");
    c_scan->add_option("--out", out_path, "write the JSON payload to this file");
    c_scan->add_flag("--json", json_stdout, "print the JSON payload to stdout");

    auto* c_audit = app.add_subcommand("audit", "print the bundled reference tables for manual diff");
    c_audit->add_option("--target", target, "thm3.1 thm3.2 thm4.1 thm4.2 thm4.3 or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (threads > 0) {
        set_threads(threads);
        g_threads_request = std::to_string(threads);
    } else if (const char* env = std::getenv("QRD_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) {
            set_threads(n);
            g_threads_request = std::to_string(n);
        }
    }

    try {
        const double start = now_seconds();
        int rc = kExitOk;
        if (c_build->parsed()) rc = cmd_build(q, p, out_path);
        else if (c_wdist->parsed()) rc = cmd_wdist(file, out_path, json_stdout);
        else if (c_jacobi->parsed()) {
            if (all_mode && orbits_mode) throw CLI::ValidationError("jacobi", "--all and --orbits conflict");
            rc = cmd_jacobi(file, t, orbits_mode, out_path, json_stdout);
        } else if (c_harmonic->parsed()) rc = cmd_harmonic(file, k, out_path, json_stdout);
        else if (c_design->parsed()) rc = cmd_design(file, t, distinct, out_path, json_stdout);
        else if (c_am->parsed()) rc = cmd_am(file, out_path, json_stdout);
        else if (c_report->parsed()) rc = cmd_report(file, out_path, json_stdout);
        else if (c_repro->parsed()) rc = cmd_reproduce(target);
        else if (c_scan->parsed()) rc = cmd_scan(scan_qs, max_len, out_path, json_stdout);
        else if (c_audit->parsed()) rc = cmd_audit(target);
        std::fprintf(stderr, "wall clock: %.2fs, threads: %s\n", now_seconds() - start,
                     g_threads_request.c_str());
        return rc;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const guard_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
