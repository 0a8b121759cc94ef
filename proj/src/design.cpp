#include "qrd/design.hpp"

#include <algorithm>
#include <sstream>

#include "qrd/errors.hpp"
#include "qrd/subsets.hpp"

namespace qrd {

namespace {

std::vector<std::int64_t> containment_counts(const BlockMultiset& blocks,
                                             const std::vector<std::uint32_t>& subsets) {
    std::vector<std::int64_t> counts(subsets.size(), 0);
    const std::int64_t m = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < m; ++i) {
        const std::uint32_t s = subsets[static_cast<std::size_t>(i)];
        std::int64_t total = 0;
        for (const auto& [mask, mult] : blocks.blocks)
            if ((mask & s) == s) total += mult;
        counts[static_cast<std::size_t>(i)] = total;
    }
    return counts;
}

}  // namespace

DesignVerdict verify_design(const BlockMultiset& blocks, unsigned t) {
    if (t > blocks.block_size) throw std::invalid_argument("verify_design: t exceeds the block size");
    if (binom(blocks.points, t) > 1000000) throw guard_error("verify_design: C(v,t) guard exceeded");

    const auto subsets = all_k_subsets(blocks.points, t);
    const auto counts = containment_counts(blocks, subsets);

    DesignVerdict verdict;
    verdict.v = blocks.points;
    verdict.k = blocks.block_size;
    verdict.t = t;
    verdict.block_count = blocks.block_count;
    verdict.count_min = counts[0];
    verdict.count_max = counts[0];
    std::size_t arg_min = 0, arg_max = 0;
    for (std::size_t i = 1; i < counts.size(); ++i) {
        if (counts[i] < verdict.count_min) {
            verdict.count_min = counts[i];
            arg_min = i;
        }
        if (counts[i] > verdict.count_max) {
            verdict.count_max = counts[i];
            arg_max = i;
        }
    }
    verdict.is_design = verdict.count_min == verdict.count_max;
    if (verdict.is_design) {
        verdict.lambda = verdict.count_min;
    } else {
        verdict.witness_min = subsets[arg_min];
        verdict.witness_max = subsets[arg_max];
    }
    return verdict;
}

Rational lambda_subset_count(unsigned v, unsigned k, unsigned t, std::int64_t lambda, unsigned s) {
    if (s > t || t > k || k > v) throw std::invalid_argument("lambda_subset_count: need s <= t <= k <= v");
    return Rational(lambda) * Rational(static_cast<long>(binom(v - s, t - s))) /
           Rational(static_cast<long>(binom(k - s, t - s)));
}

Rational lambda_from_block_count(unsigned v, unsigned k, unsigned t, std::int64_t b) {
    if (t > k || k > v) throw std::invalid_argument("lambda_from_block_count: need t <= k <= v");
    return Rational(b) * Rational(static_cast<long>(binom(k, t))) / Rational(static_cast<long>(binom(v, t)));
}

AssmusMattsonTrace assmus_mattson_max_t(const LinearCode& code, const WeightDistribution& dist) {
    AssmusMattsonTrace trace;
    for (unsigned w : dist.weight_set())
        if (w != 0) trace.weights.push_back(w);
    if (trace.weights.empty()) throw std::invalid_argument("assmus_mattson_max_t: zero code");
    trace.min_weight = trace.weights.front();

    const LinearCode dual = dual_code(code);
    const WeightDistribution dual_dist = weight_distribution(enumerate_codewords(dual));
    for (unsigned w : dual_dist.weight_set())
        if (w != 0) trace.dual_weights.push_back(w);
    trace.dual_min_weight = trace.dual_weights.empty() ? 0 : trace.dual_weights.front();

    const unsigned n = code.n;
    for (unsigned t = 1; t <= trace.min_weight; ++t) {
        AssmusMattsonTrace::Row row;
        row.t = t;
        row.dual_weights_in_range = static_cast<std::size_t>(
            std::count_if(trace.dual_weights.begin(), trace.dual_weights.end(),
                          [&](unsigned w) { return w >= 1 && w <= n - t; }));
        row.code_weights_in_range = static_cast<std::size_t>(
            std::count_if(trace.weights.begin(), trace.weights.end(),
                          [&](unsigned w) { return w >= 1 && w <= n - t; }));
        row.dual_clause = static_cast<std::int64_t>(row.dual_weights_in_range) <=
                          static_cast<std::int64_t>(trace.min_weight) - static_cast<std::int64_t>(t);
        row.code_clause = static_cast<std::int64_t>(row.code_weights_in_range) <=
                          static_cast<std::int64_t>(trace.dual_min_weight) - static_cast<std::int64_t>(t);
        if (row.dual_clause || row.code_clause) trace.max_t = t;
        trace.rows.push_back(row);
    }
    return trace;
}

DesignReport build_design_report(const LinearCode& code, const CodewordTable& table, unsigned t_max,
                                 bool with_am) {
    DesignReport report;
    report.q = code.field->order();
    report.n = code.n;
    report.k = code.k;
    report.t_max = t_max;

    const WeightDistribution dist = weight_distribution(table);
    {
        std::ostringstream id;
        id << "[" << code.n << "," << code.k << "]q" << report.q << "-" << dist.digest();
        report.code_id = id.str();
    }

    for (const auto& [weight, count] : dist.counts) {
        if (weight == 0) continue;
        ShellReport shell;
        shell.weight = weight;
        shell.codeword_count = count;
        const BlockMultiset multiset = shell_blocks(table, weight, false);
        const BlockMultiset distinct = shell_blocks(table, weight, true);
        shell.distinct_blocks = distinct.block_count;
        shell.complete_multiset = multiset.is_complete();
        shell.complete_distinct = distinct.is_complete();
        for (unsigned t = 1; t <= std::min(t_max, weight); ++t) {
            shell.multiset.emplace(t, verify_design(multiset, t));
            shell.distinct.emplace(t, verify_design(distinct, t));
        }
        report.shells.push_back(std::move(shell));
    }

    // delta / s within the t_max window. A t-design with t <= k is also an
    // s-design for s < t, so each shell contributes its maximal strength;
    // complete shells are ell-designs for every strength up to their block
    // size.
    unsigned delta = report.shells.empty() ? 0 : t_max;
    unsigned s_excl = 0, s_raw = 0;
    for (const auto& shell : report.shells) {
        unsigned strength;
        if (shell.complete_multiset) {
            strength = std::min(shell.weight, t_max);
            s_raw = std::max(s_raw, shell.weight);
        } else {
            strength = 0;
            for (const auto& [t, verdict] : shell.multiset)
                if (verdict.is_design) strength = std::max(strength, t);
            s_excl = std::max(s_excl, strength);
        }
        delta = std::min(delta, strength);
    }
    report.delta = delta;
    report.s_excluding_complete = s_excl;
    report.s_raw = std::max(s_raw, s_excl);

    if (with_am) report.am = assmus_mattson_max_t(code, dist);
    return report;
}

std::pair<unsigned, unsigned> delta_s(const DesignReport& report, bool exclude_complete) {
    return {report.delta, exclude_complete ? report.s_excluding_complete : report.s_raw};
}

}  // namespace qrd
