#ifndef QRD_DESIGN_HPP
#define QRD_DESIGN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qrd/code.hpp"
#include "qrd/ratmat.hpp"

namespace qrd {

/// Outcome of the direct lambda count for one block multiset and one t.
struct DesignVerdict {
    unsigned v = 0;  // points
    unsigned k = 0;  // block size
    unsigned t = 0;
    bool is_design = false;
    std::int64_t lambda = 0;  // covering count when uniform
    std::int64_t count_min = 0;
    std::int64_t count_max = 0;
    std::int64_t block_count = 0;  // b, with multiplicity when applicable
    std::uint32_t witness_min = 0;  // t-subsets realizing count_min/max when non-uniform
    std::uint32_t witness_max = 0;
};

/// Counts, for every t-subset, the blocks containing it (OpenMP over
/// subsets). A design means the count is uniform. Guarded by
/// C(v,t) <= 10^6 and t <= block size.
DesignVerdict verify_design(const BlockMultiset& blocks, unsigned t);

/// Number of blocks through an s-subset in a t-(v,k,lambda) design, from
/// the double-count identity lambda(S) * C(k-s,t-s) = lambda * C(v-s,t-s).
/// A non-integral value certifies that no such design exists.
Rational lambda_subset_count(unsigned v, unsigned k, unsigned t, std::int64_t lambda, unsigned s);

/// lambda of a hypothetical t-(v,k,lambda) design with b blocks:
/// lambda = b * C(k,t) / C(v,t).
Rational lambda_from_block_count(unsigned v, unsigned k, unsigned t, std::int64_t b);

struct AssmusMattsonTrace {
    unsigned min_weight = 0;       // d
    unsigned dual_min_weight = 0;  // d of the dual
    std::vector<unsigned> weights;
    std::vector<unsigned> dual_weights;
    unsigned max_t = 0;  // 0 when no strength qualifies
    struct Row {
        unsigned t;
        std::size_t dual_weights_in_range;  // dual weights in [1, n-t]
        std::size_t code_weights_in_range;
        bool dual_clause;  // dual_weights_in_range <= d - t
        bool code_clause;  // code_weights_in_range <= d_dual - t
    };
    std::vector<Row> rows;
};

/// Largest t in [1, d] for which either clause of the weight-counting
/// hypothesis holds (the hypothesis under which the shells of the code
/// form t-designs). Enumerates the dual, so the q^(n-k) guard applies.
AssmusMattsonTrace assmus_mattson_max_t(const LinearCode& code, const WeightDistribution& dist);

struct ShellReport {
    unsigned weight = 0;
    std::int64_t codeword_count = 0;  // A_ell
    std::int64_t distinct_blocks = 0;
    bool complete_multiset = false;  // every ell-subset with equal multiplicity
    bool complete_distinct = false;  // every ell-subset present
    std::map<unsigned, DesignVerdict> multiset;  // t -> verdict, t = 1..min(t_max, ell)
    std::map<unsigned, DesignVerdict> distinct;
};

struct DesignReport {
    std::string code_id;
    unsigned q = 0, n = 0, k = 0;
    unsigned t_max = 4;
    std::vector<ShellReport> shells;  // nonzero weights, ascending
    unsigned delta = 0;               // multiset mode, within the t_max window
    unsigned s_excluding_complete = 0;
    unsigned s_raw = 0;  // complete shells count as ell-designs
    AssmusMattsonTrace am;
};

/// Per-shell verdicts for t = 1..t_max in both block conventions, the
/// delta/s summary and the Assmus-Mattson trace.
DesignReport build_design_report(const LinearCode& code, const CodewordTable& table, unsigned t_max = 4,
                                 bool with_am = true);

/// (delta, s) from a report; with exclude_complete, complete shells do not
/// contribute to the s maximization (they are t-designs for every t up to
/// their block size, which dominates s otherwise).
std::pair<unsigned, unsigned> delta_s(const DesignReport& report, bool exclude_complete);

}  // namespace qrd

#endif
