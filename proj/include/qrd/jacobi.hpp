#ifndef QRD_JACOBI_HPP
#define QRD_JACOBI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qrd/code.hpp"
#include "qrd/perm_group.hpp"

namespace qrd {

/// The Jacobi polynomial of a code for a coordinate subset T of size t:
/// each codeword contributes one unit at (m1, n1) where m1 counts its
/// nonzero coordinates inside T and n1 its nonzero coordinates outside T.
/// The complements m0 = t - m1 and n0 = (n - t) - n1 are implied. Counts
/// are exact and stored dense, (t+1) x (n-t+1).
struct JacobiPolynomial {
    unsigned n = 0;
    unsigned t = 0;
    std::vector<std::int64_t> counts;

    JacobiPolynomial() = default;
    JacobiPolynomial(unsigned n_, unsigned t_) : n(n_), t(t_), counts(static_cast<std::size_t>(t_ + 1) * (n_ - t_ + 1), 0) {}

    std::int64_t at(unsigned m1, unsigned n1) const {
        if (m1 > t || n1 > n - t) return 0;
        return counts[static_cast<std::size_t>(m1) * (n - t + 1) + n1];
    }
    std::int64_t& bump(unsigned m1, unsigned n1) { return counts[static_cast<std::size_t>(m1) * (n - t + 1) + n1]; }

    /// Evaluation at w = z = x = y = 1, i.e. the total codeword count.
    std::int64_t total() const;
    /// Substituting w -> x and z -> y collapses (m1, n1) onto the weight
    /// m1 + n1 and must reproduce the weight distribution.
    std::map<unsigned, std::int64_t> weight_specialization() const;

    bool operator==(const JacobiPolynomial& rhs) const = default;
    /// Lexicographic order on (n, t, coefficient table); the canonical
    /// order for listing distinct polynomials.
    bool operator<(const JacobiPolynomial& rhs) const;

    struct Term {
        unsigned m0, m1, n0, n1;
        std::int64_t count;
    };
    /// Nonzero terms sorted by (m1, n1).
    std::vector<Term> terms() const;
    /// Monomial rendering, terms ordered by descending m0 then descending
    /// n0 (coefficient 1 omitted, variables in w, x, y, z order).
    std::string render() const;
};

/// Brute-force accumulation over the full codeword table.
JacobiPolynomial jacobi_polynomial(const CodewordTable& table, std::uint32_t t_mask);

enum class SubsetMode { AllSubsets, OrbitRepresentatives };

/// One distinct polynomial together with the subsets that produce it.
struct JacobiClass {
    JacobiPolynomial poly;
    std::vector<std::uint32_t> subsets;   // masks, ascending in enumeration order
    std::int64_t subset_count = 0;        // orbit sizes accumulated in orbit mode
};

/// Distinct Jacobi polynomials over all t-subsets (guarded by
/// C(n,t) <= 10^4) or over orbit representatives of the given partition.
/// Classes are returned in canonical polynomial order. OpenMP over
/// subsets; the result does not depend on the thread count.
std::vector<JacobiClass> jacobi_distinct(const CodewordTable& table, unsigned t, SubsetMode mode,
                                         const SubsetOrbitPartition* orbits = nullptr);

struct JacobiShellVerdict {
    bool is_design = false;
    std::int64_t lambda = 0;    // the common coefficient when is_design
    std::int64_t coef_min = 0;  // coefficient range over the distinct polynomials
    std::int64_t coef_max = 0;
};

/// t-design verdict per shell: the shell of weight ell is a t-design
/// (with multiplicity) iff the coefficient at (m1=t, n1=ell-t) is the same
/// in every distinct polynomial; that coefficient is lambda. Shells with
/// ell < t are reported as non-designs with zero coefficients.
std::map<unsigned, JacobiShellVerdict> jacobi_design_test(const std::vector<JacobiClass>& classes,
                                                          const WeightDistribution& dist, unsigned t);

}  // namespace qrd

#endif
