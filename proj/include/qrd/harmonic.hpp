#ifndef QRD_HARMONIC_HPP
#define QRD_HARMONIC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qrd/code.hpp"
#include "qrd/perm_group.hpp"
#include "qrd/ratmat.hpp"

namespace qrd {

/// A rational-valued function on the k-subsets of {0..n-1}, stored dense
/// by colexicographic rank. All arithmetic in this module is exact.
struct SubsetFunction {
    unsigned n = 0;
    unsigned k = 0;
    std::vector<Rational> values;

    SubsetFunction() = default;
    SubsetFunction(unsigned n_, unsigned k_);

    const Rational& value(std::uint32_t mask) const;
    Rational& value(std::uint32_t mask);
    bool is_zero() const;
};

/// The differentiation operator: (gamma f)(y) = sum of f over the
/// k-subsets containing the (k-1)-subset y. Requires k >= 1.
SubsetFunction differentiate(const SubsetFunction& f);

/// f is harmonic when differentiate(f) vanishes identically.
bool is_harmonic(const SubsetFunction& f);

/// Sum of f over the k-subsets of u (zero when |u| < k).
Rational subset_sum(const SubsetFunction& f, std::uint32_t u);

/// A basis of the space of functions that are constant on the orbits of
/// the partition and harmonic. Basis vectors are integer-valued with
/// content 1, chosen canonically from the echelon form of the constraint
/// system (one unknown per orbit). Empty when the space is zero.
struct InvariantHarmonicBasis {
    unsigned n = 0;
    unsigned k = 0;
    std::vector<std::uint32_t> orbit_representatives;
    std::vector<std::vector<Integer>> orbit_values;  // one value list per basis vector
    std::vector<SubsetFunction> functions;           // materialized on all k-subsets

    std::size_t dimension() const { return functions.size(); }
};

InvariantHarmonicBasis invariant_harmonic_basis(const SubsetOrbitPartition& orbits);

/// Harmonic weight enumerator: coefficient[ell] = sum of f-tilde over the
/// supports of the weight-ell codewords.
struct HarmonicEnumerator {
    unsigned n = 0;
    std::vector<Rational> coefficients;  // indexed by weight 0..n

    bool is_zero() const;
    /// Rendering in the x^(n-ell) y^ell layout, ascending ell.
    std::string render() const;
    /// True when rhs is a nonzero rational multiple of this enumerator.
    bool proportional_to(const std::vector<std::pair<unsigned, std::int64_t>>& reference) const;
};

/// Exact accumulation over the codeword table (OpenMP; integer fast path
/// requires an integer-valued f, which invariant_harmonic_basis provides).
HarmonicEnumerator harmonic_weight_enumerator(const CodewordTable& table, const SubsetFunction& f);

struct HarmonicShellVerdict {
    bool is_design = false;
    unsigned witness_degree = 0;   // k of a basis element with nonzero coefficient
    std::size_t witness_index = 0; // index of that basis element
};

/// Design test for every shell at strength t: a shell passes iff the
/// enumerator coefficient at its weight vanishes for every basis element
/// of every degree k = 1..t. The group must pass shell-support
/// certification for the table; otherwise the test refuses to run.
std::map<unsigned, HarmonicShellVerdict> harmonic_design_test(const CodewordTable& table,
                                                              const PermutationGroup& group, unsigned t);

}  // namespace qrd

#endif
