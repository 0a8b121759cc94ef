#ifndef QRD_REFERENCE_HPP
#define QRD_REFERENCE_HPP

#include "qrd/code.hpp"
#include "qrd/design.hpp"
#include "qrd/harmonic.hpp"
#include "qrd/jacobi.hpp"

// Serial reference implementations that follow the definitions directly,
// sharing as little code as possible with the optimized kernels. The test
// suite and the benchmark compare the two; the references are not meant to
// be fast.

namespace qrd::reference {

/// Message-by-message synthesis from the generator matrix (no incremental
/// updates, no parallelism).
CodewordTable enumerate_codewords(const LinearCode& code);

/// Per-coordinate counting of zero/nonzero positions inside and outside T
/// on synthesized codeword vectors; does not touch the support-mask table.
JacobiPolynomial jacobi_polynomial(const LinearCode& code, std::uint32_t t_mask);

/// Accumulates every block into the counts of all its t-sub-subsets
/// (the dual strategy to the per-subset containment scan).
DesignVerdict verify_design(const BlockMultiset& blocks, unsigned t);

/// Serial rational accumulation through subset_sum.
HarmonicEnumerator harmonic_weight_enumerator(const CodewordTable& table, const SubsetFunction& f);

}  // namespace qrd::reference

#endif
