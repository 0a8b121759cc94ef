#ifndef QRD_SUBSETS_HPP
#define QRD_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <vector>

// Small-universe subset utilities. Subsets of {0,...,n-1} are bitmasks
// (bit i = point i); everything here assumes n <= 24.

namespace qrd {

inline constexpr unsigned kMaxPoints = 24;

/// Exact binomial coefficient; throws std::overflow_error if the value
/// does not fit in int64_t.
std::int64_t binom(unsigned n, unsigned k);

inline unsigned popcount(std::uint32_t mask) {
    return static_cast<unsigned>(std::popcount(mask));
}

/// All k-subsets of {0..n-1} in lexicographic order of the sorted index
/// tuples: (0,1,2) < (0,1,3) < ... < (n-3,n-2,n-1).
std::vector<std::uint32_t> all_k_subsets(unsigned n, unsigned k);

std::vector<unsigned> mask_to_indices(std::uint32_t mask);
std::uint32_t indices_to_mask(const std::vector<unsigned>& indices);

/// Colexicographic rank of a k-subset within the C(n,k) subsets of the
/// same size: rank = sum of C(b_i, i+1) over the sorted bit positions b_i.
std::int64_t colex_rank(std::uint32_t mask);

/// Image of a subset under a coordinate permutation: point i maps to images[i].
std::uint32_t permute_mask(const std::vector<std::uint8_t>& images, std::uint32_t mask);

}  // namespace qrd

#endif
