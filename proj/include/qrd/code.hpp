#ifndef QRD_CODE_HPP
#define QRD_CODE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qrd/field.hpp"

namespace qrd {

/// Reduced row echelon form over the given field, in place. Returns the
/// rank; rows below the rank are zeroed and removed by the caller if
/// needed.
unsigned row_reduce(std::vector<std::vector<unsigned>>& rows, const Field& field);

/// A linear [n,k] code over GF(q), kept as a canonical (RREF) generator
/// matrix plus coordinate labels. For extended QR codes the labels are
/// "inf","0",...,"p-1" with the parity coordinate first.
struct LinearCode {
    FieldPtr field;
    unsigned n = 0;
    unsigned k = 0;
    std::vector<std::vector<unsigned>> generator;  // k rows of n codes, RREF
    std::vector<std::string> labels;

    /// Membership by reduction against the RREF generator rows.
    bool contains(const std::vector<unsigned>& word) const;
    /// Word image under a coordinate permutation: out[images[i]] = word[i].
    static std::vector<unsigned> permute_word(const std::vector<unsigned>& word,
                                              const std::vector<std::uint8_t>& images);
    /// True when labels look like an extended QR code ("inf","0",...,"p-1");
    /// in that case p = n-1.
    bool has_extended_qr_labels() const;
};

/// Generator polynomial of the quadratic residue code of prime length p
/// over GF(q): the monic degree-(p-1)/2 divisor of x^p - 1 whose roots are
/// the quadratic-residue powers of a fixed primitive p-th root of unity.
/// Requires q to be a quadratic residue mod p (Euler's criterion);
/// otherwise throws std::invalid_argument. A product coefficient falling
/// outside the embedded GF(q) would indicate a field bug and raises
/// std::logic_error.
Poly qr_generator_polynomial(const FieldPtr& field, unsigned p);

/// Cyclic code of length p generated by g; rows x^i*g, row reduced.
/// g must properly divide x^p - 1 (k >= 1).
LinearCode build_cyclic_code(const Poly& g, unsigned p);

/// Appends a parity coordinate making every codeword sum to zero; the new
/// coordinate is labeled "inf" and placed first. Dimension is unchanged.
LinearCode extend_zero_sum(const LinearCode& code);

/// make_field(q) + qr_generator_polynomial + build_cyclic_code +
/// extend_zero_sum.
LinearCode build_extended_qr_code(unsigned q, unsigned p);

/// Null space of the generator matrix under the Euclidean inner product
/// sum(x_i*y_i); dimension n-k; canonical (RREF) basis.
LinearCode dual_code(const LinearCode& code);

/// Every codeword of the code, stored as (support mask, weight) packed
/// into one 32-bit entry: low 24 bits mask, high 8 bits weight. Entry
/// order is lexicographic in the message vector (first message coordinate
/// most significant), which makes the table reproducible and lets the
/// parallel builder fill disjoint slices.
class CodewordTable {
  public:
    CodewordTable(unsigned n, std::size_t count) : n_(n) { packed_.resize(count); }

    unsigned length() const { return n_; }
    std::size_t size() const { return packed_.size(); }
    std::uint32_t mask(std::size_t i) const { return packed_[i] & 0xFFFFFFu; }
    unsigned weight(std::size_t i) const { return packed_[i] >> 24; }
    std::uint32_t packed(std::size_t i) const { return packed_[i]; }
    const std::vector<std::uint32_t>& entries() const { return packed_; }
    std::vector<std::uint32_t>& entries() { return packed_; }

    static std::uint32_t pack(std::uint32_t mask, unsigned weight) {
        return mask | (static_cast<std::uint32_t>(weight) << 24);
    }

  private:
    unsigned n_;
    std::vector<std::uint32_t> packed_;
};

inline constexpr std::uint64_t kMaxCodewords = 1u << 24;

/// Exhaustive enumeration of all q^k codewords (OpenMP over message-space
/// chunks; the result does not depend on the thread count). Guarded by
/// q^k <= 2^24.
CodewordTable enumerate_codewords(const LinearCode& code);

struct WeightDistribution {
    std::map<unsigned, std::int64_t> counts;  // only nonzero entries

    std::int64_t total() const;
    std::vector<unsigned> weight_set() const;
    std::int64_t at(unsigned w) const;
    /// Stable digest of the distribution, used in run manifests.
    std::string digest() const;
};

WeightDistribution weight_distribution(const CodewordTable& table);

/// The blocks of one shell: support masks of the weight-ell codewords with
/// multiplicities, or with multiplicities collapsed to 1 in distinct mode.
struct BlockMultiset {
    unsigned points = 0;      // v
    unsigned block_size = 0;  // ell
    std::vector<std::pair<std::uint32_t, std::int64_t>> blocks;  // sorted by mask
    std::int64_t block_count = 0;                                // sum of multiplicities

    std::size_t distinct_count() const { return blocks.size(); }
    /// True when every block_size-subset appears, all with equal
    /// multiplicity.
    bool is_complete() const;
};

BlockMultiset shell_blocks(const CodewordTable& table, unsigned weight, bool distinct);

}  // namespace qrd

#endif
