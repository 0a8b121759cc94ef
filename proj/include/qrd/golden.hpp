#ifndef QRD_GOLDEN_HPP
#define QRD_GOLDEN_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qrd/jacobi.hpp"

// Published reference values for the two codes this tool reproduces: the
// [14,7] extended ternary QR code and the [18,9] extended quaternary QR
// code. The `reproduce` targets diff freshly computed results against
// these tables; `audit` re-prints them in the familiar monomial layout so
// the transcription itself can be checked by eye.

namespace qrd::golden {

struct JacobiTable {
    unsigned n;
    unsigned t;
    // (m1, n1, count), ascending in (m1, n1)
    std::vector<std::array<std::int64_t, 3>> terms;
};

/// The two distinct subset classes of the ternary code at t = 3.
const std::vector<JacobiTable>& ternary_t3();
/// The two distinct subset classes of the quaternary code at t = 3.
const std::vector<JacobiTable>& quaternary_t3();
/// The four distinct subset classes of the quaternary code at t = 4.
const std::vector<JacobiTable>& quaternary_t4();

JacobiPolynomial to_polynomial(const JacobiTable& table);

/// Reference degree-3 invariant harmonic enumerators, up to scale:
/// (weight, coefficient) pairs, zeros omitted.
const std::vector<std::pair<unsigned, std::int64_t>>& ternary_harmonic3();
const std::vector<std::pair<unsigned, std::int64_t>>& quaternary_harmonic3();

// Reference design facts.
inline constexpr std::int64_t kTernaryA10 = 546;
inline constexpr std::int64_t kTernaryLambda10T3 = 180;
inline constexpr std::int64_t kQuaternaryA13 = 51408;
inline constexpr std::int64_t kQuaternaryLambda13T3 = 18018;
inline constexpr std::int64_t kQuaternaryDistinctLambda10T3 = 315;
inline constexpr unsigned kDelta = 2;  // both codes
inline constexpr unsigned kS = 3;      // both codes, complete shells excluded

/// Expected weight sets (including 0).
const std::vector<unsigned>& ternary_weight_set();
const std::vector<unsigned>& quaternary_weight_set();

}  // namespace qrd::golden

#endif
