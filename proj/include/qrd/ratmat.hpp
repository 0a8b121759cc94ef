#ifndef QRD_RATMAT_HPP
#define QRD_RATMAT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace qrd {

using Rational = mpq_class;
using Integer = mpz_class;

bool is_integral(const Rational& r);

/// Dense matrix over the rationals; only as large as the harmonic-space
/// linear systems need (a few thousand rows at most).
class RationalMatrix {
  public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<std::size_t> rref(RationalMatrix& m);

/// Canonical kernel basis of m (one vector per free column, ascending):
/// the free coordinate is set to 1 and pivot coordinates filled from the
/// RREF. Each vector is scaled to integer entries with content 1; the free
/// coordinate stays positive.
std::vector<std::vector<Integer>> integer_kernel_basis(const RationalMatrix& m);

/// Rank via a scratch copy.
std::size_t rational_rank(RationalMatrix m);

}  // namespace qrd

#endif
