#include "qrd/ratmat.hpp"

namespace qrd {

bool is_integral(const Rational& r) { return r.get_den() == 1; }

std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t r = rank; r < m.rows(); ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        const Rational scale = m.at(rank, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(rank, c) /= scale;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            const Rational factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(rank, c);
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

std::vector<std::vector<Integer>> integer_kernel_basis(const RationalMatrix& m_in) {
    RationalMatrix m = m_in;
    const std::vector<std::size_t> pivots = rref(m);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Integer>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free_col);

        // scale to integers with content 1; v[free_col] = lcm/gcd stays positive
        Integer lcm_den(1);
        for (const Rational& x : v) {
            Integer den = x.get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<Integer> w(m.cols());
        Integer content(0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            w[i] = Integer(v[i] * Rational(lcm_den));
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[i].get_mpz_t());
        }
        if (content != 0)
            for (Integer& x : w) x /= content;
        basis.push_back(std::move(w));
    }
    return basis;
}

std::size_t rational_rank(RationalMatrix m) { return rref(m).size(); }

}  // namespace qrd
