#include "qrd/reference.hpp"

#include <algorithm>
#include <stdexcept>

#include "qrd/errors.hpp"
#include "qrd/subsets.hpp"

namespace qrd::reference {

namespace {

std::uint64_t checked_size(const LinearCode& code) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < code.k; ++i) {
        total *= code.field->order();
        if (total > kMaxCodewords) throw guard_error("reference enumeration guard: q^k exceeds 2^24");
    }
    return total;
}

std::vector<unsigned> synthesize(const LinearCode& code, std::uint64_t message) {
    const Field& f = *code.field;
    const unsigned q = f.order();
    std::vector<unsigned> word(code.n, 0);
    for (unsigned i = code.k; i-- > 0;) {
        const unsigned digit = static_cast<unsigned>(message % q);
        message /= q;
        if (digit == 0) continue;
        for (unsigned j = 0; j < code.n; ++j)
            word[j] = f.add(word[j], f.mul(digit, code.generator[i][j]));
    }
    return word;
}

}  // namespace

CodewordTable enumerate_codewords(const LinearCode& code) {
    const std::uint64_t total = checked_size(code);
    CodewordTable table(code.n, static_cast<std::size_t>(total));
    for (std::uint64_t m = 0; m < total; ++m) {
        const auto word = synthesize(code, m);
        std::uint32_t mask = 0;
        unsigned weight = 0;
        for (unsigned j = 0; j < code.n; ++j) {
            if (word[j] != 0) {
                mask |= (1u << j);
                ++weight;
            }
        }
        table.entries()[static_cast<std::size_t>(m)] = CodewordTable::pack(mask, weight);
    }
    return table;
}

JacobiPolynomial jacobi_polynomial(const LinearCode& code, std::uint32_t t_mask) {
    if ((t_mask >> code.n) != 0) throw std::invalid_argument("reference jacobi: subset outside the coordinates");
    const std::uint64_t total = checked_size(code);
    const unsigned t = popcount(t_mask);
    JacobiPolynomial out(code.n, t);
    for (std::uint64_t m = 0; m < total; ++m) {
        const auto word = synthesize(code, m);
        unsigned inside_nonzero = 0, outside_nonzero = 0;
        for (unsigned j = 0; j < code.n; ++j) {
            if (word[j] == 0) continue;
            if (t_mask & (1u << j))
                ++inside_nonzero;
            else
                ++outside_nonzero;
        }
        ++out.bump(inside_nonzero, outside_nonzero);
    }
    return out;
}

DesignVerdict verify_design(const BlockMultiset& blocks, unsigned t) {
    if (t > blocks.block_size) throw std::invalid_argument("reference verify_design: t exceeds the block size");
    const std::int64_t subset_count = binom(blocks.points, t);
    if (subset_count > 1000000) throw guard_error("reference verify_design: C(v,t) guard exceeded");

    std::vector<std::int64_t> counts(static_cast<std::size_t>(subset_count), 0);
    for (const auto& [mask, mult] : blocks.blocks) {
        const auto points = mask_to_indices(mask);
        std::vector<unsigned> idx(t);
        for (unsigned i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            std::uint32_t sub = 0;
            for (unsigned i : idx) sub |= (1u << points[i]);
            counts[static_cast<std::size_t>(colex_rank(sub))] += mult;
            int pos = static_cast<int>(t) - 1;
            while (pos >= 0 &&
                   idx[static_cast<unsigned>(pos)] == points.size() - t + static_cast<unsigned>(pos))
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<unsigned>(pos)];
            for (unsigned i = static_cast<unsigned>(pos) + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
        }
    }

    DesignVerdict verdict;
    verdict.v = blocks.points;
    verdict.k = blocks.block_size;
    verdict.t = t;
    verdict.block_count = blocks.block_count;
    verdict.count_min = *std::min_element(counts.begin(), counts.end());
    verdict.count_max = *std::max_element(counts.begin(), counts.end());
    verdict.is_design = verdict.count_min == verdict.count_max;
    verdict.lambda = verdict.is_design ? verdict.count_min : 0;
    return verdict;
}

HarmonicEnumerator harmonic_weight_enumerator(const CodewordTable& table, const SubsetFunction& f) {
    if (f.n != table.length()) throw std::invalid_argument("reference enumerator: dimension mismatch");
    HarmonicEnumerator out;
    out.n = table.length();
    out.coefficients.assign(out.n + 1, Rational(0));
    for (std::size_t i = 0; i < table.size(); ++i)
        out.coefficients[table.weight(i)] += subset_sum(f, table.mask(i));
    return out;
}

}  // namespace qrd::reference
