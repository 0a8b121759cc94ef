#include "qrd/subsets.hpp"

#include <stdexcept>

namespace qrd {

std::int64_t binom(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // result * (n-k+i) is divisible by i at every step
        std::int64_t num = static_cast<std::int64_t>(n - k + i);
        if (result > (INT64_MAX / num)) throw std::overflow_error("binom: value exceeds int64");
        result = result * num / static_cast<std::int64_t>(i);
    }
    return result;
}

std::vector<std::uint32_t> all_k_subsets(unsigned n, unsigned k) {
    if (n > kMaxPoints) throw std::invalid_argument("all_k_subsets: n exceeds mask width");
    std::vector<std::uint32_t> out;
    if (k > n) return out;
    out.reserve(static_cast<std::size_t>(binom(n, k)));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (unsigned i : idx) mask |= (1u << i);
        out.push_back(mask);
        // advance to the next combination in lexicographic order
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[static_cast<unsigned>(pos)] == n - k + static_cast<unsigned>(pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<unsigned>(pos)];
        for (unsigned i = static_cast<unsigned>(pos) + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

std::vector<unsigned> mask_to_indices(std::uint32_t mask) {
    std::vector<unsigned> out;
    while (mask != 0) {
        unsigned i = static_cast<unsigned>(std::countr_zero(mask));
        out.push_back(i);
        mask &= mask - 1;
    }
    return out;
}

std::uint32_t indices_to_mask(const std::vector<unsigned>& indices) {
    std::uint32_t mask = 0;
    for (unsigned i : indices) {
        if (i >= kMaxPoints) throw std::invalid_argument("indices_to_mask: index out of range");
        mask |= (1u << i);
    }
    return mask;
}

std::int64_t colex_rank(std::uint32_t mask) {
    std::int64_t rank = 0;
    unsigned i = 1;
    while (mask != 0) {
        unsigned b = static_cast<unsigned>(std::countr_zero(mask));
        rank += binom(b, i);
        ++i;
        mask &= mask - 1;
    }
    return rank;
}

std::uint32_t permute_mask(const std::vector<std::uint8_t>& images, std::uint32_t mask) {
    std::uint32_t out = 0;
    while (mask != 0) {
        unsigned i = static_cast<unsigned>(std::countr_zero(mask));
        out |= (1u << images[i]);
        mask &= mask - 1;
    }
    return out;
}

}  // namespace qrd
