#include "qrd/harmonic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qrd/errors.hpp"
#include "qrd/subsets.hpp"

namespace qrd {

SubsetFunction::SubsetFunction(unsigned n_, unsigned k_) : n(n_), k(k_) {
    values.assign(static_cast<std::size_t>(binom(n_, k_)), Rational(0));
}

const Rational& SubsetFunction::value(std::uint32_t mask) const {
    if (popcount(mask) != k) throw std::invalid_argument("SubsetFunction::value: subset has wrong size");
    return values[static_cast<std::size_t>(colex_rank(mask))];
}

Rational& SubsetFunction::value(std::uint32_t mask) {
    if (popcount(mask) != k) throw std::invalid_argument("SubsetFunction::value: subset has wrong size");
    return values[static_cast<std::size_t>(colex_rank(mask))];
}

bool SubsetFunction::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& r) { return r == 0; });
}

SubsetFunction differentiate(const SubsetFunction& f) {
    if (f.k == 0) throw std::invalid_argument("differentiate: degree-0 functions have no facets");
    SubsetFunction out(f.n, f.k - 1);
    for (std::uint32_t z : all_k_subsets(f.n, f.k)) {
        const Rational& fz = f.value(z);
        if (fz == 0) continue;
        std::uint32_t bits = z;
        while (bits != 0) {
            const std::uint32_t low = bits & (~bits + 1);
            out.value(z ^ low) += fz;
            bits ^= low;
        }
    }
    return out;
}

bool is_harmonic(const SubsetFunction& f) {
    if (f.k == 0) return f.is_zero();
    return differentiate(f).is_zero();
}

Rational subset_sum(const SubsetFunction& f, std::uint32_t u) {
    const unsigned size = popcount(u);
    if (size < f.k) return Rational(0);
    Rational total(0);
    const auto points = mask_to_indices(u);
    // iterate the k-subsets of u via index combinations
    std::vector<unsigned> idx(f.k);
    for (unsigned i = 0; i < f.k; ++i) idx[i] = i;
    if (f.k == 0) return Rational(0);
    while (true) {
        std::uint32_t mask = 0;
        for (unsigned i : idx) mask |= (1u << points[i]);
        total += f.value(mask);
        int pos = static_cast<int>(f.k) - 1;
        while (pos >= 0 && idx[static_cast<unsigned>(pos)] == size - f.k + static_cast<unsigned>(pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<unsigned>(pos)];
        for (unsigned i = static_cast<unsigned>(pos) + 1; i < f.k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return total;
}

InvariantHarmonicBasis invariant_harmonic_basis(const SubsetOrbitPartition& orbits) {
    const unsigned n = orbits.degree;
    const unsigned k = orbits.k;
    if (k == 0) throw std::invalid_argument("invariant_harmonic_basis: degree must be >= 1");

    // One unknown per orbit; one linear constraint per (k-1)-subset:
    // the facet sums of an orbit-constant function must vanish.
    const std::size_t unknowns = orbits.orbit_count();
    const std::size_t constraints = static_cast<std::size_t>(binom(n, k - 1));
    RationalMatrix system(constraints, unknowns);
    for (std::uint32_t z : all_k_subsets(n, k)) {
        const std::size_t orbit = static_cast<std::size_t>(orbits.orbit_of(z));
        std::uint32_t bits = z;
        while (bits != 0) {
            const std::uint32_t low = bits & (~bits + 1);
            system.at(static_cast<std::size_t>(colex_rank(z ^ low)), orbit) += 1;
            bits ^= low;
        }
    }

    InvariantHarmonicBasis basis;
    basis.n = n;
    basis.k = k;
    basis.orbit_representatives = orbits.representatives;
    basis.orbit_values = integer_kernel_basis(system);
    for (const auto& values : basis.orbit_values) {
        SubsetFunction f(n, k);
        for (std::uint32_t z : all_k_subsets(n, k))
            f.value(z) = Rational(values[static_cast<std::size_t>(orbits.orbit_of(z))]);
        basis.functions.push_back(std::move(f));
    }
    return basis;
}

bool HarmonicEnumerator::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& r) { return r == 0; });
}

std::string HarmonicEnumerator::render() const {
    std::ostringstream out;
    bool first = true;
    for (unsigned w = 0; w <= n; ++w) {
        const Rational& c = coefficients[w];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Rational a = abs(c);
        if (a != 1) out << a.get_str() << " ";
        if (n - w > 0) {
            out << "x";
            if (n - w >= 2) out << "^" << (n - w);
            out << " ";
        }
        out << "y";
        if (w >= 2) out << "^" << w;
    }
    return first ? "0" : out.str();
}

bool HarmonicEnumerator::proportional_to(const std::vector<std::pair<unsigned, std::int64_t>>& reference) const {
    std::vector<Rational> ref(n + 1, Rational(0));
    for (const auto& [w, c] : reference) {
        if (w > n) return false;
        ref[w] = c;
    }
    // find the first nonzero coordinate of the reference
    unsigned anchor = n + 1;
    for (unsigned w = 0; w <= n; ++w) {
        if (ref[w] != 0) {
            anchor = w;
            break;
        }
    }
    if (anchor > n) return is_zero();
    if (coefficients[anchor] == 0) return false;
    const Rational scale = coefficients[anchor] / ref[anchor];
    for (unsigned w = 0; w <= n; ++w)
        if (coefficients[w] != ref[w] * scale) return false;
    return true;
}

namespace {

// Rejects basis values too large for the int64 fast path; the invariant
// bases here are tiny integers, so this never triggers in practice.
std::vector<std::int64_t> integer_values(const SubsetFunction& f) {
    std::vector<std::int64_t> out(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const Rational& r = f.values[i];
        if (r.get_den() != 1 || !r.get_num().fits_slong_p())
            throw std::invalid_argument("harmonic_weight_enumerator: function is not small-integer valued");
        const long v = r.get_num().get_si();
        if (v > (1l << 20) || v < -(1l << 20))
            throw std::invalid_argument("harmonic_weight_enumerator: value exceeds the fast-path bound");
        out[i] = v;
    }
    return out;
}

}  // namespace

HarmonicEnumerator harmonic_weight_enumerator(const CodewordTable& table, const SubsetFunction& f) {
    const unsigned n = table.length();
    if (f.n != n) throw std::invalid_argument("harmonic_weight_enumerator: dimension mismatch");
    const unsigned k = f.k;
    if (k == 0 || k > 4) throw std::invalid_argument("harmonic_weight_enumerator: supported degrees are 1..4");
    const auto fv = integer_values(f);

    // colex rank increments per bit position: rank({b1<...<bk}) = sum C(b_i, i)
    std::int64_t rank_term[4][kMaxPoints + 1];
    for (unsigned level = 1; level <= k; ++level)
        for (unsigned b = 0; b <= n; ++b) rank_term[level - 1][b] = binom(b, level);

    std::vector<std::int64_t> totals(static_cast<std::size_t>(n) + 1, 0);
    const std::uint32_t* entries = table.entries().data();
    const std::int64_t size = static_cast<std::int64_t>(table.size());

#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<std::int64_t> local(static_cast<std::size_t>(n) + 1, 0);
        unsigned pos[kMaxPoints];
#ifdef _OPENMP
#pragma omp for schedule(static) nowait
#endif
        for (std::int64_t i = 0; i < size; ++i) {
            const std::uint32_t e = entries[i];
            const unsigned weight = e >> 24;
            if (weight < k) continue;
            std::uint32_t bits = e & 0xFFFFFFu;
            unsigned count = 0;
            while (bits != 0) {
                pos[count++] = static_cast<unsigned>(std::countr_zero(bits));
                bits &= bits - 1;
            }
            std::int64_t sum = 0;
            switch (k) {
                case 1:
                    for (unsigned a = 0; a < count; ++a) sum += fv[static_cast<std::size_t>(rank_term[0][pos[a]])];
                    break;
                case 2:
                    for (unsigned a = 0; a < count; ++a)
                        for (unsigned b = a + 1; b < count; ++b)
                            sum += fv[static_cast<std::size_t>(rank_term[0][pos[a]] + rank_term[1][pos[b]])];
                    break;
                case 3:
                    for (unsigned a = 0; a < count; ++a)
                        for (unsigned b = a + 1; b < count; ++b)
                            for (unsigned c = b + 1; c < count; ++c)
                                sum += fv[static_cast<std::size_t>(rank_term[0][pos[a]] + rank_term[1][pos[b]] +
                                                                   rank_term[2][pos[c]])];
                    break;
                default:
                    for (unsigned a = 0; a < count; ++a)
                        for (unsigned b = a + 1; b < count; ++b)
                            for (unsigned c = b + 1; c < count; ++c)
                                for (unsigned d = c + 1; d < count; ++d)
                                    sum += fv[static_cast<std::size_t>(rank_term[0][pos[a]] + rank_term[1][pos[b]] +
                                                                       rank_term[2][pos[c]] + rank_term[3][pos[d]])];
                    break;
            }
            local[weight] += sum;
        }
#ifdef _OPENMP
#pragma omp critical(qrd_harmonic_merge)
#endif
        for (unsigned w = 0; w <= n; ++w) totals[w] += local[w];
    }

    HarmonicEnumerator out;
    out.n = n;
    out.coefficients.assign(n + 1, Rational(0));
    for (unsigned w = 0; w <= n; ++w) out.coefficients[w] = Rational(static_cast<long>(totals[w]));
    return out;
}

std::map<unsigned, HarmonicShellVerdict> harmonic_design_test(const CodewordTable& table,
                                                              const PermutationGroup& group, unsigned t) {
    if (t == 0 || t > 4) throw std::invalid_argument("harmonic_design_test: supported strengths are 1..4");
    const auto& gens = group.generators.empty() ? group.elements : group.generators;
    for (const auto& g : gens)
        if (!preserves_shell_supports(table, g))
            throw std::invalid_argument(
                "harmonic_design_test: group is not certified to preserve the shell support multisets");

    const WeightDistribution dist = weight_distribution(table);
    std::map<unsigned, HarmonicShellVerdict> verdicts;
    for (const auto& [w, c] : dist.counts) {
        if (w == 0) continue;
        verdicts[w].is_design = true;
    }

    for (unsigned k = 1; k <= t; ++k) {
        const auto orbits = orbits_on_k_subsets(group, k);
        const auto basis = invariant_harmonic_basis(orbits);
        for (std::size_t b = 0; b < basis.dimension(); ++b) {
            const HarmonicEnumerator e = harmonic_weight_enumerator(table, basis.functions[b]);
            for (auto& [w, verdict] : verdicts) {
                if (verdict.is_design && e.coefficients[w] != 0) {
                    verdict.is_design = false;
                    verdict.witness_degree = k;
                    verdict.witness_index = b;
                }
            }
        }
    }
    return verdicts;
}

}  // namespace qrd
