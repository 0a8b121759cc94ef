#include "qrd/jacobi.hpp"

#include <algorithm>
#include <sstream>

#include "qrd/errors.hpp"
#include "qrd/subsets.hpp"

namespace qrd {

std::int64_t JacobiPolynomial::total() const {
    std::int64_t sum = 0;
    for (std::int64_t c : counts) sum += c;
    return sum;
}

std::map<unsigned, std::int64_t> JacobiPolynomial::weight_specialization() const {
    std::map<unsigned, std::int64_t> out;
    for (unsigned m1 = 0; m1 <= t; ++m1) {
        for (unsigned n1 = 0; n1 <= n - t; ++n1) {
            const std::int64_t c = at(m1, n1);
            if (c != 0) out[m1 + n1] += c;
        }
    }
    return out;
}

bool JacobiPolynomial::operator<(const JacobiPolynomial& rhs) const {
    if (n != rhs.n) return n < rhs.n;
    if (t != rhs.t) return t < rhs.t;
    return counts < rhs.counts;
}

std::vector<JacobiPolynomial::Term> JacobiPolynomial::terms() const {
    std::vector<Term> out;
    for (unsigned m1 = 0; m1 <= t; ++m1) {
        for (unsigned n1 = 0; n1 <= n - t; ++n1) {
            const std::int64_t c = at(m1, n1);
            if (c != 0) out.push_back({t - m1, m1, n - t - n1, n1, c});
        }
    }
    return out;
}

namespace {

void render_power(std::ostringstream& out, const char* var, unsigned e, bool& first) {
    if (e == 0) return;
    if (!first) out << " ";
    first = false;
    out << var;
    if (e >= 2) out << "^" << e;
}

}  // namespace

std::string JacobiPolynomial::render() const {
    auto list = terms();
    std::sort(list.begin(), list.end(), [](const Term& a, const Term& b) {
        if (a.m0 != b.m0) return a.m0 > b.m0;
        return a.n0 > b.n0;
    });
    std::ostringstream out;
    bool first_term = true;
    for (const Term& term : list) {
        if (!first_term) out << " + ";
        first_term = false;
        bool first_factor = true;
        if (term.count != 1) {
            out << term.count;
            first_factor = false;
        }
        std::ostringstream factors;
        bool ff = first_factor;
        render_power(factors, "w", term.m0, ff);
        render_power(factors, "x", term.n0, ff);
        render_power(factors, "y", term.n1, ff);
        render_power(factors, "z", term.m1, ff);
        std::string body = factors.str();
        if (body.empty()) {
            if (term.count == 1) out << 1;
        } else {
            if (!first_factor && !body.empty() && body.front() != ' ') out << " ";
            out << body;
        }
    }
    return first_term ? "0" : out.str();
}

JacobiPolynomial jacobi_polynomial(const CodewordTable& table, std::uint32_t t_mask) {
    const unsigned n = table.length();
    if ((t_mask >> n) != 0) throw std::invalid_argument("jacobi_polynomial: subset outside the coordinate range");
    const unsigned t = popcount(t_mask);
    JacobiPolynomial out(n, t);
    const unsigned cols = n - t + 1;
    std::int64_t* counts = out.counts.data();
    const std::uint32_t* entries = table.entries().data();
    const std::size_t size = table.size();
    for (std::size_t i = 0; i < size; ++i) {
        const std::uint32_t e = entries[i];
        const unsigned m1 = popcount(e & t_mask);
        const unsigned n1 = (e >> 24) - m1;
        ++counts[m1 * cols + n1];
    }
    return out;
}

std::vector<JacobiClass> jacobi_distinct(const CodewordTable& table, unsigned t, SubsetMode mode,
                                         const SubsetOrbitPartition* orbits) {
    const unsigned n = table.length();
    std::vector<std::uint32_t> subsets;
    std::vector<std::int64_t> weights;
    if (mode == SubsetMode::AllSubsets) {
        if (binom(n, t) > 10000) throw guard_error("jacobi_distinct: C(n,t) guard exceeded for all-subsets mode");
        subsets = all_k_subsets(n, t);
        weights.assign(subsets.size(), 1);
    } else {
        if (orbits == nullptr || orbits->k != t || orbits->degree != n)
            throw std::invalid_argument("jacobi_distinct: orbit partition missing or mismatched");
        subsets = orbits->representatives;
        weights = orbits->orbit_sizes;
    }

    std::vector<JacobiPolynomial> polys(subsets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(subsets.size()); ++i)
        polys[static_cast<std::size_t>(i)] = jacobi_polynomial(table, subsets[static_cast<std::size_t>(i)]);

    std::map<JacobiPolynomial, std::size_t> index;
    std::vector<JacobiClass> classes;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        auto [it, inserted] = index.emplace(polys[i], classes.size());
        if (inserted) {
            classes.push_back(JacobiClass{polys[i], {}, 0});
        }
        JacobiClass& cls = classes[it->second];
        cls.subsets.push_back(subsets[i]);
        cls.subset_count += weights[i];
    }
    // canonical order: sort classes by polynomial
    std::vector<std::size_t> order(classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return classes[a].poly < classes[b].poly; });
    std::vector<JacobiClass> sorted;
    sorted.reserve(classes.size());
    for (std::size_t i : order) sorted.push_back(std::move(classes[i]));
    return sorted;
}

std::map<unsigned, JacobiShellVerdict> jacobi_design_test(const std::vector<JacobiClass>& classes,
                                                          const WeightDistribution& dist, unsigned t) {
    if (classes.empty()) throw std::invalid_argument("jacobi_design_test: no polynomials");
    std::map<unsigned, JacobiShellVerdict> out;
    for (const auto& [weight, count] : dist.counts) {
        if (weight == 0) continue;
        JacobiShellVerdict verdict;
        if (weight >= t) {
            const unsigned n1 = weight - t;
            verdict.coef_min = verdict.coef_max = classes.front().poly.at(t, n1);
            for (const auto& cls : classes) {
                const std::int64_t c = cls.poly.at(t, n1);
                verdict.coef_min = std::min(verdict.coef_min, c);
                verdict.coef_max = std::max(verdict.coef_max, c);
            }
            verdict.is_design = verdict.coef_min == verdict.coef_max;
            verdict.lambda = verdict.is_design ? verdict.coef_min : 0;
        }
        out.emplace(weight, verdict);
    }
    return out;
}

}  // namespace qrd
