#include "qrd/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "qrd/errors.hpp"
#include "qrd/field.hpp"
#include "qrd/subsets.hpp"

namespace qrd {

Permutation identity_permutation(unsigned degree) {
    Permutation p(degree);
    for (unsigned i = 0; i < degree; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint8_t>(i);
    return out;
}

namespace {

void check_permutation(unsigned degree, const Permutation& p) {
    if (p.size() != degree) throw std::invalid_argument("permutation degree mismatch");
    std::vector<bool> seen(degree, false);
    for (std::uint8_t image : p) {
        if (image >= degree || seen[image]) throw std::invalid_argument("permutation is not a bijection");
        seen[image] = true;
    }
}

}  // namespace

PermutationGroup PermutationGroup::trivial(unsigned degree) {
    PermutationGroup g;
    g.degree = degree;
    g.name = "trivial";
    g.elements = {identity_permutation(degree)};
    return g;
}

PermutationGroup PermutationGroup::from_generators(unsigned degree, std::vector<Permutation> generators,
                                                   std::string name) {
    for (const auto& g : generators) check_permutation(degree, g);
    PermutationGroup group;
    group.degree = degree;
    group.name = std::move(name);
    group.generators = std::move(generators);

    std::set<Permutation> closure;
    std::deque<Permutation> queue;
    closure.insert(identity_permutation(degree));
    queue.push_back(identity_permutation(degree));
    while (!queue.empty()) {
        Permutation current = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : group.generators) {
            Permutation next = compose(g, current);
            if (closure.insert(next).second) queue.push_back(std::move(next));
        }
    }
    group.elements.assign(closure.begin(), closure.end());
    return group;
}

namespace {

// Coordinate index of a projective point: inf -> 0, residue j -> 1+j.
unsigned proj_index(int value, unsigned p, bool infinity) {
    if (infinity) return 0;
    int r = value % static_cast<int>(p);
    if (r < 0) r += static_cast<int>(p);
    return 1u + static_cast<unsigned>(r);
}

Permutation moebius_translation(unsigned p) {
    Permutation out(p + 1);
    out[0] = 0;
    for (unsigned j = 0; j < p; ++j) out[1 + j] = static_cast<std::uint8_t>(proj_index(static_cast<int>(j) + 1, p, false));
    return out;
}

Permutation moebius_inversion(unsigned p) {
    // y -> -1/y, swapping 0 and inf
    FieldPtr fp = Field::prime(p);
    Permutation out(p + 1);
    out[0] = 1;      // inf -> 0
    out[1 + 0] = 0;  // 0 -> inf
    for (unsigned j = 1; j < p; ++j) out[1 + j] = static_cast<std::uint8_t>(1 + fp->neg(fp->inv(j)));
    return out;
}

Permutation moebius_scaling(unsigned p, unsigned g) {
    FieldPtr fp = Field::prime(p);
    Permutation out(p + 1);
    out[0] = 0;
    for (unsigned j = 0; j < p; ++j) out[1 + j] = static_cast<std::uint8_t>(1 + fp->mul(g, j));
    return out;
}

}  // namespace

PermutationGroup psl2(unsigned p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("psl2: p must be an odd prime");
    if (p > 23) throw guard_error("psl2: degree guard (p <= 23)");
    PermutationGroup group = PermutationGroup::from_generators(
        p + 1, {moebius_translation(p), moebius_inversion(p)}, "psl2(" + std::to_string(p) + ")");
    const std::size_t expected = static_cast<std::size_t>(p) * (p * p - 1) / 2;
    if (group.order() != expected)
        throw std::logic_error("psl2: closure order " + std::to_string(group.order()) + " != expected " +
                               std::to_string(expected));
    return group;
}

PermutationGroup pgl2(unsigned p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("pgl2: p must be an odd prime");
    if (p > 23) throw guard_error("pgl2: degree guard (p <= 23)");
    const unsigned g = Field::prime(p)->least_primitive_element();
    PermutationGroup group = PermutationGroup::from_generators(
        p + 1, {moebius_translation(p), moebius_inversion(p), moebius_scaling(p, g)},
        "pgl2(" + std::to_string(p) + ")");
    const std::size_t expected = static_cast<std::size_t>(p) * (p * p - 1);
    if (group.order() != expected)
        throw std::logic_error("pgl2: closure order " + std::to_string(group.order()) + " != expected " +
                               std::to_string(expected));
    return group;
}

std::int32_t SubsetOrbitPartition::orbit_of(std::uint32_t mask) const {
    auto it = membership.find(mask);
    if (it == membership.end()) throw std::invalid_argument("orbit_of: subset outside the partition");
    return it->second;
}

SubsetOrbitPartition orbits_on_k_subsets(const PermutationGroup& group, unsigned k) {
    if (k > group.degree) throw std::invalid_argument("orbits_on_k_subsets: k exceeds degree");
    if (binom(group.degree, k) > 1000000) throw guard_error("orbits_on_k_subsets: C(n,k) guard exceeded");

    SubsetOrbitPartition part;
    part.degree = group.degree;
    part.k = k;
    const auto subsets = all_k_subsets(group.degree, k);
    part.membership.reserve(subsets.size());

    const auto& gens = group.generators.empty() ? group.elements : group.generators;
    for (std::uint32_t start : subsets) {
        if (part.membership.count(start)) continue;
        const std::int32_t orbit_index = static_cast<std::int32_t>(part.representatives.size());
        part.representatives.push_back(start);
        std::int64_t size = 0;
        std::deque<std::uint32_t> queue{start};
        part.membership.emplace(start, orbit_index);
        while (!queue.empty()) {
            std::uint32_t current = queue.front();
            queue.pop_front();
            ++size;
            for (const auto& g : gens) {
                std::uint32_t image = permute_mask(g, current);
                if (part.membership.emplace(image, orbit_index).second) queue.push_back(image);
            }
        }
        part.orbit_sizes.push_back(size);
    }
    return part;
}

bool is_t_homogeneous(const PermutationGroup& group, unsigned t) {
    return orbits_on_k_subsets(group, t).orbit_count() == 1;
}

bool is_t_transitive(const PermutationGroup& group, unsigned t) {
    if (t == 0 || t > group.degree) throw std::invalid_argument("is_t_transitive: bad t");
    std::int64_t expected = 1;
    for (unsigned i = 0; i < t; ++i) expected *= static_cast<std::int64_t>(group.degree - i);
    if (expected > 1000000) throw guard_error("is_t_transitive: tuple count guard exceeded");

    const auto& gens = group.generators.empty() ? group.elements : group.generators;
    std::vector<std::uint8_t> start(t);
    for (unsigned i = 0; i < t; ++i) start[i] = static_cast<std::uint8_t>(i);
    std::set<std::vector<std::uint8_t>> seen{start};
    std::deque<std::vector<std::uint8_t>> queue{start};
    while (!queue.empty()) {
        auto current = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<std::uint8_t> image(t);
            for (unsigned i = 0; i < t; ++i) image[i] = g[current[i]];
            if (seen.insert(image).second) queue.push_back(std::move(image));
        }
    }
    return static_cast<std::int64_t>(seen.size()) == expected;
}

bool preserves_shell_supports(const CodewordTable& table, const Permutation& sigma) {
    check_permutation(table.length(), sigma);
    // group masks by weight once, then compare sorted image multisets
    std::vector<std::vector<std::uint32_t>> shells(table.length() + 1);
    for (std::size_t i = 0; i < table.size(); ++i) shells[table.weight(i)].push_back(table.mask(i));
    for (auto& shell : shells) {
        if (shell.empty()) continue;
        std::vector<std::uint32_t> image;
        image.reserve(shell.size());
        for (std::uint32_t mask : shell) image.push_back(permute_mask(sigma, mask));
        std::sort(shell.begin(), shell.end());
        std::sort(image.begin(), image.end());
        if (shell != image) return false;
    }
    return true;
}

PermutationGroup admissible_symmetry_group(const LinearCode& code, const CodewordTable& table) {
    if (!code.has_extended_qr_labels())
        throw std::invalid_argument("admissible_symmetry_group: code lacks extended QR coordinate labels");
    const unsigned p = code.n - 1;
    PermutationGroup candidate = psl2(p);

    bool certified = true;
    for (const auto& g : candidate.generators) {
        if (!preserves_shell_supports(table, g)) {
            certified = false;
            break;
        }
    }
    if (certified) return candidate;

    // fall back to the subgroup fixing the code as a set of words
    std::vector<Permutation> stabilizer;
    for (const auto& sigma : candidate.elements) {
        bool fixes = true;
        for (const auto& row : code.generator) {
            if (!code.contains(LinearCode::permute_word(row, sigma))) {
                fixes = false;
                break;
            }
        }
        if (fixes) stabilizer.push_back(sigma);
    }
    if (stabilizer.size() <= 1) return PermutationGroup::trivial(code.n);

    PermutationGroup sub;
    sub.degree = code.n;
    sub.name = "psl2(" + std::to_string(p) + ") code stabilizer";
    sub.generators = stabilizer;
    sub.elements = std::move(stabilizer);
    std::sort(sub.elements.begin(), sub.elements.end());
    return sub;
}

std::int64_t burnside_orbit_count(const PermutationGroup& group, unsigned k) {
    const auto subsets = all_k_subsets(group.degree, k);
    if (static_cast<std::int64_t>(subsets.size()) * static_cast<std::int64_t>(group.order()) > 100000000)
        throw guard_error("burnside_orbit_count: work guard exceeded");
    std::int64_t fixed_total = 0;
    for (const auto& sigma : group.elements)
        for (std::uint32_t s : subsets)
            if (permute_mask(sigma, s) == s) ++fixed_total;
    if (fixed_total % static_cast<std::int64_t>(group.order()) != 0)
        throw std::logic_error("burnside_orbit_count: fixed-point total not divisible by group order");
    return fixed_total / static_cast<std::int64_t>(group.order());
}

}  // namespace qrd
