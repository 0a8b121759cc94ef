#include <doctest.h>

#include <algorithm>

#include "qrd/errors.hpp"
#include "qrd/perm_group.hpp"
#include "qrd/subsets.hpp"

using namespace qrd;

TEST_SUITE("group") {

TEST_CASE("psl2 and pgl2 orders") {
    CHECK(psl2(13).order() == 1092);
    CHECK(psl2(17).order() == 2448);
    CHECK(pgl2(13).order() == 2184);
    CHECK(pgl2(17).order() == 4896);
    CHECK_THROWS_AS(psl2(9), std::invalid_argument);
    CHECK_THROWS_AS(psl2(29), guard_error);
}

TEST_CASE("group axioms on the closure") {
    PermutationGroup g = psl2(13);
    CHECK(std::find(g.elements.begin(), g.elements.end(), identity_permutation(14)) != g.elements.end());
    for (const auto& e : g.elements) {
        CHECK(std::binary_search(g.elements.begin(), g.elements.end(), inverse(e)));
    }
    // spot check closure under composition on a slice
    for (std::size_t i = 0; i < g.elements.size(); i += 97)
        for (std::size_t j = 0; j < g.elements.size(); j += 101)
            CHECK(std::binary_search(g.elements.begin(), g.elements.end(), compose(g.elements[i], g.elements[j])));
}

TEST_CASE("psl2 is a subgroup of pgl2") {
    PermutationGroup small = psl2(13), big = pgl2(13);
    for (std::size_t i = 0; i < small.elements.size(); i += 13)
        CHECK(std::binary_search(big.elements.begin(), big.elements.end(), small.elements[i]));
}

TEST_CASE("transitivity and homogeneity facts") {
    PermutationGroup p13 = psl2(13), g13 = pgl2(13);
    CHECK(is_t_transitive(p13, 1));
    CHECK(is_t_transitive(g13, 3));
    CHECK(is_t_homogeneous(g13, 3));
    CHECK_FALSE(is_t_homogeneous(p13, 3));
    CHECK(is_t_homogeneous(p13, 1));
    CHECK(is_t_homogeneous(p13, 2));

    PermutationGroup p17 = psl2(17), g17 = pgl2(17);
    CHECK(is_t_transitive(g17, 3));
    CHECK_FALSE(is_t_homogeneous(p17, 3));
}

TEST_CASE("orbits on k-subsets") {
    PermutationGroup p17 = psl2(17);
    SubsetOrbitPartition orbits = orbits_on_k_subsets(p17, 3);
    CHECK(orbits.orbit_count() == 2);
    CHECK(orbits.orbit_sizes == std::vector<std::int64_t>{408, 408});

    PermutationGroup p13 = psl2(13);
    SubsetOrbitPartition o13 = orbits_on_k_subsets(p13, 3);
    CHECK(o13.orbit_count() == 2);

    std::int64_t total = 0;
    for (auto s : o13.orbit_sizes) total += s;
    CHECK(total == binom(14, 3));

    // k = 0: the single empty subset
    CHECK(orbits_on_k_subsets(p13, 0).orbit_count() == 1);

    // representatives are lexicographically least and pairwise inequivalent
    for (std::size_t i = 0; i < o13.representatives.size(); ++i) {
        CHECK(o13.orbit_of(o13.representatives[i]) == static_cast<std::int32_t>(i));
    }

    // G-stability: images of representatives stay in their orbit
    for (std::uint32_t rep : o13.representatives)
        for (const auto& g : p13.generators)
            CHECK(o13.orbit_of(permute_mask(g, rep)) == o13.orbit_of(rep));
}

TEST_CASE("burnside cross-check") {
    PermutationGroup p13 = psl2(13);
    for (unsigned k : {2u, 3u}) {
        CHECK(burnside_orbit_count(p13, k) ==
              static_cast<std::int64_t>(orbits_on_k_subsets(p13, k).orbit_count()));
    }
    PermutationGroup p17 = psl2(17);
    CHECK(burnside_orbit_count(p17, 3) == 2);
    CHECK(burnside_orbit_count(p17, 4) ==
          static_cast<std::int64_t>(orbits_on_k_subsets(p17, 4).orbit_count()));
}

TEST_CASE("orbit guard") {
    PermutationGroup big = PermutationGroup::trivial(24);
    CHECK_THROWS_AS(orbits_on_k_subsets(big, 12), guard_error);  // C(24,12) > 10^6
}

TEST_CASE("shell support certification") {
    LinearCode code = build_extended_qr_code(3, 13);
    CodewordTable table = enumerate_codewords(code);

    CHECK(preserves_shell_supports(table, identity_permutation(14)));
    for (const auto& g : psl2(13).generators) CHECK(preserves_shell_supports(table, g));

    // a random transposition is far from the symmetry group
    Permutation swap01 = identity_permutation(14);
    std::swap(swap01[1], swap01[2]);
    CHECK_FALSE(preserves_shell_supports(table, swap01));
}

TEST_CASE("admissible symmetry group falls back soundly on a scrambled code") {
    // swapping two coordinates of the generator matrix breaks the match
    // between the labels and the projective-line action, so psl2(13)
    // fails certification; whatever the fallback returns must still
    // preserve every shell's support multiset
    LinearCode scrambled = build_extended_qr_code(3, 13);
    for (auto& row : scrambled.generator) std::swap(row[1], row[2]);
    row_reduce(scrambled.generator, *scrambled.field);
    CodewordTable table = enumerate_codewords(scrambled);

    bool psl_ok = true;
    for (const auto& g : psl2(13).generators) psl_ok = psl_ok && preserves_shell_supports(table, g);
    CHECK_FALSE(psl_ok);

    PermutationGroup fallback = admissible_symmetry_group(scrambled, table);
    CHECK(fallback.order() >= 1);
    CHECK(fallback.order() < 1092);
    for (const auto& g : fallback.generators.empty() ? fallback.elements : fallback.generators)
        CHECK(preserves_shell_supports(table, g));
}

TEST_CASE("admissible symmetry group certifies psl2") {
    LinearCode code = build_extended_qr_code(3, 13);
    CodewordTable table = enumerate_codewords(code);
    PermutationGroup g = admissible_symmetry_group(code, table);
    CHECK(g.order() == 1092);
    CHECK(g.name == "psl2(13)");

    LinearCode code4 = build_extended_qr_code(4, 17);
    CodewordTable table4 = enumerate_codewords(code4);
    PermutationGroup g4 = admissible_symmetry_group(code4, table4);
    CHECK(g4.order() == 2448);
    CHECK(orbits_on_k_subsets(g4, 3).orbit_count() == 2);
    CHECK(orbits_on_k_subsets(g4, 4).orbit_count() == 4);
}

}  // TEST_SUITE
