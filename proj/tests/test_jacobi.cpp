#include <doctest.h>

#include "qrd/errors.hpp"
#include "qrd/golden.hpp"
#include "qrd/jacobi.hpp"
#include "qrd/subsets.hpp"

using namespace qrd;

namespace {

struct TernaryFixture {
    LinearCode code = build_extended_qr_code(3, 13);
    CodewordTable table = enumerate_codewords(code);
};

TernaryFixture& ternary() {
    static TernaryFixture f;
    return f;
}

}  // namespace

TEST_SUITE("jacobi") {

TEST_CASE("empty subset reduces to the weight enumerator") {
    auto& f = ternary();
    JacobiPolynomial j = jacobi_polynomial(f.table, 0);
    CHECK(j.t == 0);
    WeightDistribution dist = weight_distribution(f.table);
    CHECK(j.weight_specialization() == dist.counts);
    for (auto [w, c] : dist.counts) CHECK(j.at(0, w) == c);
}

TEST_CASE("universal invariants on sampled subsets") {
    auto& f = ternary();
    WeightDistribution dist = weight_distribution(f.table);
    const auto subsets = all_k_subsets(14, 3);
    for (std::size_t i = 0; i < subsets.size(); i += 37) {
        JacobiPolynomial j = jacobi_polynomial(f.table, subsets[i]);
        CHECK(j.total() == 2187);
        CHECK(j.weight_specialization() == dist.counts);
        CHECK(j.at(0, 0) == 1);  // the zero codeword
    }
}

TEST_CASE("ternary t=3 distinct polynomials match the reference tables") {
    auto& f = ternary();
    auto classes = jacobi_distinct(f.table, 3, SubsetMode::AllSubsets);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].subset_count + classes[1].subset_count == 364);

    JacobiPolynomial g1 = golden::to_polynomial(golden::ternary_t3()[0]);
    JacobiPolynomial g2 = golden::to_polynomial(golden::ternary_t3()[1]);
    const bool direct = classes[0].poly == g1 && classes[1].poly == g2;
    const bool swapped = classes[0].poly == g2 && classes[1].poly == g1;
    CHECK((direct || swapped));

    for (const auto& cls : classes) CHECK(cls.poly.at(3, 7) == 180);
}

TEST_CASE("orbit mode equals all-subsets mode") {
    auto& f = ternary();
    auto all = jacobi_distinct(f.table, 3, SubsetMode::AllSubsets);
    auto orbits = orbits_on_k_subsets(psl2(13), 3);
    auto reps = jacobi_distinct(f.table, 3, SubsetMode::OrbitRepresentatives, &orbits);
    REQUIRE(all.size() == reps.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].poly == reps[i].poly);
        CHECK(all[i].subset_count == reps[i].subset_count);  // orbit sizes add up
    }
}

TEST_CASE("orbit soundness: J is constant on certified orbits") {
    auto& f = ternary();
    PermutationGroup group = psl2(13);
    auto orbits = orbits_on_k_subsets(group, 3);
    for (std::uint32_t rep : orbits.representatives) {
        JacobiPolynomial base = jacobi_polynomial(f.table, rep);
        for (const auto& g : group.generators)
            CHECK(jacobi_polynomial(f.table, permute_mask(g, rep)) == base);
    }
}

TEST_CASE("ternary design verdicts by coefficient constancy") {
    auto& f = ternary();
    auto classes = jacobi_distinct(f.table, 3, SubsetMode::AllSubsets);
    auto verdicts = jacobi_design_test(classes, weight_distribution(f.table), 3);

    CHECK(verdicts.at(10).is_design);
    CHECK(verdicts.at(10).lambda == 180);
    for (unsigned w : {6u, 7u, 8u, 9u, 11u}) CHECK_FALSE(verdicts.at(w).is_design);
    // the published tables disagree at weight 6: counts 8 vs 12
    CHECK(verdicts.at(6).coef_min == 8);
    CHECK(verdicts.at(6).coef_max == 12);
    // complete shells are t-independent: 110 and 28 in both tables
    CHECK(verdicts.at(12).is_design);
    CHECK(verdicts.at(12).lambda == 110);
    CHECK(verdicts.at(14).is_design);
    CHECK(verdicts.at(14).lambda == 28);
}

TEST_CASE("subset out of range is rejected") {
    auto& f = ternary();
    CHECK_THROWS_AS(jacobi_polynomial(f.table, 1u << 14), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_distinct(f.table, 3, SubsetMode::OrbitRepresentatives, nullptr),
                    std::invalid_argument);
}

TEST_CASE("all-subsets guard") {
    // C(24,8) far exceeds the 10^4 all-subsets guard
    CodewordTable tiny(24, 1);
    tiny.entries()[0] = CodewordTable::pack(0, 0);
    CHECK_THROWS_AS(jacobi_distinct(tiny, 8, SubsetMode::AllSubsets), guard_error);
}

TEST_CASE("rendering matches the published layout") {
    auto& f = ternary();
    auto classes = jacobi_distinct(f.table, 3, SubsetMode::AllSubsets);
    const std::string text = classes[0].poly.render();
    CHECK(text.substr(0, 8) == "w^3 x^11");
    CHECK(text.find("180 x^4 y^7 z^3") != std::string::npos);
    CHECK(text.find("28 y^11 z^3") != std::string::npos);
}

}  // TEST_SUITE
