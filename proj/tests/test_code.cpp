#include <doctest.h>

#include <set>

#include "qrd/code.hpp"
#include "qrd/errors.hpp"
#include "qrd/json_io.hpp"
#include "qrd/subsets.hpp"

using namespace qrd;

TEST_SUITE("code") {

TEST_CASE("qr generator polynomials divide x^p - 1") {
    auto f3 = Field::of_order(3);
    Poly g3 = qr_generator_polynomial(f3, 13);
    CHECK(g3.degree() == 6);
    CHECK(g3.is_monic());
    CHECK(Poly::x_power_minus_one(f3, 13).divmod(g3).second.is_zero());

    auto f4 = Field::of_order(4);
    Poly g4 = qr_generator_polynomial(f4, 17);
    CHECK(g4.degree() == 8);
    CHECK(g4.is_monic());
    CHECK(Poly::x_power_minus_one(f4, 17).divmod(g4).second.is_zero());

    // 3^2 = 9 = 4 mod 5, so 3 is not a quadratic residue mod 5
    CHECK_THROWS_WITH_AS(qr_generator_polynomial(f3, 5),
                         doctest::Contains("quadratic residue code undefined"), std::invalid_argument);
    CHECK_THROWS_AS(qr_generator_polynomial(f3, 9), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(qr_generator_polynomial(f3, 2), std::invalid_argument);   // even
    CHECK_THROWS_AS(qr_generator_polynomial(f3, 3), std::invalid_argument);   // p | q
}

TEST_CASE("cyclic code dimensions") {
    auto f3 = Field::of_order(3);
    LinearCode c3 = build_cyclic_code(qr_generator_polynomial(f3, 13), 13);
    CHECK(c3.n == 13);
    CHECK(c3.k == 7);

    auto f4 = Field::of_order(4);
    LinearCode c4 = build_cyclic_code(qr_generator_polynomial(f4, 17), 17);
    CHECK(c4.n == 17);
    CHECK(c4.k == 9);

    CHECK_THROWS_AS(build_cyclic_code(Poly::x_power_minus_one(f3, 13), 13), std::invalid_argument);
    // 2 is not a 13th root of unity in GF(3), so x-2 does not divide x^13-1
    CHECK_THROWS_AS(build_cyclic_code(Poly::linear_root(f3, 2), 13), std::invalid_argument);
}

TEST_CASE("extension adds a zero-sum coordinate labeled inf") {
    LinearCode code = build_extended_qr_code(3, 13);
    CHECK(code.n == 14);
    CHECK(code.k == 7);
    CHECK(code.labels[0] == "inf");
    CHECK(code.labels[1] == "0");
    CHECK(code.labels[13] == "12");
    CHECK(code.has_extended_qr_labels());

    // every generator row sums to zero, hence every codeword does
    for (const auto& row : code.generator) {
        unsigned sum = 0;
        for (unsigned c : row) sum = code.field->add(sum, c);
        CHECK(sum == 0);
    }
    // spot-check the zero-sum property on synthesized combinations too
    const Field& f = *code.field;
    for (unsigned seed = 1; seed < 64; seed += 5) {
        std::vector<unsigned> word(code.n, 0);
        unsigned m = seed;
        for (unsigned i = 0; i < code.k; ++i) {
            const unsigned digit = m % 3;
            m /= 3;
            for (unsigned j = 0; j < code.n; ++j)
                word[j] = f.add(word[j], f.mul(digit, code.generator[i][j]));
        }
        unsigned sum = 0;
        for (unsigned c : word) sum = f.add(sum, c);
        CHECK(sum == 0);
    }
}

TEST_CASE("ternary weight distribution") {
    LinearCode code = build_extended_qr_code(3, 13);
    CodewordTable table = enumerate_codewords(code);
    CHECK(table.size() == 2187);
    WeightDistribution dist = weight_distribution(table);
    CHECK(dist.total() == 2187);
    CHECK(dist.weight_set() == std::vector<unsigned>{0, 6, 7, 8, 9, 10, 11, 12, 14});
    CHECK(dist.at(0) == 1);
    CHECK(dist.at(10) == 546);
    CHECK(dist.at(6) == 182);
    // scalar multiples share a support: q-1 divides every nonzero count
    for (auto [w, c] : dist.counts)
        if (w != 0) CHECK(c % 2 == 0);
}

TEST_CASE("quaternary weight distribution") {
    LinearCode code = build_extended_qr_code(4, 17);
    CodewordTable table = enumerate_codewords(code);
    CHECK(table.size() == 262144);
    WeightDistribution dist = weight_distribution(table);
    CHECK(dist.weight_set() == std::vector<unsigned>{0, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18});
    CHECK(dist.at(13) == 51408);
    for (auto [w, c] : dist.counts)
        if (w != 0) CHECK(c % 3 == 0);
}

TEST_CASE("support masks match weights") {
    LinearCode code = build_extended_qr_code(3, 13);
    CodewordTable table = enumerate_codewords(code);
    std::size_t zero_entries = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(popcount(table.mask(i)) == table.weight(i));
        if (table.weight(i) == 0) ++zero_entries;
    }
    CHECK(zero_entries == 1);
}

TEST_CASE("extension scaling leaves supports unchanged") {
    // replacing c_inf = -sum by c_inf = s*sum for any nonzero s gives the
    // same support multiset
    auto f3 = Field::of_order(3);
    LinearCode cyclic = build_cyclic_code(qr_generator_polynomial(f3, 13), 13);
    LinearCode standard = extend_zero_sum(cyclic);

    for (unsigned s = 1; s < 3; ++s) {
        LinearCode scaled;
        scaled.field = f3;
        scaled.n = cyclic.n + 1;
        scaled.k = cyclic.k;
        for (const auto& row : cyclic.generator) {
            unsigned sum = 0;
            for (unsigned c : row) sum = f3->add(sum, c);
            std::vector<unsigned> ext;
            ext.push_back(f3->mul(s, sum));
            ext.insert(ext.end(), row.begin(), row.end());
            scaled.generator.push_back(std::move(ext));
        }
        row_reduce(scaled.generator, *f3);
        scaled.labels = standard.labels;

        auto masks_of = [](const CodewordTable& t) {
            std::vector<std::uint32_t> m;
            for (std::size_t i = 0; i < t.size(); ++i) m.push_back(t.mask(i));
            std::sort(m.begin(), m.end());
            return m;
        };
        CHECK(masks_of(enumerate_codewords(standard)) == masks_of(enumerate_codewords(scaled)));
    }
}

TEST_CASE("weight distribution is independent of the primitive root choice") {
    // using alpha^j for a non-residue j turns the root set into the
    // non-residue powers; the generator polynomial changes but the
    // resulting extended code has the same weight distribution
    auto f3 = Field::of_order(3);
    auto f27 = Field::extension(f3, 3);
    const unsigned alpha = pth_root_of_unity(*f27, 13);

    std::set<unsigned> nonresidues;
    for (unsigned l = 1; l < 13; ++l) nonresidues.insert(l);
    for (unsigned l = 1; l < 13; ++l) nonresidues.erase(static_cast<unsigned>(l * l % 13));

    Poly g = Poly::constant(f27, 1);
    for (unsigned l : nonresidues) g = g * Poly::linear_root(f27, f27->pow(alpha, l));
    std::vector<unsigned> coeffs;
    for (int i = 0; i <= g.degree(); ++i) {
        REQUIRE(f27->in_base_field(g.coefficient(static_cast<unsigned>(i))));
        coeffs.push_back(f27->project_to_base(g.coefficient(static_cast<unsigned>(i))));
    }
    Poly g3 = Poly::from_coefficients(f3, coeffs);
    CHECK(g3 != qr_generator_polynomial(f3, 13));

    LinearCode alternate = extend_zero_sum(build_cyclic_code(g3, 13));
    WeightDistribution alt_dist = weight_distribution(enumerate_codewords(alternate));
    WeightDistribution std_dist = weight_distribution(enumerate_codewords(build_extended_qr_code(3, 13)));
    CHECK(alt_dist.counts == std_dist.counts);
}

TEST_CASE("dual code properties") {
    LinearCode code = build_extended_qr_code(3, 13);
    LinearCode dual = dual_code(code);
    CHECK(dual.k == code.n - code.k);
    const Field& f = *code.field;
    for (const auto& row : code.generator) {
        for (const auto& drow : dual.generator) {
            unsigned inner = 0;
            for (unsigned j = 0; j < code.n; ++j) inner = f.add(inner, f.mul(row[j], drow[j]));
            CHECK(inner == 0);
        }
    }
    // double dual returns the original row space (canonical RREF compare)
    LinearCode double_dual = dual_code(dual);
    CHECK(double_dual.k == code.k);
    CHECK(double_dual.generator == code.generator);
}

TEST_CASE("shell blocks with and without multiplicity") {
    LinearCode code = build_extended_qr_code(3, 13);
    CodewordTable table = enumerate_codewords(code);

    BlockMultiset multiset = shell_blocks(table, 10, false);
    CHECK(multiset.block_count == 546);
    CHECK(multiset.block_size == 10);
    for (const auto& [mask, mult] : multiset.blocks) CHECK(popcount(mask) == 10);

    // dedupe oracle: count distinct masks independently with a set
    std::set<std::uint32_t> distinct_masks;
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table.weight(i) == 10) distinct_masks.insert(table.mask(i));
    CHECK(distinct_masks.size() == 273);

    BlockMultiset distinct = shell_blocks(table, 10, true);
    CHECK(distinct.block_count == 273);
    CHECK(distinct.distinct_count() == 273);
    // c and -c share a support and there are no further collisions
    for (const auto& [mask, mult] : multiset.blocks) CHECK(mult == 2);

    BlockMultiset zero_shell = shell_blocks(table, 0, false);
    CHECK(zero_shell.blocks.size() == 1);
    CHECK(zero_shell.blocks[0].first == 0);

    CHECK_THROWS_AS(shell_blocks(table, 13, false), std::invalid_argument);  // empty shell
}

TEST_CASE("enumeration guard") {
    LinearCode fake;
    fake.field = Field::of_order(4);
    fake.n = 20;
    fake.k = 13;  // 4^13 > 2^24
    fake.generator.assign(13, std::vector<unsigned>(20, 0));
    for (unsigned i = 0; i < 13; ++i) fake.generator[i][i] = 1;
    fake.labels.assign(20, "x");
    CHECK_THROWS_AS(enumerate_codewords(fake), guard_error);
}

TEST_CASE("code serialization round trip is byte exact") {
    LinearCode code = build_extended_qr_code(4, 17);
    json j = code_to_json(code);
    const std::string first = j.dump(2);
    LinearCode loaded = code_from_json(json::parse(first));
    CHECK(loaded.generator == code.generator);
    CHECK(loaded.labels == code.labels);
    CHECK(code_to_json(loaded).dump(2) == first);

    // determinism: building the same code twice serializes identically
    CHECK(code_to_json(build_extended_qr_code(4, 17)).dump(2) == first);

    json bad = json::parse(first);
    bad["modulus"] = {1, 0, 1};
    CHECK_THROWS_AS(code_from_json(bad), std::invalid_argument);
}

}  // TEST_SUITE
