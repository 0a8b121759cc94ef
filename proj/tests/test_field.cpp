#include <doctest.h>

#include "qrd/errors.hpp"
#include "qrd/field.hpp"

using namespace qrd;

TEST_SUITE("field") {

TEST_CASE("make_field on primes and prime powers") {
    auto f3 = Field::of_order(3);
    CHECK(f3->order() == 3);
    CHECK(f3->is_prime_field());
    CHECK(f3->degree_over_prime() == 1);

    auto f4 = Field::of_order(4);
    CHECK(f4->order() == 4);
    CHECK(f4->characteristic() == 2);
    // the unique irreducible quadratic over GF(2)
    CHECK(f4->modulus() == std::vector<unsigned>{1, 1, 1});

    CHECK(Field::of_order(8)->order() == 8);
    CHECK(Field::of_order(9)->order() == 9);
    CHECK(Field::of_order(16)->order() == 16);

    CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(12), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(17), std::invalid_argument);  // above the base-field cap
}

TEST_CASE("extension construction and guards") {
    auto f3 = Field::prime(3);
    auto f27 = Field::extension(f3, 3);
    CHECK(f27->order() == 27);
    // x^3 + 2x^2 + 1 is the first monic irreducible cubic over GF(3) in
    // constant-term-first order (verified by the minimality check below)
    CHECK(f27->modulus() == std::vector<unsigned>{1, 0, 2, 1});

    auto f4 = Field::of_order(4);
    CHECK(Field::extension(f4, 4)->order() == 256);
    CHECK(Field::extension(f3, 1) == f3);  // identity case

    CHECK_THROWS_AS(Field::extension(f4, 10), guard_error);  // 4^10 > 2^18
}

TEST_CASE("modulus is the lexicographically smallest irreducible") {
    for (unsigned q : {3u, 4u}) {
        auto base = Field::of_order(q);
        auto ext = Field::extension(base, 3);
        const auto& modulus = ext->modulus();
        // every lexicographically smaller monic cubic must be reducible
        for (unsigned c0 = 0; c0 < q; ++c0) {
            for (unsigned c1 = 0; c1 < q; ++c1) {
                for (unsigned c2 = 0; c2 < q; ++c2) {
                    std::vector<unsigned> coeffs = {c0, c1, c2, 1};
                    if (coeffs >= modulus) continue;
                    CHECK_FALSE(is_irreducible(Poly::from_coefficients(base, coeffs)));
                }
            }
        }
        CHECK(is_irreducible(Poly::from_coefficients(base, modulus)));
    }
}

TEST_CASE("multiplicative_order examples") {
    // direct modular powering oracles: 3,9,27=1 mod 13 and 4,16,13,1 mod 17
    CHECK(multiplicative_order(3, 13) == 3);
    CHECK(multiplicative_order(4, 17) == 4);
    CHECK(multiplicative_order(4, 3) == 1);  // q = 1 mod p
    CHECK(multiplicative_order(14, 13) == 1);
    CHECK_THROWS_AS(multiplicative_order(26, 13), std::invalid_argument);
    CHECK_THROWS_AS(multiplicative_order(3, 15), std::invalid_argument);
}

TEST_CASE("pth roots of unity") {
    auto f27 = Field::extension(Field::prime(3), 3);
    unsigned alpha = pth_root_of_unity(*f27, 13);
    CHECK(alpha != 1);
    CHECK(f27->pow(alpha, 13) == 1);
    for (unsigned k = 1; k < 13; ++k) CHECK(f27->pow(alpha, k) != 1);

    auto f256 = Field::extension(Field::of_order(4), 4);
    unsigned beta = pth_root_of_unity(*f256, 17);
    CHECK(f256->pow(beta, 17) == 1);
    for (unsigned k = 1; k < 17; ++k) CHECK(f256->pow(beta, k) != 1);

    CHECK_THROWS_AS(pth_root_of_unity(*f27, 1), std::invalid_argument);
    CHECK_THROWS_AS(pth_root_of_unity(*f27, 2), std::invalid_argument);
    CHECK_THROWS_AS(pth_root_of_unity(*f27, 7), std::invalid_argument);  // 7 does not divide 26
}

TEST_CASE("every nonzero element has order dividing |F|-1") {
    for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        auto f = Field::of_order(q);
        for (unsigned e = 1; e < q; ++e) CHECK(f->pow(e, q - 1) == 1);
    }
    auto f27 = Field::extension(Field::prime(3), 3);
    for (unsigned e = 1; e < 27; ++e) CHECK(f27->pow(e, 26) == 1);
    auto f256 = Field::extension(Field::of_order(4), 4);
    for (unsigned e = 1; e < 256; ++e) CHECK(f256->pow(e, 255) == 1);
}

TEST_CASE("embedding is a ring homomorphism on all pairs") {
    for (unsigned q : {2u, 3u, 4u}) {
        auto base = Field::of_order(q);
        auto ext = Field::extension(base, 3);
        for (unsigned a = 0; a < q; ++a) {
            CHECK(ext->in_base_field(ext->embed_base(a)));
            CHECK(ext->project_to_base(ext->embed_base(a)) == a);
            for (unsigned b = 0; b < q; ++b) {
                CHECK(ext->add(ext->embed_base(a), ext->embed_base(b)) == ext->embed_base(base->add(a, b)));
                CHECK(ext->mul(ext->embed_base(a), ext->embed_base(b)) == ext->embed_base(base->mul(a, b)));
            }
        }
    }
}

TEST_CASE("field arithmetic basics") {
    auto f4 = Field::of_order(4);
    // u * u = u + 1 under the 0,1,u,u+1 encoding
    CHECK(f4->mul(2, 2) == 3);
    CHECK(f4->mul(2, 3) == 1);
    CHECK(f4->add(2, 3) == 1);
    for (unsigned a = 1; a < 4; ++a) CHECK(f4->mul(a, f4->inv(a)) == 1);

    auto f27 = Field::extension(Field::prime(3), 3);
    for (unsigned a = 1; a < 27; ++a) CHECK(f27->mul(a, f27->inv(a)) == 1);
    for (unsigned a = 0; a < 27; ++a) CHECK(f27->add(a, f27->neg(a)) == 0);
    for (unsigned a = 0; a < 27; ++a) CHECK(f27->from_coordinates(f27->coordinates(a)) == a);
}

TEST_CASE("deterministic reconstruction") {
    auto a = Field::extension(Field::prime(3), 3);
    auto b = Field::extension(Field::prime(3), 3);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->least_primitive_element() == b->least_primitive_element());
    for (unsigned x = 0; x < 27; ++x)
        for (unsigned y = 0; y < 27; ++y) CHECK(a->mul(x, y) == b->mul(x, y));
}

TEST_CASE("polynomial arithmetic bundle") {
    auto f27 = Field::extension(Field::prime(3), 3);
    unsigned alpha = pth_root_of_unity(*f27, 13);

    // (x - 1) * prod (x - alpha^l) over all l reconstitutes x^13 - 1
    Poly product = Poly::constant(f27, 1);
    for (unsigned l = 0; l < 13; ++l) product = product * Poly::linear_root(f27, f27->pow(alpha, l));
    CHECK(product == Poly::x_power_minus_one(f27, 13));

    auto [quot, rem] = product.divmod(Poly::linear_root(f27, alpha));
    CHECK(rem.is_zero());
    CHECK(quot.degree() == 12);
    CHECK((quot * Poly::linear_root(f27, alpha)) == product);

    CHECK(Poly::zero(f27).evaluate(alpha) == 0);
    CHECK(product.evaluate(alpha) == 0);
    CHECK(product.evaluate(1) == 0);

    CHECK_THROWS_AS(product.divmod(Poly::zero(f27)), std::domain_error);
}

}  // TEST_SUITE
