#include <doctest.h>

#include "bch_atlas/cosets.hpp"
#include "bch_atlas/error.hpp"
#include "bch_atlas/gf.hpp"

using namespace bch_atlas;

TEST_CASE("prime field arithmetic") {
    const auto f = Field::prime(7);
    CHECK(f->add(5, 4) == 2);
    CHECK(f->sub(2, 5) == 4);
    CHECK(f->mul(3, 5) == 1);
    CHECK(f->inv(3) == 5);
    CHECK(f->div(1, 5) == 3);
    CHECK(f->pow(3, 6) == 1);
    CHECK(f->order(3) == 6);
    CHECK(f->primitive_element() == 3);
    CHECK_THROWS_AS(f->inv(0), Error);
}

TEST_CASE("prime powers") {
    const auto pp = prime_power(81);
    CHECK(pp.p == 3);
    CHECK(pp.e == 4);
    CHECK_THROWS_AS(prime_power(6), Error);
    CHECK_THROWS_AS(prime_power(1), Error);
}

TEST_CASE("binary tower of degree 4 uses x^4 + x + 1") {
    const auto t = build_tower_for(2, 4);
    CHECK(t.top_modulus == std::vector<Code>{1, 1, 0, 0, 1});
    CHECK(t.mid_modulus.empty());
    CHECK(t.top->size() == 16);
    CHECK(t.top->order(t.alpha) == 15);
    CHECK(t.beta_exponent(5) == 3);
    CHECK(t.top->order(t.beta(5)) == 5);
    CHECK_THROWS_AS(t.beta_exponent(7), Error);
}

TEST_CASE("GF(4) sits inside GF(4^2) with unchanged codes") {
    const auto t = build_tower_for(4, 2);
    CHECK(t.mid_modulus == std::vector<Code>{1, 1, 1});
    CHECK(t.sub->size() == 4);
    CHECK(t.top->size() == 16);
    CHECK(t.top->contains(*t.sub));
    for (Code a = 0; a < 4; ++a) {
        for (Code b = 0; b < 4; ++b) {
            CHECK(t.sub->mul(a, b) == t.top->mul(a, b));
            CHECK(t.sub->add(a, b) == t.top->add(a, b));
        }
    }
}

TEST_CASE("field elements refuse mixed fields") {
    const auto a = FieldElement(Field::prime(3), 2);
    const auto b = FieldElement(Field::prime(5), 2);
    CHECK_THROWS_AS(a + b, Error);
    CHECK((a * a).code() == 1);
    CHECK(a.inverse() == a);
}

TEST_CASE("degree overflow and non-primes") {
    CHECK_THROWS_AS(build_tower_for(6, 2), Error);
    CHECK_THROWS_AS(build_tower(2, 1, 64), Error);
}

TEST_CASE("polynomial division round trip") {
    const auto f = Field::prime(5);
    const Poly a(f, {1, 2, 3, 4, 1});
    const Poly b(f, {2, 0, 1});
    const auto qr = poly_divmod(a, b);
    CHECK(poly_add(poly_mul(qr.quotient, b), qr.remainder) == a);
    CHECK(qr.remainder.degree() < b.degree());
    CHECK(poly_divides(b, poly_mul(a, b)));
    CHECK(poly_gcd(poly_mul(a, b), b) == poly_monic(b));
}

TEST_CASE("irreducibility") {
    const auto f = Field::prime(2);
    CHECK(is_irreducible(Poly(f, {1, 1, 0, 0, 1})));
    CHECK_FALSE(is_irreducible(Poly(f, {1, 0, 1})));  // (x+1)^2
    CHECK(first_irreducible(f, 4) == std::vector<Code>{1, 1, 0, 0, 1});
}

TEST_CASE("minimal polynomials") {
    const auto t = build_tower_for(2, 4);
    CHECK(minimal_polynomial(t, 15, 1).coeffs() == std::vector<Code>{1, 1, 0, 0, 1});
    CHECK(minimal_polynomial(t, 15, 5).degree() == 2);
    CHECK(minimal_polynomial(t, 15, 0).degree() == 1);

    // x^n - 1 is the product of the minimal polynomials over all cosets
    const auto ctx = CosetContext::make(2, 15);
    Poly prod(t.sub, {1});
    const CosetPartition part(ctx);
    for (const auto& e : part.leaders()) prod = poly_mul(prod, minimal_polynomial(t, 15, e.leader));
    CHECK(prod == Poly::x_pow_minus_one(t.sub, 15));

    const auto t9 = build_tower_for(9, 2);
    const auto m1 = minimal_polynomial(t9, 80, 1);
    CHECK(m1.degree() == 2);
    for (Code c : m1.coeffs()) CHECK(c < 9);
}
