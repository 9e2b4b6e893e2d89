#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "dtorus/cyclotomic.hpp"
#include "dtorus/errors.hpp"

using namespace dtorus;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

Cyclo random_element(const FieldPtr& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> c;
    for (long i = 0; i < F->degree(); ++i) c.push_back(rat(num(rng), den(rng)));
    return Cyclo(F, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials for small orders") {
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
    CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_polynomial(5) == ints({1, 1, 1, 1, 1}));
    CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_polynomial(20) == ints({1, 0, -1, 0, 1, 0, -1, 0, 1}));
}

TEST_CASE("zeta is a primitive root: zeta^M = 1 but no smaller power") {
    for (long M : {4L, 12L, 20L, 44L}) {
        auto F = CycloField::make(M);
        Cyclo z = F->zeta_pow(1);
        CHECK(z.pow(M) == F->one());
        for (long k = 1; k < M; ++k) CHECK(F->zeta_pow(k) != F->one());
    }
}

TEST_CASE("field arithmetic: ring laws and inverses on random elements") {
    auto F = CycloField::make(20);
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 50; ++t) {
        Cyclo a = random_element(F, rng);
        Cyclo b = random_element(F, rng);
        Cyclo c = random_element(F, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == F->zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == F->one());
            CHECK(a.inverse().inverse() == a);
        }
    }
    CHECK_THROWS_AS(F->zero().inverse(), Error);
}

TEST_CASE("conjugation is an involution and fixes the real subfield") {
    auto F = CycloField::make(20);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        Cyclo a = random_element(F, rng);
        CHECK(a.conj().conj() == a);
        Cyclo real_part = a + a.conj();
        CHECK(real_part.conj() == real_part);
        // |a|^2 = a * conj(a) embeds to a nonnegative real
        auto v = (a * a.conj()).to_complex();
        CHECK(std::abs(v.imag()) < 1e-9);
        CHECK(v.real() >= -1e-9);
    }
}

TEST_CASE("numeric embedding matches polar form") {
    auto F = CycloField::make(20);
    for (long k = 0; k < 20; ++k) {
        auto v = F->zeta_pow(k).to_complex();
        auto want = std::polar(1.0, 2.0 * M_PI * k / 20.0);
        CHECK(std::abs(v - want) < 1e-14);
    }
}

TEST_CASE("rational detection") {
    auto F = CycloField::make(12);
    CHECK(F->from_rational(rat(3, 4)).as_rational().value() == rat(3, 4));
    CHECK_FALSE(F->zeta_pow(1).as_rational().has_value());
    // zeta_12^3 = i is not rational; zeta_12^6 = -1 is
    CHECK_FALSE(F->zeta_pow(3).is_rational());
    CHECK(F->zeta_pow(6).as_rational().value() == rat(-1));
}

TEST_CASE("mixed fields are rejected") {
    auto F1 = CycloField::make(12);
    auto F2 = CycloField::make(20);
    CHECK_THROWS_AS(F1->one() + F2->one(), DomainMismatch);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3/4").value() == rat(3, 4));
    CHECK(parse_rational("-2").value() == rat(-2));
    CHECK(parse_rational("6/4").value() == rat(3, 2));
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational("abc").has_value());
    CHECK_FALSE(parse_rational("").has_value());
}
