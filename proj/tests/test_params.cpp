#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dtorus/coeff.hpp"
#include "dtorus/errors.hpp"
#include "dtorus/params.hpp"

using namespace dtorus;

TEST_CASE("derive_params at mu=2 theta=1/5") {
    DeformParams par = derive_params(2.0, 1, 5);
    CHECK(par.hbar == doctest::Approx(0.7265425).epsilon(1e-6));
    CHECK(std::abs(par.z) == doctest::Approx(0.6180340).epsilon(1e-6));
    CHECK(par.admissible);
    CHECK(par.theta_rational.has_value());
    CHECK(par.theta_rational->first == 1);
    CHECK(par.theta_rational->second == 5);
    // Re z = hbar/2, Im z = -1/2
    CHECK(par.z.real() == doctest::Approx(par.hbar / 2.0).epsilon(1e-14));
    CHECK(par.z.imag() == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("theta = 0 commutative point is inadmissible at mu = 1") {
    DeformParams par = derive_params(1.0, 0.0);
    CHECK(par.q.real() == doctest::Approx(1.0));
    CHECK(par.q.imag() == doctest::Approx(0.0));
    CHECK(par.hbar == doctest::Approx(0.0));
    // z = 1/(2i) = -i/2
    CHECK(par.z.real() == doctest::Approx(0.0));
    CHECK(par.z.imag() == doctest::Approx(-0.5));
    CHECK_FALSE(par.admissible);  // mu cos(0) = 1, not > 1
}

TEST_CASE("admissibility at theta=1/3: mu=3 passes and mu=2 sits on the boundary") {
    CHECK(derive_params(3.0, 1, 3).admissible);     // 3 * 1/2 = 1.5 > 1
    CHECK_FALSE(derive_params(2.0, 1, 3).admissible);  // 2 * 1/2 = 1 exactly
    CHECK_FALSE(derive_params(-2.0, 1, 5).admissible); // mu > 0 required
}

TEST_CASE("pole at theta = 1/2 (mod 1)") {
    CHECK_THROWS_AS(derive_params(2.0, 0.5), PoleError);
    CHECK_THROWS_AS(derive_params(2.0, 1.5), PoleError);
    CHECK_THROWS_AS(derive_params(2.0, 1, 2), PoleError);
    CHECK_THROWS_AS(derive_params(2.0, 3, 2), PoleError);
    CHECK_THROWS_AS(derive_params(2.0, -1, 2), PoleError);
    CHECK_NOTHROW(derive_params(2.0, 1, 3));
}

TEST_CASE("require_admissible gate") {
    DeformParams par = derive_params(1.0, 1, 5);
    CHECK_THROWS_AS(par.require_admissible("test"), InadmissibleParams);
    CHECK_NOTHROW(derive_params(2.0, 1, 5).require_admissible("test"));
}

TEST_CASE("exact context represents q and z exactly") {
    for (auto [mu_num, p, N] : {std::tuple<long, long, long>{2, 1, 5}, {3, 1, 3}, {4, 3, 8}, {2, 1, 11}}) {
        ExactCtx ctx = ExactCtx::make(Rational(mu_num), p, N);
        // q^N = 1 as an exact cyclotomic identity
        CHECK(ctx.q().pow(N) == ctx.cone());
        // z + zbar = hbar exactly
        CHECK(ctx.z() + ctx.zbar() == ctx.hbar());
        // i^2 = -1
        CHECK(ctx.imag_unit() * ctx.imag_unit() == -ctx.cone());
        // (q^{1/2})^2 = q
        CHECK(ctx.q_half_pow(1) * ctx.q_half_pow(1) == ctx.q());
        // numeric embedding agrees with the float derivation
        DeformParams par = ctx.par;
        CHECK(std::abs(ctx.q().to_complex() - par.q) < 1e-14);
        CHECK(std::abs(ctx.z().to_complex() - par.z) < 1e-14);
        CHECK(std::abs(ctx.hbar().to_complex().real() - par.hbar) < 1e-13);
    }
}

TEST_CASE("exact context rejects the pole") {
    CHECK_THROWS_AS(ExactCtx::make(Rational(2), 1, 2), PoleError);
}

TEST_CASE("unreduced fractions are normalized") {
    DeformParams par = derive_params(2.0, 2, 10);
    CHECK(par.theta_rational->first == 1);
    CHECK(par.theta_rational->second == 5);
}
