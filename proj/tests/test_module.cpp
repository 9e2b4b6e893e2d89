#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dtorus/module.hpp"
#include "dtorus/rewrite.hpp"

using namespace dtorus;

namespace {

double max_abs_diff(const ModuleElement& a, const ModuleElement& b,
                    const std::vector<SamplePoint>& pts) {
    double worst = 0.0;
    for (const auto& s : pts) worst = std::max(worst, std::abs(a.value(s.x, s.k) - b.value(s.x, s.k)));
    return worst;
}

}  // namespace

TEST_CASE("module parameters") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 2, par);
    CHECK(mp.eps == doctest::Approx(0.7));
    ModuleParams mp01 = ModuleParams::make(0, 1, par);
    CHECK(mp01.eps == doctest::Approx(0.2));
    CHECK_THROWS_AS(ModuleParams::make(1, 0, par), Error);
}

TEST_CASE("dvalue is the analytic derivative (finite-difference cross-check)") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 2, par);
    std::mt19937_64 rng(1);
    auto pts = sample_points(mp, 200, 42);
    for (int trial = 0; trial < 5; ++trial) {
        ModuleElement phi = random_seed(mp, rng);
        // also exercise a W-acted element so weight derivatives are covered
        ModuleElement psi = act(phi, Letter::W, mp);
        for (const ModuleElement* el : {&phi, &psi}) {
            for (const auto& s : pts) {
                const double h = 1e-6;
                auto fd = (el->value(s.x + h, s.k) - el->value(s.x - h, s.k)) / (2.0 * h);
                CHECK(std::abs(fd - el->dvalue(s.x, s.k)) < 1e-8);
            }
        }
    }
}

TEST_CASE("(phi L) L* = phi pointwise") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 2, par);
    std::mt19937_64 rng(2);
    ModuleElement phi = random_seed(mp, rng);
    auto pts = sample_points(mp, 200, 7);
    ModuleElement roundtrip = act(act(phi, Letter::L, mp), Letter::Ls, mp);
    CHECK(max_abs_diff(roundtrip, phi, pts) < 1e-12);
}

TEST_CASE("((phi W) L) = q ((phi L) W) pointwise: the arel1 phase cancellation") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 2, par);
    std::mt19937_64 rng(3);
    ModuleElement phi = random_seed(mp, rng);
    auto pts = sample_points(mp, 200, 8);
    ModuleElement wl = act(act(phi, Letter::W, mp), Letter::L, mp);
    ModuleElement lw = act(act(phi, Letter::L, mp), Letter::W, mp);
    double worst = 0.0;
    for (const auto& s : pts)
        worst = std::max(worst, std::abs(wl.value(s.x, s.k) - par.q * lw.value(s.x, s.k)));
    CHECK(worst < 1e-12);
}

TEST_CASE("((phi W) W*) acts as z L + zbar L* + mu: the arel4 trigonometric identity") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 2, par);
    std::mt19937_64 rng(4);
    ModuleElement phi = random_seed(mp, rng);
    auto pts = sample_points(mp, 200, 9);
    ModuleElement lhs = act(act(phi, Letter::W, mp), Letter::Ws, mp);
    double worst = 0.0;
    for (const auto& s : pts) {
        const double u = 2.0 * M_PI * (s.x - static_cast<double>(mp.m) * s.k / mp.n);
        const double factor = par.mu + std::sin(u + M_PI * par.theta) / par.cos_pi_theta();
        worst = std::max(worst, std::abs(lhs.value(s.x, s.k) - factor * phi.value(s.x, s.k)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("right-module axiom over all generator pairs") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 2, par);
    std::mt19937_64 rng(5);
    ModuleElement phi = random_seed(mp, rng);
    auto pts = sample_points(mp, 200, 10);
    FloatCtx ctx = FloatCtx::make(par);
    using P = NCPoly<std::complex<double>>;
    for (Letter a : {Letter::L, Letter::Ls, Letter::W, Letter::Ws}) {
        for (Letter b : {Letter::L, Letter::Ls, Letter::W, Letter::Ws}) {
            P ab = P::monomial(Word(Alphabet::torus, {a, b}), ctx.cone());
            ModuleElement via_poly = act_poly(phi, ab, mp);
            ModuleElement stepwise = act(act(phi, a, mp), b, mp);
            CHECK(max_abs_diff(via_poly, stepwise, pts) < 1e-12);
        }
    }
}

TEST_CASE("all five defining relations annihilate every seed pointwise") {
    DeformParams par = derive_params(2.0, 1, 5);
    FloatCtx ctx = FloatCtx::make(par);
    auto sys = standard_system(ctx);
    auto rels = relation_polynomials(sys, ctx.cone());
    std::mt19937_64 rng(6);
    for (auto [m, n] : {std::pair<long, long>{1, 2}, {0, 1}, {2, 3}}) {
        ModuleParams mp = ModuleParams::make(m, n, par);
        auto pts = sample_points(mp, 200, 11);
        for (int trial = 0; trial < 3; ++trial) {
            ModuleElement phi = random_seed(mp, rng);
            for (const auto& rel : rels) CHECK(relation_residual(phi, rel, mp, pts) < 1e-12);
        }
    }
}

TEST_CASE("act_poly is consistent with rewriting") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 2, par);
    FloatCtx ctx = FloatCtx::make(par);
    auto sys = standard_system(ctx);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> letter(0, 3), len(0, 4);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    auto pts = sample_points(mp, 100, 12);
    ModuleElement phi = random_seed(mp, rng);
    for (int t = 0; t < 25; ++t) {
        NCPoly<std::complex<double>> p(Alphabet::torus);
        for (int terms = 0; terms < 3; ++terms) {
            Word w(Alphabet::torus);
            const int L = len(rng);
            for (int i = 0; i < L; ++i) w.push(static_cast<Letter>(letter(rng)));
            p.add_term(w, {coef(rng), coef(rng)});
        }
        ModuleElement a = act_poly(phi, sys.normal_form(p), mp);
        ModuleElement b = act_poly(phi, p, mp);
        CHECK(max_abs_diff(a, b, pts) < 1e-10);
    }
}

TEST_CASE("derivations on generators") {
    DeformParams par = derive_params(2.0, 1, 5);
    // d1 L = iL, d2 L = 0, d2 W = iW as polynomial parts
    SmoothElement d1L = derivation(Letter::L, 1, par);
    REQUIRE(d1L.terms.size() == 1);
    CHECK(d1L.terms[0].inv_power == 0);
    CHECK(d1L.terms[0].left.term_count() == 1);
    CHECK(d1L.terms[0].left.terms().begin()->second == std::complex<double>(0.0, 1.0));
    CHECK(derivation(Letter::L, 2, par).terms.empty());
    CHECK(derivation(Letter::Ls, 2, par).terms.empty());
    SmoothElement d2W = derivation(Letter::W, 2, par);
    REQUIRE(d2W.terms.size() == 1);
    CHECK(d2W.terms[0].inv_power == 0);
    SmoothElement d1W = derivation(Letter::W, 1, par);
    REQUIRE(d1W.terms.size() == 1);
    CHECK(d1W.terms[0].inv_power == 1);
}

TEST_CASE("Leibniz rule for all 8 generator-direction pairs") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 2, par);
    std::mt19937_64 rng(8);
    ModuleElement phi = random_seed(mp, rng);
    auto pts = sample_points(mp, 200, 13);
    for (Letter g : {Letter::L, Letter::Ls, Letter::W, Letter::Ws})
        for (int j : {1, 2}) CHECK(leibniz_residual(phi, g, j, mp, pts) < 1e-10);
}

TEST_CASE("the printed partial_1 W coefficient fails Leibniz at O(1)") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 2, par);
    std::mt19937_64 rng(9);
    ModuleElement phi = random_seed(mp, rng);
    auto pts = sample_points(mp, 200, 14);
    CHECK(leibniz_residual(phi, Letter::W, 1, mp, pts, true) < 1e-10);
    CHECK(leibniz_residual(phi, Letter::W, 1, mp, pts, false) > 1e-2);
    CHECK(leibniz_residual(phi, Letter::Ws, 1, mp, pts, false) > 1e-2);
}

TEST_CASE("constant curvature i/(2 pi eps) independent of seed") {
    DeformParams par = derive_params(2.0, 1, 5);
    std::mt19937_64 rng(10);
    for (auto [m, n] : {std::pair<long, long>{1, 2}, {0, 1}, {2, 3}}) {
        ModuleParams mp = ModuleParams::make(m, n, par);
        auto pts = sample_points(mp, 200, 15);
        const std::complex<double> expected(0.0, 1.0 / (2.0 * M_PI * mp.eps));
        for (int trial = 0; trial < 5; ++trial) {
            ModuleElement phi = random_seed(mp, rng);
            CurvatureReport rep = curvature_check(phi, mp, pts);
            CHECK(rep.max_deviation < 1e-12);
            CHECK(std::abs(rep.constant - expected) < 1e-12);
            CHECK(rep.used_points > 0);
        }
    }
    // (m=1, n=2, theta=1/5): eps = 0.7, constant i/(1.4 pi)
    ModuleParams mp = ModuleParams::make(1, 2, par);
    auto pts = sample_points(mp, 200, 16);
    CurvatureReport rep = curvature_check(seed_gaussian(mp), mp, pts);
    CHECK(rep.expected.imag() == doctest::Approx(1.0 / (1.4 * M_PI)));
    CHECK(rep.expected.imag() == doctest::Approx(0.22736).epsilon(1e-4));
}

TEST_CASE("nabla_1 on a Gaussian is calculus") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 2, par);
    ModuleElement g = seed_gaussian(mp, 1.0);
    ModuleElement dg = connection(g, 1, mp);
    for (double x : {-1.5, -0.3, 0.0, 0.7, 2.2}) {
        const double want = (-2.0 * x / (2.0 * M_PI)) * std::exp(-x * x);
        CHECK(std::abs(dg.value(x, 0) - want) < 1e-14);
    }
    // nabla_2 multiplies by (i/eps) x
    ModuleElement n2 = connection(g, 2, mp);
    for (double x : {-1.0, 0.5}) {
        auto want = std::complex<double>(0.0, x / mp.eps) * std::exp(-x * x);
        CHECK(std::abs(n2.value(x, 1) - want) < 1e-14);
    }
}

TEST_CASE("weight radicand respects the positivity bound at 10^4 points") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 2, par);
    Fn w = weight_fn(mp);
    const double bound = par.mu - 1.0 / std::abs(par.cos_pi_theta());
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> xs(-3.0, 3.0);
    for (int i = 0; i < 10000; ++i) {
        const double x = xs(rng);
        const long k = static_cast<long>(rng() % 2);
        const double w2 = std::norm(w->eval(x, k));  // W^2 = radicand
        CHECK(w2 >= bound - 1e-12);
    }
}

TEST_CASE("k-index arithmetic is modulo n") {
    DeformParams par = derive_params(2.0, 1, 5);
    ModuleParams mp = ModuleParams::make(1, 3, par);
    std::mt19937_64 rng(18);
    ModuleElement phi = random_seed(mp, rng);
    for (double x : {-0.4, 1.3}) {
        CHECK(std::abs(phi.value(x, 0) - phi.value(x, 3)) < 1e-15);
        CHECK(std::abs(phi.value(x, -1) - phi.value(x, 2)) < 1e-15);
    }
}
