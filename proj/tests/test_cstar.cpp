#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dtorus/cstar.hpp"
#include "dtorus/rewrite.hpp"

using namespace dtorus;

namespace {

NCPoly<std::complex<double>> random_torus_poly(std::mt19937_64& rng, int max_len) {
    NCPoly<std::complex<double>> p(Alphabet::torus);
    std::uniform_int_distribution<int> letter(0, 3), len(0, max_len), terms(1, 3);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        Word w(Alphabet::torus);
        const int L = len(rng);
        for (int i = 0; i < L; ++i) w.push(static_cast<Letter>(letter(rng)));
        p.add_term(w, {coef(rng), coef(rng)});
    }
    return p;
}

Matrix random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = std::complex<double>(g(rng), g(rng));
    Eigen::HouseholderQR<Matrix> qr(a);
    return qr.householderQ();
}

}  // namespace

TEST_CASE("clock and shift: the Pauli case and exact commutation") {
    ClockShiftPair p2 = clock_shift(2, 1);
    CHECK(p2.U(0, 0) == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(p2.U(1, 1) - std::complex<double>(-1.0, 0.0)) < 1e-15);
    CHECK(p2.V(0, 1) == std::complex<double>(1.0, 0.0));
    CHECK(p2.V(1, 0) == std::complex<double>(1.0, 0.0));
    CHECK(operator_norm(p2.V * p2.U + p2.U * p2.V) < 1e-15);  // VU = -UV

    for (auto [N, p] : {std::pair<int, long>{5, 1}, {8, 3}, {11, 1}}) {
        ClockShiftPair pair = clock_shift(N, p);
        const std::complex<double> q = std::polar(1.0, 2.0 * M_PI * p / N);
        CHECK(operator_norm(pair.V * pair.U - q * pair.U * pair.V) < 1e-14);
        Matrix I = Matrix::Identity(N, N);
        Matrix un = I, vn = I;
        for (int k = 0; k < N; ++k) {
            un = un * pair.U;
            vn = vn * pair.V;
        }
        CHECK(operator_norm(un - I) < 1e-13);  // U^N = 1
        CHECK(operator_norm(vn - I) < 1e-13);  // V^N = 1
        CHECK(std::abs(pair.U.trace()) < 1e-13);  // roots of unity sum to zero
        CHECK(std::abs(pair.V.trace()) < 1e-13);
    }
    CHECK_THROWS_AS(clock_shift(6, 2), Error);  // gcd(p, N) != 1
}

TEST_CASE("spectral lemma bound over the phase grid") {
    DeformParams par = derive_params(2.0, 1, 5);
    SpectralReport rep = spectral_check(par, 5, 1, 64);
    CHECK(rep.bound == doctest::Approx(2.0 - 1.0 / std::cos(M_PI / 5.0)));
    CHECK(rep.bound == doctest::Approx(0.76393).epsilon(1e-4));
    CHECK(rep.min_eigenvalue >= rep.bound - 1e-12);
    CHECK(rep.pass);

    DeformParams par3 = derive_params(3.0, 1, 3);
    SpectralReport rep3 = spectral_check(par3, 3, 1, 64);
    CHECK(rep3.bound == doctest::Approx(1.0));
    CHECK(rep3.min_eigenvalue >= 1.0 - 1e-12);

    // the admissibility gate fires before any spectral claim
    DeformParams bad = derive_params(1.0, 1, 3);
    CHECK_THROWS_AS(spectral_check(bad, 3, 1, 16), InadmissibleParams);
}

TEST_CASE("hermitian square root") {
    Matrix I = Matrix::Identity(3, 3);
    CHECK(operator_norm(hermitian_sqrt(I) - I) < 1e-14);

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    Matrix s = hermitian_sqrt(d);
    CHECK(s(0, 0).real() == doctest::Approx(2.0));
    CHECK(s(1, 1).real() == doctest::Approx(3.0));

    DeformParams par = derive_params(2.0, 1, 5);
    ClockShiftPair pair = clock_shift(5, 1);
    Matrix R = r_element(pair, par, 1.0);
    Matrix sr = hermitian_sqrt(R);
    CHECK(operator_norm(sr * sr - R) < 1e-12);
    CHECK(operator_norm(sr - sr.adjoint()) < 1e-12);  // Hermitian positive result
    Matrix isr = hermitian_inv_sqrt(R);
    CHECK(operator_norm(isr * sr - Matrix::Identity(5, 5)) < 1e-12);

    Matrix neg = Matrix::Zero(2, 2);
    neg(0, 0) = 1.0;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(hermitian_sqrt(neg), NotPositive);
    Matrix nonherm = Matrix::Zero(2, 2);
    nonherm(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_sqrt(nonherm), Error);
}

TEST_CASE("hermitian_sqrt commutes with unitary conjugation") {
    std::mt19937_64 rng(21);
    DeformParams par = derive_params(2.0, 1, 5);
    ClockShiftPair pair = clock_shift(5, 1);
    Matrix R = r_element(pair, par, 1.0);
    for (int t = 0; t < 20; ++t) {
        Matrix G = random_unitary(5, rng);
        Matrix lhs = hermitian_sqrt(G * R * G.adjoint());
        Matrix rhs = G * hermitian_sqrt(R) * G.adjoint();
        CHECK(operator_norm(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("phi maps every defining relation to zero") {
    for (auto [mu, p, N] : {std::tuple<double, long, int>{2.0, 1, 5}, {3.0, 1, 3}, {4.0, 3, 8}}) {
        DeformParams par = derive_params(mu, p, static_cast<long>(N));
        ClockShiftPair pair = clock_shift(N, p);
        FloatCtx ctx = FloatCtx::make(par);
        auto sys = standard_system(ctx);
        for (const auto& rel : relation_polynomials(sys, ctx.cone()))
            CHECK(operator_norm(phi_map(rel, pair, par)) < 1e-12);
        // phi(1) = I
        CHECK(operator_norm(phi_map(NCPoly<std::complex<double>>::unit(Alphabet::torus, ctx.cone()), pair, par) -
                            Matrix::Identity(N, N)) < 1e-15);
    }
}

TEST_CASE("phi is *-compatible and consistent with rewriting") {
    DeformParams par = derive_params(2.0, 1, 5);
    ClockShiftPair pair = clock_shift(5, 1);
    FloatCtx ctx = FloatCtx::make(par);
    auto sys = standard_system(ctx);
    std::mt19937_64 rng(33);
    double worst_star = 0.0, worst_nf = 0.0;
    for (int t = 0; t < 100; ++t) {
        auto p = random_torus_poly(rng, 5);
        worst_star = std::max(worst_star,
                              operator_norm(phi_map(p.adjoint(), pair, par) - phi_map(p, pair, par).adjoint()));
        worst_nf =
            std::max(worst_nf, operator_norm(phi_map(sys.normal_form(p), pair, par) - phi_map(p, pair, par)));
    }
    CHECK(worst_star < 1e-12);
    CHECK(worst_nf < 1e-10);
}

TEST_CASE("intertwining sqrt(R) V = V sqrt(R(qbar))") {
    DeformParams par = derive_params(2.0, 1, 5);
    ClockShiftPair pair = clock_shift(5, 1);
    IntertwineReport rep = intertwine_check(pair, par);
    CHECK(rep.residual_main < 1e-12);
    CHECK(rep.max_residual < 1e-12);
    CHECK(rep.residual_shifted.size() == 7);

    // periodicity: the k = 0 and k = N shifts give identical residuals
    auto res_k = [&](long k) {
        const std::complex<double> qk = std::pow(par.q, static_cast<double>(k));
        return operator_norm(hermitian_sqrt(r_element(pair, par, qk)) * pair.V -
                             pair.V * hermitian_sqrt(r_element(pair, par, qk * std::conj(par.q))));
    };
    CHECK(std::abs(res_k(0) - res_k(5)) < 1e-12);

    // fault injection: the swapped order V sqrt(R(q)) is O(1) wrong
    Matrix lhs = hermitian_sqrt(r_element(pair, par, 1.0)) * pair.V;
    Matrix wrong = pair.V * hermitian_sqrt(r_element(pair, par, par.q));
    CHECK(operator_norm(lhs - wrong) > 0.1);
}

TEST_CASE("phi and phi^{-1} roundtrip on the generators") {
    for (auto [mu, p, N] : {std::tuple<double, long, int>{2.0, 1, 5}, {4.0, 3, 8}}) {
        DeformParams par = derive_params(mu, p, static_cast<long>(N));
        ClockShiftPair pair = clock_shift(N, p);
        RoundtripReport rep = phi_inverse_roundtrip(pair, par);
        CHECK(rep.v_roundtrip < 1e-10);
        CHECK(rep.u_roundtrip == 0.0);
        CHECK(rep.v_unitarity < 1e-10);
        CHECK(rep.w_roundtrip < 1e-10);
    }
}

TEST_CASE("independence evidence via the Gram matrix") {
    DeformParams par = derive_params(2.0, 1, 11);
    ClockShiftPair pair = clock_shift(11, 1);
    std::vector<std::pair<long, long>> box;
    for (long m1 = -2; m1 <= 2; ++m1)
        for (long m2 = 0; m2 <= 2; ++m2) box.emplace_back(m1, m2);
    REQUIRE(box.size() == 15);
    CHECK(independence_evidence(par, pair, box) > 1e-8);

    // singleton box: Gram = [N], the squared norm of the identity
    CHECK(independence_evidence(par, pair, {{0, 0}}) == doctest::Approx(11.0));

    // duplicated index forces a zero eigenvalue
    CHECK(independence_evidence(par, pair, {{1, 1}, {1, 1}}) == doctest::Approx(0.0).epsilon(1e-10));

    // box larger than N^2 is rejected
    ClockShiftPair small = clock_shift(2, 1);
    DeformParams spar = derive_params(3.0, 1, 2 + 1);  // any admissible params
    std::vector<std::pair<long, long>> big;
    for (long m1 = -2; m1 <= 2; ++m1)
        for (long m2 = 0; m2 <= 2; ++m2) big.emplace_back(m1, m2);
    CHECK_THROWS_AS(independence_evidence(spar, small, big), BoxTooLarge);
}
