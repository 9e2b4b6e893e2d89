#pragma once

#include <cmath>
#include <complex>
#include <numeric>

#include "dtorus/cyclotomic.hpp"
#include "dtorus/errors.hpp"
#include "dtorus/params.hpp"

namespace dtorus {

// Uniform coefficient helpers over the two domains.
inline std::complex<double> coeff_conj(const std::complex<double>& c) { return std::conj(c); }
inline Cyclo coeff_conj(const Cyclo& c) { return c.conj(); }

inline bool coeff_is_zero(const std::complex<double>& c) { return c.real() == 0.0 && c.imag() == 0.0; }
inline bool coeff_is_zero(const Cyclo& c) { return c.is_zero(); }

inline std::complex<double> coeff_to_complex(const std::complex<double>& c) { return c; }
inline std::complex<double> coeff_to_complex(const Cyclo& c) { return c.to_complex(); }

inline std::complex<double> coeff_inverse(const std::complex<double>& c) { return 1.0 / c; }
inline Cyclo coeff_inverse(const Cyclo& c) { return c.inverse(); }

/// Floating coefficient backend: plain complex<double> with a tolerance for
/// equality checks. Works for any real theta.
struct FloatCtx {
    using C = std::complex<double>;

    DeformParams par;
    double tol = 1e-12;

    static FloatCtx make(const DeformParams& p, double tolerance = 1e-12) {
        FloatCtx ctx;
        ctx.par = p;
        ctx.tol = tolerance;
        return ctx;
    }

    C czero() const { return {0.0, 0.0}; }
    C cone() const { return {1.0, 0.0}; }
    C q() const { return par.q; }
    C qbar() const { return std::conj(par.q); }
    C z() const { return par.z; }
    C zbar() const { return std::conj(par.z); }
    C mu() const { return {par.mu, 0.0}; }
    C hbar() const { return {par.hbar, 0.0}; }
    C imag_unit() const { return {0.0, 1.0}; }
    // (q^{1/2})^k with the principal branch q^{1/2} = e^{i pi theta}.
    C q_half_pow(long k) const { return std::polar(1.0, M_PI * par.theta * static_cast<double>(k)); }
    C from_rational(const Rational& r) const { return {to_double(r), 0.0}; }

    bool coeff_equal(const C& a, const C& b) const { return std::abs(a - b) <= tol; }
    static constexpr bool exact = false;
};

/// Exact coefficient backend for theta = p/N and rational mu. Constants live
/// in Q(zeta_{4N}): the 4N-th root is needed because z and hbar involve the
/// imaginary unit, which Q(zeta_{2N}) lacks for odd N.
struct ExactCtx {
    using C = Cyclo;

    DeformParams par;  // float shadow (admissibility flag etc.)
    FieldPtr field;
    long p = 0;
    long N = 1;
    Rational mu_rat;

    static ExactCtx make(const Rational& mu, long p, long N) {
        if (N < 1) throw Error("ExactCtx: denominator must be >= 1");
        long g = std::gcd(std::abs(p), N);
        if (g > 1) {
            p /= g;
            N /= g;
        }
        ExactCtx ctx;
        ctx.par = derive_params(mu, p, N);  // throws PoleError at theta = 1/2
        ctx.field = CycloField::make(4 * N);
        ctx.p = p;
        ctx.N = N;
        ctx.mu_rat = mu;
        return ctx;
    }

    C czero() const { return field->zero(); }
    C cone() const { return field->one(); }
    C q() const { return field->zeta_pow(4 * p); }
    C qbar() const { return field->zeta_pow(-4 * p); }
    C imag_unit() const { return field->zeta_pow(N); }
    C mu() const { return field->from_rational(mu_rat); }
    // 2 cos(pi theta) = zeta^{2p} + zeta^{-2p}
    C two_cos() const { return field->zeta_pow(2 * p) + field->zeta_pow(-2 * p); }
    C z() const { return field->zeta_pow(2 * p) * (imag_unit() * two_cos()).inverse(); }
    C zbar() const { return z().conj(); }
    C hbar() const {
        return (field->zeta_pow(2 * p) - field->zeta_pow(-2 * p)) * (imag_unit() * two_cos()).inverse();
    }
    C q_half_pow(long k) const { return field->zeta_pow(2 * p * k); }
    C from_rational(const Rational& r) const { return field->from_rational(r); }

    bool coeff_equal(const C& a, const C& b) const { return a == b; }
    static constexpr bool exact = true;
};

}  // namespace dtorus
