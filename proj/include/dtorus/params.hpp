#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "dtorus/rational.hpp"

namespace dtorus {

/// Parameter pack (mu, theta) with the derived constants
///   q = e^{2 pi i theta},  hbar = tan(pi theta),
///   z = e^{i pi theta} / (2 i cos pi theta)   (Re z = hbar/2, Im z = -1/2).
/// The admissible flag records |mu cos pi theta| > 1 and mu > 0, the regime
/// in which the torus-side constructions are defined.
struct DeformParams {
    double mu = 0.0;
    double theta = 0.0;
    std::optional<std::pair<long, long>> theta_rational;  // reduced (p, N), N >= 1
    std::optional<Rational> mu_rational;

    std::complex<double> q;
    std::complex<double> z;
    double hbar = 0.0;
    bool admissible = false;

    std::complex<double> zbar() const { return std::conj(z); }
    std::complex<double> qbar() const { return std::conj(q); }
    // Principal convention: q^{1/2} = e^{i pi theta}.
    std::complex<double> q_half() const;
    double cos_pi_theta() const;

    void require_admissible(const char* where) const;
};

/// Throws PoleError when theta = 1/2 (mod 1).
DeformParams derive_params(double mu, double theta);

/// Rational-theta route: theta = p/N (reduced internally). Also records a
/// rational mu when one is supplied, enabling the exact backend.
DeformParams derive_params(double mu, long p, long N);
DeformParams derive_params(const Rational& mu, long p, long N);

}  // namespace dtorus
