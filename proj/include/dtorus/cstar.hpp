#pragma once

#include <vector>

#include "dtorus/matrix_reps.hpp"
#include "dtorus/params.hpp"
#include "dtorus/poly.hpp"

namespace dtorus {

/// Clock and shift matrices at theta = p/N: U = diag(omega^l) with
/// omega = e^{2 pi i p/N}, V the cyclic shift e_j -> e_{j-1}. They satisfy
/// VU = omega UV exactly and U^N = V^N = 1.
struct ClockShiftPair {
    int N = 0;
    long p = 0;
    Matrix U;
    Matrix V;
};

ClockShiftPair clock_shift(int N, long p);

/// R(u) = mu I + z u U + zbar ubar U*, Hermitian for |u| = 1; u = e^{i pi phi}.
Matrix r_element(const ClockShiftPair& pair, const DeformParams& par, std::complex<double> u);

struct SpectralReport {
    std::size_t phases = 0;
    double min_eigenvalue = 0.0;
    double bound = 0.0;  // mu - 1/|cos pi theta|
    bool pass = false;
};

/// Minimum eigenvalue of R(e^{i pi phi}) over a uniform phase grid; must stay
/// above mu - 1/|cos pi theta| (within 1e-12). A violation would falsify the
/// positivity lemma and signals an implementation error.
SpectralReport spectral_check(const DeformParams& par, int N, long p, std::size_t phase_count);

/// Hermitian square root via full eigendecomposition. Throws NotPositive when
/// the smallest eigenvalue is at or below the floor.
Matrix hermitian_sqrt(const Matrix& M, double floor = 1e-10);
Matrix hermitian_inv_sqrt(const Matrix& M, double floor = 1e-10);

/// Image of p under the *-homomorphism phi(W) = sqrt(R) V, phi(Lambda) = U.
template <class C>
Matrix phi_map(const NCPoly<C>& p, const ClockShiftPair& pair, const DeformParams& par);

// Generator images, exposed for the bridge checks.
Matrix phi_image_w(const ClockShiftPair& pair, const DeformParams& par);

struct IntertwineReport {
    double residual_main = 0.0;            // || sqrt(R(1)) V - V sqrt(R(qbar)) ||
    std::vector<double> residual_shifted;  // k-shifted versions, k in [-3, 3]
    double max_residual = 0.0;
};

IntertwineReport intertwine_check(const ClockShiftPair& pair, const DeformParams& par);

struct RoundtripReport {
    // phi then phi^{-1} on the clock/shift side: V image and unitarity.
    double v_roundtrip = 0.0;   // || phi(phi^{-1}(V)) - V ||
    double u_roundtrip = 0.0;   // || phi(phi^{-1}(U)) - U || (0 by construction)
    double v_unitarity = 0.0;   // || phi^{-1}(V)* phi^{-1}(V) - I || inside a torus rep
    double w_roundtrip = 0.0;   // || phi(phi^{-1} applied inside the rep)(W) - W ||
};

/// Evaluates phi^{-1}(V) = (mu + z Lambda + zbar Lambda*)^{-1/2} W inside a
/// torus representation with matching (N, p, mu), applies phi again, and
/// reports how far the compositions sit from the identity.
RoundtripReport phi_inverse_roundtrip(const ClockShiftPair& pair, const DeformParams& par);

/// Gram matrix of {phi(T_m)} over the index box under the Hilbert-Schmidt
/// inner product; its minimum eigenvalue is desk-scale injectivity evidence.
double independence_evidence(const DeformParams& par, const ClockShiftPair& pair,
                             const std::vector<std::pair<long, long>>& index_box);

}  // namespace dtorus
