#include "dtorus/params.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "dtorus/errors.hpp"

namespace dtorus {
namespace {

// |mu cos(pi theta)| must exceed 1 by a genuine margin to count as
// admissible; values within this band of the boundary (e.g. mu=2, theta=1/3,
// where mu cos(pi theta) = 1 exactly but rounds to 1 + 2e-16) are rejected.
constexpr double kBoundaryGuard = 1e-9;

bool is_pole(double theta) {
    double frac = theta - std::floor(theta);
    return std::abs(frac - 0.5) < 1e-12;
}

DeformParams derive_impl(double mu, double theta) {
    if (is_pole(theta)) {
        std::ostringstream os;
        os << "theta = " << theta << " is congruent to 1/2: cos(pi theta) = 0";
        throw PoleError(os.str());
    }
    DeformParams par;
    par.mu = mu;
    par.theta = theta;
    par.q = std::polar(1.0, 2.0 * M_PI * theta);
    const double c = std::cos(M_PI * theta);
    // z = e^{i pi theta} / (2 i cos pi theta)
    par.z = std::polar(1.0, M_PI * theta) / (std::complex<double>(0.0, 2.0) * c);
    par.hbar = std::tan(M_PI * theta);
    par.admissible = mu > 0.0 && std::abs(mu * c) > 1.0 + kBoundaryGuard;
    return par;
}

}  // namespace

std::complex<double> DeformParams::q_half() const { return std::polar(1.0, M_PI * theta); }

double DeformParams::cos_pi_theta() const { return std::cos(M_PI * theta); }

void DeformParams::require_admissible(const char* where) const {
    if (!admissible) {
        std::ostringstream os;
        os << where << ": parameters (mu=" << mu << ", theta=" << theta
           << ") violate |mu cos pi theta| > 1, mu > 0";
        throw InadmissibleParams(os.str());
    }
}

DeformParams derive_params(double mu, double theta) { return derive_impl(mu, theta); }

DeformParams derive_params(double mu, long p, long N) {
    if (N < 1) throw Error("derive_params: denominator must be >= 1");
    long g = std::gcd(std::abs(p), N);
    if (g > 1) {
        p /= g;
        N /= g;
    }
    if (N % 2 == 0 && ((2 * p - N) % (2 * N) + 2 * N) % (2 * N) == 0)
        throw PoleError("theta = p/N is congruent to 1/2");
    DeformParams par = derive_impl(mu, static_cast<double>(p) / static_cast<double>(N));
    par.theta_rational = std::make_pair(p, N);
    return par;
}

DeformParams derive_params(const Rational& mu, long p, long N) {
    DeformParams par = derive_params(to_double(mu), p, N);
    par.mu_rational = mu;
    return par;
}

}  // namespace dtorus
