#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "dtorus/params.hpp"
#include "dtorus/poly.hpp"

namespace dtorus {

using Matrix = Eigen::MatrixXcd;

struct RepSpec {
    enum class Family { torus, sphere };
    Family family = Family::torus;
    int N = 0;
    long p = 0;        // torus: theta = p/N
    double theta = 0;  // sphere: any theta in (0, 1/N)
    double mu = 0;     // sphere: filled by fit_mu
};

/// Finite-dimensional representation. W acts as e_{l+1} -> W_{l,l+1} e_l
/// (cyclically for the torus family); Lambda is diagonal. X, Y, Z are the
/// surface-alphabet images derived from W.
struct MatrixRep {
    RepSpec spec;
    DeformParams par;
    Matrix W;
    Matrix Lambda;  // torus family only; 0x0 otherwise

    Matrix X() const { return (W + W.adjoint()) / 2.0; }
    Matrix Y() const { return (W - W.adjoint()) / std::complex<double>(0.0, 2.0); }
    Matrix Z() const {
        return (W * W.adjoint() - W.adjoint() * W) / (2.0 * par.hbar);
    }
};

/// Largest singular value.
double operator_norm(const Matrix& A);

/// Torus-family representation at theta = p/N:
///   W_{l,l+1} = sqrt(mu + cos(2 pi l theta)/cos(pi theta)),  l = 1..N-1,
///   W_{N,1}   = sqrt(mu + 1/cos(pi theta)),
///   Lambda    = diag(e^{i(pi/2 - pi theta + 2 pi l theta)}).
/// `printed_cos_variant` uses the bare cos(theta) denominator instead of
/// cos(pi theta); it does not satisfy the defining relations and exists only
/// for the regression test documenting that.
MatrixRep torus_rep(int N, long p, double mu, bool printed_cos_variant = false);

/// Sphere-family representation, theta in (0, 1/N):
///   W_{l,l+1} = sqrt(2 sin(pi l theta) sin(pi (N-l) theta)/cos(pi theta)).
MatrixRep sphere_rep(int N, double theta);

struct ResidualEntry {
    std::string name;
    double residual;
};

struct ResidualReport {
    std::vector<ResidualEntry> entries;
    double tol = 1e-12;
    double max_residual = 0.0;
    bool pass = false;
    std::optional<double> fitted_mu;
};

/// Torus family: operator residuals of the five W/Lambda relations plus the
/// three X,Y,Z commutators. Sphere family: the commutators only, with mu
/// supplied by fit_mu.
ResidualReport relation_residuals(const MatrixRep& rep, double tol = 1e-12);

/// The scalar mu minimizing || [Y,Z] - i hbar (2X^3 + XY^2 + Y^2X - 2 mu X) ||_F;
/// the residual is affine in mu, so the least squares problem is exact.
double fit_mu(const MatrixRep& rep);

/// Evaluation homomorphism: torus words over (Lambda, W), surface words over
/// (X, Y, Z). Exact coefficients embed through their complex value.
template <class C>
Matrix evaluate(const NCPoly<C>& p, const MatrixRep& rep);

/// Rebuilds Lambda from W alone through
///   (1/2 hbar)(WW* - W*W) + (i/2)(WW* + W*W - 2 mu),
/// returning the reconstruction and its distance from the stored Lambda.
std::pair<Matrix, double> lambda_reconstruct(const MatrixRep& rep);

/// The central element in the surface alphabet, (X^2 + Y^2 - mu)^2 + Z^2.
/// Evaluates to the identity on both representation families (sphere with
/// its fitted mu) and commutes with X, Y, Z there.
NCPoly<std::complex<double>> surface_casimir_polynomial(double mu);

/// max over G in {X, Y, Z} of ||[G, evaluate(casimir)]||; the numeric
/// centrality witness.
double casimir_centrality(const MatrixRep& rep, double mu);

struct ScalingRow {
    double eps;
    int l;  // 1..N-1, plus N for the torus corner entry
    double value;
    double limit;
    double abs_err;
};

struct ScalingTable {
    std::vector<ScalingRow> rows;
    std::vector<double> eps;
    std::vector<double> max_dev;      // per ladder entry
    std::vector<double> pair_orders;  // log-ratio slope between neighbours
    double fitted_order = 0.0;        // mean of pair_orders
    double lambda_eps_drift = 0.0;    // torus: max |Lambda(eps) - Lambda(eps')|
};

/// Torus scaling: Wtilde = eps W at mu = 1/eps^2; entries tend to 1.
ScalingTable scaling_torus(int N, long p, const std::vector<double>& eps_ladder);

/// Sphere scaling: theta = eps thetatilde, Wtilde = W/eps; entries tend to
/// sqrt(2) pi thetatilde sqrt(l(N-l)).
ScalingTable scaling_sphere(int N, double theta_tilde, const std::vector<double>& eps_ladder);

}  // namespace dtorus
