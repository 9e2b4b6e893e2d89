#pragma once

#include <complex>
#include <memory>
#include <random>
#include <vector>

#include "dtorus/params.hpp"
#include "dtorus/poly.hpp"

namespace dtorus {

/// Parameters of the right module xi_{m,n} with eps = (m + n theta)/n.
struct ModuleParams {
    long m = 0;
    long n = 1;
    DeformParams par;
    double eps = 0.0;

    static ModuleParams make(long m, long n, const DeformParams& par);
};

class FnNode;
using Fn = std::shared_ptr<const FnNode>;

/// Analytic function of (x, k) on R x Z_n, closed under exact symbolic
/// differentiation in x. Every generator action and connection composes
/// these nodes, so module identities hold pointwise with no discretization.
class FnNode {
public:
    virtual ~FnNode() = default;
    virtual std::complex<double> eval(double x, long k) const = 0;
    virtual Fn derivative() const = 0;
};

Fn fn_const(std::complex<double> c);
Fn fn_poly(std::vector<std::complex<double>> coeffs);  // sum_j c_j x^j
Fn fn_gaussian(double alpha);                          // e^{-alpha x^2}
Fn fn_plane_wave(double omega);                        // e^{i omega x}
Fn fn_k_weights(std::vector<std::complex<double>> weights);  // w_{k mod n}
Fn fn_add(Fn a, Fn b);
Fn fn_mul(Fn a, Fn b);
Fn fn_scale(std::complex<double> c, Fn f);
Fn fn_shift(double dx, long dk, Fn f);  // (x, k) -> f(x - dx, k - dk)
Fn fn_sqrt(Fn f);                       // real positive radicand
Fn fn_recip(Fn f);

// e^{sign 2 pi i (x - m k / n)}: the Lambda action phase.
Fn fn_lambda_phase(int sign, const ModuleParams& mp);
// sin/cos(2 pi (x - m k / n) + phase_offset)
Fn fn_trig_sin(const ModuleParams& mp, double phase_offset);
Fn fn_trig_cos(const ModuleParams& mp, double phase_offset);

/// The weight W(x,k) = (mu + sin(2 pi (x - mk/n) - pi theta)/cos pi theta)^{1/2};
/// the radicand stays >= mu - 1/|cos pi theta| > 0 for admissible parameters.
Fn weight_fn(const ModuleParams& mp);

/// The multiplication function of mu + z Lambda + zbar Lambda*, i.e.
/// mu + sin(2 pi (x - mk/n) + pi theta)/cos pi theta.
Fn inverse_element_base_fn(const ModuleParams& mp);

class ModuleElement {
public:
    ModuleElement(ModuleParams mp, Fn f);

    const ModuleParams& params() const { return mp_; }
    const Fn& fn() const { return f_; }

    std::complex<double> value(double x, long k) const { return f_->eval(x, norm_k(k)); }
    std::complex<double> dvalue(double x, long k) const { return df_->eval(x, norm_k(k)); }

private:
    long norm_k(long k) const { return ((k % mp_.n) + mp_.n) % mp_.n; }
    ModuleParams mp_;
    Fn f_;
    Fn df_;
};

ModuleElement seed_gaussian(const ModuleParams& mp, double alpha = 1.0);
/// Gaussian x polynomial x plane wave x per-k weights, drawn from rng.
ModuleElement random_seed(const ModuleParams& mp, std::mt19937_64& rng);

/// The four right actions of Eqs-style generator maps:
///   (phi W)(x,k)  = W(x,k) phi(x-eps, k-1)
///   (phi W*)(x,k) = W(x+eps, k+1) phi(x+eps, k+1)
///   (phi L)(x,k)  = e^{2 pi i (x - mk/n)} phi(x,k),   L* conjugate.
ModuleElement act(const ModuleElement& phi, Letter g, const ModuleParams& mp);

template <class C>
ModuleElement act_poly(const ModuleElement& phi, const NCPoly<C>& p, const ModuleParams& mp);

/// Element of the smooth algebra appearing in the derivations: a sum of
/// terms left * (mu + z L + zbar L*)^{-inv_power} * right.
struct SmoothElement {
    struct Term {
        NCPoly<std::complex<double>> left;
        int inv_power = 0;
        NCPoly<std::complex<double>> right;
    };
    std::vector<Term> terms;
};

/// partial_j of a generator. The corrected flag controls the extra 1/2 on
/// partial_1 W (the printed coefficient fails the Leibniz identity and is
/// retained only for the regression test).
SmoothElement derivation(Letter g, int j, const DeformParams& par, bool corrected = true);

ModuleElement act_smooth(const ModuleElement& phi, const SmoothElement& a, const ModuleParams& mp);

/// nabla_1 = (1/2 pi) d/dx, nabla_2 = (i/eps) x. Requires eps != 0 for j = 2.
ModuleElement connection(const ModuleElement& phi, int j, const ModuleParams& mp);

struct SamplePoint {
    double x;
    long k;
};

std::vector<SamplePoint> sample_points(const ModuleParams& mp, std::size_t count, std::uint64_t seed);

/// max over samples of |nabla_j(phi a) - (nabla_j phi) a - phi (partial_j a)|.
double leibniz_residual(const ModuleElement& phi, Letter a, int j, const ModuleParams& mp,
                        const std::vector<SamplePoint>& samples, bool corrected = true);

/// max over samples of |(phi . rel)(x, k)| for a relation polynomial rel.
template <class C>
double relation_residual(const ModuleElement& phi, const NCPoly<C>& rel, const ModuleParams& mp,
                         const std::vector<SamplePoint>& samples);

struct CurvatureReport {
    std::complex<double> constant;  // fitted [nabla_1, nabla_2] phi / phi
    std::complex<double> expected;  // i/(2 pi eps)
    double max_deviation = 0.0;
    std::size_t used_points = 0;  // samples with |phi| > 0.1
};

CurvatureReport curvature_check(const ModuleElement& phi, const ModuleParams& mp,
                                const std::vector<SamplePoint>& samples);

}  // namespace dtorus
