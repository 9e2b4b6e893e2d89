#include "dtorus/cstar.hpp"

#include <cmath>
#include <sstream>

#include "dtorus/coeff.hpp"
#include "dtorus/errors.hpp"

namespace dtorus {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

ClockShiftPair clock_shift(int N, long p) {
    if (N < 1) throw Error("clock_shift: N must be >= 1");
    if (std::gcd(std::abs(p), static_cast<long>(N)) != 1) throw Error("clock_shift: gcd(p, N) must be 1");
    ClockShiftPair pair;
    pair.N = N;
    pair.p = p;
    pair.U = Matrix::Zero(N, N);
    pair.V = Matrix::Zero(N, N);
    for (int l = 0; l < N; ++l) {
        pair.U(l, l) = std::polar(1.0, 2.0 * M_PI * static_cast<double>(p) * l / N);
        pair.V((l - 1 + N) % N, l) = 1.0;  // V e_l = e_{l-1}, so VU = e^{2 pi i p/N} UV
    }
    return pair;
}

Matrix r_element(const ClockShiftPair& pair, const DeformParams& par, std::complex<double> u) {
    const Matrix& U = pair.U;
    return par.mu * Matrix::Identity(pair.N, pair.N) + par.z * u * U +
           std::conj(par.z * u) * U.adjoint();
}

SpectralReport spectral_check(const DeformParams& par, int N, long p, std::size_t phase_count) {
    par.require_admissible("spectral_check");
    ClockShiftPair pair = clock_shift(N, p);
    SpectralReport report;
    report.phases = phase_count;
    report.bound = par.mu - 1.0 / std::abs(par.cos_pi_theta());
    report.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < phase_count; ++k) {
        const double phi = 2.0 * static_cast<double>(k) / static_cast<double>(phase_count);
        Matrix R = r_element(pair, par, std::polar(1.0, M_PI * phi));
        Eigen::SelfAdjointEigenSolver<Matrix> es(R);
        report.min_eigenvalue = std::min(report.min_eigenvalue, es.eigenvalues().minCoeff());
    }
    report.pass = report.min_eigenvalue >= report.bound - 1e-12;
    if (!report.pass) {
        std::ostringstream os;
        os << "spectral_check: min eigenvalue " << report.min_eigenvalue << " below bound " << report.bound;
        throw SpectralViolation(os.str());
    }
    return report;
}

namespace {

Matrix hermitian_eig_apply(const Matrix& M, double floor, double (*fn)(double), const char* where) {
    if (M.rows() != M.cols()) throw Error(std::string(where) + ": matrix must be square");
    if (operator_norm(M - M.adjoint()) > 1e-10)
        throw Error(std::string(where) + ": matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(M);
    const auto& vals = es.eigenvalues();
    if (vals.minCoeff() <= floor) {
        std::ostringstream os;
        os << where << ": minimum eigenvalue " << vals.minCoeff() << " at or below floor " << floor;
        throw NotPositive(os.str());
    }
    Eigen::VectorXd mapped(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i) mapped(i) = fn(vals(i));
    return es.eigenvectors() * mapped.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
           es.eigenvectors().adjoint();
}

double sqrt_fn(double x) { return std::sqrt(x); }
double inv_sqrt_fn(double x) { return 1.0 / std::sqrt(x); }

}  // namespace

Matrix hermitian_sqrt(const Matrix& M, double floor) {
    return hermitian_eig_apply(M, floor, sqrt_fn, "hermitian_sqrt");
}

Matrix hermitian_inv_sqrt(const Matrix& M, double floor) {
    return hermitian_eig_apply(M, floor, inv_sqrt_fn, "hermitian_inv_sqrt");
}

Matrix phi_image_w(const ClockShiftPair& pair, const DeformParams& par) {
    return hermitian_sqrt(r_element(pair, par, 1.0)) * pair.V;
}

template <class C>
Matrix phi_map(const NCPoly<C>& p, const ClockShiftPair& pair, const DeformParams& par) {
    par.require_admissible("phi_map");
    if (p.alphabet() != Alphabet::torus) throw AlphabetMismatch("phi_map: torus alphabet required");
    const Matrix imgW = phi_image_w(pair, par);
    const Matrix imgWs = imgW.adjoint();
    const Matrix& imgL = pair.U;
    const Matrix imgLs = pair.U.adjoint();
    Matrix acc = Matrix::Zero(pair.N, pair.N);
    for (const auto& [w, c] : p.terms()) {
        Matrix m = Matrix::Identity(pair.N, pair.N);
        for (Letter l : w.letters()) {
            switch (l) {
                case Letter::W: m = m * imgW; break;
                case Letter::Ws: m = m * imgWs; break;
                case Letter::L: m = m * imgL; break;
                case Letter::Ls: m = m * imgLs; break;
                default: throw AlphabetMismatch("phi_map: torus alphabet required");
            }
        }
        acc += coeff_to_complex(c) * m;
    }
    return acc;
}

template Matrix phi_map<std::complex<double>>(const NCPoly<std::complex<double>>&, const ClockShiftPair&,
                                              const DeformParams&);
template Matrix phi_map<Cyclo>(const NCPoly<Cyclo>&, const ClockShiftPair&, const DeformParams&);

IntertwineReport intertwine_check(const ClockShiftPair& pair, const DeformParams& par) {
    par.require_admissible("intertwine_check");
    IntertwineReport report;
    auto shifted_residual = [&](long k) {
        const std::complex<double> qk = std::pow(par.q, static_cast<double>(k));
        const Matrix lhs = hermitian_sqrt(r_element(pair, par, qk)) * pair.V;
        const Matrix rhs = pair.V * hermitian_sqrt(r_element(pair, par, qk * std::conj(par.q)));
        return operator_norm(lhs - rhs);
    };
    report.residual_main = shifted_residual(0);
    for (long k = -3; k <= 3; ++k) report.residual_shifted.push_back(shifted_residual(k));
    report.max_residual = report.residual_main;
    for (double r : report.residual_shifted) report.max_residual = std::max(report.max_residual, r);
    return report;
}

RoundtripReport phi_inverse_roundtrip(const ClockShiftPair& pair, const DeformParams& par) {
    par.require_admissible("phi_inverse_roundtrip");
    RoundtripReport report;
    const int N = pair.N;
    const Matrix I = Matrix::Identity(N, N);

    // Clock/shift side: phi(W), phi(Lambda), then phi^{-1}(V) through them.
    const Matrix wA = phi_image_w(pair, par);
    const Matrix rOfU = r_element(pair, par, 1.0);
    const Matrix vBack = hermitian_inv_sqrt(rOfU) * wA;  // phi(phi^{-1}(V))
    report.v_roundtrip = operator_norm(vBack - pair.V);
    report.u_roundtrip = 0.0;  // phi(phi^{-1}(U)) = phi(Lambda) = U identically

    // Representation side: phi^{-1}(V) = (mu + z L + zbar L*)^{-1/2} W inside
    // a torus representation at the same (N, p, mu).
    MatrixRep rep = torus_rep(N, pair.p, par.mu);
    const Matrix rA = par.mu * I + par.z * rep.Lambda + std::conj(par.z) * rep.Lambda.adjoint();
    const Matrix vImg = hermitian_inv_sqrt(rA) * rep.W;
    report.v_unitarity = operator_norm(vImg.adjoint() * vImg - I);
    const Matrix wBack = hermitian_sqrt(rA) * vImg;  // phi applied to phi^{-1}(V) with U' = Lambda
    report.w_roundtrip = operator_norm(wBack - rep.W);
    return report;
}

double independence_evidence(const DeformParams& par, const ClockShiftPair& pair,
                             const std::vector<std::pair<long, long>>& index_box) {
    par.require_admissible("independence_evidence");
    const std::size_t n = index_box.size();
    if (n > static_cast<std::size_t>(pair.N) * static_cast<std::size_t>(pair.N)) {
        std::ostringstream os;
        os << "independence_evidence: box of " << n << " indices exceeds N^2 = " << pair.N * pair.N;
        throw BoxTooLarge(os.str());
    }
    const Matrix imgW = phi_image_w(pair, par);
    std::vector<Matrix> images;
    images.reserve(n);
    for (const auto& [m1, m2] : index_box) {
        if (m2 < 0) throw Error("independence_evidence: T indices require m2 >= 0");
        Matrix m = Matrix::Identity(pair.N, pair.N);
        const Matrix uPow = (m1 >= 0) ? pair.U : Matrix(pair.U.adjoint());
        for (long k = 0; k < std::abs(m1); ++k) m = m * uPow;
        for (long k = 0; k < m2; ++k) m = m * imgW;
        // T_m = q^{m1 m2 / 2} L^{m1} W^{m2}
        m *= std::polar(1.0, M_PI * par.theta * static_cast<double>(m1) * static_cast<double>(m2));
        images.push_back(std::move(m));
    }
    Matrix gram(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) gram(a, b) = (images[a].adjoint() * images[b]).trace();
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    return es.eigenvalues().minCoeff();
}

}  // namespace dtorus
