#include "dtorus/matrix_reps.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "dtorus/coeff.hpp"
#include "dtorus/errors.hpp"

namespace dtorus {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

double checked_sqrt(double radicand, const char* where) {
    if (radicand < 0.0) {
        std::ostringstream os;
        os << where << ": negative radicand " << radicand;
        throw DomainError(os.str());
    }
    return std::sqrt(radicand);
}

}  // namespace

double operator_norm(const Matrix& A) {
    if (A.rows() == 0 || A.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(A);
    return svd.singularValues()(0);
}

MatrixRep torus_rep(int N, long p, double mu, bool printed_cos_variant) {
    if (N < 2) throw Error("torus_rep: N must be >= 2");
    if (std::gcd(std::abs(p), static_cast<long>(N)) != 1) throw Error("torus_rep: gcd(p, N) must be 1");
    MatrixRep rep;
    rep.par = derive_params(mu, p, static_cast<long>(N));
    rep.par.require_admissible("torus_rep");
    rep.spec = RepSpec{RepSpec::Family::torus, N, p, rep.par.theta, mu};
    const double theta = rep.par.theta;
    const double denom = printed_cos_variant ? std::cos(theta) : std::cos(M_PI * theta);
    rep.W = Matrix::Zero(N, N);
    for (int l = 1; l < N; ++l)
        rep.W(l - 1, l) = checked_sqrt(mu + std::cos(2.0 * M_PI * l * theta) / denom, "torus_rep");
    rep.W(N - 1, 0) = checked_sqrt(mu + 1.0 / denom, "torus_rep");
    rep.Lambda = Matrix::Zero(N, N);
    for (int l = 1; l <= N; ++l)
        rep.Lambda(l - 1, l - 1) = std::polar(1.0, M_PI / 2.0 - M_PI * theta + 2.0 * M_PI * l * theta);
    return rep;
}

MatrixRep sphere_rep(int N, double theta) {
    if (N < 2) throw Error("sphere_rep: N must be >= 2");
    if (!(theta > 0.0 && theta < 1.0 / static_cast<double>(N))) {
        std::ostringstream os;
        os << "sphere_rep: theta = " << theta << " outside (0, 1/" << N << ")";
        throw DomainError(os.str());
    }
    MatrixRep rep;
    rep.par = derive_params(0.0, theta);  // mu unknown until fitted
    rep.spec = RepSpec{RepSpec::Family::sphere, N, 0, theta, std::nan("")};
    const double c = std::cos(M_PI * theta);
    rep.W = Matrix::Zero(N, N);
    for (int l = 1; l < N; ++l)
        rep.W(l - 1, l) =
            checked_sqrt(2.0 * std::sin(M_PI * l * theta) * std::sin(M_PI * (N - l) * theta) / c, "sphere_rep");
    return rep;
}

double fit_mu(const MatrixRep& rep) {
    if (rep.spec.family != RepSpec::Family::sphere) throw Error("fit_mu: sphere family only");
    const Matrix X = rep.X(), Y = rep.Y(), Z = rep.Z();
    const double h = rep.par.hbar;
    const Matrix A = (Y * Z - Z * Y) - kI * h * (2.0 * X * X * X + X * Y * Y + Y * Y * X);
    const Matrix B = 2.0 * kI * h * X;
    const double bb = B.squaredNorm();
    if (bb == 0.0) throw DegenerateFit("fit_mu: the coefficient matrix X vanishes");
    const double ba = (B.adjoint() * A).trace().real();
    return -ba / bb;
}

ResidualReport relation_residuals(const MatrixRep& rep, double tol) {
    ResidualReport report;
    report.tol = tol;
    const Matrix X = rep.X(), Y = rep.Y(), Z = rep.Z();
    const double h = rep.par.hbar;
    double mu = rep.spec.mu;
    if (rep.spec.family == RepSpec::Family::sphere) {
        mu = fit_mu(rep);
        report.fitted_mu = mu;
    }
    auto push = [&](const std::string& name, const Matrix& diff) {
        report.entries.push_back({name, operator_norm(diff)});
    };
    if (rep.spec.family == RepSpec::Family::torus) {
        const Matrix& W = rep.W;
        const Matrix& L = rep.Lambda;
        const Matrix Ws = W.adjoint(), Ls = L.adjoint();
        const std::complex<double> q = rep.par.q, qb = std::conj(q);
        const std::complex<double> z = rep.par.z, zb = std::conj(z);
        const Matrix I = Matrix::Identity(rep.spec.N, rep.spec.N);
        push("arel1_WL", W * L - q * L * W);
        push("arel1_WsL", Ws * L - qb * L * Ws);
        push("arel2_WsLs", Ws * Ls - q * Ls * Ws);
        push("arel2_WLs", W * Ls - qb * Ls * W);
        push("arel3_LLs", L * Ls - I);
        push("arel3_LsL", Ls * L - I);
        push("arel4_WWs", W * Ws - z * L - zb * Ls - mu * I);
        push("arel5_WsW", Ws * W + zb * L + z * Ls - mu * I);
    }
    push("comXY", (X * Y - Y * X) - kI * h * Z);
    push("comYZ", (Y * Z - Z * Y) - kI * h * (2.0 * X * X * X + X * Y * Y + Y * Y * X - 2.0 * mu * X));
    push("comZX", (Z * X - X * Z) - kI * h * (2.0 * Y * Y * Y + Y * X * X + X * X * Y - 2.0 * mu * Y));
    report.max_residual = 0.0;
    for (const auto& e : report.entries) report.max_residual = std::max(report.max_residual, e.residual);
    report.pass = report.max_residual < tol;
    return report;
}

namespace {

Matrix generator_image(Letter l, const MatrixRep& rep) {
    const bool torus = rep.spec.family == RepSpec::Family::torus;
    switch (l) {
        case Letter::W:
            if (!torus) throw AlphabetMismatch("evaluate: torus letter in sphere representation");
            return rep.W;
        case Letter::Ws:
            if (!torus) throw AlphabetMismatch("evaluate: torus letter in sphere representation");
            return rep.W.adjoint();
        case Letter::L:
            if (!torus) throw AlphabetMismatch("evaluate: torus letter in sphere representation");
            return rep.Lambda;
        case Letter::Ls:
            if (!torus) throw AlphabetMismatch("evaluate: torus letter in sphere representation");
            return rep.Lambda.adjoint();
        case Letter::X: return rep.X();
        case Letter::Y: return rep.Y();
        case Letter::Z: return rep.Z();
    }
    throw Error("evaluate: unknown letter");
}

}  // namespace

template <class C>
Matrix evaluate(const NCPoly<C>& p, const MatrixRep& rep) {
    // Torus representations carry both alphabets (X, Y, Z are derived from
    // W); sphere representations have no Lambda, so torus words are out.
    if (p.alphabet() == Alphabet::torus && rep.spec.family == RepSpec::Family::sphere)
        throw AlphabetMismatch("evaluate: torus-alphabet polynomial in a sphere representation");
    const int N = rep.spec.N;
    Matrix acc = Matrix::Zero(N, N);
    for (const auto& [w, c] : p.terms()) {
        Matrix m = Matrix::Identity(N, N);
        for (Letter l : w.letters()) m = m * generator_image(l, rep);
        acc += coeff_to_complex(c) * m;
    }
    return acc;
}

template Matrix evaluate<std::complex<double>>(const NCPoly<std::complex<double>>&, const MatrixRep&);
template Matrix evaluate<Cyclo>(const NCPoly<Cyclo>&, const MatrixRep&);

std::pair<Matrix, double> lambda_reconstruct(const MatrixRep& rep) {
    if (rep.spec.family != RepSpec::Family::torus) throw Error("lambda_reconstruct: torus family only");
    const Matrix& W = rep.W;
    const Matrix Ws = W.adjoint();
    const Matrix I = Matrix::Identity(rep.spec.N, rep.spec.N);
    const double h = rep.par.hbar;
    const Matrix rebuilt =
        (W * Ws - Ws * W) / (2.0 * h) + kI / 2.0 * (W * Ws + Ws * W - 2.0 * rep.spec.mu * I);
    return {rebuilt, operator_norm(rebuilt - rep.Lambda)};
}

NCPoly<std::complex<double>> surface_casimir_polynomial(double mu) {
    using P = NCPoly<std::complex<double>>;
    const Alphabet A = Alphabet::surface;
    P ring(A);
    ring.add_term(Word(A, {Letter::X, Letter::X}), {1.0, 0.0});
    ring.add_term(Word(A, {Letter::Y, Letter::Y}), {1.0, 0.0});
    ring.add_term(Word::unit(A), {-mu, 0.0});
    P zz = P::monomial(Word(A, {Letter::Z, Letter::Z}), {1.0, 0.0});
    return ring * ring + zz;
}

double casimir_centrality(const MatrixRep& rep, double mu) {
    const Matrix C = evaluate(surface_casimir_polynomial(mu), rep);
    double worst = 0.0;
    for (const Matrix& G : {rep.X(), rep.Y(), rep.Z()})
        worst = std::max(worst, operator_norm(G * C - C * G));
    return worst;
}

namespace {

void fit_orders(ScalingTable& table) {
    for (std::size_t i = 0; i + 1 < table.eps.size(); ++i) {
        if (table.max_dev[i + 1] == 0.0 || table.max_dev[i] == 0.0) continue;
        table.pair_orders.push_back(std::log(table.max_dev[i] / table.max_dev[i + 1]) /
                                    std::log(table.eps[i] / table.eps[i + 1]));
    }
    if (!table.pair_orders.empty()) {
        double s = 0.0;
        for (double o : table.pair_orders) s += o;
        table.fitted_order = s / static_cast<double>(table.pair_orders.size());
    }
}

}  // namespace

ScalingTable scaling_torus(int N, long p, const std::vector<double>& eps_ladder) {
    ScalingTable table;
    Matrix lambda_ref;
    for (double eps : eps_ladder) {
        const double mu = 1.0 / (eps * eps);
        MatrixRep rep = torus_rep(N, p, mu);
        double dev = 0.0;
        for (int l = 1; l < N; ++l) {
            const double v = eps * rep.W(l - 1, l).real();
            table.rows.push_back({eps, l, v, 1.0, std::abs(v - 1.0)});
            dev = std::max(dev, std::abs(v - 1.0));
        }
        const double corner = eps * rep.W(N - 1, 0).real();
        table.rows.push_back({eps, N, corner, 1.0, std::abs(corner - 1.0)});
        dev = std::max(dev, std::abs(corner - 1.0));
        table.eps.push_back(eps);
        table.max_dev.push_back(dev);
        if (lambda_ref.rows() == 0) {
            lambda_ref = rep.Lambda;
        } else {
            table.lambda_eps_drift =
                std::max(table.lambda_eps_drift, operator_norm(rep.Lambda - lambda_ref));
        }
    }
    fit_orders(table);
    return table;
}

ScalingTable scaling_sphere(int N, double theta_tilde, const std::vector<double>& eps_ladder) {
    ScalingTable table;
    for (double eps : eps_ladder) {
        const double theta = eps * theta_tilde;
        MatrixRep rep = sphere_rep(N, theta);
        double dev = 0.0;
        for (int l = 1; l < N; ++l) {
            const double v = rep.W(l - 1, l).real() / eps;
            const double limit = std::sqrt(2.0) * M_PI * theta_tilde * std::sqrt(static_cast<double>(l) * (N - l));
            table.rows.push_back({eps, l, v, limit, std::abs(v - limit)});
            dev = std::max(dev, std::abs(v - limit));
        }
        table.eps.push_back(eps);
        table.max_dev.push_back(dev);
    }
    fit_orders(table);
    return table;
}

}  // namespace dtorus
