#include "dtorus/module.hpp"

#include <cmath>
#include <sstream>

#include "dtorus/coeff.hpp"
#include "dtorus/errors.hpp"

namespace dtorus {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
using Cplx = std::complex<double>;
}  // namespace

ModuleParams ModuleParams::make(long m, long n, const DeformParams& par) {
    if (n < 1) throw Error("ModuleParams: n must be >= 1");
    ModuleParams mp;
    mp.m = m;
    mp.n = n;
    mp.par = par;
    mp.eps = static_cast<double>(m) / static_cast<double>(n) + par.theta;
    return mp;
}

// ---- function nodes ------------------------------------------------------

namespace {

struct ConstNode final : FnNode {
    Cplx c;
    explicit ConstNode(Cplx v) : c(v) {}
    Cplx eval(double, long) const override { return c; }
    Fn derivative() const override { return std::make_shared<ConstNode>(Cplx{0.0, 0.0}); }
};

struct PolyNode final : FnNode {
    std::vector<Cplx> coeffs;  // ascending
    explicit PolyNode(std::vector<Cplx> c) : coeffs(std::move(c)) {}
    Cplx eval(double x, long) const override {
        Cplx acc{0.0, 0.0};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Fn derivative() const override {
        if (coeffs.size() <= 1) return std::make_shared<ConstNode>(Cplx{0.0, 0.0});
        std::vector<Cplx> d(coeffs.size() - 1);
        for (std::size_t j = 1; j < coeffs.size(); ++j) d[j - 1] = coeffs[j] * static_cast<double>(j);
        return std::make_shared<PolyNode>(std::move(d));
    }
};

struct AddNode final : FnNode {
    Fn a, b;
    AddNode(Fn x, Fn y) : a(std::move(x)), b(std::move(y)) {}
    Cplx eval(double x, long k) const override { return a->eval(x, k) + b->eval(x, k); }
    Fn derivative() const override { return std::make_shared<AddNode>(a->derivative(), b->derivative()); }
};

struct MulNode final : FnNode {
    Fn a, b;
    MulNode(Fn x, Fn y) : a(std::move(x)), b(std::move(y)) {}
    Cplx eval(double x, long k) const override { return a->eval(x, k) * b->eval(x, k); }
    Fn derivative() const override {
        return std::make_shared<AddNode>(std::make_shared<MulNode>(a->derivative(), b),
                                         std::make_shared<MulNode>(a, b->derivative()));
    }
};

struct ScaleNode final : FnNode {
    Cplx c;
    Fn f;
    ScaleNode(Cplx v, Fn g) : c(v), f(std::move(g)) {}
    Cplx eval(double x, long k) const override { return c * f->eval(x, k); }
    Fn derivative() const override { return std::make_shared<ScaleNode>(c, f->derivative()); }
};

struct ShiftNode final : FnNode {
    double dx;
    long dk;
    Fn f;
    ShiftNode(double sx, long sk, Fn g) : dx(sx), dk(sk), f(std::move(g)) {}
    Cplx eval(double x, long k) const override { return f->eval(x - dx, k - dk); }
    Fn derivative() const override { return std::make_shared<ShiftNode>(dx, dk, f->derivative()); }
};

struct GaussNode final : FnNode {
    double alpha;
    explicit GaussNode(double a) : alpha(a) {}
    Cplx eval(double x, long) const override { return std::exp(-alpha * x * x); }
    Fn derivative() const override {
        return std::make_shared<MulNode>(std::make_shared<PolyNode>(std::vector<Cplx>{{0.0, 0.0}, {-2.0 * alpha, 0.0}}),
                                         std::make_shared<GaussNode>(alpha));
    }
};

struct PlaneWaveNode final : FnNode {
    double omega;
    explicit PlaneWaveNode(double w) : omega(w) {}
    Cplx eval(double x, long) const override { return std::polar(1.0, omega * x); }
    Fn derivative() const override {
        return std::make_shared<ScaleNode>(kI * omega, std::make_shared<PlaneWaveNode>(omega));
    }
};

struct KWeightNode final : FnNode {
    std::vector<Cplx> w;
    explicit KWeightNode(std::vector<Cplx> v) : w(std::move(v)) {}
    Cplx eval(double, long k) const override {
        const long n = static_cast<long>(w.size());
        return w[static_cast<std::size_t>(((k % n) + n) % n)];
    }
    Fn derivative() const override { return std::make_shared<ConstNode>(Cplx{0.0, 0.0}); }
};

// e^{sign * 2 pi i (x - m k/n)}
struct LambdaPhaseNode final : FnNode {
    int sign;
    long m, n;
    LambdaPhaseNode(int s, long mm, long nn) : sign(s), m(mm), n(nn) {}
    Cplx eval(double x, long k) const override {
        const double u = 2.0 * M_PI * (x - static_cast<double>(m) * k / n);
        return std::polar(1.0, sign * u);
    }
    Fn derivative() const override {
        return std::make_shared<ScaleNode>(kI * (2.0 * M_PI * sign),
                                           std::make_shared<LambdaPhaseNode>(sign, m, n));
    }
};

struct TrigNode final : FnNode {
    bool is_sin;
    long m, n;
    double phase;
    TrigNode(bool s, long mm, long nn, double ph) : is_sin(s), m(mm), n(nn), phase(ph) {}
    Cplx eval(double x, long k) const override {
        const double u = 2.0 * M_PI * (x - static_cast<double>(m) * k / n) + phase;
        return {is_sin ? std::sin(u) : std::cos(u), 0.0};
    }
    Fn derivative() const override {
        // sin' = 2 pi cos, cos' = -2 pi sin
        return std::make_shared<ScaleNode>(Cplx{is_sin ? 2.0 * M_PI : -2.0 * M_PI, 0.0},
                                           std::make_shared<TrigNode>(!is_sin, m, n, phase));
    }
};

struct RecipNode final : FnNode {
    Fn f;
    explicit RecipNode(Fn g) : f(std::move(g)) {}
    Cplx eval(double x, long k) const override {
        Cplx v = f->eval(x, k);
        if (std::abs(v) < 1e-300) throw DomainError("fn_recip: division by (near) zero");
        return 1.0 / v;
    }
    Fn derivative() const override {
        Fn f2 = std::make_shared<MulNode>(f, f);
        return std::make_shared<ScaleNode>(Cplx{-1.0, 0.0},
                                           std::make_shared<MulNode>(f->derivative(),
                                                                     std::make_shared<RecipNode>(f2)));
    }
};

struct SqrtNode final : FnNode {
    Fn f;
    explicit SqrtNode(Fn g) : f(std::move(g)) {}
    Cplx eval(double x, long k) const override {
        Cplx v = f->eval(x, k);
        if (std::abs(v.imag()) > 1e-9 || v.real() <= 0.0) {
            std::ostringstream os;
            os << "fn_sqrt: radicand " << v << " is not a positive real";
            throw DomainError(os.str());
        }
        return {std::sqrt(v.real()), 0.0};
    }
    Fn derivative() const override {
        // (sqrt f)' = f' / (2 sqrt f)
        Fn half = std::make_shared<ScaleNode>(Cplx{0.5, 0.0},
                                              std::make_shared<RecipNode>(std::make_shared<SqrtNode>(f)));
        return std::make_shared<MulNode>(f->derivative(), half);
    }
};

}  // namespace

Fn fn_const(Cplx c) { return std::make_shared<ConstNode>(c); }
Fn fn_poly(std::vector<Cplx> coeffs) { return std::make_shared<PolyNode>(std::move(coeffs)); }
Fn fn_gaussian(double alpha) { return std::make_shared<GaussNode>(alpha); }
Fn fn_plane_wave(double omega) { return std::make_shared<PlaneWaveNode>(omega); }
Fn fn_k_weights(std::vector<Cplx> weights) { return std::make_shared<KWeightNode>(std::move(weights)); }
Fn fn_add(Fn a, Fn b) { return std::make_shared<AddNode>(std::move(a), std::move(b)); }
Fn fn_mul(Fn a, Fn b) { return std::make_shared<MulNode>(std::move(a), std::move(b)); }
Fn fn_scale(Cplx c, Fn f) { return std::make_shared<ScaleNode>(c, std::move(f)); }
Fn fn_shift(double dx, long dk, Fn f) { return std::make_shared<ShiftNode>(dx, dk, std::move(f)); }
Fn fn_sqrt(Fn f) { return std::make_shared<SqrtNode>(std::move(f)); }
Fn fn_recip(Fn f) { return std::make_shared<RecipNode>(std::move(f)); }

Fn fn_lambda_phase(int sign, const ModuleParams& mp) {
    return std::make_shared<LambdaPhaseNode>(sign, mp.m, mp.n);
}

Fn fn_trig_sin(const ModuleParams& mp, double phase_offset) {
    return std::make_shared<TrigNode>(true, mp.m, mp.n, phase_offset);
}

Fn fn_trig_cos(const ModuleParams& mp, double phase_offset) {
    return std::make_shared<TrigNode>(false, mp.m, mp.n, phase_offset);
}

Fn weight_fn(const ModuleParams& mp) {
    const double c = mp.par.cos_pi_theta();
    return fn_sqrt(fn_add(fn_const({mp.par.mu, 0.0}),
                          fn_scale({1.0 / c, 0.0}, fn_trig_sin(mp, -M_PI * mp.par.theta))));
}

Fn inverse_element_base_fn(const ModuleParams& mp) {
    const double c = mp.par.cos_pi_theta();
    return fn_add(fn_const({mp.par.mu, 0.0}),
                  fn_scale({1.0 / c, 0.0}, fn_trig_sin(mp, M_PI * mp.par.theta)));
}

ModuleElement::ModuleElement(ModuleParams mp, Fn f) : mp_(mp), f_(std::move(f)), df_(f_->derivative()) {}

ModuleElement seed_gaussian(const ModuleParams& mp, double alpha) {
    return ModuleElement(mp, fn_gaussian(alpha));
}

ModuleElement random_seed(const ModuleParams& mp, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> alpha(0.3, 1.2);
    std::uniform_real_distribution<double> omega(-3.0, 3.0);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<Cplx> poly;
    const std::size_t deg = 1 + (rng() % 2);
    for (std::size_t j = 0; j <= deg; ++j) poly.push_back({coef(rng), coef(rng)});
    if (std::abs(poly[0]) < 0.3) poly[0] += Cplx{1.0, 0.0};  // keep |phi| away from 0 near x = 0
    std::vector<Cplx> kw;
    for (long k = 0; k < mp.n; ++k) {
        Cplx w{coef(rng), coef(rng)};
        if (std::abs(w) < 0.3) w += Cplx{1.0, 0.0};
        kw.push_back(w);
    }
    Fn f = fn_mul(fn_k_weights(std::move(kw)),
                  fn_mul(fn_poly(std::move(poly)), fn_mul(fn_gaussian(alpha(rng)), fn_plane_wave(omega(rng)))));
    return ModuleElement(mp, std::move(f));
}

ModuleElement act(const ModuleElement& phi, Letter g, const ModuleParams& mp) {
    mp.par.require_admissible("module act");
    const Fn& f = phi.fn();
    switch (g) {
        case Letter::L: return ModuleElement(mp, fn_mul(fn_lambda_phase(+1, mp), f));
        case Letter::Ls: return ModuleElement(mp, fn_mul(fn_lambda_phase(-1, mp), f));
        case Letter::W:
            // (phi W)(x,k) = W(x,k) phi(x - eps, k - 1)
            return ModuleElement(mp, fn_mul(weight_fn(mp), fn_shift(mp.eps, 1, f)));
        case Letter::Ws:
            // (phi W*)(x,k) = W(x+eps, k+1) phi(x+eps, k+1)
            return ModuleElement(mp, fn_shift(-mp.eps, -1, fn_mul(weight_fn(mp), f)));
        default: throw AlphabetMismatch("module act: torus alphabet required");
    }
}

template <class C>
ModuleElement act_poly(const ModuleElement& phi, const NCPoly<C>& p, const ModuleParams& mp) {
    if (p.alphabet() != Alphabet::torus) throw AlphabetMismatch("act_poly: torus alphabet required");
    Fn acc = fn_const({0.0, 0.0});
    for (const auto& [w, c] : p.terms()) {
        ModuleElement cur = phi;
        for (Letter l : w.letters()) cur = act(cur, l, mp);
        acc = fn_add(std::move(acc), fn_scale(coeff_to_complex(c), cur.fn()));
    }
    return ModuleElement(mp, std::move(acc));
}

template ModuleElement act_poly<Cplx>(const ModuleElement&, const NCPoly<Cplx>&, const ModuleParams&);
template ModuleElement act_poly<Cyclo>(const ModuleElement&, const NCPoly<Cyclo>&, const ModuleParams&);

SmoothElement derivation(Letter g, int j, const DeformParams& par, bool corrected) {
    if (j != 1 && j != 2) throw Error("derivation: direction must be 1 or 2");
    using P = NCPoly<Cplx>;
    const Alphabet A = Alphabet::torus;
    auto gen = [](Letter l, Cplx c) { return P::monomial(Word::single(l), c); };
    const P unit = P::unit(A, {1.0, 0.0});
    SmoothElement d;
    const Cplx z = par.z, zb = std::conj(par.z);
    if (j == 2) {
        // d2 L = 0, d2 W = i W
        if (g == Letter::W) d.terms.push_back({gen(Letter::W, kI), 0, unit});
        if (g == Letter::Ws) d.terms.push_back({gen(Letter::Ws, -kI), 0, unit});
        return d;
    }
    switch (g) {
        case Letter::L: d.terms.push_back({gen(Letter::L, kI), 0, unit}); break;
        case Letter::Ls: d.terms.push_back({gen(Letter::Ls, -kI), 0, unit}); break;
        case Letter::W: {
            // d1 W = (i/2)(z L - zbar L*)(mu + z L + zbar L*)^{-1} W
            // (printed variant: coefficient i, failing Leibniz)
            const Cplx c = corrected ? kI * 0.5 : kI;
            P left = gen(Letter::L, c * z);
            left += gen(Letter::Ls, -c * zb);
            d.terms.push_back({std::move(left), 1, gen(Letter::W, {1.0, 0.0})});
            break;
        }
        case Letter::Ws: {
            // adjoint of d1 W: (i c) W* (z L - zbar L*) (mu + z L + zbar L*)^{-1}
            const Cplx c = corrected ? kI * 0.5 : kI;
            P left = P::monomial(Word(A, {Letter::Ws, Letter::L}), c * z);
            left += P::monomial(Word(A, {Letter::Ws, Letter::Ls}), -c * zb);
            d.terms.push_back({std::move(left), 1, unit});
            break;
        }
        default: throw AlphabetMismatch("derivation: torus alphabet required");
    }
    return d;
}

ModuleElement act_smooth(const ModuleElement& phi, const SmoothElement& a, const ModuleParams& mp) {
    Fn acc = fn_const({0.0, 0.0});
    const Fn invg = fn_recip(inverse_element_base_fn(mp));
    for (const auto& term : a.terms) {
        ModuleElement cur = act_poly(phi, term.left, mp);
        for (int e = 0; e < term.inv_power; ++e) cur = ModuleElement(mp, fn_mul(invg, cur.fn()));
        cur = act_poly(cur, term.right, mp);
        acc = fn_add(std::move(acc), cur.fn());
    }
    return ModuleElement(mp, std::move(acc));
}

ModuleElement connection(const ModuleElement& phi, int j, const ModuleParams& mp) {
    if (j == 1) return ModuleElement(mp, fn_scale({1.0 / (2.0 * M_PI), 0.0}, phi.fn()->derivative()));
    if (j == 2) {
        if (mp.eps == 0.0) throw Error("connection: nabla_2 requires eps != 0");
        return ModuleElement(mp, fn_mul(fn_poly({Cplx{0.0, 0.0}, kI / mp.eps}), phi.fn()));
    }
    throw Error("connection: direction must be 1 or 2");
}

std::vector<SamplePoint> sample_points(const ModuleParams& mp, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xs(-3.0, 3.0);
    std::vector<SamplePoint> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        pts.push_back({xs(rng), static_cast<long>(rng() % static_cast<std::uint64_t>(mp.n))});
    return pts;
}

double leibniz_residual(const ModuleElement& phi, Letter a, int j, const ModuleParams& mp,
                        const std::vector<SamplePoint>& samples, bool corrected) {
    ModuleElement lhs = connection(act(phi, a, mp), j, mp);
    ModuleElement term1 = act(connection(phi, j, mp), a, mp);
    ModuleElement term2 = act_smooth(phi, derivation(a, j, mp.par, corrected), mp);
    double worst = 0.0;
    for (const auto& s : samples) {
        const Cplx r = lhs.value(s.x, s.k) - term1.value(s.x, s.k) - term2.value(s.x, s.k);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

template <class C>
double relation_residual(const ModuleElement& phi, const NCPoly<C>& rel, const ModuleParams& mp,
                         const std::vector<SamplePoint>& samples) {
    ModuleElement img = act_poly(phi, rel, mp);
    double worst = 0.0;
    for (const auto& s : samples) worst = std::max(worst, std::abs(img.value(s.x, s.k)));
    return worst;
}

template double relation_residual<Cplx>(const ModuleElement&, const NCPoly<Cplx>&, const ModuleParams&,
                                        const std::vector<SamplePoint>&);
template double relation_residual<Cyclo>(const ModuleElement&, const NCPoly<Cyclo>&, const ModuleParams&,
                                         const std::vector<SamplePoint>&);

CurvatureReport curvature_check(const ModuleElement& phi, const ModuleParams& mp,
                                const std::vector<SamplePoint>& samples) {
    CurvatureReport report;
    report.expected = kI / (2.0 * M_PI * mp.eps);
    ModuleElement c12 = connection(connection(phi, 2, mp), 1, mp);
    ModuleElement c21 = connection(connection(phi, 1, mp), 2, mp);
    Cplx sum{0.0, 0.0};
    std::vector<Cplx> ratios;
    for (const auto& s : samples) {
        const Cplx v = phi.value(s.x, s.k);
        if (std::abs(v) <= 0.1) continue;
        const Cplx ratio = (c12.value(s.x, s.k) - c21.value(s.x, s.k)) / v;
        ratios.push_back(ratio);
        sum += ratio;
    }
    report.used_points = ratios.size();
    if (ratios.empty()) throw Error("curvature_check: no sample point with |phi| > 0.1");
    report.constant = sum / static_cast<double>(ratios.size());
    for (const Cplx& r : ratios)
        report.max_deviation = std::max(report.max_deviation, std::abs(r - report.expected));
    return report;
}

}  // namespace dtorus
