#include "dtorus/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "dtorus/errors.hpp"

namespace dtorus {
namespace {

using Poly = std::vector<Rational>;  // dense, ascending degree

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Quotient and remainder of a by b (b nonzero). Exact over Q.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    trim(a);
    if (b.empty()) throw Error("polynomial division by zero");
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational c = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);  // drops the cancelled leading term, guaranteeing progress
    }
    trim(q);
    return {q, a};
}

Poly x_pow_minus_one(long n) {
    Poly p(static_cast<std::size_t>(n) + 1, Rational(0));
    p[0] = Rational(-1);
    p[static_cast<std::size_t>(n)] = Rational(1);
    return p;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(long n) {
    if (n < 1) throw Error("cyclotomic_polynomial: order must be >= 1");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built up divisor by divisor.
    std::map<long, Poly> memo;
    memo[1] = Poly{Rational(-1), Rational(1)};  // x - 1
    for (long m = 2; m <= n; ++m) {
        if (n % m != 0) continue;
        Poly num = x_pow_minus_one(m);
        Poly den{Rational(1)};
        for (long d = 1; d < m; ++d)
            if (m % d == 0) den = poly_mul(den, memo.at(d));
        auto [q, r] = poly_divmod(num, den);
        trim(r);
        if (!r.empty()) throw Error("cyclotomic_polynomial: non-exact division");
        memo[m] = q;
    }
    return memo.at(n);
}

CycloField::CycloField(long order) : order_(order) {
    if (order < 1) throw Error("CycloField: order must be >= 1");
    phi_ = cyclotomic_polynomial(order);
    degree_ = static_cast<long>(phi_.size()) - 1;
    // pow_table_[j] = zeta^j mod Phi, built by repeated multiplication by x.
    pow_table_.assign(static_cast<std::size_t>(order_), {});
    std::vector<Rational> cur(static_cast<std::size_t>(degree_), Rational(0));
    cur[0] = Rational(1);
    pow_table_[0] = cur;
    for (long j = 1; j < order_; ++j) {
        std::vector<Rational> next(static_cast<std::size_t>(degree_) + 1, Rational(0));
        for (long i = 0; i < degree_; ++i) next[static_cast<std::size_t>(i) + 1] = cur[static_cast<std::size_t>(i)];
        Rational lead = next[static_cast<std::size_t>(degree_)];
        if (lead != 0) {
            for (long i = 0; i <= degree_; ++i)
                next[static_cast<std::size_t>(i)] -= lead * phi_[static_cast<std::size_t>(i)];
        }
        next.resize(static_cast<std::size_t>(degree_));
        pow_table_[static_cast<std::size_t>(j)] = next;
        cur = std::move(next);
    }
}

FieldPtr CycloField::make(long order) {
    return std::shared_ptr<const CycloField>(new CycloField(order));
}

Cyclo CycloField::zero() const {
    return Cyclo(shared_from_this(), std::vector<Rational>(static_cast<std::size_t>(degree_), Rational(0)));
}

Cyclo CycloField::one() const { return from_rational(Rational(1)); }

Cyclo CycloField::from_rational(const Rational& r) const {
    std::vector<Rational> c(static_cast<std::size_t>(degree_), Rational(0));
    c[0] = r;
    return Cyclo(shared_from_this(), std::move(c));
}

Cyclo CycloField::zeta_pow(long k) const {
    long j = k % order_;
    if (j < 0) j += order_;
    return Cyclo(shared_from_this(), pow_table_[static_cast<std::size_t>(j)]);
}

Cyclo::Cyclo(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (static_cast<long>(coords_.size()) != field_->degree())
        throw Error("Cyclo: coordinate vector has wrong length");
}

void Cyclo::check_same_field(const Cyclo& o) const {
    if (!field_ || !o.field_ || field_->order() != o.field_->order())
        throw DomainMismatch("Cyclo: mixed cyclotomic fields");
}

bool Cyclo::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

std::optional<Rational> Cyclo::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coords_.empty() ? Rational(0) : coords_[0];
}

Cyclo Cyclo::operator-() const {
    std::vector<Rational> c(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) c[i] = -coords_[i];
    return Cyclo(field_, std::move(c));
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    a.check_same_field(b);
    const auto& F = *a.field_;
    const long d = F.degree();
    const long M = F.order();
    std::vector<Rational> acc(static_cast<std::size_t>(M), Rational(0));
    for (long i = 0; i < d; ++i) {
        if (a.coords_[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; j < d; ++j) {
            if (b.coords_[static_cast<std::size_t>(j)] == 0) continue;
            acc[static_cast<std::size_t>((i + j) % M)] +=
                a.coords_[static_cast<std::size_t>(i)] * b.coords_[static_cast<std::size_t>(j)];
        }
    }
    std::vector<Rational> res(static_cast<std::size_t>(d), Rational(0));
    for (long e = 0; e < M; ++e) {
        if (acc[static_cast<std::size_t>(e)] == 0) continue;
        const auto& pe = F.reduced_power(e);
        for (long i = 0; i < d; ++i)
            res[static_cast<std::size_t>(i)] += acc[static_cast<std::size_t>(e)] * pe[static_cast<std::size_t>(i)];
    }
    return Cyclo(a.field_, std::move(res));
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    *this = *this * o;
    return *this;
}

Cyclo Cyclo::conj() const {
    const auto& F = *field_;
    const long M = F.order();
    const long d = F.degree();
    std::vector<Rational> res(static_cast<std::size_t>(d), Rational(0));
    for (long j = 0; j < d; ++j) {
        if (coords_[static_cast<std::size_t>(j)] == 0) continue;
        const auto& pe = F.reduced_power((M - j) % M);
        for (long i = 0; i < d; ++i)
            res[static_cast<std::size_t>(i)] += coords_[static_cast<std::size_t>(j)] * pe[static_cast<std::size_t>(i)];
    }
    return Cyclo(field_, std::move(res));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw Error("Cyclo: inverse of zero");
    // Extended Euclid: gcd(Phi, a) over Q[x]; Phi is irreducible so the gcd
    // is a nonzero constant c with u*Phi + v*a = c, giving a^{-1} = v/c.
    std::vector<Rational> r0 = field_->modulus();
    std::vector<Rational> r1 = coords_;
    trim(r1);
    std::vector<Rational> s0{};            // coefficient of a in r0
    std::vector<Rational> s1{Rational(1)};  // coefficient of a in r1
    while (!(r1.size() == 1)) {
        auto [q, rem] = poly_divmod(r0, r1);
        // s_next = s0 - q*s1
        std::vector<Rational> qs = poly_mul(q, s1);
        std::vector<Rational> s_next(std::max(s0.size(), qs.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s_next[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) s_next[i] -= qs[i];
        trim(s_next);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_next);
        if (r1.empty()) throw Error("Cyclo: inverse hit zero remainder before constant gcd");
    }
    const Rational c = r1[0];
    std::vector<Rational> inv(static_cast<std::size_t>(field_->degree()), Rational(0));
    for (std::size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / c;
    // s1 has degree < deg(Phi) by the Euclid invariant, so no reduction needed.
    return Cyclo(field_, std::move(inv));
}

Cyclo Cyclo::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Cyclo base = *this;
    Cyclo acc = field_->one();
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

std::complex<double> Cyclo::to_complex() const {
    const long M = field_->order();
    long double re = 0.0L, im = 0.0L;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] == 0) continue;
        long double c = static_cast<long double>(coords_[j].get_d());
        long double ang = 2.0L * M_PIl * static_cast<long double>(j) / static_cast<long double>(M);
        re += c * std::cos(ang);
        im += c * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclo::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] == 0) continue;
        if (!first) os << " + ";
        os << coords_[j].get_str();
        if (j > 0) os << "*zeta" << field_->order() << "^" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    a.check_same_field(b);
    return a.coords_ == b.coords_;
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(text);
            return Rational(num);
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) return std::nullopt;
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace dtorus
