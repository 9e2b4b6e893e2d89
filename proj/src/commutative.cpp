#include "dtorus/commutative.hpp"

#include <sstream>

#include "dtorus/errors.hpp"

namespace dtorus {

Poly3 Poly3::constant(const Rational& c) {
    Poly3 p;
    p.add_term({0, 0, 0}, c);
    return p;
}

Poly3 Poly3::variable(int axis) {
    if (axis < 0 || axis > 2) throw Error("Poly3::variable: axis out of range");
    Poly3 p;
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(axis)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void Poly3::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly3& Poly3::operator+=(const Poly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

Poly3 Poly3::operator-() const {
    Poly3 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly3 Poly3::scaled(const Rational& c) const {
    Poly3 r;
    if (c == 0) return r;
    for (const auto& [e, cw] : terms_) r.terms_.emplace(e, cw * c);
    return r;
}

Poly3 Poly3::partial(int axis) const {
    if (axis < 0 || axis > 2) throw Error("Poly3::partial: axis out of range");
    auto ax = static_cast<std::size_t>(axis);
    Poly3 r;
    for (const auto& [e, c] : terms_) {
        if (e[ax] == 0) continue;
        Exponents de = e;
        de[ax] -= 1;
        r.add_term(de, c * Rational(e[ax]));
    }
    return r;
}

std::string Poly3::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"x", "y", "z"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str();
        for (std::size_t i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            os << "*" << names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

Poly3 poisson_bracket(const Poly3& f, const Poly3& g, const Poly3& C) {
    // grad C . (grad f x grad g), written out in components.
    std::array<Poly3, 3> df{f.partial(0), f.partial(1), f.partial(2)};
    std::array<Poly3, 3> dg{g.partial(0), g.partial(1), g.partial(2)};
    std::array<Poly3, 3> dC{C.partial(0), C.partial(1), C.partial(2)};
    Poly3 r;
    r += dC[0] * (df[1] * dg[2] - df[2] * dg[1]);
    r += dC[1] * (df[2] * dg[0] - df[0] * dg[2]);
    r += dC[2] * (df[0] * dg[1] - df[1] * dg[0]);
    return r;
}

Poly3 torus_sphere_polynomial(const Rational& mu) {
    Poly3 x = Poly3::x(), y = Poly3::y(), z = Poly3::z();
    Poly3 ring = x * x + y * y - Poly3::constant(mu);
    Rational half(1, 2);
    return (ring * ring).scaled(half) + (z * z).scaled(half) - Poly3::constant(half);
}

}  // namespace dtorus
