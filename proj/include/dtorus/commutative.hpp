#pragma once

#include <array>
#include <map>
#include <string>

#include "dtorus/rational.hpp"

namespace dtorus {

/// Polynomial in commuting variables x, y, z with exact rational
/// coefficients. Just enough ring structure for the Poisson-bracket layer.
class Poly3 {
public:
    using Exponents = std::array<int, 3>;
    using TermMap = std::map<Exponents, Rational>;

    Poly3() = default;

    static Poly3 constant(const Rational& c);
    static Poly3 variable(int axis);  // 0 -> x, 1 -> y, 2 -> z
    static Poly3 x() { return variable(0); }
    static Poly3 y() { return variable(1); }
    static Poly3 z() { return variable(2); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exponents& e, const Rational& c);

    Poly3& operator+=(const Poly3& o);
    Poly3& operator-=(const Poly3& o);
    friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
    friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
    friend Poly3 operator*(const Poly3& a, const Poly3& b);
    Poly3 operator-() const;
    Poly3 scaled(const Rational& c) const;

    Poly3 partial(int axis) const;

    friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly3& a, const Poly3& b) { return !(a == b); }

    std::string to_string() const;

private:
    TermMap terms_;
};

/// {f, g} = grad C . (grad f x grad g), exact and symbolic.
Poly3 poisson_bracket(const Poly3& f, const Poly3& g, const Poly3& C);

/// C(x,y,z) = 1/2 (x^2 + y^2 - mu)^2 + 1/2 z^2 - 1/2, whose zero level set
/// is a sphere for mu < 1 and a torus for mu > 1.
Poly3 torus_sphere_polynomial(const Rational& mu);

}  // namespace dtorus
