#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dtorus/rational.hpp"

namespace dtorus {

class Cyclo;

/// The field Q(zeta_M), zeta_M = exp(2*pi*i/M). Elements are polynomials in
/// zeta reduced modulo the M-th cyclotomic polynomial Phi_M, which the field
/// computes for itself at construction. Equality of elements is exact.
class CycloField : public std::enable_shared_from_this<CycloField> {
public:
    static std::shared_ptr<const CycloField> make(long order);

    long order() const { return order_; }    // M
    long degree() const { return degree_; }  // phi(M) = deg Phi_M

    Cyclo zero() const;
    Cyclo one() const;
    Cyclo from_rational(const Rational& r) const;
    Cyclo zeta_pow(long k) const;  // zeta^k for any integer k

    // zeta^j reduced mod Phi_M, 0 <= j < M; each vector has length degree().
    const std::vector<Rational>& reduced_power(long j) const { return pow_table_[j]; }

    // Coefficients of Phi_M, ascending degree, monic, length degree()+1.
    const std::vector<Rational>& modulus() const { return phi_; }

private:
    explicit CycloField(long order);

    long order_;
    long degree_;
    std::vector<Rational> phi_;
    std::vector<std::vector<Rational>> pow_table_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

class Cyclo {
public:
    Cyclo() = default;
    Cyclo(FieldPtr field, std::vector<Rational> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    Cyclo operator-() const;
    Cyclo conj() const;     // complex conjugation, zeta -> zeta^{-1}
    Cyclo inverse() const;  // extended Euclid against Phi_M; throws on zero
    Cyclo pow(long k) const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

private:
    void check_same_field(const Cyclo& o) const;

    FieldPtr field_;
    std::vector<Rational> coords_;
};

// Cyclotomic polynomial Phi_n as integer coefficients (ascending degree).
std::vector<Rational> cyclotomic_polynomial(long n);

}  // namespace dtorus
