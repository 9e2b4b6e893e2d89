#pragma once

#include <map>

#include "dtorus/coeff.hpp"
#include "dtorus/errors.hpp"
#include "dtorus/word.hpp"

namespace dtorus {

/// Finite linear combination of words with coefficients in C (Cyclo or
/// complex<double>). Canonical form: no stored zero coefficients; terms kept
/// in the total word order, so printing and iteration are deterministic.
template <class C>
class NCPoly {
public:
    using TermMap = std::map<Word, C, WordTotalLess>;

    NCPoly() = default;
    explicit NCPoly(Alphabet a) : alpha_(a) {}

    static NCPoly zero(Alphabet a) { return NCPoly(a); }

    static NCPoly monomial(Word w, C c) {
        NCPoly p(w.alphabet());
        p.add_term(std::move(w), std::move(c));
        return p;
    }

    static NCPoly unit(Alphabet a, C one) { return monomial(Word::unit(a), std::move(one)); }

    Alphabet alphabet() const { return alpha_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Largest word length present; -1 for the zero polynomial.
    long degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.size()); }

    void add_term(const Word& w, const C& c) {
        if (w.alphabet() != alpha_) throw DomainMismatch("NCPoly: word alphabet mismatch");
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        check_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }

    NCPoly& operator-=(const NCPoly& o) {
        check_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

    NCPoly operator-() const {
        NCPoly r(alpha_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    // Bilinear concatenation product; the unit word is the identity.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        a.check_alphabet(b);
        NCPoly r(a.alpha_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa.concat(wb), ca * cb);
        return r;
    }

    NCPoly scaled(const C& c) const {
        NCPoly r(alpha_);
        if (coeff_is_zero(c)) return r;
        for (const auto& [w, cw] : terms_) r.add_term(w, cw * c);
        return r;
    }

    NCPoly left_mul_word(const Word& w) const {
        NCPoly r(alpha_);
        for (const auto& [tw, c] : terms_) r.add_term(w.concat(tw), c);
        return r;
    }

    NCPoly right_mul_word(const Word& w) const {
        NCPoly r(alpha_);
        for (const auto& [tw, c] : terms_) r.add_term(tw.concat(w), c);
        return r;
    }

    // Involutive anti-homomorphism: coefficients conjugated, words reversed
    // and starred.
    NCPoly adjoint() const {
        NCPoly r(alpha_);
        for (const auto& [w, c] : terms_) r.add_term(w.adjoint(), coeff_conj(c));
        return r;
    }

    // Drops float terms of magnitude <= tol (no-op for exact coefficients,
    // which are pruned exactly by add_term).
    NCPoly pruned(double tol) const {
        NCPoly r(alpha_);
        for (const auto& [w, c] : terms_)
            if (std::abs(coeff_to_complex(c)) > tol) r.add_term(w, c);
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        return a.alpha_ == b.alpha_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

private:
    void check_alphabet(const NCPoly& o) const {
        if (alpha_ != o.alpha_) throw DomainMismatch("NCPoly: mixed alphabets");
    }

    Alphabet alpha_ = Alphabet::torus;
    TermMap terms_;
};

/// Largest coefficient magnitude of a - b under the numeric embedding; the
/// float-domain closeness measure (exact polynomials compare with ==).
template <class C>
double max_coeff_delta(const NCPoly<C>& a, const NCPoly<C>& b) {
    double m = 0.0;
    NCPoly<C> d = a - b;
    for (const auto& [w, c] : d.terms()) m = std::max(m, std::abs(coeff_to_complex(c)));
    return m;
}

}  // namespace dtorus
