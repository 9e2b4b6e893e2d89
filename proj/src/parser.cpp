#include "dtorus/parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "dtorus/coeff.hpp"
#include "dtorus/errors.hpp"

namespace dtorus {
namespace {

enum class Tok {
    generator,  // W L X Y Z, payload = Letter
    unit,       // I
    constant,   // q z zbar mu hbar i
    number,     // integer or decimal literal
    plus,
    minus,
    star,
    caret,
    lparen,
    rparen,
    slash,
    end,
};

struct Token {
    Tok kind;
    std::size_t pos = 0;
    std::string text;
    Letter letter = Letter::W;
    bool decimal = false;  // number contains '.' or an exponent
};

struct Keyword {
    const char* text;
    Tok kind;
    Letter letter;
};

// Longest match first; case-sensitive (z is a constant, Z a generator).
const Keyword kKeywords[] = {
    {"zbar", Tok::constant, Letter::W}, {"hbar", Tok::constant, Letter::W},
    {"mu", Tok::constant, Letter::W},   {"q", Tok::constant, Letter::W},
    {"z", Tok::constant, Letter::W},    {"i", Tok::constant, Letter::W},
    {"W", Tok::generator, Letter::W},   {"L", Tok::generator, Letter::L},
    {"X", Tok::generator, Letter::X},   {"Y", Tok::generator, Letter::Y},
    {"Z", Tok::generator, Letter::Z},   {"I", Tok::unit, Letter::W},
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            bool decimal = false;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j < text.size() && text[j] == '.') {
                decimal = true;
                ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            }
            if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
                if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                    decimal = true;
                    j = k;
                    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                }
            }
            t.kind = Tok::number;
            t.text = text.substr(i, j - i);
            t.decimal = decimal;
            out.push_back(t);
            i = j;
            continue;
        }
        switch (c) {
            case '+': t.kind = Tok::plus; break;
            case '-': t.kind = Tok::minus; break;
            case '*': t.kind = Tok::star; break;
            case '^': t.kind = Tok::caret; break;
            case '(': t.kind = Tok::lparen; break;
            case ')': t.kind = Tok::rparen; break;
            case '/': t.kind = Tok::slash; break;
            default: {
                bool matched = false;
                for (const auto& kw : kKeywords) {
                    std::size_t len = std::char_traits<char>::length(kw.text);
                    if (text.compare(i, len, kw.text) == 0) {
                        t.kind = kw.kind;
                        t.letter = kw.letter;
                        t.text = kw.text;
                        out.push_back(t);
                        i += len;
                        matched = true;
                        break;
                    }
                }
                if (matched) continue;
                throw ParseError(i, "generator, constant, number or operator",
                                 "unexpected character '" + std::string(1, c) + "' at position " +
                                     std::to_string(i));
            }
        }
        t.text = std::string(1, c);
        out.push_back(t);
        ++i;
    }
    Token eof;
    eof.kind = Tok::end;
    eof.pos = text.size();
    out.push_back(eof);
    return out;
}

// Signed exponent, optionally over a denominator of 1 or 2: twice the value
// is returned, so "3/2" -> 3 and "2" -> 4.
struct Exponent {
    long twice = 2;
    bool half = false;  // true when the denominator was 2 and numerator odd
};

template <class Ctx>
class Parser {
public:
    using C = typename Ctx::C;
    using P = NCPoly<C>;

    Parser(const std::string& text, const Ctx& ctx) : ctx_(ctx), tokens_(lex(text)) {
        alpha_ = infer_alphabet();
    }

    P parse() {
        P value = expression();
        expect(Tok::end, "end of input");
        return value;
    }

private:
    Alphabet infer_alphabet() {
        bool torus = false, surface = false;
        for (const auto& t : tokens_) {
            if (t.kind != Tok::generator) continue;
            if (t.letter == Letter::W || t.letter == Letter::L) torus = true;
            else surface = true;
        }
        if (torus && surface)
            throw ParseError(0, "generators from a single alphabet",
                             "expression mixes torus (W, L) and surface (X, Y, Z) generators");
        return surface ? Alphabet::surface : Alphabet::torus;
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Tok k, const std::string& what) {
        if (!accept(k))
            throw ParseError(peek().pos, what, "expected " + what + " at position " + std::to_string(peek().pos));
    }

    P expression() {
        bool neg = accept(Tok::minus);
        P acc = term();
        if (neg) acc = acc.scaled(-ctx_.cone());
        while (true) {
            if (accept(Tok::plus)) {
                acc += term();
            } else if (accept(Tok::minus)) {
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    bool starts_factor(Tok k) const {
        return k == Tok::generator || k == Tok::unit || k == Tok::constant || k == Tok::number ||
               k == Tok::lparen;
    }

    P term() {
        P acc = factor();
        while (true) {
            if (peek().kind == Tok::star) {
                ++pos_;
                if (!starts_factor(peek().kind))
                    throw ParseError(peek().pos, "factor after '*'",
                                     "expected a factor after '*' at position " + std::to_string(peek().pos));
                acc = acc * factor();
            } else if (starts_factor(peek().kind)) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    P factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::generator: return generator_factor();
            case Tok::unit: {
                ++pos_;
                if (accept(Tok::caret)) {
                    Exponent e = exponent();
                    if (e.half)
                        throw ParseError(t.pos, "integer exponent", "the unit I takes integer powers only");
                }
                return P::unit(alpha_, ctx_.cone());
            }
            case Tok::constant: return constant_factor();
            case Tok::number: return number_factor();
            case Tok::lparen: {
                ++pos_;
                P inner = expression();
                expect(Tok::rparen, "')'");
                return inner;
            }
            default:
                throw ParseError(t.pos, "generator, constant, number or '('",
                                 "expected a factor at position " + std::to_string(t.pos));
        }
    }

    P generator_factor() {
        const Token& t = advance();
        Letter l = t.letter;
        if (accept(Tok::star)) l = letter_star(l);  // postfix adjoint
        long exp = 1;
        if (accept(Tok::caret)) {
            Exponent e = exponent();
            if (e.half)
                throw ParseError(t.pos, "integer exponent",
                                 "generators take integer powers only (position " + std::to_string(t.pos) + ")");
            exp = e.twice / 2;
        }
        if (exp < 0) {
            if (l == Letter::L || l == Letter::Ls) {
                l = letter_star(l);  // L^{-k} = (L*)^k
                exp = -exp;
            } else {
                throw ParseError(t.pos, "nonnegative exponent",
                                 std::string("negative powers are allowed only on L (generator ") +
                                     letter_name(l) + ")");
            }
        }
        Word w(alpha_);
        for (long k = 0; k < exp; ++k) w.push(l);
        return P::monomial(std::move(w), ctx_.cone());
    }

    C constant_value(const std::string& name, std::size_t pos) {
        if (name == "q") return ctx_.q();
        if (name == "z") return ctx_.z();
        if (name == "zbar") return ctx_.zbar();
        if (name == "mu") return ctx_.mu();
        if (name == "hbar") return ctx_.hbar();
        if (name == "i") return ctx_.imag_unit();
        throw ParseError(pos, "constant", "unknown constant " + name);
    }

    P constant_factor() {
        const Token& t = advance();
        C value = constant_value(t.text, t.pos);
        if (accept(Tok::caret)) {
            Exponent e = exponent();
            if (e.half) {
                if (t.text != "q")
                    throw ParseError(t.pos, "integer exponent",
                                     "half-integer powers are defined only for q (constant " + t.text + ")");
                return P::unit(alpha_, ctx_.q_half_pow(e.twice));
            }
            if (t.text == "q") return P::unit(alpha_, ctx_.q_half_pow(e.twice));
            return P::unit(alpha_, coeff_ipow(value, e.twice / 2));
        }
        return P::unit(alpha_, value);
    }

    P number_factor() {
        const Token& t = advance();
        C value = number_value(t);
        // rational literal a/b
        if (peek().kind == Tok::slash) {
            ++pos_;
            const Token& den = peek();
            if (den.kind != Tok::number || den.decimal)
                throw ParseError(den.pos, "integer denominator",
                                 "expected an integer denominator at position " + std::to_string(den.pos));
            ++pos_;
            if (t.decimal)
                throw ParseError(t.pos, "integer numerator", "rational literals take integer parts");
            if (mpz_class(den.text) == 0)
                throw ParseError(den.pos, "nonzero denominator", "division by zero literal");
            Rational r(mpz_class(t.text), mpz_class(den.text));
            r.canonicalize();
            value = ctx_.from_rational(r);
        }
        if (accept(Tok::caret)) {
            Exponent e = exponent();
            if (e.half)
                throw ParseError(t.pos, "integer exponent", "numeric literals take integer powers only");
            value = coeff_ipow(value, e.twice / 2);
        }
        return P::unit(alpha_, value);
    }

    C number_value(const Token& t) {
        if (t.decimal) {
            if constexpr (Ctx::exact)
                throw ParseError(t.pos, "integer or rational literal",
                                 "decimal literals require the float backend");
            else
                return C(std::stod(t.text), 0.0);
        }
        return ctx_.from_rational(Rational(mpz_class(t.text)));
    }

    C coeff_ipow(C base, long k) {
        if (k == 0) return ctx_.cone();
        if (k < 0) {
            base = coeff_inverse(base);
            k = -k;
        }
        C acc = ctx_.cone();
        while (k > 0) {
            if (k & 1L) acc = acc * base;
            base = base * base;
            k >>= 1L;
        }
        return acc;
    }

    Exponent exponent() {
        bool paren = accept(Tok::lparen);
        bool neg = accept(Tok::minus);
        const Token& num = peek();
        if (num.kind != Tok::number || num.decimal)
            throw ParseError(num.pos, "integer exponent",
                             "expected an integer exponent at position " + std::to_string(num.pos));
        ++pos_;
        long numerator = std::stol(num.text);
        long denominator = 1;
        if (accept(Tok::slash)) {
            const Token& den = peek();
            if (den.kind != Tok::number || den.decimal)
                throw ParseError(den.pos, "integer denominator", "expected an exponent denominator");
            ++pos_;
            denominator = std::stol(den.text);
            if (denominator != 1 && denominator != 2)
                throw ParseError(den.pos, "denominator 1 or 2",
                                 "exponent denominators other than 1 and 2 are not supported");
        }
        if (paren) expect(Tok::rparen, "')'");
        Exponent e;
        long num2 = (denominator == 2) ? numerator : 2 * numerator;
        if (neg) num2 = -num2;
        e.twice = num2;
        e.half = (num2 % 2 != 0);
        return e;
    }

    const Ctx& ctx_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Alphabet alpha_ = Alphabet::torus;
};

// --- canonical printing --------------------------------------------------

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Runs joined by spaces, not '*': a '*' between runs would lex as a postfix
// adjoint on the preceding generator ("W*W*" reads as two starred W's).
std::string render_word(const Word& w) {
    if (w.empty()) return "I";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w.at(j) == w.at(i)) ++j;
        if (!out.empty()) out += " ";
        out += letter_name(w.at(i));
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

// Named-constant matches, tried in order. mu precedes plain rationals so a
// coefficient equal to mu prints by name.
template <class Ctx>
std::optional<std::string> match_named(const typename Ctx::C& c, const Ctx& ctx) {
    struct Entry {
        typename Ctx::C value;
        const char* text;
    };
    const Entry entries[] = {
        {ctx.cone(), "1"},
        {-ctx.cone(), "-1"},
        {ctx.imag_unit(), "i"},
        {-ctx.imag_unit(), "-i"},
        {ctx.q(), "q"},
        {-ctx.q(), "-q"},
        {ctx.qbar(), "q^-1"},
        {-ctx.qbar(), "-q^-1"},
        {ctx.q_half_pow(1), "q^(1/2)"},
        {ctx.q_half_pow(-1), "q^(-1/2)"},
        {-ctx.q_half_pow(1), "-q^(1/2)"},
        {-ctx.q_half_pow(-1), "-q^(-1/2)"},
        {ctx.z(), "z"},
        {ctx.zbar(), "zbar"},
        {-ctx.z(), "-z"},
        {-ctx.zbar(), "-zbar"},
        {ctx.hbar(), "hbar"},
        {-ctx.hbar(), "-hbar"},
        {ctx.mu(), "mu"},
        {-ctx.mu(), "-mu"},
    };
    for (const auto& e : entries) {
        if constexpr (Ctx::exact) {
            if (c == e.value) return std::string(e.text);
        } else {
            // Tight tolerance: reprints stay within the domain's tau.
            if (std::abs(c - e.value) <= 1e-14) return std::string(e.text);
        }
    }
    return std::nullopt;
}

std::string render_rational(const Rational& r) { return r.get_str(); }

// General exact coefficient: sum of rational * i^s * q^{t/2} monomials; each
// basis power zeta^j of Q(zeta_{4N}) is expressed through i = zeta^N and
// q^{1/2} = zeta^{2p}.
std::string render_exact_general(const Cyclo& c, const ExactCtx& ctx) {
    const long M = ctx.field->order();  // 4N
    const long N = ctx.N;
    std::vector<std::string> parts;
    for (std::size_t j = 0; j < c.coords().size(); ++j) {
        Rational r = c.coords()[j];
        if (r == 0) continue;
        // solve s*N + 2*p*t = j (mod 4N)
        std::optional<std::pair<long, long>> st;
        for (long s = 0; s < 4 && !st; ++s)
            for (long t = 0; t < 2 * N && !st; ++t)
                if (((s * N + 2 * ctx.p * t) % M + M) % M == static_cast<long>(j)) st = {s, t};
        if (!st) return "(" + c.to_string() + ")";  // unreachable for constants built from q, z, mu, i
        auto [s, t] = *st;
        if (s >= 2) {  // fold i^2 = -1 into the rational
            r = -r;
            s -= 2;
        }
        bool neg = r < 0;
        Rational a = neg ? Rational(-r) : r;
        std::vector<std::string> mults;
        if (s == 1) mults.push_back("i");
        if (t != 0) {
            if (t % 2 == 0)
                mults.push_back(t == 2 ? "q" : "q^" + std::to_string(t / 2));
            else
                mults.push_back("q^(" + std::to_string(t) + "/2)");
        }
        std::string piece;
        if (a != 1 || mults.empty()) piece = render_rational(a);
        for (const auto& m : mults) {
            if (!piece.empty()) piece += "*";
            piece += m;
        }
        if (neg) piece = "-" + piece;
        parts.push_back(piece);
    }
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k == 0) {
            out = parts[k];
        } else if (!parts[k].empty() && parts[k][0] == '-') {
            out += " - " + parts[k].substr(1);
        } else {
            out += " + " + parts[k];
        }
    }
    return parts.size() > 1 ? "(" + out + ")" : out;
}

std::string render_coeff(const Cyclo& c, const ExactCtx& ctx) {
    if (auto named = match_named(c, ctx)) return *named;
    if (auto r = c.as_rational()) return render_rational(*r);
    return render_exact_general(c, ctx);
}

std::string render_coeff(const std::complex<double>& c, const FloatCtx& ctx) {
    if (auto named = match_named(c, ctx)) return *named;
    if (c.imag() == 0.0) return format_double(c.real());
    if (c.real() == 0.0) {
        if (c.imag() == 1.0) return "i";
        if (c.imag() == -1.0) return "-i";
        return format_double(c.imag()) + "*i";
    }
    std::string im = format_double(std::abs(c.imag())) + "*i";
    return "(" + format_double(c.real()) + (c.imag() < 0 ? " - " : " + ") + im + ")";
}

}  // namespace

template <class Ctx>
NCPoly<typename Ctx::C> parse_expression(const std::string& text, const Ctx& ctx) {
    return Parser<Ctx>(text, ctx).parse();
}

template <class Ctx>
std::string to_canonical_string(const NCPoly<typename Ctx::C>& p, const Ctx& ctx) {
    if (p.is_zero()) return "0";
    std::string out;
    // Descending word order: highest term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string cs = render_coeff(it->second, ctx);
        std::string ws = render_word(it->first);
        std::string term;
        if (cs == "1") {
            term = ws;
        } else if (cs == "-1") {
            term = "-" + ws;
        } else {
            term = cs + "*" + ws;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

template NCPoly<FloatCtx::C> parse_expression<FloatCtx>(const std::string&, const FloatCtx&);
template NCPoly<ExactCtx::C> parse_expression<ExactCtx>(const std::string&, const ExactCtx&);
template std::string to_canonical_string<FloatCtx>(const NCPoly<FloatCtx::C>&, const FloatCtx&);
template std::string to_canonical_string<ExactCtx>(const NCPoly<ExactCtx::C>&, const ExactCtx&);

}  // namespace dtorus
