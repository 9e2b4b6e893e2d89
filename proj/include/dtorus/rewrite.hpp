#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtorus/poly.hpp"

namespace dtorus {

template <class C>
struct RewriteRule {
    std::string name;  // "S1".."S8"
    Word lhs;          // length >= 2
    NCPoly<C> rhs;     // every monomial strictly below lhs in the reduction order
};

/// A word reducible by two rules. For an overlap, `overlap` is the minimal
/// word containing both left-hand sides; `at_left`/`at_right` are the match
/// positions of rule_left/rule_right inside it.
template <class C>
struct Ambiguity {
    std::size_t rule_left = 0;
    std::size_t rule_right = 0;
    Word overlap;
    std::size_t at_left = 0;
    std::size_t at_right = 0;
    NCPoly<C> reduct_left;   // overlap after one step of rule_left
    NCPoly<C> reduct_right;  // overlap after one step of rule_right
};

template <class C>
struct AmbiguityOutcome {
    Ambiguity<C> ambiguity;
    NCPoly<C> resolved;  // normal form of the left reduct
    bool pass = false;
    double residual = 0.0;  // numeric size of NF(left) - NF(right)
};

template <class C>
struct ConfluenceReport {
    std::vector<AmbiguityOutcome<C>> outcomes;
    bool pass = false;
    bool certificate = false;  // true only for the exact backend
};

/// The fixed-priority reduction system. Rules are validated at construction:
/// each rhs monomial must be strictly smaller than the lhs in the reduction
/// order, which is what guarantees termination of normal_form.
template <class C>
class ReductionSystem {
public:
    explicit ReductionSystem(std::vector<RewriteRule<C>> rules, long step_cap = 1000000)
        : rules_(std::move(rules)), step_cap_(step_cap) {
        for (const auto& r : rules_) {
            if (r.lhs.size() < 2) throw Error("RewriteRule " + r.name + ": lhs must have length >= 2");
            for (const auto& [w, c] : r.rhs.terms()) {
                if (order_compare(w, r.lhs) != OrderRel::less)
                    throw Error("RewriteRule " + r.name + ": rhs monomial " + w.to_string() +
                                " is not strictly below lhs " + r.lhs.to_string());
            }
        }
    }

    const std::vector<RewriteRule<C>>& rules() const { return rules_; }
    long step_cap() const { return step_cap_; }

    // Leftmost match; rules tried in stored (S1..S8) order at each position.
    std::optional<std::pair<std::size_t, std::size_t>> find_match(const Word& w) const {
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            for (std::size_t r = 0; r < rules_.size(); ++r)
                if (w.matches_at(rules_[r].lhs, pos)) return std::make_pair(pos, r);
        return std::nullopt;
    }

    bool is_irreducible(const Word& w) const { return !find_match(w).has_value(); }

    // One application of rule r at position pos: prefix * rhs * suffix.
    NCPoly<C> apply_rule(const Word& w, std::size_t pos, std::size_t r) const {
        const auto& rule = rules_[r];
        Word prefix = w.subword(0, pos);
        Word suffix = w.subword(pos + rule.lhs.size(), w.size() - pos - rule.lhs.size());
        return rule.rhs.left_mul_word(prefix).right_mul_word(suffix);
    }

    /// Full normal form. Deterministic: the largest pending monomial is
    /// rewritten at its leftmost reducible position with the first matching
    /// rule. Confluence makes the result strategy-independent; the strategy
    /// makes runs reproducible.
    NCPoly<C> normal_form(const NCPoly<C>& p) const {
        typename NCPoly<C>::TermMap pending = p.terms();
        NCPoly<C> out(p.alphabet());
        long steps = 0;
        while (!pending.empty()) {
            auto it = std::prev(pending.end());
            Word w = it->first;
            C c = it->second;
            pending.erase(it);
            if (coeff_is_zero(c)) continue;
            auto m = find_match(w);
            if (!m) {
                out.add_term(w, c);
                continue;
            }
            NCPoly<C> repl = apply_rule(w, m->first, m->second);
            for (const auto& [rw, rc] : repl.terms()) {
                auto pit = pending.find(rw);
                if (pit == pending.end()) {
                    pending.emplace(rw, c * rc);
                } else {
                    pit->second += c * rc;
                    if (coeff_is_zero(pit->second)) pending.erase(pit);
                }
            }
            if (++steps > step_cap_)
                throw StepCapExceeded("normal_form: exceeded step cap of " + std::to_string(step_cap_));
        }
        return out;
    }

    /// All overlap ambiguities: a nonempty proper suffix of one lhs equal to
    /// a proper prefix of another. Inclusion ambiguities are also detected
    /// for generality; the S1..S8 system has none (all lhs have length 2).
    std::vector<Ambiguity<C>> enumerate_ambiguities() const {
        std::vector<Ambiguity<C>> out;
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            for (std::size_t j = 0; j < rules_.size(); ++j) {
                const Word& a = rules_[i].lhs;
                const Word& b = rules_[j].lhs;
                // Overlaps: suffix of a of length o = prefix of b, 0 < o < min.
                for (std::size_t o = 1; o < std::min(a.size(), b.size()); ++o) {
                    if (a.subword(a.size() - o, o) != b.subword(0, o)) continue;
                    Ambiguity<C> amb;
                    amb.rule_left = i;
                    amb.rule_right = j;
                    amb.overlap = a.concat(b.subword(o, b.size() - o));
                    amb.at_left = 0;
                    amb.at_right = a.size() - o;
                    amb.reduct_left = apply_rule(amb.overlap, amb.at_left, i);
                    amb.reduct_right = apply_rule(amb.overlap, amb.at_right, j);
                    out.push_back(std::move(amb));
                }
                // Inclusions: b a proper subword of a, i != j.
                if (i != j && b.size() < a.size()) {
                    for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
                        if (!a.matches_at(b, pos)) continue;
                        Ambiguity<C> amb;
                        amb.rule_left = i;
                        amb.rule_right = j;
                        amb.overlap = a;
                        amb.at_left = 0;
                        amb.at_right = pos;
                        amb.reduct_left = apply_rule(a, 0, i);
                        amb.reduct_right = apply_rule(a, pos, j);
                        out.push_back(std::move(amb));
                    }
                }
            }
        }
        return out;
    }

    /// Resolves every ambiguity: both one-step reducts must share a normal
    /// form. Exact coefficients yield a certificate; float coefficients are
    /// evidence at the given tolerance.
    ConfluenceReport<C> check_confluence(double float_tol = 1e-12) const {
        ConfluenceReport<C> report;
        report.certificate = std::is_same_v<C, Cyclo>;
        report.pass = true;
        for (auto& amb : enumerate_ambiguities()) {
            AmbiguityOutcome<C> oc;
            NCPoly<C> nf_left = normal_form(amb.reduct_left);
            NCPoly<C> nf_right = normal_form(amb.reduct_right);
            oc.residual = max_coeff_delta(nf_left, nf_right);
            oc.pass = report.certificate ? (nf_left == nf_right) : (oc.residual <= float_tol);
            oc.resolved = std::move(nf_left);
            oc.ambiguity = std::move(amb);
            if (!oc.pass) report.pass = false;
            report.outcomes.push_back(std::move(oc));
        }
        return report;
    }

    void require_confluent(double float_tol = 1e-12) const {
        ConfluenceReport<C> r = check_confluence(float_tol);
        for (const auto& oc : r.outcomes)
            if (!oc.pass)
                throw NotConfluent("ambiguity " + oc.ambiguity.overlap.to_string() + " does not resolve (rules " +
                                   rules_[oc.ambiguity.rule_left].name + ", " +
                                   rules_[oc.ambiguity.rule_right].name + ")");
    }

private:
    std::vector<RewriteRule<C>> rules_;
    long step_cap_;
};

/// The eight relations of the deformed torus algebra as a reduction system:
///   S1: WL   -> q LW        S2: WL*  -> qbar L*W
///   S3: W*L* -> q L*W*      S4: W*L  -> qbar LW*
///   S5: LL*  -> 1           S6: L*L  -> 1
///   S7: WW*  -> zL + zbar L* + mu      S8: W*W -> -zbar L - z L* + mu
template <class Ctx>
ReductionSystem<typename Ctx::C> standard_system(const Ctx& ctx, long step_cap = 1000000) {
    using C = typename Ctx::C;
    using P = NCPoly<C>;
    const Alphabet A = Alphabet::torus;
    auto word = [](std::initializer_list<Letter> ls) { return Word(Alphabet::torus, std::vector<Letter>(ls)); };
    auto mono = [](Letter a, Letter b, C c) {
        return P::monomial(Word(Alphabet::torus, {a, b}), std::move(c));
    };
    const P one = P::unit(A, ctx.cone());
    std::vector<RewriteRule<C>> rules;
    rules.push_back({"S1", word({Letter::W, Letter::L}), mono(Letter::L, Letter::W, ctx.q())});
    rules.push_back({"S2", word({Letter::W, Letter::Ls}), mono(Letter::Ls, Letter::W, ctx.qbar())});
    rules.push_back({"S3", word({Letter::Ws, Letter::Ls}), mono(Letter::Ls, Letter::Ws, ctx.q())});
    rules.push_back({"S4", word({Letter::Ws, Letter::L}), mono(Letter::L, Letter::Ws, ctx.qbar())});
    rules.push_back({"S5", word({Letter::L, Letter::Ls}), one});
    rules.push_back({"S6", word({Letter::Ls, Letter::L}), one});
    P s7 = P::monomial(Word::single(Letter::L), ctx.z());
    s7.add_term(Word::single(Letter::Ls), ctx.zbar());
    s7.add_term(Word::unit(A), ctx.mu());
    rules.push_back({"S7", word({Letter::W, Letter::Ws}), std::move(s7)});
    P s8 = P::monomial(Word::single(Letter::L), -ctx.zbar());
    s8.add_term(Word::single(Letter::Ls), -ctx.z());
    s8.add_term(Word::unit(A), ctx.mu());
    rules.push_back({"S8", word({Letter::Ws, Letter::W}), std::move(s8)});
    return ReductionSystem<C>(std::move(rules), step_cap);
}

/// The defining relation polynomials lhs - rhs of S1..S8; each lies in the
/// two-sided ideal, so its normal form must vanish.
template <class C>
std::vector<NCPoly<C>> relation_polynomials(const ReductionSystem<C>& sys, const C& one) {
    std::vector<NCPoly<C>> rels;
    for (const auto& r : sys.rules()) {
        NCPoly<C> rel = -r.rhs;
        rel.add_term(r.lhs, one);
        rels.push_back(std::move(rel));
    }
    return rels;
}

}  // namespace dtorus
