#include "dtorus/word.hpp"

#include <algorithm>

#include "dtorus/errors.hpp"

namespace dtorus {

bool letter_in_alphabet(Letter l, Alphabet a) {
    switch (l) {
        case Letter::L:
        case Letter::Ls:
        case Letter::W:
        case Letter::Ws:
            return a == Alphabet::torus;
        case Letter::X:
        case Letter::Y:
        case Letter::Z:
            return a == Alphabet::surface;
    }
    return false;
}

Letter letter_star(Letter l) {
    switch (l) {
        case Letter::L: return Letter::Ls;
        case Letter::Ls: return Letter::L;
        case Letter::W: return Letter::Ws;
        case Letter::Ws: return Letter::W;
        default: return l;
    }
}

const char* letter_name(Letter l) {
    switch (l) {
        case Letter::L: return "L";
        case Letter::Ls: return "L*";
        case Letter::W: return "W";
        case Letter::Ws: return "W*";
        case Letter::X: return "X";
        case Letter::Y: return "Y";
        case Letter::Z: return "Z";
    }
    return "?";
}

Word::Word(Alphabet a, std::vector<Letter> letters) : alpha_(a), letters_(std::move(letters)) {
    for (Letter l : letters_)
        if (!letter_in_alphabet(l, alpha_))
            throw AlphabetMismatch(std::string("letter ") + letter_name(l) + " not in declared alphabet");
}

Word Word::single(Letter l) {
    Alphabet a = letter_in_alphabet(l, Alphabet::torus) ? Alphabet::torus : Alphabet::surface;
    Word w(a);
    w.push(l);
    return w;
}

Word& Word::push(Letter l) {
    if (!letter_in_alphabet(l, alpha_))
        throw AlphabetMismatch(std::string("letter ") + letter_name(l) + " not in declared alphabet");
    letters_.push_back(l);
    return *this;
}

Word Word::concat(const Word& o) const {
    if (alpha_ != o.alpha_) throw DomainMismatch("Word::concat: alphabets differ");
    Word w(alpha_);
    w.letters_.reserve(letters_.size() + o.letters_.size());
    w.letters_ = letters_;
    w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
    return w;
}

Word Word::subword(std::size_t from, std::size_t len) const {
    Word w(alpha_);
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                      letters_.begin() + static_cast<std::ptrdiff_t>(from + len));
    return w;
}

bool Word::matches_at(const Word& pattern, std::size_t pos) const {
    if (pos + pattern.size() > size()) return false;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (letters_[pos + i] != pattern.letters_[i]) return false;
    return true;
}

Word Word::adjoint() const {
    Word w(alpha_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(letter_star(*it));
    return w;
}

std::array<int, 7> Word::letter_counts() const {
    std::array<int, 7> counts{};
    for (Letter l : letters_) ++counts[static_cast<std::size_t>(l)];
    return counts;
}

std::string Word::to_string() const {
    if (letters_.empty()) return "I";
    std::string s;
    for (Letter l : letters_) s += letter_name(l);
    return s;
}

bool WordTotalLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(),
                                        b.letters().end());
}

OrderRel order_compare(const Word& a, const Word& b) {
    if (a.alphabet() != b.alphabet()) throw DomainMismatch("order_compare: alphabets differ");
    if (a.size() != b.size()) return a.size() < b.size() ? OrderRel::less : OrderRel::greater;
    if (a.letters() == b.letters()) return OrderRel::equal;
    if (a.letter_counts() != b.letter_counts()) return OrderRel::incomparable;
    return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(),
                                        b.letters().end())
               ? OrderRel::less
               : OrderRel::greater;
}

}  // namespace dtorus
