#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dtorus {

// Generator letters. The enum order L < L* < W < W* is the lexicographic
// order used by the reduction system's word order.
enum class Letter : std::uint8_t { L = 0, Ls = 1, W = 2, Ws = 3, X = 4, Y = 5, Z = 6 };

enum class Alphabet : std::uint8_t { torus, surface };

bool letter_in_alphabet(Letter l, Alphabet a);
Letter letter_star(Letter l);  // L <-> L*, W <-> W*; X, Y, Z are self-adjoint
const char* letter_name(Letter l);

/// A word over one declared alphabet; the empty word is the unit.
class Word {
public:
    Word() = default;  // empty torus word
    explicit Word(Alphabet a) : alpha_(a) {}
    Word(Alphabet a, std::vector<Letter> letters);

    static Word unit(Alphabet a) { return Word(a); }
    static Word single(Letter l);

    Alphabet alphabet() const { return alpha_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter at(std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    Word& push(Letter l);
    Word concat(const Word& o) const;
    Word subword(std::size_t from, std::size_t len) const;
    bool matches_at(const Word& pattern, std::size_t pos) const;

    // Reverses the word and stars each letter; an involution.
    Word adjoint() const;

    std::array<int, 7> letter_counts() const;

    std::string to_string() const;  // e.g. "WW*L", "I" for the unit

    friend bool operator==(const Word& a, const Word& b) {
        return a.alpha_ == b.alpha_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    Alphabet alpha_ = Alphabet::torus;
    std::vector<Letter> letters_;
};

// Total order: shorter first, then lexicographic in the letter enum. Keys
// polynomial term maps and makes printing deterministic.
struct WordTotalLess {
    bool operator()(const Word& a, const Word& b) const;
};

enum class OrderRel { less, greater, equal, incomparable };

// The reduction order: words of lower total degree are smaller; words of
// equal degree are comparable only when their per-letter counts agree, and
// are then ordered lexicographically (L < L* < W < W*). Partial, with the
// descending chain condition.
OrderRel order_compare(const Word& a, const Word& b);

}  // namespace dtorus
