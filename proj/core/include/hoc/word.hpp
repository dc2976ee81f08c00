#pragma once

#include <initializer_list>
#include <vector>

#include "hoc/errors.hpp"

namespace hoc {

/// One letter of a free-group word: generator index (1-based) and exponent ±1.
struct Letter {
    int gen;
    int exp;
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in a free group.
class Word {
  public:
    Word() = default;
    Word(std::initializer_list<Letter> ls) : Word(std::vector<Letter>(ls)) {}
    explicit Word(std::vector<Letter> ls) {
        for (const Letter& l : ls) push(l);
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    void push(const Letter& l) {
        if (l.gen < 1) throw input_error("Word: generator index must be >= 1");
        if (l.exp != 1 && l.exp != -1) throw input_error("Word: exponent must be +-1");
        if (!letters_.empty() && letters_.back().gen == l.gen &&
            letters_.back().exp == -l.exp)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    Word inverse() const {
        Word w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.push({it->gen, -it->exp});
        return w;
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word w = a;
        for (const Letter& l : b.letters_) w.push(l);
        return w;
    }

    static Word generator(int i) { return Word{{i, 1}}; }

    /// [a, b] = a b a^-1 b^-1
    static Word commutator(const Word& a, const Word& b) {
        return a * b * a.inverse() * b.inverse();
    }

    friend bool operator==(const Word&, const Word&) = default;

  private:
    std::vector<Letter> letters_;
};

} // namespace hoc
