#include "suspflow/rlword.hpp"

#include <algorithm>
#include <stdexcept>

namespace suspflow {

RLWord::RLWord(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("RLWord: empty word");
    for (char ch : letters_)
        if (ch != 'R' && ch != 'L')
            throw std::invalid_argument("RLWord: letters must be R or L");
}

RLWord RLWord::parse(const std::string& text) {
    std::string up;
    up.reserve(text.size());
    for (char ch : text) {
        if (ch == 'r' || ch == 'R')
            up.push_back('R');
        else if (ch == 'l' || ch == 'L')
            up.push_back('L');
        else
            throw ParseError("word must use letters R and L, got '" + text + "'");
    }
    if (up.empty()) throw ParseError("empty word");
    return RLWord(up);
}

bool RLWord::mixed() const {
    return letters_.find('R') != std::string::npos &&
           letters_.find('L') != std::string::npos;
}

std::size_t RLWord::count(char letter) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

RLWord RLWord::rotated(std::size_t k) const {
    k %= letters_.size();
    return RLWord(letters_.substr(k) + letters_.substr(0, k));
}

namespace {

// Lexicographic comparison under R < L.
bool word_lex_less(const std::string& x, const std::string& y) {
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] != y[i]) return rl_letter_less(x[i], y[i]);
    }
    return x.size() < y.size();
}

}  // namespace

RLWord RLWord::canonical() const {
    std::string best = letters_;
    for (std::size_t k = 1; k < letters_.size(); ++k) {
        std::string rot = letters_.substr(k) + letters_.substr(0, k);
        if (word_lex_less(rot, best)) best = rot;
    }
    return RLWord(best);
}

RLWord RLWord::swapped() const {
    std::string sw = letters_;
    for (char& ch : sw) ch = (ch == 'R') ? 'L' : 'R';
    return RLWord(sw);
}

bool RLWord::is_degenerate_form() const {
    std::size_t n = letters_.size();
    if (n < 2) return false;
    auto all_l = [&](std::size_t from, std::size_t to) {
        for (std::size_t i = from; i < to; ++i)
            if (letters_[i] != 'L') return false;
        return true;
    };
    if (letters_.front() == 'R' && all_l(1, n)) return true;   // R L^n
    if (letters_.back() == 'R' && all_l(0, n - 1)) return true;  // L^n R
    return false;
}

std::strong_ordering RLWord::operator<=>(const RLWord& other) const {
    if (letters_.size() != other.letters_.size())
        return letters_.size() < other.letters_.size() ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] != other.letters_[i])
            return rl_letter_less(letters_[i], other.letters_[i])
                       ? std::strong_ordering::less
                       : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::vector<RLWord> all_mixed_words(std::size_t length) {
    std::vector<RLWord> words;
    if (length < 2) return words;
    // Bit 0 = R so that counting order matches R < L lexicographic order.
    for (std::size_t mask = 0; mask < (std::size_t{1} << length); ++mask) {
        if (mask == 0 || mask == (std::size_t{1} << length) - 1) continue;
        std::string s(length, 'R');
        for (std::size_t i = 0; i < length; ++i)
            if (mask & (std::size_t{1} << (length - 1 - i))) s[i] = 'L';
        words.emplace_back(s);
    }
    return words;
}

}  // namespace suspflow
