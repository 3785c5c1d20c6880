// Finite words over the alphabet {R, L} and their cyclic normal forms.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "suspflow/errors.hpp"

namespace suspflow {

// Non-empty word over {R, L}. The cyclic normal form is the
// lexicographically least rotation under the letter order R < L.
class RLWord {
  public:
    explicit RLWord(std::string letters);

    // Case-insensitive; rejects anything but r/R/l/L and empty input.
    static RLWord parse(const std::string& text);

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    char at(std::size_t i) const { return letters_[i]; }

    bool mixed() const;
    std::size_t count(char letter) const;

    RLWord rotated(std::size_t k) const;       // letters_[k:] + letters_[:k]
    RLWord canonical() const;                  // least rotation, R < L
    RLWord swapped() const;                    // R <-> L letterwise
    bool is_canonical() const { return canonical().letters_ == letters_; }

    // True for the literal forms R L^n and L^n R (n >= 1).
    bool is_degenerate_form() const;

    friend bool operator==(const RLWord&, const RLWord&) = default;
    // Shorter words first, then letterwise with R < L.
    std::strong_ordering operator<=>(const RLWord& other) const;

  private:
    std::string letters_;
};

inline bool rl_letter_less(char x, char y) { return x == 'R' && y == 'L'; }

// All 2^k - 2 mixed words of exactly length k, in R<L lexicographic order.
std::vector<RLWord> all_mixed_words(std::size_t length);

}  // namespace suspflow
