#pragma once

// Finite words over small alphabets, one-letter edits and symmetry transforms.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace barely {

using Letter = std::uint8_t;

// Largest alphabet the text encoding can represent (digits 0-9).
inline constexpr int kMaxAlphabetSize = 10;

class Alphabet {
 public:
  constexpr Alphabet() = default;
  explicit Alphabet(int size);

  static Alphabet binary() { return Alphabet(2); }
  static Alphabet ternary() { return Alphabet(3); }

  constexpr int size() const { return size_; }
  constexpr bool contains(Letter a) const { return a < size_; }

  friend constexpr bool operator==(Alphabet, Alphabet) = default;

 private:
  int size_ = 2;
};

// Immutable value; every edit returns a fresh word.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(std::vector<Letter> letters, Alphabet alphabet);
  Word(std::span<const Letter> letters, Alphabet alphabet);

  // Parses the digit encoding ("0100101101"). Throws std::invalid_argument on
  // a non-digit or a digit outside the alphabet.
  static Word parse(std::string_view text, Alphabet alphabet);

  std::string str() const;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Alphabet alphabet() const { return alphabet_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  const std::vector<Letter>& vec() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  // Lexicographic on letters; alphabet breaks ties.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
  Alphabet alphabet_;
};

// Concatenation. Alphabets must agree.
Word operator+(const Word& a, const Word& b);

Word factor(const Word& w, std::size_t start, std::size_t len);
Word delete_at(const Word& w, std::size_t i);
Word replace_at(const Word& w, std::size_t i, Letter a);
Word insert_at(const Word& w, std::size_t i, Letter a);
Word reversed(const Word& w);

// A letter permutation optionally followed by reversal.
class SymmetryOp {
 public:
  SymmetryOp(std::vector<Letter> permutation, bool reverse);

  static SymmetryOp identity(Alphabet alphabet);
  static SymmetryOp reversal(Alphabet alphabet);
  // Transposition of letters a and b.
  static SymmetryOp swap(Alphabet alphabet, Letter a, Letter b, bool reverse = false);
  // Every permutation of the alphabet, each with and without reversal.
  static std::vector<SymmetryOp> all(Alphabet alphabet);

  const std::vector<Letter>& permutation() const { return permutation_; }
  bool reverses() const { return reverse_; }
  int size() const { return static_cast<int>(permutation_.size()); }

  // Applies `first`, then `*this`.
  SymmetryOp after(const SymmetryOp& first) const;

  friend bool operator==(const SymmetryOp&, const SymmetryOp&) = default;

 private:
  std::vector<Letter> permutation_;
  bool reverse_ = false;
};

Word apply_symmetry(const Word& w, const SymmetryOp& s);

}  // namespace barely
