#include "barely/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace barely {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1 || size > kMaxAlphabetSize)
    throw std::invalid_argument("alphabet size must be in 1.." +
                                std::to_string(kMaxAlphabetSize));
}

namespace {

void check_letters(std::span<const Letter> letters, Alphabet alphabet) {
  for (Letter a : letters)
    if (!alphabet.contains(a))
      throw std::invalid_argument("letter " + std::to_string(int(a)) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet.size()));
}

}  // namespace

Word::Word(std::vector<Letter> letters, Alphabet alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  check_letters(letters_, alphabet_);
}

Word::Word(std::span<const Letter> letters, Alphabet alphabet)
    : letters_(letters.begin(), letters.end()), alphabet_(alphabet) {
  check_letters(letters_, alphabet_);
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument(std::string("invalid letter '") + c + "'");
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  return Word(std::move(letters), alphabet);
}

std::string Word::str() const {
  std::string s(letters_.size(), '0');
  for (std::size_t i = 0; i < letters_.size(); ++i) s[i] = char('0' + letters_[i]);
  return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
  return a.alphabet_.size() <=> b.alphabet_.size();
}

Word operator+(const Word& a, const Word& b) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument("concatenating words over different alphabets");
  std::vector<Letter> out(a.vec());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out), a.alphabet());
}

Word factor(const Word& w, std::size_t start, std::size_t len) {
  if (start > w.size() || len > w.size() - start)
    throw std::out_of_range("factor [" + std::to_string(start) + ", +" +
                            std::to_string(len) + ") outside word of length " +
                            std::to_string(w.size()));
  return Word(w.letters().subspan(start, len), w.alphabet());
}

Word delete_at(const Word& w, std::size_t i) {
  if (i >= w.size()) throw std::out_of_range("delete_at index out of range");
  std::vector<Letter> out(w.vec());
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return Word(std::move(out), w.alphabet());
}

Word replace_at(const Word& w, std::size_t i, Letter a) {
  if (i >= w.size()) throw std::out_of_range("replace_at index out of range");
  std::vector<Letter> out(w.vec());
  out[i] = a;
  return Word(std::move(out), w.alphabet());
}

Word insert_at(const Word& w, std::size_t i, Letter a) {
  if (i > w.size()) throw std::out_of_range("insert_at index out of range");
  std::vector<Letter> out(w.vec());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), a);
  return Word(std::move(out), w.alphabet());
}

Word reversed(const Word& w) {
  return Word(std::vector<Letter>(w.vec().rbegin(), w.vec().rend()), w.alphabet());
}

SymmetryOp::SymmetryOp(std::vector<Letter> permutation, bool reverse)
    : permutation_(std::move(permutation)), reverse_(reverse) {
  std::vector<bool> seen(permutation_.size(), false);
  for (Letter a : permutation_) {
    if (a >= permutation_.size() || seen[a])
      throw std::invalid_argument("symmetry permutation is not a bijection");
    seen[a] = true;
  }
}

SymmetryOp SymmetryOp::identity(Alphabet alphabet) {
  std::vector<Letter> p(alphabet.size());
  std::iota(p.begin(), p.end(), Letter{0});
  return SymmetryOp(std::move(p), false);
}

SymmetryOp SymmetryOp::reversal(Alphabet alphabet) {
  auto s = identity(alphabet);
  s.reverse_ = true;
  return s;
}

SymmetryOp SymmetryOp::swap(Alphabet alphabet, Letter a, Letter b, bool reverse) {
  auto s = identity(alphabet);
  if (!alphabet.contains(a) || !alphabet.contains(b))
    throw std::invalid_argument("swap letters outside alphabet");
  std::swap(s.permutation_[a], s.permutation_[b]);
  s.reverse_ = reverse;
  return s;
}

std::vector<SymmetryOp> SymmetryOp::all(Alphabet alphabet) {
  std::vector<SymmetryOp> out;
  auto p = identity(alphabet).permutation_;
  do {
    out.emplace_back(p, false);
    out.emplace_back(p, true);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

SymmetryOp SymmetryOp::after(const SymmetryOp& first) const {
  if (first.size() != size())
    throw std::invalid_argument("composing symmetries of different alphabets");
  std::vector<Letter> p(permutation_.size());
  for (std::size_t a = 0; a < p.size(); ++a) p[a] = permutation_[first.permutation_[a]];
  // Reversal commutes with letter permutation, so flags simply combine.
  return SymmetryOp(std::move(p), reverse_ != first.reverse_);
}

Word apply_symmetry(const Word& w, const SymmetryOp& s) {
  if (s.size() != w.alphabet().size())
    throw std::invalid_argument("symmetry alphabet does not match word");
  std::vector<Letter> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = s.permutation()[w[i]];
  if (s.reverses()) std::reverse(out.begin(), out.end());
  return Word(std::move(out), w.alphabet());
}

}  // namespace barely
