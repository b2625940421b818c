#include "barely/streams.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace barely {

std::string_view to_string(InfiniteWordId id) {
  return id == InfiniteWordId::ThueMorse ? "thue_morse" : "ternary_thue_morse";
}

InfiniteWordId parse_infinite_word(std::string_view name) {
  if (name == "thue_morse" || name == "t") return InfiniteWordId::ThueMorse;
  if (name == "ternary_thue_morse" || name == "v") return InfiniteWordId::TernaryThueMorse;
  throw std::invalid_argument("unknown infinite word '" + std::string(name) + "'");
}

Alphabet alphabet_of(InfiniteWordId id) {
  return id == InfiniteWordId::ThueMorse ? Alphabet::binary() : Alphabet::ternary();
}

Word iterate_fixed_point(const Morphism& m, std::size_t length) {
  if (m.domain() != m.codomain() || m.image(0)[0] != 0 || m.image(0).size() < 2)
    throw std::invalid_argument("morphism does not grow a fixed point from 0");
  std::vector<Letter> cur{0};
  while (cur.size() < length) {
    std::vector<Letter> next;
    next.reserve(cur.size() * 3);
    for (Letter a : cur) {
      const Word& im = m.image(a);
      next.insert(next.end(), im.begin(), im.end());
      if (next.size() >= length) break;
    }
    cur = std::move(next);
  }
  cur.resize(length);
  return Word(std::move(cur), m.domain());
}

Word prefix(const PrefixSpec& spec) {
  if (spec.word == InfiniteWordId::ThueMorse) {
    std::vector<Letter> out(spec.take);
    for (std::size_t i = 0; i < spec.take; ++i) out[i] = thue_morse_letter(spec.drop + i);
    return Word(std::move(out), Alphabet::binary());
  }
  const Word full = iterate_fixed_point(builtin(BuiltinMorphismId::Tau), spec.drop + spec.take);
  return factor(full, spec.drop, spec.take);
}

Word image_prefix(const Morphism& m, InfiniteWordId id, std::size_t length) {
  std::size_t shortest = m.images().front().size();
  for (const Word& im : m.images()) shortest = std::min(shortest, im.size());
  const std::size_t source_len = length / shortest + 1;
  const Word image = m.apply(prefix(id, source_len));
  return factor(image, 0, length);
}

bool no_square_prefix(std::size_t limit) {
  const Word t = prefix(InfiniteWordId::ThueMorse, limit);
  auto s = t.letters();
  for (std::size_t half = 1; 2 * half <= limit; ++half)
    if (std::equal(s.begin(), s.begin() + half, s.begin() + half)) return false;
  return true;
}

Word berstel_v(std::size_t limit) {
  std::vector<Letter> out;
  out.reserve(limit);
  // Gaps between consecutive 1s of t are 0, 1 or 2 zeros.
  std::uint64_t i = 0;
  while (thue_morse_letter(i) != 1) ++i;
  while (out.size() < limit) {
    ++i;
    Letter zeros = 0;
    while (thue_morse_letter(i) == 0) {
      ++zeros;
      ++i;
    }
    if (zeros > 2) throw std::logic_error("Thue-Morse contains 000");
    out.push_back(zeros);
  }
  return Word(std::move(out), Alphabet::ternary());
}

bool prepend_check(const Word& prefix_word, InfiniteWordId id, RepetitionKind kind,
                   std::size_t limit) {
  const Word body = prefix(id, limit);
  if (prefix_word.alphabet() != body.alphabet())
    throw std::invalid_argument("prefix word alphabet does not match the infinite word");
  return is_free(prefix_word + body, kind);
}

bool factor_position_check(const Word& host, const Word& needle,
                           const std::set<std::size_t>& allowed_residues,
                           std::size_t modulus, std::size_t limit) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  auto h = host.letters().first(std::min(limit, host.size()));
  auto pat = needle.letters();
  if (pat.empty() || pat.size() > h.size()) return true;
  for (std::size_t i = 0; i + pat.size() <= h.size(); ++i)
    if (std::equal(pat.begin(), pat.end(), h.begin() + i) && !allowed_residues.contains(i % modulus))
      return false;
  return true;
}

bool factor_position_check(const PrefixSpec& host, const Word& needle,
                           const std::set<std::size_t>& allowed_residues,
                           std::size_t modulus, std::size_t limit) {
  PrefixSpec scanned = host;
  scanned.take = std::min(host.take, limit);
  return factor_position_check(prefix(scanned), needle, allowed_residues, modulus, limit);
}

}  // namespace barely
