#pragma once

// Finite prefixes of the Thue-Morse word t = mu^omega(0) and the ternary
// Thue-Morse word v = tau^omega(0), plus bounded checks of facts about them.

#include <cstddef>
#include <set>
#include <string_view>
#include <vector>

#include "barely/detect.hpp"
#include "barely/morphism.hpp"
#include "barely/word.hpp"

namespace barely {

enum class InfiniteWordId { ThueMorse, TernaryThueMorse };

std::string_view to_string(InfiniteWordId id);
// Accepts "thue_morse"/"t" and "ternary_thue_morse"/"v".
InfiniteWordId parse_infinite_word(std::string_view name);
Alphabet alphabet_of(InfiniteWordId id);

struct PrefixSpec {
  InfiniteWordId word = InfiniteWordId::ThueMorse;
  std::size_t drop = 0;
  std::size_t take = 0;
};

inline constexpr std::size_t kBinaryCheckLimit = std::size_t{1} << 14;
inline constexpr std::size_t kTernaryCheckLimit = 10000;

// Letter i of t: parity of the number of 1 bits in i.
inline Letter thue_morse_letter(std::uint64_t i) {
  return static_cast<Letter>(__builtin_popcountll(i) & 1);
}

// Letters [drop, drop + take) of the fixed point.
Word prefix(const PrefixSpec& spec);
inline Word prefix(InfiniteWordId id, std::size_t take) { return prefix({id, 0, take}); }

// Iterates the defining morphism from "0" until at least `length` letters
// exist. Independent of the closed form used by prefix() for t.
Word iterate_fixed_point(const Morphism& m, std::size_t length);

// First `length` letters of m(x) where x is the infinite word `id`.
Word image_prefix(const Morphism& m, InfiniteWordId id, std::size_t length);

// True iff no prefix of t of even length <= limit is a square.
bool no_square_prefix(std::size_t limit);

// First `limit` letters of v, where letter i counts the 0s between the i-th
// and (i+1)-th 1 of t.
Word berstel_v(std::size_t limit);

// True iff prefix_word followed by the first `limit` letters of `id` is
// kind-free.
bool prepend_check(const Word& prefix_word, InfiniteWordId id, RepetitionKind kind,
                   std::size_t limit);

// True iff every occurrence of `needle` within the first `limit` letters of
// `host` starts at an index whose residue modulo `modulus` is allowed.
bool factor_position_check(const Word& host, const Word& needle,
                           const std::set<std::size_t>& allowed_residues,
                           std::size_t modulus, std::size_t limit);
bool factor_position_check(const PrefixSpec& host, const Word& needle,
                           const std::set<std::size_t>& allowed_residues,
                           std::size_t modulus, std::size_t limit);

}  // namespace barely
