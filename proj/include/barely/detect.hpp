#pragma once

// Squares XX, overlaps xYxYx and cubes XXX in finite words.
//
// All detectors work on the observation that a repetition of period p
// starting at s is a run of `need(p)` consecutive positions j with
// w[j] == w[j + p]; need is p for squares, p + 1 for overlaps and 2p for
// cubes. The span of the occurrence is need(p) + p.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "barely/word.hpp"

namespace barely {

enum class RepetitionKind { Square, Overlap, Cube };

std::string_view to_string(RepetitionKind kind);
// Accepts "square", "overlap", "cube". Throws std::invalid_argument.
RepetitionKind parse_repetition_kind(std::string_view text);

constexpr std::size_t matches_needed(RepetitionKind kind, std::size_t period) {
  switch (kind) {
    case RepetitionKind::Square: return period;
    case RepetitionKind::Overlap: return period + 1;
    case RepetitionKind::Cube: return 2 * period;
  }
  return period;
}

constexpr std::size_t repetition_span(RepetitionKind kind, std::size_t period) {
  return matches_needed(kind, period) + period;
}

struct Occurrence {
  RepetitionKind kind = RepetitionKind::Square;
  std::size_t start = 0;
  // |X| for squares and cubes, |xY| for overlaps.
  std::size_t period = 1;

  std::size_t span() const { return repetition_span(kind, period); }
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Re-checks the occurrence letter by letter against w.
bool validates(std::span<const Letter> w, const Occurrence& occ);
inline bool validates(const Word& w, const Occurrence& occ) {
  return validates(w.letters(), occ);
}

// First occurrence by increasing start, then increasing period.
std::optional<Occurrence> find_repetition(std::span<const Letter> w, RepetitionKind kind);
inline std::optional<Occurrence> find_repetition(const Word& w, RepetitionKind kind) {
  return find_repetition(w.letters(), kind);
}

inline bool is_free(std::span<const Letter> w, RepetitionKind kind) {
  return !find_repetition(w, kind).has_value();
}
inline bool is_free(const Word& w, RepetitionKind kind) { return is_free(w.letters(), kind); }

// Occurrence whose span ends at the last letter of w, smallest period first.
std::optional<Occurrence> suffix_repetition(std::span<const Letter> w, RepetitionKind kind);
inline std::optional<Occurrence> suffix_repetition(const Word& w, RepetitionKind kind) {
  return suffix_repetition(w.letters(), kind);
}

// Boolean form of suffix_repetition; this is the enumerator's pruning test.
bool has_suffix_repetition(std::span<const Letter> w, RepetitionKind kind);

// Occurrence whose span contains every position in [first, last], smallest
// period first, then smallest start. Used after a local edit of a free word:
// any repetition the edit creates must cover the edited positions.
std::optional<Occurrence> find_repetition_covering(std::span<const Letter> w,
                                                   RepetitionKind kind,
                                                   std::size_t first,
                                                   std::size_t last);
bool has_repetition_covering(std::span<const Letter> w, RepetitionKind kind,
                             std::size_t first, std::size_t last);

// Definition-literal reference: every factor is compared against the pattern
// with no shared machinery. Cubic time; intended for cross-checks only.
inline constexpr std::size_t kOracleMaxLength = 64;
// Throws std::invalid_argument when |w| > kOracleMaxLength.
bool oracle_is_free(std::span<const Letter> w, RepetitionKind kind);
inline bool oracle_is_free(const Word& w, RepetitionKind kind) {
  return oracle_is_free(w.letters(), kind);
}

}  // namespace barely
