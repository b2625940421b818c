#pragma once

// Pruned depth-first enumeration of repetition-free words and exhaustive
// length classification for the edit properties.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "barely/detect.hpp"
#include "barely/props.hpp"
#include "barely/word.hpp"

namespace barely {

using WordVisitor = std::function<void(std::span<const Letter>)>;

// Calls visitor once per kind-free word of length n, in lexicographic order.
// Branches are cut as soon as a repetition ends at the newest letter.
std::uint64_t enumerate_free(Alphabet alphabet, RepetitionKind kind, std::size_t n,
                             const WordVisitor& visitor = {});

struct SearchSpec {
  Alphabet alphabet = Alphabet::binary();
  RepetitionKind kind = RepetitionKind::Square;
  PropertyKind property = PropertyKind::irreducible();
  std::size_t min_len = 1;
  std::size_t max_len = 1;
  // Fix the first letter and scale counts by the alphabet size. Results are
  // identical either way since every property is invariant under renaming.
  bool symmetry_reduction = true;
  std::size_t witness_limit = 4;

  friend bool operator==(const SearchSpec&, const SearchSpec&) = default;
};

struct SearchOptions {
  unsigned jobs = 0;            // 0: hardware concurrency
  std::size_t split_depth = 12;  // prefix length handed to each worker task
};

struct LengthClassification {
  SearchSpec spec;
  std::set<std::size_t> admitted;
  // Lexicographically smallest qualifying words, at most witness_limit each.
  std::map<std::size_t, std::vector<Word>> witnesses;
  // Exact count for every length in [min_len, max_len].
  std::map<std::size_t, std::uint64_t> counts;

  friend bool operator==(const LengthClassification&, const LengthClassification&) = default;
};

// Throws std::invalid_argument when min_len > max_len.
LengthClassification classify(const SearchSpec& spec, const SearchOptions& options = {});

// Every k-delicate kind-free word of length 1..max_len (at most
// witness_limit per length), ordered by length then lexicographically.
std::vector<Word> search_k_delicate(Alphabet alphabet, RepetitionKind kind, int k,
                                    std::size_t max_len,
                                    std::size_t witness_limit =
                                        std::numeric_limits<std::size_t>::max(),
                                    const SearchOptions& options = {});

// Bumped whenever a definition or the search changes results.
inline constexpr int kClassificationCodeVersion = 1;

// Canonical description of the result-affecting parts of a spec.
std::string spec_key(const SearchSpec& spec);
// 16 hex digits; covers spec_key and kClassificationCodeVersion.
std::string spec_fingerprint(const SearchSpec& spec);

class CacheError : public std::runtime_error {
 public:
  enum class Kind { Io, Format, Stale, Validation };
  CacheError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Header line with the fingerprint, then one "<n> <count> <witness>..." line
// per length. The empty word is written as "-".
std::string format_classification(const LengthClassification& c);
LengthClassification parse_classification(const std::string& text);
void save_classification(const LengthClassification& c, const std::string& path);
// Re-validates every witness. Throws CacheError.
LengthClassification load_classification(const std::string& path);
// As above, and also throws CacheError(Stale) when the file was produced for
// a different spec.
LengthClassification load_classification(const std::string& path, const SearchSpec& expected);

}  // namespace barely
