#pragma once

// Explicit constructions of irreducible and delicate words for every
// admissible length, and exhaustive confirmation of the excluded lengths.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "barely/detect.hpp"
#include "barely/enumerate.hpp"
#include "barely/props.hpp"
#include "barely/word.hpp"

namespace barely {

enum class TheoremId {
  IrrOverlap,  // irreducible overlap-free binary
  IrrCube,     // irreducible cubefree binary
  DelSquare,   // delicate squarefree ternary
  DelOverlap,  // delicate overlap-free binary
  DelCube,     // delicate cubefree binary
  EidFamily,   // extremal + irreducible + delicate overlap-free binary
};

// "irr-overlap", "irr-cube", "del-square", "del-overlap", "del-cube", "eid".
std::string_view to_string(TheoremId id);
// Also accepts underscores in place of dashes.
TheoremId parse_theorem(std::string_view name);
std::vector<TheoremId> all_theorems();

// The repetition kind, alphabet and properties a theorem's words satisfy.
struct TheoremTarget {
  RepetitionKind kind;
  Alphabet alphabet;
  std::vector<PropertyKind> properties;
};
TheoremTarget target_of(TheoremId id);

// Whether the theorem claims words of length n exist.
bool admissible(TheoremId id, std::size_t n);
// Largest excluded length, or nullopt when infinitely many are excluded.
std::optional<std::size_t> largest_excluded(TheoremId id);

struct Recipe {
  TheoremId theorem;
  std::size_t n;
  std::string branch;  // which base word, table row or family was used
  Word word;
};

// Thrown when a construction fails its own verification.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Throws std::invalid_argument when n is not admissible and
// ConstructionError if no candidate verifies.
Recipe construct(TheoremId id, std::size_t n);

// w_0 = 01100110100110010110011010011001 and w_{i+1} = mu(w_i).
Word eid_word(std::size_t i);

// Whether `word` has every property the theorem claims.
bool satisfies(TheoremId id, const Word& word);

struct VerifyEntry {
  std::size_t n = 0;
  bool admissible = false;
  bool ok = false;
  std::string detail;  // branch used, or the discrepancy
};

struct VerifyReport {
  TheoremId theorem;
  std::size_t max_len = 0;            // construction bound
  std::size_t search_bound = 0;       // exhaustive search covered 1..search_bound
  std::vector<VerifyEntry> entries;
  std::vector<std::string> discrepancies;
  bool ok() const { return discrepancies.empty(); }
};

struct VerifyOptions {
  std::size_t max_len = 200;
  // Caps the exhaustive search range; nullopt searches up to the largest
  // excluded length (or max_len, whichever is smaller).
  std::optional<std::size_t> search_cap;
  std::size_t eid_levels = 3;  // EidFamily checks w_0..w_levels
  SearchOptions search;
};

// Constructs and verifies every admissible n <= max_len, and confirms with
// an exhaustive search that excluded lengths have no words.
VerifyReport verify_theorem(TheoremId id, const VerifyOptions& options = {});

}  // namespace barely
