#pragma once

// Extremal, irreducible, delicate and k-delicate words.
//
// Each property quantifies over a family of one-place edits (insertions,
// interior deletions, letter changes) and asks that every edit of a free word
// create a repetition. The boolean `holds_*` functions are the enumerator's
// fast path: they assume the subject is already free and return on the first
// surviving edit. The report functions start from a Word, check freeness and
// the length conventions, and optionally collect a witness per edit.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "barely/detect.hpp"
#include "barely/word.hpp"

namespace barely {

struct PropertyKind {
  enum class Tag { Extremal, Irreducible, Delicate, KDelicate };
  Tag tag = Tag::Delicate;
  int k = 1;  // meaningful for KDelicate only

  static PropertyKind extremal() { return {Tag::Extremal, 1}; }
  static PropertyKind irreducible() { return {Tag::Irreducible, 1}; }
  static PropertyKind delicate() { return {Tag::Delicate, 1}; }
  static PropertyKind k_delicate(int k);

  friend bool operator==(const PropertyKind&, const PropertyKind&) = default;
};

// "extremal", "irreducible", "delicate", "k-delicate:<k>".
std::string to_string(PropertyKind property);
PropertyKind parse_property_kind(std::string_view text);

struct Deletion {
  std::size_t position;
  friend bool operator==(const Deletion&, const Deletion&) = default;
};
struct Insertion {
  std::size_t position;
  Letter letter;
  friend bool operator==(const Insertion&, const Insertion&) = default;
};
struct Replacement {
  std::vector<std::pair<std::size_t, Letter>> changes;  // ascending positions
  friend bool operator==(const Replacement&, const Replacement&) = default;
};
using Mutation = std::variant<Deletion, Insertion, Replacement>;

Word apply_mutation(const Word& w, const Mutation& m);
std::string describe(const Mutation& m);

struct MutationWitness {
  Mutation mutation;
  Occurrence created;
};

// True when the mutation applied to `subject` contains `created`.
bool validates(const Word& subject, const MutationWitness& witness);

struct PropertyReport {
  Word subject;
  RepetitionKind kind = RepetitionKind::Square;
  PropertyKind property;
  bool holds = false;
  std::vector<MutationWitness> witnesses;  // filled on request when holds
  std::optional<Mutation> counterexample;  // an edit that stayed free
  std::string reason;                      // why the verdict is false
};

struct ReportOptions {
  bool witnesses = false;
};

// Fast paths. `w` must be `kind`-free; these do not re-check it.
bool holds_irreducible(std::span<const Letter> w, RepetitionKind kind);
bool holds_delicate(std::span<const Letter> w, Alphabet alphabet, RepetitionKind kind);
bool holds_extremal(std::span<const Letter> w, Alphabet alphabet, RepetitionKind kind);
bool holds_k_delicate(std::span<const Letter> w, Alphabet alphabet, RepetitionKind kind, int k);
bool holds_property(std::span<const Letter> w, Alphabet alphabet, RepetitionKind kind,
                    PropertyKind property);

PropertyReport is_irreducible(const Word& w, RepetitionKind kind, ReportOptions opts = {});
PropertyReport is_delicate(const Word& w, RepetitionKind kind, ReportOptions opts = {});
PropertyReport is_extremal(const Word& w, RepetitionKind kind, ReportOptions opts = {});
// Throws std::invalid_argument when k < 1.
PropertyReport is_k_delicate(const Word& w, RepetitionKind kind, int k, ReportOptions opts = {});
PropertyReport check_property(const Word& w, RepetitionKind kind, PropertyKind property,
                              ReportOptions opts = {});

// Extremality for overlap-free binary words, testing only insertions with at
// most four letters on one side. Insertions with at least five letters on
// both sides of an overlap-free binary word always create an overlap.
// Throws std::invalid_argument if w is not binary or not overlap-free.
PropertyReport is_extremal_fast(const Word& w, ReportOptions opts = {});

}  // namespace barely
