#include "barely/construct.hpp"

#include <algorithm>
#include <array>

#include "barely/morphism.hpp"
#include "barely/streams.hpp"

namespace barely {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::IrrOverlap: return "irr-overlap";
    case TheoremId::IrrCube: return "irr-cube";
    case TheoremId::DelSquare: return "del-square";
    case TheoremId::DelOverlap: return "del-overlap";
    case TheoremId::DelCube: return "del-cube";
    case TheoremId::EidFamily: return "eid";
  }
  return "?";
}

std::vector<TheoremId> all_theorems() {
  return {TheoremId::IrrOverlap, TheoremId::IrrCube,  TheoremId::DelSquare,
          TheoremId::DelOverlap, TheoremId::DelCube, TheoremId::EidFamily};
}

TheoremId parse_theorem(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '_', '-');
  if (s == "eid-family") s = "eid";
  for (auto id : all_theorems())
    if (to_string(id) == s) return id;
  throw std::invalid_argument("unknown theorem '" + std::string(name) + "'");
}

TheoremTarget target_of(TheoremId id) {
  const auto bin = Alphabet::binary();
  switch (id) {
    case TheoremId::IrrOverlap:
      return {RepetitionKind::Overlap, bin, {PropertyKind::irreducible()}};
    case TheoremId::IrrCube:
      return {RepetitionKind::Cube, bin, {PropertyKind::irreducible()}};
    case TheoremId::DelSquare:
      return {RepetitionKind::Square, Alphabet::ternary(), {PropertyKind::delicate()}};
    case TheoremId::DelOverlap:
      return {RepetitionKind::Overlap, bin, {PropertyKind::delicate()}};
    case TheoremId::DelCube:
      return {RepetitionKind::Cube, bin, {PropertyKind::delicate()}};
    case TheoremId::EidFamily:
      return {RepetitionKind::Overlap, bin,
              {PropertyKind::extremal(), PropertyKind::irreducible(), PropertyKind::delicate()}};
  }
  throw std::invalid_argument("unknown theorem");
}

namespace {

bool in(std::size_t n, std::initializer_list<std::size_t> set) {
  return std::find(set.begin(), set.end(), n) != set.end();
}

bool is_eid_length(std::size_t n) {
  if (n < 32 || n % 32 != 0) return false;
  const std::size_t q = n / 32;
  return (q & (q - 1)) == 0;
}

}  // namespace

bool admissible(TheoremId id, std::size_t n) {
  switch (id) {
    case TheoremId::IrrOverlap: return in(n, {6, 8, 9, 10}) || n >= 12;
    case TheoremId::IrrCube: return in(n, {10, 14, 18, 19, 20}) || n >= 22;
    case TheoremId::DelSquare: return n == 5 || n >= 7;
    case TheoremId::DelOverlap: return n >= 7;
    case TheoremId::DelCube: return in(n, {20, 21, 22, 29, 33, 34, 35}) || n >= 38;
    case TheoremId::EidFamily: return is_eid_length(n);
  }
  return false;
}

std::optional<std::size_t> largest_excluded(TheoremId id) {
  switch (id) {
    case TheoremId::IrrOverlap: return 11;
    case TheoremId::IrrCube: return 21;
    case TheoremId::DelSquare: return 6;
    case TheoremId::DelOverlap: return 6;
    case TheoremId::DelCube: return 37;
    case TheoremId::EidFamily: return std::nullopt;
  }
  return std::nullopt;
}

bool satisfies(TheoremId id, const Word& word) {
  const auto target = target_of(id);
  if (word.alphabet() != target.alphabet) return false;
  for (const auto& p : target.properties)
    if (!check_property(word, target.kind, p).holds) return false;
  return true;
}

Word eid_word(std::size_t i) {
  if (i > 24) throw std::length_error("eid_word level too large");
  Word w = Word::parse("01100110100110010110011010011001", Alphabet::binary());
  const Morphism& mu = builtin(BuiltinMorphismId::Mu);
  for (std::size_t j = 0; j < i; ++j) w = mu.apply(w);
  return w;
}

namespace {

struct Candidate {
  std::string branch;
  Word word;
};

Word bin(std::string_view s) { return Word::parse(s, Alphabet::binary()); }
Word ter(std::string_view s) { return Word::parse(s, Alphabet::ternary()); }

// Thue-Morse letters [drop, drop + len).
Word tm(std::size_t drop, std::size_t len) {
  return prefix({InfiniteWordId::ThueMorse, drop, len});
}

// ---- irreducible overlap-free binary ------------------------------------

std::vector<Candidate> irr_overlap_candidates(std::size_t n) {
  if (n == 6) return {{"base 6", bin("010010")}};
  if (n == 10) return {{"base 10", bin("0100101101")}};
  if (n % 8 == 7) {
    // Shifted factors of t; n = 23 (mod 32) belongs to both, use drop 15.
    if (n % 32 == 7) return {{"t without first 14 letters", tm(14, n)}};
    return {{"t without first 15 letters", tm(15, n)}};
  }
  // t_k is the first 8k letters of t, a concatenation of 8-letter blocks.
  const std::size_t k = n / 8;
  const std::size_t d = n % 8;
  auto t_k = [](std::size_t j) { return tm(0, 8 * j); };
  switch (d) {
    case 0: return {{"t_k", t_k(k)}};
    case 1: return {{"row 1: 1 t_k", bin("1") + t_k(k)}};
    case 2: return {{"row 2: 1001101001 t_(k-1)", bin("1001101001") + t_k(k - 1)}};
    case 3: return {{"row 3: 01001101001 t_(k-1)", bin("01001101001") + t_k(k - 1)}};
    case 4: return {{"row 4: 1001 t_k", bin("1001") + t_k(k)}};
    case 5: return {{"row 5: 01001 t_k", bin("01001") + t_k(k)}};
    case 6: return {{"row 6: 010110 t_k", bin("010110") + t_k(k)}};
  }
  return {};
}

// ---- irreducible cubefree binary ------------------------------------------

enum class Tail { W1K, W1KMinus1, W2K };

struct Row {
  std::size_t d;
  std::string_view prefix;
  Tail tail;
};

// Prefix table indexed by n - |phi1(t_k)|. Differences 2, 3, 6 and 10 have
// two rows each; the first that fits and verifies is used.
constexpr std::array kIrrCubeRows = {
    Row{1, "1", Tail::W1K},
    Row{2, "0100101001100101001011001010", Tail::W1KMinus1},
    Row{2, "010010100110010100101101001011010010", Tail::W1KMinus1},
    Row{3, "10110100101100101001100101001", Tail::W1KMinus1},
    Row{3, "0100101101100100101100101001100101001", Tail::W1KMinus1},
    Row{4, "0110", Tail::W2K},
    Row{5, "01001", Tail::W1K},
    Row{6, "10010100110010100101001100101001", Tail::W1KMinus1},
    Row{6, "0100101100100101101001011001001011010010", Tail::W1KMinus1},
    Row{7, "1001010", Tail::W1K},
    Row{8, "01001010", Tail::W1K},
    Row{9, "101101001", Tail::W1K},
    Row{10, "010010100110010100101101001011010010", Tail::W1KMinus1},
    Row{10, "01001011001001011010010110100101001100101001", Tail::W1KMinus1},
    Row{11, "10010100110", Tail::W2K},
    Row{12, "101101001010", Tail::W1K},
    Row{13, "0100101101001", Tail::W1K},
    Row{14, "01001011001010", Tail::W1K},
    Row{15, "101101011001101", Tail::W1K},
    Row{16, "0100101101001010", Tail::W1K},
    Row{17, "01001010011001010", Tail::W1K},
    Row{18, "100101001100101001", Tail::W1K},
    Row{19, "0100101001100101001", Tail::W1K},
    Row{20, "01001011011001001010", Tail::W1K},
    Row{21, "100101001010011001010", Tail::W1K},
    Row{22, "0100101101001011010010", Tail::W1K},
    Row{23, "10110100101001100101001", Tail::W1K},
    Row{24, "010010110100101101001010", Tail::W1K},
    Row{25, "0100101100101001100101001", Tail::W1K},
    Row{26, "01100100101101001011010010", Tail::W1K},
    Row{27, "010010110100101001100101001", Tail::W1K},
    Row{28, "0100101001100101001011001010", Tail::W1K},
    Row{29, "10110100101100101001100101001", Tail::W1K},
    Row{30, "100110110100101101001011011001", Tail::W1K},
    Row{31, "0100101100100101101001011010010", Tail::W1K},
    Row{32, "10010100110010100101001100101001", Tail::W1K},
    Row{33, "010010100110010100101001100101001", Tail::W1K},
};

// Largest k with |m(first k letters of t)| <= n.
std::size_t largest_image_prefix(const Morphism& m, std::size_t n) {
  std::size_t k = 0;
  std::size_t len = 0;
  while (true) {
    const std::size_t next = len + m.image(thue_morse_letter(k)).size();
    if (next > n) return k;
    len = next;
    ++k;
  }
}

std::vector<Candidate> irr_cube_candidates(std::size_t n) {
  switch (n) {
    case 10: return {{"base 10", bin("0100101101")}};
    case 14: return {{"base 14", bin("01001011010010")}};
    case 20: return {{"base 20", bin("01001010011001010010")}};
    case 24: return {{"base 24", bin("010010100110010100101101")}};
    case 28: return {{"base 28", bin("0100101001100101001011010010")}};
    default: break;
  }
  const Morphism& phi1 = builtin(BuiltinMorphismId::Phi1IrrCube);
  const Morphism& phi2 = builtin(BuiltinMorphismId::Phi2IrrCube);
  const std::size_t k = largest_image_prefix(phi1, n);
  const Word w1k = phi1.apply(tm(0, k));
  const std::size_t d = n - w1k.size();
  if (d == 0) return {{"w_(1,k)", w1k}};
  std::vector<Candidate> out;
  for (const Row& row : kIrrCubeRows) {
    if (row.d != d) continue;
    Word tail(Alphabet::binary());
    std::string label = "row " + std::to_string(d) + ": " + std::string(row.prefix);
    switch (row.tail) {
      case Tail::W1K:
        tail = w1k;
        label += " w_(1,k)";
        break;
      case Tail::W1KMinus1:
        if (k == 0) continue;
        tail = phi1.apply(tm(0, k - 1));
        label += " w_(1,k-1)";
        break;
      case Tail::W2K:
        tail = phi2.apply(tm(0, k));
        label += " w_(2,k)";
        break;
    }
    out.push_back({std::move(label), bin(row.prefix) + tail});
  }
  return out;
}

// ---- delicate squarefree ternary ------------------------------------------

std::vector<Candidate> del_square_candidates(std::size_t n) {
  // phi is 11-uniform, so w_k = phi(first k letters of v) has length 11k.
  static constexpr std::array<std::string_view, 11> kPrefixes = {
      "", "010210120102", "02", "102", "0121", "12021", "012102",
      "0212021", "02120121", "021012102", "1202120121"};
  const Morphism& phi = builtin(BuiltinMorphismId::PhiDelSquare);
  const std::size_t k = n / 11;
  const std::size_t d = n % 11;
  auto w = [&](std::size_t j) { return phi.apply(prefix(InfiniteWordId::TernaryThueMorse, j)); };
  if (d == 0) return {{"w_k", w(k)}};
  if (d == 1) {
    if (k == 0) return {};
    return {{"row 1: 010210120102 w_(k-1)", ter(kPrefixes[1]) + w(k - 1)}};
  }
  return {{"row " + std::to_string(d) + ": " + std::string(kPrefixes[d]) + " w_k",
           ter(kPrefixes[d]) + w(k)}};
}

// ---- delicate overlap-free binary -----------------------------------------

std::vector<Candidate> del_overlap_candidates(std::size_t n) {
  if (n == 9) return {{"base 9", bin("001011001")}};
  // Letters dropped from t, by n mod 8.
  static constexpr std::array<std::size_t, 8> kDrop = {0, 7, 6, 13, 12, 3, 10, 1};
  const std::size_t drop = kDrop[n % 8];
  return {{"t without first " + std::to_string(drop) + " letters", tm(drop, n)}};
}

// ---- delicate cubefree binary ---------------------------------------------

std::vector<Candidate> del_cube_candidates(std::size_t n) {
  if (n == 20) return {{"base 20", bin("00101001101001101011")}};
  if (n == 33) return {{"base 33", bin("001010011010011010110010110010100")}};
  // phi is 22-uniform; rows marked true are followed by w_(k-1), others by w_k.
  struct DelCubeRow {
    std::string_view prefix;
    bool previous;
  };
  static constexpr std::array<DelCubeRow, 22> kRows = {{
      {"", false},
      {"00101001101001101011001", true},
      {"011001001100110110011001", true},
      {"0010100110100110101101001", true},
      {"00101001101001101011001010", true},
      {"001010011010011010110010110", true},
      {"0010100110100110101100101001", true},
      {"01100100110011011001100100110", true},
      {"001010011010011010110100101001", true},
      {"0010100110100110101100101001010", true},
      {"00101001101001101011001010011010", true},
      {"001010011010011010110010110011001", true},
      {"001010011010", false},
      {"1001010011010", false},
      {"001010011010011010110010100101001101", true},
      {"0010100110100110101100100110011011001", true},
      {"01100100110011011001100100110011011001", true},
      {"00101001101001101", false},
      {"100101001101001101", false},
      {"1101011001011001010", false},
      {"01101011001011001010", false},
      {"001010011010011010110", false},
  }};
  const Morphism& phi = builtin(BuiltinMorphismId::PhiDelCube);
  const std::size_t k = n / 22;
  const std::size_t d = n % 22;
  auto w = [&](std::size_t j) { return phi.apply(tm(0, j)); };
  if (d == 0) return {{"w_k", w(k)}};
  const auto& row = kRows[d];
  if (row.previous) {
    if (k == 0) return {};
    return {{"row " + std::to_string(d) + ": " + std::string(row.prefix) + " w_(k-1)",
             bin(row.prefix) + w(k - 1)}};
  }
  return {{"row " + std::to_string(d) + ": " + std::string(row.prefix) + " w_k",
           bin(row.prefix) + w(k)}};
}

std::vector<Candidate> eid_candidates(std::size_t n) {
  std::size_t i = 0;
  while ((std::size_t{32} << i) < n) ++i;
  return {{"w_" + std::to_string(i), eid_word(i)}};
}

std::vector<Candidate> candidates(TheoremId id, std::size_t n) {
  switch (id) {
    case TheoremId::IrrOverlap: return irr_overlap_candidates(n);
    case TheoremId::IrrCube: return irr_cube_candidates(n);
    case TheoremId::DelSquare: return del_square_candidates(n);
    case TheoremId::DelOverlap: return del_overlap_candidates(n);
    case TheoremId::DelCube: return del_cube_candidates(n);
    case TheoremId::EidFamily: return eid_candidates(n);
  }
  return {};
}

}  // namespace

Recipe construct(TheoremId id, std::size_t n) {
  if (!admissible(id, n))
    throw std::invalid_argument(std::string(to_string(id)) + " has no words of length " +
                                std::to_string(n));
  std::string tried;
  for (auto& c : candidates(id, n)) {
    if (c.word.size() == n && satisfies(id, c.word))
      return Recipe{id, n, std::move(c.branch), std::move(c.word)};
    tried += " [" + c.branch + "]";
  }
  throw ConstructionError(std::string(to_string(id)) + " n=" + std::to_string(n) +
                          ": no candidate verified" + tried);
}

VerifyReport verify_theorem(TheoremId id, const VerifyOptions& options) {
  VerifyReport rep;
  rep.theorem = id;
  rep.max_len = options.max_len;

  if (id == TheoremId::EidFamily) {
    for (std::size_t i = 0; i <= options.eid_levels; ++i) {
      const Word w = eid_word(i);
      VerifyEntry e{w.size(), true, false, "w_" + std::to_string(i)};
      const bool props = satisfies(id, w);
      const bool fast_agrees =
          is_extremal_fast(w).holds == is_extremal(w, RepetitionKind::Overlap).holds;
      e.ok = props && fast_agrees;
      if (!props) rep.discrepancies.push_back(e.detail + " fails a property check");
      if (!fast_agrees) rep.discrepancies.push_back(e.detail + ": fast extremality disagrees");
      rep.entries.push_back(std::move(e));
    }
    return rep;
  }

  std::size_t bound = std::min(options.max_len, largest_excluded(id).value_or(0));
  if (options.search_cap) bound = std::min(bound, *options.search_cap);
  rep.search_bound = bound;

  std::optional<LengthClassification> search;
  if (bound >= 1) {
    const auto target = target_of(id);
    SearchSpec spec;
    spec.alphabet = target.alphabet;
    spec.kind = target.kind;
    spec.property = target.properties.front();
    spec.min_len = 1;
    spec.max_len = bound;
    spec.witness_limit = 1;
    search = classify(spec, options.search);
  }

  for (std::size_t n = 1; n <= options.max_len; ++n) {
    VerifyEntry e{n, admissible(id, n), false, {}};
    if (e.admissible) {
      try {
        const Recipe r = construct(id, n);
        e.ok = true;
        e.detail = r.branch;
      } catch (const std::exception& ex) {
        e.detail = ex.what();
        rep.discrepancies.push_back("n=" + std::to_string(n) + ": " + e.detail);
      }
      if (search && n <= bound && search->counts.at(n) == 0) {
        e.ok = false;
        e.detail += "; exhaustive search found no words";
        rep.discrepancies.push_back("n=" + std::to_string(n) + ": admissible but search found none");
      }
    } else if (search && n <= bound) {
      const auto count = search->counts.at(n);
      e.ok = count == 0;
      e.detail = "exhaustive search: " + std::to_string(count) + " words";
      if (!e.ok)
        rep.discrepancies.push_back("n=" + std::to_string(n) + ": excluded but search found " +
                                    search->witnesses.at(n).front().str());
    } else {
      e.detail = "excluded; beyond search bound";
      e.ok = true;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace barely
