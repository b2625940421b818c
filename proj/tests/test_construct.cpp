#include <stdexcept>

#include "doctest.h"

#include "barely/construct.hpp"
#include "barely/streams.hpp"

using namespace barely;

namespace {
Word b(const char* s) { return Word::parse(s, Alphabet::binary()); }
}  // namespace

TEST_CASE("construction examples") {
  CHECK(construct(TheoremId::IrrOverlap, 6).word == b("010010"));
  CHECK(construct(TheoremId::IrrOverlap, 10).word == b("0100101101"));
  CHECK(construct(TheoremId::IrrOverlap, 16).word == prefix(InfiniteWordId::ThueMorse, 16));
  CHECK(construct(TheoremId::IrrOverlap, 17).word == b("1") + prefix(InfiniteWordId::ThueMorse, 16));
  CHECK(construct(TheoremId::DelOverlap, 9).word == b("001011001"));
  CHECK(construct(TheoremId::DelCube, 20).word == b("00101001101001101011"));
  CHECK(construct(TheoremId::IrrCube, 26).word == b("01100100101101001011010010"));
}

TEST_CASE("inadmissible lengths are rejected") {
  CHECK_THROWS_AS(construct(TheoremId::IrrOverlap, 11), std::invalid_argument);
  CHECK_THROWS_AS(construct(TheoremId::IrrCube, 21), std::invalid_argument);
  CHECK_THROWS_AS(construct(TheoremId::DelSquare, 6), std::invalid_argument);
  CHECK_THROWS_AS(construct(TheoremId::DelOverlap, 0), std::invalid_argument);
  CHECK_THROWS_AS(construct(TheoremId::DelCube, 37), std::invalid_argument);
  CHECK_THROWS_AS(construct(TheoremId::EidFamily, 33), std::invalid_argument);
}

TEST_CASE("admissible sets") {
  CHECK(admissible(TheoremId::IrrOverlap, 12));
  CHECK_FALSE(admissible(TheoremId::IrrOverlap, 7));
  CHECK(admissible(TheoremId::DelSquare, 5));
  CHECK(admissible(TheoremId::DelCube, 29));
  CHECK_FALSE(admissible(TheoremId::DelCube, 30));
  CHECK(admissible(TheoremId::EidFamily, 128));
  CHECK_FALSE(admissible(TheoremId::EidFamily, 96));
  CHECK(largest_excluded(TheoremId::DelOverlap) == 6);
  CHECK_FALSE(largest_excluded(TheoremId::EidFamily));
  for (auto id : all_theorems()) CHECK(parse_theorem(to_string(id)) == id);
  CHECK(parse_theorem("del_cube") == TheoremId::DelCube);
  CHECK_THROWS_AS(parse_theorem("seventh"), std::invalid_argument);
}

TEST_CASE("Thue-Morse blocks") {
  const Word t0 = prefix({InfiniteWordId::ThueMorse, 0, 8});
  const Word t1 = prefix({InfiniteWordId::ThueMorse, 8, 8});
  for (const Word& x : {t0, t1})
    for (const Word& y : {t0, t1})
      CHECK(is_irreducible(x + y, RepetitionKind::Overlap).holds);
  const Word t = prefix(InfiniteWordId::ThueMorse, 8 * 40);
  for (std::size_t k = 0; k < 40; ++k) {
    const Word block = factor(t, 8 * k, 8);
    CHECK((block == t0 || block == t1));
  }
}

TEST_CASE("every admissible length up to 80 constructs and verifies") {
  for (auto id : all_theorems()) {
    const auto target = target_of(id);
    for (std::size_t n = 0; n <= 80; ++n) {
      if (!admissible(id, n)) continue;
      CAPTURE(to_string(id));
      CAPTURE(n);
      const Recipe r = construct(id, n);
      REQUIRE(r.word.size() == n);
      REQUIRE(r.word.alphabet() == target.alphabet);
      REQUIRE(is_free(r.word, target.kind));
      for (const auto& p : target.properties) REQUIRE(check_property(r.word, target.kind, p).holds);
      REQUIRE_FALSE(r.branch.empty());
    }
  }
}

TEST_CASE("irr-cube records which tail was used") {
  for (std::size_t n = 30; n <= 120; ++n) {
    const Recipe r = construct(TheoremId::IrrCube, n);
    CHECK(r.branch.find("w_(") != std::string::npos);
  }
}

TEST_CASE("eid family") {
  CHECK(eid_word(0).size() == 32);
  CHECK(eid_word(1) == builtin(BuiltinMorphismId::Mu).apply(eid_word(0)));
  for (std::size_t i = 0; i <= 2; ++i) {
    const Word w = eid_word(i);
    CHECK(w.size() == (32u << i));
    CHECK(is_extremal(w, RepetitionKind::Overlap).holds);
    CHECK(is_irreducible(w, RepetitionKind::Overlap).holds);
    CHECK(is_delicate(w, RepetitionKind::Overlap).holds);
    CHECK(is_extremal_fast(w).holds);
    CHECK(satisfies(TheoremId::EidFamily, w));
  }
}

TEST_CASE("construction lengths match exhaustive classification") {
  SearchOptions opts;
  for (auto id : {TheoremId::IrrOverlap, TheoremId::DelSquare, TheoremId::DelOverlap}) {
    const auto target = target_of(id);
    SearchSpec spec;
    spec.alphabet = target.alphabet;
    spec.kind = target.kind;
    spec.property = target.properties.front();
    spec.max_len = 16;
    spec.witness_limit = 0;
    const auto c = classify(spec, opts);
    for (std::size_t n = 1; n <= 16; ++n) CHECK(c.admitted.count(n) == admissible(id, n));
  }
}

TEST_CASE("verify_theorem small bounds") {
  VerifyOptions opts;
  opts.max_len = 40;
  const auto r = verify_theorem(TheoremId::IrrOverlap, opts);
  CHECK(r.ok());
  CHECK(r.search_bound == 11);
  opts.max_len = 30;
  CHECK(verify_theorem(TheoremId::DelSquare, opts).ok());
  CHECK(verify_theorem(TheoremId::DelOverlap, opts).ok());
  VerifyOptions eid;
  eid.max_len = 256;
  eid.eid_levels = 2;
  CHECK(verify_theorem(TheoremId::EidFamily, eid).ok());
}

TEST_CASE("satisfies rejects wrong words") {
  CHECK_FALSE(satisfies(TheoremId::IrrOverlap, b("0110")));
  CHECK(satisfies(TheoremId::IrrOverlap, b("010010")));
  CHECK_FALSE(satisfies(TheoremId::DelCube, b("0100101101")));
}
