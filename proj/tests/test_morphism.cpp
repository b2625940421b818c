#include <random>
#include <stdexcept>

#include "doctest.h"

#include "barely/morphism.hpp"
#include "barely/props.hpp"

using namespace barely;

namespace {
Word b(const char* s) { return Word::parse(s, Alphabet::binary()); }
Word t3(const char* s) { return Word::parse(s, Alphabet::ternary()); }

const Morphism& mu() { return builtin(BuiltinMorphismId::Mu); }
const Morphism& tau() { return builtin(BuiltinMorphismId::Tau); }
}  // namespace

TEST_CASE("apply") {
  CHECK(mu().apply(b("0")) == b("01"));
  CHECK(mu().apply(b("001")) == b("010110"));
  CHECK(tau().apply(t3("0")) == t3("012"));
  CHECK(tau().apply(t3("")).empty());
  CHECK(tau().apply(t3("010")) == t3("01202012"));
}

TEST_CASE("apply is a homomorphism") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> u(rng() % 10), v(rng() % 10);
    for (auto& a : u) a = static_cast<Letter>(rng() % 3);
    for (auto& a : v) a = static_cast<Letter>(rng() % 3);
    const Word wu(u, Alphabet::ternary()), wv(v, Alphabet::ternary());
    for (auto id : {BuiltinMorphismId::Tau, BuiltinMorphismId::PhiDelSquare})
      CHECK(builtin(id).apply(wu + wv) == builtin(id).apply(wu) + builtin(id).apply(wv));
  }
}

TEST_CASE("builtin images are exact") {
  const auto& phi1 = builtin(BuiltinMorphismId::Phi1IrrCube);
  const auto& phi2 = builtin(BuiltinMorphismId::Phi2IrrCube);
  CHECK(phi1.image(0) == b("01100100101101001011010010"));
  CHECK(phi1.image(1) == b("0110101100110101100101001100101001"));
  CHECK(phi1.image(1).size() == 34);
  for (Letter a : {0, 1}) CHECK(phi2.image(a) == reversed(phi1.image(a)));
  const auto& dc = builtin(BuiltinMorphismId::PhiDelCube);
  CHECK(dc.image(0) == b("0110101100101100101001"));
  CHECK(dc.image(0).size() == 22);
  CHECK(builtin(BuiltinMorphismId::PhiDelSquare).image(0) == t3("01202120102"));
  CHECK(builtin(parse_builtin_morphism("phi_delcube")) == dc);
  CHECK_THROWS_AS(parse_builtin_morphism("phi3"), std::invalid_argument);
}

TEST_CASE("squarefree preservation") {
  const auto good = preserves_squarefree(builtin(BuiltinMorphismId::PhiDelSquare));
  CHECK(good.preserves);
  // Squarefree ternary words of length 5.
  CHECK(good.words_tested == 30);

  const auto bad = preserves_squarefree(tau());
  CHECK_FALSE(bad.preserves);
  REQUIRE(bad.counterexample);
  REQUIRE(bad.occurrence);
  CHECK(is_free(*bad.counterexample, RepetitionKind::Square));
  CHECK(validates(tau().apply(*bad.counterexample), *bad.occurrence));
  // The square 0202 inside tau(010) = 01202012 is the smallest witness.
  CHECK(find_repetition(t3("01202012"), RepetitionKind::Square) ==
        Occurrence{RepetitionKind::Square, 2, 2});

  CHECK(preserves_squarefree(Morphism::identity(Alphabet::ternary())).preserves);
  CHECK_THROWS_AS(preserves_squarefree(mu()), std::invalid_argument);
}

TEST_CASE("cubefree preservation") {
  for (auto id : {BuiltinMorphismId::Phi1IrrCube, BuiltinMorphismId::Phi2IrrCube,
                  BuiltinMorphismId::PhiDelCube}) {
    const auto r = preserves_cubefree(builtin(id));
    CHECK(r.preserves);
    CHECK(r.words_tested == 36);  // cubefree binary words of length 7
  }
  const auto doubling = Morphism::from_strings(Alphabet::binary(), Alphabet::binary(), {"00", "1"});
  const auto r = preserves_cubefree(doubling);
  CHECK_FALSE(r.preserves);
  REQUIRE(r.counterexample);
  CHECK(is_free(*r.counterexample, RepetitionKind::Cube));
  CHECK(validates(doubling.apply(*r.counterexample), *r.occurrence));
  CHECK_THROWS_AS(preserves_cubefree(tau()), std::invalid_argument);
}

TEST_CASE("Thue: w overlap-free iff mu(w) overlap-free, |w| <= 12") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::vector<Letter> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = bits >> i & 1;
      const Word w(v, Alphabet::binary());
      REQUIRE(is_free(w, RepetitionKind::Overlap) ==
              is_free(mu().apply(w), RepetitionKind::Overlap));
    }
  }
}

TEST_CASE("seed images have the construction properties") {
  const std::vector<Word> seeds = {b("0"), b("1"), b("00"), b("01"), b("10"), b("11")};
  for (auto id : {BuiltinMorphismId::Phi1IrrCube, BuiltinMorphismId::Phi2IrrCube})
    for (const Word& u : seeds)
      CHECK(is_irreducible(builtin(id).apply(u), RepetitionKind::Cube).holds);
  for (Letter a : {0, 1})
    CHECK(is_delicate(builtin(BuiltinMorphismId::PhiDelCube).image(a), RepetitionKind::Cube).holds);
  for (Letter a : {0, 1, 2})
    CHECK(is_delicate(builtin(BuiltinMorphismId::PhiDelSquare).image(a), RepetitionKind::Square)
              .holds);
}

TEST_CASE("morphism file format") {
  const auto m = parse_morphism("  0 ->   01202120102\n1->01210201021 # comment\n\n2 -> 01210212021\n");
  CHECK(m == builtin(BuiltinMorphismId::PhiDelSquare));
  CHECK(parse_morphism(format_morphism(m)) == m);
  const auto small = parse_morphism("0 -> 00\n1 -> 1\n");
  CHECK(small.domain() == Alphabet::binary());
  CHECK(small.codomain() == Alphabet::binary());
  CHECK_THROWS_AS(parse_morphism("0 -> 01\n0 -> 10\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_morphism("0 -> \n1 -> 10\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_morphism("0 -> 01\n2 -> 10\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_morphism("0 = 01\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_morphism(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_morphism("0 -> 0x1\n"), std::invalid_argument);
}
