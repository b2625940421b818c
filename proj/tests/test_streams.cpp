#include <stdexcept>

#include "doctest.h"

#include "barely/streams.hpp"

using namespace barely;

namespace {
Word b(const char* s) { return Word::parse(s, Alphabet::binary()); }
Word t3(const char* s) { return Word::parse(s, Alphabet::ternary()); }
}  // namespace

TEST_CASE("prefix examples") {
  CHECK(prefix({InfiniteWordId::ThueMorse, 0, 8}) == b("01101001"));
  CHECK(prefix({InfiniteWordId::ThueMorse, 8, 8}) == b("10010110"));
  CHECK(prefix({InfiniteWordId::TernaryThueMorse, 0, 3}) == t3("012"));
  CHECK(prefix(InfiniteWordId::TernaryThueMorse, 0).empty());
  CHECK(prefix({InfiniteWordId::TernaryThueMorse, 5, 4}) ==
        factor(prefix(InfiniteWordId::TernaryThueMorse, 9), 5, 4));
}

TEST_CASE("closed form agrees with morphism iteration") {
  const auto& mu = builtin(BuiltinMorphismId::Mu);
  const Word it = iterate_fixed_point(mu, 4096);
  CHECK(factor(it, 0, 4096) == prefix(InfiniteWordId::ThueMorse, 4096));
  for (std::size_t n : {1u, 7u, 100u, 1000u})
    CHECK(prefix(InfiniteWordId::ThueMorse, 2 * n) == mu.apply(prefix(InfiniteWordId::ThueMorse, n)));
  const auto& tau = builtin(BuiltinMorphismId::Tau);
  const Word v = prefix(InfiniteWordId::TernaryThueMorse, 3000);
  CHECK(factor(tau.apply(v), 0, 3000) == v);
}

TEST_CASE("prefixes are free up to the check limits") {
  CHECK(is_free(prefix(InfiniteWordId::ThueMorse, kBinaryCheckLimit), RepetitionKind::Overlap));
  CHECK(is_free(prefix(InfiniteWordId::TernaryThueMorse, kTernaryCheckLimit),
                RepetitionKind::Square));
}

TEST_CASE("no square prefix") {
  CHECK(no_square_prefix(2));
  CHECK(no_square_prefix(64));
  CHECK(no_square_prefix(std::size_t{1} << 16));
}

TEST_CASE("berstel characterization") {
  CHECK(berstel_v(0).empty());
  CHECK(berstel_v(3) == t3("012"));
  CHECK(berstel_v(1000) == prefix(InfiniteWordId::TernaryThueMorse, 1000));
}

TEST_CASE("prepend checks") {
  CHECK(prepend_check(b("010110"), InfiniteWordId::ThueMorse, RepetitionKind::Overlap,
                      kBinaryCheckLimit));
  CHECK(prepend_check(b("101001101001"), InfiniteWordId::ThueMorse, RepetitionKind::Overlap,
                      kBinaryCheckLimit));
  CHECK(prepend_check(t3("2"), InfiniteWordId::TernaryThueMorse, RepetitionKind::Square,
                      kTernaryCheckLimit));
  CHECK(prepend_check(t3("21"), InfiniteWordId::TernaryThueMorse, RepetitionKind::Square,
                      kTernaryCheckLimit));
  CHECK_FALSE(prepend_check(b("0110"), InfiniteWordId::ThueMorse, RepetitionKind::Square, 100));
  CHECK_FALSE(prepend_check(t3("0"), InfiniteWordId::TernaryThueMorse, RepetitionKind::Square, 100));
}

TEST_CASE("factor positions in morphic images") {
  const auto& phi1 = builtin(BuiltinMorphismId::Phi1IrrCube);
  const Word h1 = image_prefix(phi1, InfiniteWordId::ThueMorse, 10000);
  CHECK(h1.size() == 10000);
  // phi1 is not uniform (26 and 34 letters), so occurrences are at the
  // starts of phi1(0) blocks rather than at multiples of 26.
  std::set<std::size_t> zero_blocks;
  std::size_t at = 0;
  for (std::size_t i = 0; at < h1.size(); ++i) {
    const Letter a = thue_morse_letter(i);
    if (a == 0) zero_blocks.insert(at);
    at += phi1.image(a).size();
  }
  const Word needle = b("01100100");
  std::size_t occurrences = 0;
  for (std::size_t i = 0; i + needle.size() <= h1.size(); ++i)
    if (factor(h1, i, needle.size()) == needle) {
      ++occurrences;
      CHECK(zero_blocks.count(i) == 1);
    }
  CHECK(occurrences > 0);
  CHECK_FALSE(factor_position_check(h1, needle, {0}, 26, 10000));
  CHECK(factor_position_check(h1, needle, {0}, 2, 10000));

  const auto& phi = builtin(BuiltinMorphismId::PhiDelCube);
  const Word h2 = image_prefix(phi, InfiniteWordId::ThueMorse, 10000);
  CHECK(factor_position_check(h2, b("011010110010"), {0}, 22, 10000));
  CHECK_FALSE(factor_position_check(h2, b("011010110010"), {}, 22, 10000));

  // Both overloads scan the same letters.
  const Word t = prefix(InfiniteWordId::ThueMorse, 2000);
  for (std::size_t r = 0; r < 4; ++r)
    CHECK(factor_position_check(t, b("0110"), {r}, 4, 2000) ==
          factor_position_check(PrefixSpec{InfiniteWordId::ThueMorse, 0, 2000}, b("0110"), {r}, 4,
                                2000));

  CHECK(factor_position_check(b("01"), b("0110"), {}, 3, 2));
}
